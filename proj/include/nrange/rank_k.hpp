// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef NRANGE_RANK_K_HPP
#define NRANGE_RANK_K_HPP

#include <optional>
#include <vector>

#include "nrange/matrix.hpp"
#include "nrange/parallel.hpp"
#include "nrange/region.hpp"

namespace nrange {

/// Finite atomic model of a normal operator's spectral measure. An atom
/// with infinite multiplicity stands for an essential-spectrum point.
struct SpectralAtom {
    Complex point;
    long long multiplicity = 1; // ignored when infinite
    bool infinite = false;
};

struct SpectralModel {
    std::vector<SpectralAtom> atoms;

    /// Merges duplicate points (multiplicities add, infinite absorbs).
    void normalize(double merge_tol = 0.0);
    long long total_finite_multiplicity() const;
    bool has_infinite_atom() const;
};

/// Rank index: a positive integer or "infinity".
struct RankIndex {
    int k = 1;
    bool infinite = false;

    static RankIndex finite(int k) { return RankIndex{k, false}; }
    static RankIndex inf() { return RankIndex{0, true}; }
};

/// Support in direction theta: the k-th largest eigenvalue of the rotated
/// real part of A. The region built from these samples is the intersection
/// over theta of {mu : Re(e^{i theta} mu) <= support_value(A, k, theta)}.
double support_value(const ComplexMatrix& A, int k, double theta);

/// One full direction sweep of support_value; the serial path is the
/// reference the parallel path is checked against.
std::vector<double> omega_supports(const ComplexMatrix& A, int k, int grid_size,
                                   Exec exec = Exec::Parallel);

/// Outer polygonal approximation of the closure of the rank-k numerical
/// range from grid_size uniformly spaced directions.
ConvexRegion omega_region(const ComplexMatrix& A, int k, int grid_size = 720,
                          Exec exec = Exec::Parallel);

/// Membership test for mu against the sampled half planes of the rank-k
/// region (grid_size directions).
Membership membership(const ComplexMatrix& A, int k, Complex mu, double tol,
                      int grid_size = 720);

/// Independent oracle for normal matrices: literal enumeration of all
/// (n-k+1)-subsets of eigenvalues, per direction taking the minimum over
/// subsets of the subset's hull support. Enumeration capped at 1e6 subsets
/// (n <= 22).
ConvexRegion normal_region(const std::vector<Complex>& eigs, int k, int grid_size = 720);

/// Closed-form region of the n-dimensional shift: disk of radius
/// cos(k pi / (n+1)) when k <= floor((n+1)/2), otherwise empty.
ConvexRegion shift_oracle(int n, int k, int grid_size = 720);

/// Rank-k region of a normal operator given by a spectral model. For each
/// direction the support is the k-th largest projection of the atoms
/// counted with multiplicity; infinite multiplicity counts as "at least k".
/// RankIndex::inf() evaluates the stabilized region at k = (total finite
/// multiplicity) + 1, which is empty unless an infinite atom exists.
ConvexRegion spectral_V_k(const SpectralModel& model, RankIndex k, int grid_size = 720);

/// Intersection of the rank-k regions over all k. For a matrix this is the
/// region at k = n; for a model, the intersection up to (total finite
/// multiplicity) + 1.
ConvexRegion omega_inf(const ComplexMatrix& A, int grid_size = 720);
ConvexRegion omega_inf(const SpectralModel& model, int grid_size = 720);

} // namespace nrange

#endif // NRANGE_RANK_K_HPP
