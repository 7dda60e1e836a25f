// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef NRANGE_DILATION_HPP
#define NRANGE_DILATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "nrange/linalg.hpp"
#include "nrange/matrix.hpp"
#include "nrange/random.hpp"

namespace nrange {

enum class DilationKind { Halmos, FamilyUo, MinimalVW };

const char* dilation_kind_name(DilationKind kind);

/// Free unitary data selecting one member of a dilation family.
struct DilationParameter {
    DilationKind kind = DilationKind::Halmos;
    std::optional<ComplexMatrix> Uo; // n x n, FamilyUo
    std::optional<ComplexMatrix> V;  // d x d, MinimalVW
    std::optional<ComplexMatrix> W;  // d x d, MinimalVW
};

/// Builds the dilation a parameter selects. Missing blocks are an error for
/// the parameterized kinds.
ComplexMatrix build_dilation(const ComplexMatrix& A, const DilationParameter& parameter);

/// Eigenvalues to impose on a unitary N-dilation: unimodular targets with
/// multiplicities summing to N, each kept away from the spectrum of A.
struct EigenvaluePrescription {
    std::vector<std::pair<Complex, int>> targets;

    int total_multiplicity() const;
};

/// 2n x 2n unitary [[A, -(I-AA*)^{1/2}], [(I-A*A)^{1/2}, A*]].
ComplexMatrix halmos_dilation(const ComplexMatrix& A);

/// The one-parameter family of 2n x 2n unitary dilations
/// [[A, -(I-AA*)^{1/2} Uo], [(I-A*A)^{1/2}, A* Uo]]. Note the adjoint
/// defect operator in the upper-right block: unitarity of the column pair
/// forces it.
ComplexMatrix dilation_from_parameter(const ComplexMatrix& A, const ComplexMatrix& Uo);

/// Minimal (n+d)-dilation on the defect spaces, d = d_A = d_{A*}:
///   [[A, Db Bb V], [W Ba* Da, -W (Ba* A* Bb) V]]
/// with Da/Db the defect operators and Ba/Bb orthonormal bases of their
/// ranges. Every unitary (n+d)-dilation of A arises this way, so sweeping
/// (V, W) samples the whole family. When d = 0 the contraction is already
/// unitary and is returned as its own dilation.
ComplexMatrix minimal_dilation(const ComplexMatrix& A, const ComplexMatrix& V,
                               const ComplexMatrix& W);

/// Draws one random dilation of the given family (Haar parameters).
ComplexMatrix sample_dilation(const ComplexMatrix& A, DilationKind kind, Rng& rng);

struct ExtremalOptions {
    int restarts = 16;
    int max_evals = 6000;
    double success_gap = 1e-6;
    std::uint64_t seed = 0;
    // Optional (V, W) starting point for restart 0; used to warm-start
    // neighbouring directions in sweeps.
    std::optional<std::pair<ComplexMatrix, ComplexMatrix>> warm_start;
};

struct ExtremalResult {
    ComplexMatrix U;
    ComplexMatrix V, W;
    double gap = 0.0; // lambda_k(Re(e^{i theta} U)) - lambda_k(Re(e^{i theta} A))
    bool converged = false;
    int restarts_used = 0;
};

/// Searches the minimal family for a unitary dilation whose rank-k support
/// at direction theta matches the contraction's own. The gap is bounded
/// below by -1e-9 (interlacing), so the search can only approach zero from
/// above. Restarts are seeded by index and the best result is selected by
/// (gap, restart index); failure to reach success_gap is reported through
/// `converged`, not an exception.
ExtremalResult extremal_dilation(const ComplexMatrix& A, int k, double theta,
                                 const ExtremalOptions& options = {});

/// Contractive dilation Z = [[A, C], [B, D]] with
/// lambda_k(Z + Z*) = lambda_k(A + A*), built from an extremal unitary
/// dilation and an isometry encoding B = J (I-A*A)^{1/2}. Requires
/// A*A + B*B <= I.
ComplexMatrix contractive_dilation(const ComplexMatrix& A, const ComplexMatrix& B, int k,
                                   const ExtremalOptions& options = {});

struct NDilationOptions {
    int restarts = 16;
    int max_evals = 8000;
    double residual_tol = 1e-7;
    std::uint64_t seed = 0;
};

struct NDilationResult {
    ComplexMatrix U;
    ComplexMatrix V, W;
    // Per target: the n_j-th smallest singular value of U - lambda_j I.
    std::vector<double> residuals;
    bool converged = false;
};

/// Unitary N-dilation with prescribed eigenvalues, N = d_A = d_{A*}. Found
/// by minimizing a singular-value objective over the minimal family; the
/// single-target case is seeded with the exact solution
/// W = lambda M*, M = Ba* (-A* + Da (lambda - A)^{-1} Db) Bb, which is
/// unitary for unimodular lambda outside the spectrum. The returned U is a
/// unitary dilation even when the residual misses the tolerance.
NDilationResult prescribed_eigenvalue_ndilation(const ComplexMatrix& A,
                                                const EigenvaluePrescription& prescription,
                                                const NDilationOptions& options = {});

} // namespace nrange

#endif // NRANGE_DILATION_HPP
