// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef NRANGE_CNUM_HPP
#define NRANGE_CNUM_HPP

#include <utility>
#include <vector>

#include "nrange/matrix.hpp"
#include "nrange/parallel.hpp"
#include "nrange/region.hpp"
#include "nrange/report.hpp"

namespace nrange {

/// Weight vector c_1, ..., c_m of a C-numerical range. Weights shorter than
/// the matrix dimension are padded with zeros.
struct CWeights {
    std::vector<Complex> values;

    /// All weights real and non-increasing; the case with exact interval
    /// and region formulas.
    bool sorted_real() const;

    static CWeights from_real(std::vector<double> weights);
};

/// Exact interval of the c-numerical range of a Hermitian matrix:
/// alpha = sum_j c_j lambda_{n-j+1}, beta = sum_j c_j lambda_j.
std::pair<double, double> c_interval_hermitian(const CWeights& c, const ComplexMatrix& M);

/// Per-direction supports sum_j c_j lambda_j(Re(e^{i theta} A)).
std::vector<double> c_supports(const CWeights& c, const ComplexMatrix& A, int grid_size,
                               Exec exec = Exec::Parallel);

/// Convex c-numerical range of A for sorted real weights, from sampled
/// supports.
ConvexRegion c_region(const CWeights& c, const ComplexMatrix& A, int grid_size = 720,
                      Exec exec = Exec::Parallel);

/// Monte-Carlo cloud tr(diag(c) Q* A Q) over Haar-random unitaries Q, one
/// derived seed per sample. Works for arbitrary complex weights.
std::vector<Complex> c_sampled(const CWeights& c, const ComplexMatrix& A, int n_samples,
                               std::uint64_t seed, Exec exec = Exec::Parallel);

/// The dilation-intersection counterexample: A = [[0,1],[0,0]], c = (1,1).
/// Samples unitary dilations (half from the 2n family, half minimal ones
/// padded by a random phase), reports every interval [alpha_U, beta_U] and
/// checks that each contains 0 while beta_U stays away from it.
/// residuals = {min beta_U, max alpha_U, min lambda_1(Re U)}.
VerifyReport counterexample_gap(int n_dilations, std::uint64_t seed,
                                Exec exec = Exec::Parallel);

} // namespace nrange

#endif // NRANGE_CNUM_HPP
