// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef NRANGE_VERIFY_HPP
#define NRANGE_VERIFY_HPP

#include <functional>
#include <vector>

#include "nrange/matrix.hpp"
#include "nrange/parallel.hpp"
#include "nrange/rank_k.hpp"
#include "nrange/report.hpp"

namespace nrange {

/// Nested finite sections of a fixed infinite operator: the n-section is
/// always the leading principal block of the (n+1)-section.
struct OperatorGenerator {
    enum class Kind { Diagonal, WeightedShift, BlockDirectSum };

    Kind kind = Kind::Diagonal;
    std::function<Complex(int)> scalar_rule;            // 1-based index
    std::function<ComplexMatrix(int)> block_rule;       // 1-based index

    ComplexMatrix section(int n) const;

    static OperatorGenerator diagonal(std::function<Complex(int)> rule);
    static OperatorGenerator weighted_shift(std::function<Complex(int)> rule);
    static OperatorGenerator block_direct_sum(std::function<ComplexMatrix(int)> rule);
};

struct HarnessOptions {
    int grid_size = 90;
    int budget = 16; // optimizer restarts
    std::uint64_t seed = 0;
    Exec exec = Exec::Parallel;
};

/// Dilation-intersection identity at one rank: per direction an extremal
/// unitary dilation is searched and its support gap recorded; random
/// dilations are additionally checked to dominate the contraction's
/// supports. Passes when max gap <= 1e-6 and the support-sample Hausdorff
/// distance between the region and the achieved intersection is <= 2e-3.
VerifyReport verify_glw(const ComplexMatrix& A, int k, const HarnessOptions& options = {});

/// N-dilation refinement: per direction, prescribed-eigenvalue N-dilations
/// are built for eps in {0.1, 0.01, 0.001} with the prescribed eigenvalue
/// on the unit-circle chord through (support + eps), and
/// lambda_k(Re e^{i theta} U) must land in [support - 1e-9, support + eps].
VerifyReport verify_bt(const ComplexMatrix& A, int k, const HarnessOptions& options = {});

/// lambda_k(Re(e^{i theta} A_n)) for n = k..n_max at a fixed direction.
std::vector<double> truncation_values(const OperatorGenerator& gen, int k, int n_max,
                                      double theta);

/// Monotone convergence of section eigenvalues on a small direction grid;
/// passes when every sequence is non-decreasing within 1e-10.
/// residuals = increments at the first direction.
VerifyReport truncation_convergence(const OperatorGenerator& gen, int k, int n_max);

/// Subset-hull oracle vs the half-plane sweep for a normal matrix.
VerifyReport verify_normal_equivalence(const std::vector<Complex>& eigs, int k,
                                       int grid_size = 720);

/// Spectral model of the direct sum of diag(-1/n, e^{i pi/n}/n) blocks,
/// n = 2..n_trunc; multiplicity of each atom is an explicit input.
SpectralModel build_counterexample_model(int n_trunc, long long multiplicity = 1);

/// The finite section matrix of that direct sum (size 2*(n_trunc-1)).
ComplexMatrix counterexample_section(int n_trunc);

/// Desk-scale shadow of the empty-intersection example: checks that 0 stays
/// inside the model's rank-k regions and inside the rank-k regions of
/// sampled unitary dilations of the finite section. The genuinely
/// infinite-dimensional emptiness statement is only reported, not decided.
VerifyReport example_counterexample_inf(const std::vector<int>& k_list, int n_trunc,
                                        const HarnessOptions& options = {});

} // namespace nrange

#endif // NRANGE_VERIFY_HPP
