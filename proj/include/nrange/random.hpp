// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef NRANGE_RANDOM_HPP
#define NRANGE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "nrange/matrix.hpp"

namespace nrange {

/// Derives an independent stream seed from (seed, a, b). Work items seeded
/// this way can run in any order without changing results.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Standard normal deviate via Box-Muller on raw 64-bit draws. Hand-rolled
/// so the stream does not depend on the standard library's distribution
/// implementation.
double normal_draw(Rng& rng);

/// Uniform in [0, 1).
double uniform_draw(Rng& rng);

/// Matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix gaussian_matrix(int rows, int cols, Rng& rng);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the R
/// diagonal phases absorbed into Q.
ComplexMatrix haar_unitary(int n, Rng& rng);

/// Random contraction with operator norm exactly norm_target (<= 1).
ComplexMatrix random_contraction(int n, Rng& rng, double norm_target = 0.9);

} // namespace nrange

#endif // NRANGE_RANDOM_HPP
