// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#include "nrange/random.hpp"

#include <cmath>

namespace nrange {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ (b * 0x9e3779b97f4a7c15ULL + 1));
}

double uniform_draw(Rng& rng) {
    // 53 random bits -> double in [0, 1)
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double normal_draw(Rng& rng) {
    double u1 = uniform_draw(rng);
    while (u1 <= 0.0) u1 = uniform_draw(rng);
    const double u2 = uniform_draw(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

ComplexMatrix gaussian_matrix(int rows, int cols, Rng& rng) {
    ComplexMatrix G(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const double re = normal_draw(rng);
            const double im = normal_draw(rng);
            G(i, j) = Complex(re, im) / std::sqrt(2.0);
        }
    return G;
}

ComplexMatrix haar_unitary(int n, Rng& rng) {
    const ComplexMatrix G = gaussian_matrix(n, n, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(G);
    ComplexMatrix Q = qr.householderQ();
    const ComplexMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex r = R(j, j);
        const double a = std::abs(r);
        const Complex phase = a > 0 ? r / a : Complex(1, 0);
        Q.col(j) *= phase;
    }
    return Q;
}

ComplexMatrix random_contraction(int n, Rng& rng, double norm_target) {
    ComplexMatrix G = gaussian_matrix(n, n, rng);
    Eigen::JacobiSVD<ComplexMatrix> svd(G);
    const double top = svd.singularValues()(0);
    if (top <= 0) return ComplexMatrix::Zero(n, n);
    return G * (norm_target / top);
}

} // namespace nrange
