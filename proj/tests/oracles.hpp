// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

// Test-only oracles, deliberately independent of the library's eigensolver
// paths: a hand-rolled cyclic Jacobi diagonalization, closed-form shift
// spectra, and Monte-Carlo trace extremes.

#ifndef NRANGE_TESTS_ORACLES_HPP
#define NRANGE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "nrange/matrix.hpp"
#include "nrange/random.hpp"

namespace nrange::test {

/// Eigenvalues (descending) of a Hermitian matrix via cyclic Jacobi
/// rotations on a plain row-major copy. No Eigen decompositions involved.
inline std::vector<double> jacobi_eigenvalues(const ComplexMatrix& M) {
    const int n = static_cast<int>(M.rows());
    std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = 0.5 * (M(i, j) + std::conj(M(j, i)));

    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(a[p][q]);
        if (off < 1e-28) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a[p][q];
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;
                const Complex phase = apq / mag;
                const double tau = (a[q][q].real() - a[p][p].real()) / (2.0 * mag);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Columns p and q of the rotation: J(p,p)=c, J(q,p)=-s conj(phase),
                // J(p,q)=s phase, J(q,q)=c.
                for (int i = 0; i < n; ++i) {
                    const Complex aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * std::conj(phase) * aiq;
                    a[i][q] = s * phase * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    const Complex apj = a[p][j], aqj = a[q][j];
                    a[p][j] = c * apj - s * phase * aqj;
                    a[q][j] = s * std::conj(phase) * apj + c * aqj;
                }
            }
        }
    }

    std::vector<double> eigs(n);
    for (int i = 0; i < n; ++i) eigs[i] = a[i][i].real();
    std::sort(eigs.begin(), eigs.end(), std::greater<double>());
    return eigs;
}

/// Spectrum of the Hermitian part of the n-dimensional shift:
/// cos(j pi/(n+1)), j = 1..n (descending).
inline std::vector<double> shift_real_part_eigs(int n) {
    std::vector<double> eigs(n);
    for (int j = 1; j <= n; ++j) eigs[j - 1] = std::cos(j * M_PI / (n + 1));
    return eigs;
}

/// Monte-Carlo estimate of the extremes of tr(diag(c) Q* M Q) over random
/// unitaries; brackets the exact interval from inside.
inline std::pair<double, double> mc_trace_extremes(const std::vector<double>& c,
                                                   const ComplexMatrix& M, int n_samples,
                                                   std::uint64_t seed) {
    const int n = static_cast<int>(M.rows());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < n_samples; ++t) {
        Rng rng = make_rng(mix_seed(seed, t));
        const ComplexMatrix Q = haar_unitary(n, rng);
        const ComplexMatrix conj = Q.adjoint() * M * Q;
        double value = 0.0;
        for (std::size_t j = 0; j < c.size(); ++j) value += c[j] * conj(j, j).real();
        lo = std::min(lo, value);
        hi = std::max(hi, value);
    }
    return {lo, hi};
}

} // namespace nrange::test

#endif // NRANGE_TESTS_ORACLES_HPP
