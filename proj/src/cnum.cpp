// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#include "nrange/cnum.hpp"

#include <chrono>
#include <cmath>

#include "nrange/dilation.hpp"
#include "nrange/errors.hpp"
#include "nrange/linalg.hpp"
#include "nrange/random.hpp"

namespace nrange {

namespace {

void require_sorted_real(const CWeights& c) {
    if (!c.sorted_real())
        throw Error(ErrorCode::WeightsNotSortedReal,
                    "weights must be real and sorted descending");
}

std::vector<double> padded_real_weights(const CWeights& c, Eigen::Index n) {
    if (static_cast<Eigen::Index>(c.values.size()) > n)
        throw Error(ErrorCode::ShapeError, "more weights than matrix dimensions");
    std::vector<double> w(n, 0.0);
    for (std::size_t j = 0; j < c.values.size(); ++j) w[j] = c.values[j].real();
    return w;
}

} // namespace

bool CWeights::sorted_real() const {
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (values[j].imag() != 0.0) return false;
        if (j + 1 < values.size() && values[j].real() < values[j + 1].real()) return false;
    }
    return true;
}

CWeights CWeights::from_real(std::vector<double> weights) {
    CWeights c;
    c.values.reserve(weights.size());
    for (double w : weights) c.values.emplace_back(w, 0.0);
    return c;
}

std::pair<double, double> c_interval_hermitian(const CWeights& c, const ComplexMatrix& M) {
    require_sorted_real(c);
    const HermitianSpectrum spectrum = hermitian_spectrum(M, 1e-8);
    const Eigen::Index n = M.rows();
    const std::vector<double> w = padded_real_weights(c, n);
    double alpha = 0.0, beta = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        alpha += w[j] * spectrum.eigenvalues(n - 1 - j);
        beta += w[j] * spectrum.eigenvalues(j);
    }
    return {alpha, beta};
}

std::vector<double> c_supports(const CWeights& c, const ComplexMatrix& A, int grid_size,
                               Exec exec) {
    require_sorted_real(c);
    const std::vector<double> w = padded_real_weights(c, A.rows());
    const std::vector<double> thetas = direction_grid(grid_size);
    std::vector<double> supports(thetas.size());
    for_index(
        thetas.size(),
        [&](std::size_t i) {
            const HermitianSpectrum spectrum =
                hermitian_spectrum(rotated_real_part(A, thetas[i]));
            double s = 0.0;
            for (Eigen::Index j = 0; j < A.rows(); ++j) s += w[j] * spectrum.eigenvalues(j);
            supports[i] = s;
        },
        exec);
    return supports;
}

ConvexRegion c_region(const CWeights& c, const ComplexMatrix& A, int grid_size, Exec exec) {
    std::vector<double> thetas = direction_grid(grid_size);
    std::vector<double> supports = c_supports(c, A, grid_size, exec);
    return region_from_supports(std::move(thetas), std::move(supports));
}

std::vector<Complex> c_sampled(const CWeights& c, const ComplexMatrix& A, int n_samples,
                               std::uint64_t seed, Exec exec) {
    if (A.rows() != A.cols()) throw Error(ErrorCode::ShapeError, "matrix must be square");
    const Eigen::Index n = A.rows();
    if (static_cast<Eigen::Index>(c.values.size()) > n)
        throw Error(ErrorCode::ShapeError, "more weights than matrix dimensions");
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(n);
    for (std::size_t j = 0; j < c.values.size(); ++j) w(j) = c.values[j];

    std::vector<Complex> samples(n_samples);
    for_index(
        static_cast<std::size_t>(n_samples),
        [&](std::size_t i) {
            Rng rng = make_rng(mix_seed(seed, i));
            const ComplexMatrix Q = haar_unitary(static_cast<int>(n), rng);
            const ComplexMatrix conj = Q.adjoint() * A * Q;
            Complex trace(0.0, 0.0);
            for (Eigen::Index j = 0; j < n; ++j) trace += w(j) * conj(j, j);
            samples[i] = trace;
        },
        exec);
    return samples;
}

VerifyReport counterexample_gap(int n_dilations, std::uint64_t seed, Exec exec) {
    const auto t0 = std::chrono::steady_clock::now();

    ComplexMatrix A(2, 2);
    A << 0, 1, 0, 0;

    struct Sample {
        double alpha, beta, lambda1;
    };
    std::vector<Sample> samples(std::max(n_dilations, 0));

    for_index(
        samples.size(),
        [&](std::size_t i) {
            Rng rng = make_rng(mix_seed(seed, i));
            ComplexMatrix U;
            if (i % 2 == 0) {
                U = dilation_from_parameter(A, haar_unitary(2, rng));
            } else {
                // Minimal 3x3 dilation padded by a random phase to 4x4.
                const ComplexMatrix V = haar_unitary(1, rng);
                const ComplexMatrix W = haar_unitary(1, rng);
                const ComplexMatrix U0 = minimal_dilation(A, V, W);
                U = ComplexMatrix::Zero(4, 4);
                U.topLeftCorner(3, 3) = U0;
                U(3, 3) = std::polar(1.0, 2.0 * M_PI * uniform_draw(rng));
            }
            const HermitianSpectrum spec = hermitian_spectrum(rotated_real_part(U, 0.0));
            samples[i] = Sample{spec.eigenvalues(3) + spec.eigenvalues(2),
                                spec.eigenvalues(0) + spec.eigenvalues(1),
                                spec.eigenvalues(0)};
        },
        exec);

    VerifyReport report;
    report.theorem_id = "cnum-dilation-gap";
    report.instance = "A=[[0,1],[0,0]], c=(1,1), samples=" + std::to_string(n_dilations) +
                      ", seed=" + std::to_string(seed);

    double min_beta = std::numeric_limits<double>::infinity();
    double max_alpha = -std::numeric_limits<double>::infinity();
    double min_lambda1 = std::numeric_limits<double>::infinity();
    bool all_contain_zero = true;
    for (const Sample& s : samples) {
        min_beta = std::min(min_beta, s.beta);
        max_alpha = std::max(max_alpha, s.alpha);
        min_lambda1 = std::min(min_lambda1, s.lambda1);
        if (!(s.alpha <= 0.0 && 0.0 <= s.beta)) all_contain_zero = false;
    }

    report.residuals = {min_beta, max_alpha, min_lambda1};
    report.passed = !samples.empty() && all_contain_zero && min_beta >= 0.25 &&
                    min_lambda1 >= 0.5 - 1e-9;
    report.hausdorff = 0.0;
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report;
}

} // namespace nrange
