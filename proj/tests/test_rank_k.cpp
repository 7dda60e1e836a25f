// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <cmath>

#include "nrange/errors.hpp"
#include "nrange/linalg.hpp"
#include "nrange/random.hpp"
#include "nrange/rank_k.hpp"
#include "oracles.hpp"

using namespace nrange;

namespace {

std::vector<Complex> fourth_roots() {
    return {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
}

ComplexMatrix diag_of(const std::vector<Complex>& values) {
    ComplexMatrix M = ComplexMatrix::Zero(values.size(), values.size());
    for (std::size_t j = 0; j < values.size(); ++j) M(j, j) = values[j];
    return M;
}

} // namespace

TEST_CASE("support_value on shifts is rotation invariant") {
    const ComplexMatrix S3 = shift_matrix(3);
    for (double theta : {0.0, 0.7, 2.9, 5.5}) {
        CHECK(support_value(S3, 1, theta) ==
              doctest::Approx(std::cos(M_PI / 4)).epsilon(1e-12));
    }
    CHECK(support_value(ComplexMatrix::Identity(2, 2), 1, 1.1) ==
          doctest::Approx(std::cos(1.1)).epsilon(1e-12));
    CHECK_THROWS_WITH_AS(support_value(S3, 4, 0.0), doctest::Contains("KOutOfRange"), Error);
}

TEST_CASE("support_value agrees with the Jacobi oracle on a random matrix") {
    Rng rng = make_rng(61);
    const ComplexMatrix A = gaussian_matrix(5, 5, rng);
    const double theta = 2.1;
    const std::vector<double> oracle =
        test::jacobi_eigenvalues(rotated_real_part(A, theta));
    CHECK(support_value(A, 3, theta) == doctest::Approx(oracle[2]).epsilon(1e-11));
}

TEST_CASE("omega_region of shifts matches the closed-form disk") {
    const ConvexRegion region = omega_region(shift_matrix(4), 2, 720);
    const ConvexRegion disk = shift_oracle(4, 2, 720);
    CHECK_FALSE(region.empty);
    CHECK(hausdorff(region, disk) <= 1e-3);

    CHECK(omega_region(shift_matrix(4), 3, 720).empty);
}

TEST_CASE("omega_region of a normal matrix pinches to the origin") {
    const ConvexRegion region = omega_region(diag_of(fourth_roots()), 2, 720);
    const ConvexRegion oracle = normal_region(fourth_roots(), 2, 720);
    CHECK_FALSE(region.empty);
    CHECK(hausdorff(region, oracle) <= 2e-3);
    for (const Complex& v : region.vertices) CHECK(std::abs(v) <= 2e-2);
}

TEST_CASE("membership against the shift disk") {
    const ComplexMatrix S4 = shift_matrix(4);
    CHECK(membership(S4, 2, Complex(0.3, 0.0), 1e-6) == Membership::Inside);
    CHECK(membership(S4, 2, Complex(0.5, 0.0), 1e-6) == Membership::Outside);

    // diagonal entries of any matrix lie in the numerical range
    Rng rng = make_rng(67);
    const ComplexMatrix A = gaussian_matrix(4, 4, rng);
    CHECK(membership(A, 1, A(0, 0), 1e-6) != Membership::Outside);
}

TEST_CASE("normal_region subset-hull cases") {
    const ConvexRegion full = normal_region(fourth_roots(), 1, 720);
    CHECK_FALSE(full.empty);
    // k = 1 is the convex hull: the square with the four roots as vertices
    CHECK(point_margin(full, Complex(1, 0)) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(classify_point(full, Complex(0.4, 0.4), 1e-9) == Membership::Inside);
    CHECK(classify_point(full, Complex(0.6, 0.6), 1e-9) == Membership::Outside);

    const ConvexRegion pinch = normal_region(fourth_roots(), 2, 720);
    CHECK_FALSE(pinch.empty);
    for (const Complex& v : pinch.vertices) CHECK(std::abs(v) <= 2e-2);

    const ConvexRegion point = normal_region({Complex(1, 0), Complex(1, 0), Complex(1, 0)}, 3, 720);
    CHECK_FALSE(point.empty);
    for (const Complex& v : point.vertices) CHECK(std::abs(v - Complex(1, 0)) <= 1e-8);

    CHECK_THROWS_WITH_AS(normal_region(std::vector<Complex>(23, Complex(0, 0)), 1, 64),
                         doctest::Contains("TooLarge"), Error);
}

TEST_CASE("collinear eigenvalues give the middle segment") {
    const std::vector<Complex> eigs = {Complex(1, 0), Complex(2, 0), Complex(3, 0),
                                       Complex(4, 0)};
    const ConvexRegion region = normal_region(eigs, 2, 720);
    CHECK_FALSE(region.empty);
    for (const Complex& v : region.vertices) {
        CHECK(std::abs(v.imag()) <= 1e-8);
        CHECK(v.real() >= 2.0 - 1e-8);
        CHECK(v.real() <= 3.0 + 1e-8);
    }
    double lo = 1e9, hi = -1e9;
    for (const Complex& v : region.vertices) {
        lo = std::min(lo, v.real());
        hi = std::max(hi, v.real());
    }
    CHECK(lo == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(hi == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("shift_oracle radii and emptiness") {
    const ConvexRegion s32 = shift_oracle(3, 2, 720);
    CHECK_FALSE(s32.empty); // radius cos(pi/2) = 0: the point at the origin
    for (const Complex& v : s32.vertices) CHECK(std::abs(v) <= 1e-8);

    CHECK(shift_oracle(4, 3, 720).empty);

    const ConvexRegion s91 = shift_oracle(9, 1, 720);
    CHECK(s91.supports[0] == doctest::Approx(std::cos(M_PI / 10)).epsilon(1e-14));
    CHECK(s91.supports[0] == doctest::Approx(0.9510565162951535).epsilon(1e-14));
}

TEST_CASE("spectral_V_k matches the subset-hull oracle on atoms") {
    SpectralModel model;
    for (const Complex& z : fourth_roots()) model.atoms.push_back({z, 1, false});
    const ConvexRegion via_model = spectral_V_k(model, RankIndex::finite(2), 720);
    const ConvexRegion via_subsets = normal_region(fourth_roots(), 2, 720);
    CHECK(hausdorff(via_model, via_subsets) <= 1e-12);
}

TEST_CASE("spectral_V_k with an infinite atom") {
    SpectralModel model;
    model.atoms.push_back({Complex(0.3, -0.2), 1, true});
    for (int k : {1, 3, 10}) {
        const ConvexRegion region = spectral_V_k(model, RankIndex::finite(k), 360);
        CHECK_FALSE(region.empty);
        for (const Complex& v : region.vertices)
            CHECK(std::abs(v - Complex(0.3, -0.2)) <= 1e-8);
    }
    const ConvexRegion inf_region = spectral_V_k(model, RankIndex::inf(), 360);
    CHECK_FALSE(inf_region.empty);
    for (const Complex& v : inf_region.vertices)
        CHECK(std::abs(v - Complex(0.3, -0.2)) <= 1e-8);
}

TEST_CASE("spectral_V_k shrinks with k on the two-spiral model") {
    SpectralModel model;
    for (int n = 2; n <= 40; ++n) {
        model.atoms.push_back({Complex(-1.0 / n, 0.0), 1, false});
        model.atoms.push_back({std::polar(1.0 / n, M_PI / n), 1, false});
    }
    double previous = std::numeric_limits<double>::infinity();
    for (int k : {1, 2, 3, 6}) {
        const ConvexRegion region = spectral_V_k(model, RankIndex::finite(k), 360);
        CHECK_FALSE(region.empty);
        // 0 enters the regions only in the infinite model; the n<=40
        // truncation passes within ~pi/(2*40^2) of the origin.
        CHECK(point_margin(region, Complex(0, 0)) <= 2e-3);
        double extent = 0.0;
        for (double s : region.supports) extent = std::max(extent, std::abs(s));
        CHECK(extent <= previous + 1e-12);
        previous = extent;
    }
    // beyond the total multiplicity nothing is left
    CHECK(spectral_V_k(model, RankIndex::finite(80), 360).empty);
    CHECK(spectral_V_k(model, RankIndex::inf(), 360).empty);

    SpectralModel empty_model;
    CHECK_THROWS_WITH_AS(spectral_V_k(empty_model, RankIndex::finite(1), 64),
                         doctest::Contains("EmptyModel"), Error);
}

TEST_CASE("spectral model normalization merges duplicates") {
    SpectralModel model;
    model.atoms.push_back({Complex(1, 0), 2, false});
    model.atoms.push_back({Complex(1, 0), 3, false});
    model.atoms.push_back({Complex(0, 1), 1, true});
    model.atoms.push_back({Complex(0, 1), 7, false});
    model.normalize();
    REQUIRE(model.atoms.size() == 2);
    CHECK(model.atoms[0].multiplicity == 5);
    CHECK(model.atoms[1].infinite);
    CHECK(model.total_finite_multiplicity() == 5);
    CHECK(model.has_infinite_atom());
}

TEST_CASE("omega_inf collapses to the expected sets") {
    // matrix route: repeated scalar
    const Complex z(0.25, -0.4);
    const ConvexRegion scalar = omega_inf(diag_of({z, z, z}), 360);
    CHECK_FALSE(scalar.empty);
    for (const Complex& v : scalar.vertices) CHECK(std::abs(v - z) <= 1e-8);

    // model route: two infinite atoms give the segment between them
    SpectralModel two;
    two.atoms.push_back({Complex(-0.5, 0.0), 1, true});
    two.atoms.push_back({Complex(0.5, 0.0), 1, true});
    const ConvexRegion segment = omega_inf(two, 360);
    CHECK_FALSE(segment.empty);
    for (const Complex& v : segment.vertices) {
        CHECK(std::abs(v.imag()) <= 1e-8);
        CHECK(std::abs(v.real()) <= 0.5 + 1e-8);
    }
    // two-atom sweep oracle: support is max of the two projections
    for (std::size_t i = 0; i < segment.thetas.size(); ++i) {
        const double c = std::cos(segment.thetas[i]);
        CHECK(segment.supports[i] == doctest::Approx(0.5 * std::abs(c)).epsilon(1e-12));
    }
}

TEST_CASE("nesting and Lipschitz properties of supports") {
    Rng rng = make_rng(71);
    for (int t = 0; t < 12; ++t) {
        const int n = 3 + (t % 4);
        const ComplexMatrix A = gaussian_matrix(n, n, rng);
        const double norm_A = operator_norm(A);
        const double t1 = 2.0 * M_PI * uniform_draw(rng);
        const double t2 = 2.0 * M_PI * uniform_draw(rng);
        for (int k = 1; k < n; ++k) {
            CHECK(support_value(A, k + 1, t1) <= support_value(A, k, t1) + 1e-10);
            CHECK(std::abs(support_value(A, k, t1) - support_value(A, k, t2)) <=
                  norm_A * std::abs(t1 - t2) + 1e-10);
        }
    }
}

TEST_CASE("affine covariance of supports (P1)") {
    Rng rng = make_rng(73);
    for (int t = 0; t < 12; ++t) {
        const int n = 3 + (t % 3);
        const ComplexMatrix A = gaussian_matrix(n, n, rng);
        const double phi = 2.0 * M_PI * uniform_draw(rng);
        const Complex beta(normal_draw(rng), normal_draw(rng));
        const double theta = 2.0 * M_PI * uniform_draw(rng);
        const int k = 1 + (t % n);
        const ComplexMatrix B = std::polar(1.0, phi) * A + beta * ComplexMatrix::Identity(n, n);
        const double lhs = support_value(B, k, theta);
        const double rhs = support_value(A, k, theta + phi) +
                           (std::polar(1.0, theta) * beta).real();
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("unitary invariance of supports (P4)") {
    Rng rng = make_rng(79);
    for (int t = 0; t < 10; ++t) {
        const int n = 3 + (t % 3);
        const ComplexMatrix A = gaussian_matrix(n, n, rng);
        const ComplexMatrix Q = haar_unitary(n, rng);
        const double theta = 2.0 * M_PI * uniform_draw(rng);
        const int k = 1 + (t % n);
        CHECK(std::abs(support_value(Q.adjoint() * A * Q, k, theta) -
                       support_value(A, k, theta)) <= 1e-10 * std::max(1.0, operator_norm(A)));
    }
}

TEST_CASE("compression monotonicity of supports (P5)") {
    Rng rng = make_rng(83);
    for (int t = 0; t < 10; ++t) {
        const int n = 4 + (t % 3);
        const int m = n - 1 - (t % 2);
        const ComplexMatrix A = gaussian_matrix(n, n, rng);
        // isometric compression to an m-dimensional subspace
        const ComplexMatrix Q = haar_unitary(n, rng).leftCols(m);
        const ComplexMatrix A0 = Q.adjoint() * A * Q;
        const double theta = 2.0 * M_PI * uniform_draw(rng);
        for (int k = 1; k <= m; ++k)
            CHECK(support_value(A0, k, theta) <= support_value(A, k, theta) + 1e-10);
    }
}

TEST_CASE("normal matrices: sweep equals subset-hull oracle") {
    Rng rng = make_rng(89);
    for (int t = 0; t < 6; ++t) {
        const int n = 4 + (t % 5);
        std::vector<Complex> eigs;
        for (int j = 0; j < n; ++j) eigs.emplace_back(normal_draw(rng), normal_draw(rng));
        const ComplexMatrix Q = haar_unitary(n, rng);
        const ComplexMatrix A = Q * diag_of(eigs) * Q.adjoint(); // normal, same spectrum
        const int k = 1 + (t % 3);
        const double h = hausdorff(omega_region(A, k, 720), normal_region(eigs, k, 720));
        CHECK(h <= 2e-3);
    }
}

TEST_CASE("parallel sweep is bitwise identical to the serial reference") {
    Rng rng = make_rng(97);
    const ComplexMatrix A = gaussian_matrix(7, 7, rng);
    const std::vector<double> serial = omega_supports(A, 2, 360, Exec::Serial);
    const std::vector<double> parallel = omega_supports(A, 2, 360, Exec::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}
