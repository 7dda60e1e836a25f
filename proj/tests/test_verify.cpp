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
#include "nrange/verify.hpp"

using namespace nrange;

TEST_CASE("verify_glw passes on the 3-dimensional shift") {
    HarnessOptions options;
    options.grid_size = 90;
    const VerifyReport report = verify_glw(shift_matrix(3), 1, options);
    CHECK(report.passed);
    CHECK(report.hausdorff <= 2e-3);
    REQUIRE(report.per_direction.size() == 90);
    for (const DirectionRecord& r : report.per_direction) {
        CHECK(r.gap <= 1e-6);
        CHECK(r.gap >= -1e-9);
        CHECK(r.target_support == doctest::Approx(std::cos(M_PI / 4)).epsilon(1e-12));
    }
}

TEST_CASE("verify_glw on a unitary input has identically zero gaps") {
    Rng rng = make_rng(193);
    const ComplexMatrix Q = haar_unitary(3, rng);
    HarnessOptions options;
    options.grid_size = 32;
    const VerifyReport report = verify_glw(Q, 2, options);
    CHECK(report.passed);
    for (const DirectionRecord& r : report.per_direction) CHECK(r.gap == 0.0);
}

TEST_CASE("verify_glw passes on a random contraction") {
    Rng rng = make_rng(197);
    const ComplexMatrix A = random_contraction(4, rng, 0.9);
    HarnessOptions options;
    options.grid_size = 90;
    const VerifyReport report = verify_glw(A, 2, options);
    CHECK(report.passed);
    CHECK(report.hausdorff <= 2e-3);
}

TEST_CASE("verify_glw reports are deterministic") {
    Rng rng = make_rng(199);
    const ComplexMatrix A = random_contraction(3, rng, 0.8);
    HarnessOptions options;
    options.grid_size = 24;
    const VerifyReport a = verify_glw(A, 1, options);
    const VerifyReport b = verify_glw(A, 1, options);
    REQUIRE(a.per_direction.size() == b.per_direction.size());
    for (std::size_t i = 0; i < a.per_direction.size(); ++i) {
        CHECK(a.per_direction[i].gap == b.per_direction[i].gap);
        CHECK(a.per_direction[i].achieved_support == b.per_direction[i].achieved_support);
    }
}

TEST_CASE("verify_bt on a strict diagonal contraction") {
    ComplexMatrix A = ComplexMatrix::Zero(2, 2);
    A(0, 0) = 0.5;
    A(1, 1) = -1.0 / 3.0;
    HarnessOptions options;
    options.grid_size = 24;
    const VerifyReport report = verify_bt(A, 1, options);
    CHECK(report.passed);
    for (const DirectionRecord& r : report.per_direction) {
        CHECK(r.achieved_support >= r.target_support - 1e-9);
        CHECK(r.achieved_support <= r.target_support + 0.001 + 1e-6); // smallest eps recorded
    }
}

TEST_CASE("verify_bt trivial branch when the support touches one") {
    // defect-free: the contraction is unitary and is its own N-dilation
    const VerifyReport unitary_case = verify_bt(ComplexMatrix::Identity(3, 3), 1,
                                                HarnessOptions{16, 16, 0, Exec::Parallel});
    CHECK(unitary_case.passed);

    // defect rank 1 with lambda_1(Re A) = 1
    ComplexMatrix A = ComplexMatrix::Zero(2, 2);
    A(0, 0) = 1.0;
    A(1, 1) = 0.25;
    HarnessOptions options;
    options.grid_size = 16;
    const VerifyReport report = verify_bt(A, 1, options);
    CHECK(report.passed);
}

TEST_CASE("verify_bt on a random contraction at k = 2") {
    Rng rng = make_rng(211);
    const ComplexMatrix A = random_contraction(3, rng, 0.9);
    HarnessOptions options;
    options.grid_size = 24;
    const VerifyReport report = verify_bt(A, 2, options);
    CHECK(report.passed);
}

TEST_CASE("truncation_values for the harmonic diagonal are exact") {
    const OperatorGenerator gen =
        OperatorGenerator::diagonal([](int m) { return Complex(1.0 - 1.0 / m, 0.0); });
    const std::vector<double> values = truncation_values(gen, 1, 40, 0.0);
    REQUIRE(values.size() == 40);
    for (int n = 1; n <= 40; ++n)
        CHECK(std::abs(values[n - 1] - (1.0 - 1.0 / n)) <= 1e-14);
}

TEST_CASE("truncation_convergence of shift sections") {
    const OperatorGenerator gen =
        OperatorGenerator::weighted_shift([](int) { return Complex(1.0, 0.0); });
    const VerifyReport report = truncation_convergence(gen, 1, 48);
    CHECK(report.passed);
    const std::vector<double> values = truncation_values(gen, 1, 48, 0.0);
    for (int n = 1; n <= 48; ++n)
        CHECK(std::abs(values[n - 1] - std::cos(M_PI / (n + 1))) <= 1e-10);
    // increments are recorded for convergence inspection
    CHECK(report.residuals.size() >= 40);
    for (double inc : report.residuals) CHECK(inc >= -1e-10);

    CHECK_THROWS_AS(truncation_convergence(gen, 5, 6), Error);
}

TEST_CASE("truncation_convergence of the two-spiral blocks stabilizes at one half") {
    const OperatorGenerator gen = OperatorGenerator::block_direct_sum([](int j) {
        const int n = j + 1;
        ComplexMatrix block = ComplexMatrix::Zero(2, 2);
        block(0, 0) = Complex(-1.0 / n, 0.0);
        block(1, 1) = std::polar(1.0 / n, M_PI / n);
        return block;
    });
    const VerifyReport report = truncation_convergence(gen, 1, 30);
    CHECK(report.passed);
    // at theta = pi the support is driven by the -1/2 atom
    const std::vector<double> values = truncation_values(gen, 1, 30, M_PI);
    CHECK(values.back() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("verify_normal_equivalence across shapes") {
    const std::vector<Complex> roots = {Complex(1, 0), Complex(0, 1), Complex(-1, 0),
                                        Complex(0, -1)};
    CHECK(verify_normal_equivalence(roots, 2, 720).passed);

    const std::vector<Complex> line = {Complex(1, 0), Complex(2, 0), Complex(3, 0),
                                       Complex(4, 0)};
    const VerifyReport segment = verify_normal_equivalence(line, 2, 720);
    CHECK(segment.passed);

    const std::vector<Complex> repeated(5, Complex(0.3, -0.7));
    for (int k = 1; k <= 5; ++k) CHECK(verify_normal_equivalence(repeated, k, 360).passed);

    CHECK_THROWS_WITH_AS(verify_normal_equivalence(std::vector<Complex>(9, Complex(0, 0)), 1, 64),
                         doctest::Contains("TooLarge"), Error);
}

TEST_CASE("example_counterexample_inf finite shadow") {
    HarnessOptions options;
    options.grid_size = 90;
    const VerifyReport report = example_counterexample_inf({1, 2, 3}, 12, options);
    CHECK(report.passed);
    CHECK(report.instance.find("model-level only") != std::string::npos);
    // one record per k with non-growing extents
    REQUIRE(report.per_direction.size() == 3);
    CHECK(report.per_direction[0].achieved_support >=
          report.per_direction[1].achieved_support - 1e-12);
    CHECK(report.per_direction[1].achieved_support >=
          report.per_direction[2].achieved_support - 1e-12);
}

TEST_CASE("counterexample model building blocks") {
    const SpectralModel model = build_counterexample_model(5);
    CHECK(model.atoms.size() == 8);
    const ComplexMatrix section = counterexample_section(5);
    CHECK(section.rows() == 8);
    CHECK(section(0, 0) == Complex(-0.5, 0.0));
    // the section's eigenvalues are exactly the model atoms
    for (std::size_t j = 0; j < model.atoms.size(); ++j)
        CHECK(std::abs(section(j, j) - model.atoms[j].point) <= 1e-15);
}
