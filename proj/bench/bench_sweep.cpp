// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

// Timing comparison between the serial reference kernels and the OpenMP
// paths. Also asserts bitwise agreement, since the benchmark is the one
// place both paths run on identical large inputs.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "nrange/cnum.hpp"
#include "nrange/parallel.hpp"
#include "nrange/random.hpp"
#include "nrange/rank_k.hpp"

using namespace nrange;

namespace {

double seconds(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial_s, double parallel_s, bool identical) {
    std::printf("%-28s %10.3fs %12.3fs %8.2fx   %s\n", name, serial_s, parallel_s,
                serial_s / parallel_s, identical ? "bitwise-equal" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    const int dim = argc > 1 ? std::atoi(argv[1]) : 48;
    const int grid = argc > 2 ? std::atoi(argv[2]) : 1440;

    std::printf("threads: %d, matrix dim: %d, grid: %d\n\n", thread_count(), dim, grid);
    std::printf("%-28s %11s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    Rng rng = make_rng(1);
    const ComplexMatrix A = random_contraction(dim, rng, 0.9);

    {
        std::vector<double> s, p;
        const double ts = seconds([&] { s = omega_supports(A, dim / 4, grid, Exec::Serial); });
        const double tp = seconds([&] { p = omega_supports(A, dim / 4, grid, Exec::Parallel); });
        row("rank-k support sweep", ts, tp, s == p);
    }

    {
        CWeights c = CWeights::from_real([] {
            std::vector<double> w(8);
            for (int j = 0; j < 8; ++j) w[j] = 1.0 - j / 8.0;
            return w;
        }());
        std::vector<double> s, p;
        const double ts = seconds([&] { s = c_supports(c, A, grid, Exec::Serial); });
        const double tp = seconds([&] { p = c_supports(c, A, grid, Exec::Parallel); });
        row("c-numerical support sweep", ts, tp, s == p);
    }

    {
        const ComplexMatrix B = random_contraction(16, rng, 0.8);
        CWeights c = CWeights::from_real({1.0, 0.5});
        std::vector<Complex> s, p;
        const double ts = seconds([&] { s = c_sampled(c, B, 4000, 7, Exec::Serial); });
        const double tp = seconds([&] { p = c_sampled(c, B, 4000, 7, Exec::Parallel); });
        row("Haar sampling cloud", ts, tp, s == p);
    }

    {
        auto run = [&](Exec exec) {
            VerifyReport r = counterexample_gap(20000, 3, exec);
            return r.residuals;
        };
        std::vector<double> s, p;
        const double ts = seconds([&] { s = run(Exec::Serial); });
        const double tp = seconds([&] { p = run(Exec::Parallel); });
        row("dilation interval sampling", ts, tp, s == p);
    }

    return 0;
}
