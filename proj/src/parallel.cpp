// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#include "nrange/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <omp.h>

namespace nrange {

namespace {
int g_thread_count = 0; // 0 = unresolved / hardware default
} // namespace

void set_thread_count(int n) { g_thread_count = n > 0 ? n : 0; }

int thread_count() {
    if (g_thread_count > 0) return g_thread_count;
    if (const char* env = std::getenv("NRANGE_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
}

void for_index(std::size_t n, const std::function<void(std::size_t)>& fn, Exec exec) {
    if (exec == Exec::Serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const int threads = thread_count();

    // An exception escaping an OpenMP region terminates the process, so the
    // first one is captured and rethrown after the join.
    std::exception_ptr first_error = nullptr;
    std::atomic<bool> failed{false};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(nrange_for_index_error)
            {
                if (!failed.exchange(true)) first_error = std::current_exception();
            }
        }
    }
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace nrange
