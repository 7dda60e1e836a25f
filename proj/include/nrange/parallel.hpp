// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef NRANGE_PARALLEL_HPP
#define NRANGE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace nrange {

// Work items are always assembled by index, so outputs are bitwise
// independent of thread count and scheduling.
enum class Exec { Serial, Parallel };

// Thread budget for Exec::Parallel. 0 = hardware default. Resolution order:
// explicit set_thread_count() > NRANGE_THREADS env > hardware.
void set_thread_count(int n);
int thread_count();

/// Runs fn(i) for i in [0, n). The Serial path is the reference
/// implementation the parallel path is tested against.
void for_index(std::size_t n, const std::function<void(std::size_t)>& fn,
               Exec exec = Exec::Parallel);

} // namespace nrange

#endif // NRANGE_PARALLEL_HPP
