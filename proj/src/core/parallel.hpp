// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVEGROUP_CORE_PARALLEL_HPP
#define WAVEGROUP_CORE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace wavegroup
{

// Worker count: hardware concurrency, capped by the WAVEGROUP_THREADS environment variable.
std::size_t worker_count();

// Runs fn(i) for i in [0, n) across worker_count() threads. Tasks must be independent. The
// first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

}  // namespace wavegroup

#endif  // WAVEGROUP_CORE_PARALLEL_HPP
