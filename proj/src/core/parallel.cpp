// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace wavegroup
{

std::size_t worker_count()
{
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("WAVEGROUP_THREADS"))
  {
    try
    {
      const long cap = std::stol(env);
      if (cap >= 1)
      {
        n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
      }
    }
    catch (const std::exception &)
    {
      // Unparseable values leave the default in place.
    }
  }
  return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn)
{
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1)
  {
    for (std::size_t i = 0; i < n; i++)
    {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; w++)
  {
    pool.emplace_back([&]() {
      for (std::size_t i = next++; i < n; i = next++)
      {
        try
        {
          fn(i);
        }
        catch (...)
        {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error)
          {
            error = std::current_exception();
          }
        }
      }
    });
  }
  for (auto &th : pool)
  {
    th.join();
  }
  if (error)
  {
    std::rethrow_exception(error);
  }
}

}  // namespace wavegroup
