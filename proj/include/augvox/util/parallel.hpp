// include/augvox/util/parallel.hpp

// Copyright 2026  The augvox authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace augvox::parallel {

// Maps work(i) over [0, n) on up to `workers` threads and feeds the results
// to commit(i, result) in strictly increasing index order. Output produced
// through commit is therefore identical for any worker count; only wall time
// changes. The first exception (from work or commit) stops dispatch and is
// rethrown on the calling thread after all workers join.
template <typename Work, typename Commit>
void for_ordered(std::size_t n, int workers, Work&& work, Commit&& commit) {
  using Result = std::invoke_result_t<Work&, std::size_t>;
  static_assert(!std::is_void_v<Result>, "work must return the item's result");

  if (n == 0) return;
  if (workers <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) commit(i, work(i));
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::map<std::size_t, Result> stash;
  std::size_t commit_next = 0;
  std::exception_ptr error;

  auto body = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n) return;
      try {
        Result r = work(i);
        std::lock_guard<std::mutex> lock(mu);
        stash.emplace(i, std::move(r));
        // Drain the ready prefix. Committing under the lock serializes all
        // side effects, which is what callers writing files rely on.
        while (!stash.empty() && stash.begin()->first == commit_next) {
          commit(commit_next, std::move(stash.begin()->second));
          stash.erase(stash.begin());
          ++commit_next;
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  const std::size_t thread_count =
      std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  std::vector<std::thread> threads;
  threads.reserve(thread_count);
  for (std::size_t t = 0; t < thread_count; ++t) threads.emplace_back(body);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace augvox::parallel
