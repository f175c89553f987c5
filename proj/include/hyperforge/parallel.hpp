// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

// Index-ordered fan-out over a fixed number of worker threads. Results are
// always merged by task index, so the worker count never changes output.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace hyperforge {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads and returns the
/// results in index order. The exception of the lowest failing index wins.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, Fn&& fn) {
  std::vector<std::optional<T>> slots(count);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1U, jobs), count));
  if (workers <= 1) {
    std::vector<T> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_index = count;
  std::exception_ptr error;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < workers; ++t) threads.emplace_back(work);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Smallest i in [0, count) whose fn(i) is engaged, with its value. Tasks
/// above an already-found index are skipped.
template <class T, class Fn>
std::optional<std::pair<std::size_t, T>> parallel_find_first(std::size_t count,
                                                             unsigned jobs, Fn&& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1U, jobs), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      if (std::optional<T> r = fn(i)) return std::pair{i, std::move(*r)};
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::mutex mutex;
  std::optional<T> best_value;
  std::size_t error_index = count;
  std::exception_ptr error;
  auto work = [&] {
    for (std::size_t i = next++; i < count && i < best.load(); i = next++) {
      try {
        std::optional<T> r = fn(i);
        if (!r) continue;
        std::lock_guard lock(mutex);
        if (i < best.load()) {
          best = i;
          best_value = std::move(r);
        }
      } catch (...) {
        std::lock_guard lock(mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < workers; ++t) threads.emplace_back(work);
  for (auto& t : threads) t.join();
  if (error && error_index < best.load()) std::rethrow_exception(error);
  if (best.load() == count) return std::nullopt;
  return std::pair{best.load(), std::move(*best_value)};
}

}  // namespace hyperforge
