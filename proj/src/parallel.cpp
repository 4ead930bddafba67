#include "straightedge/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace straightedge {

namespace {

int env_cap() {
  const char* raw = std::getenv("STRAIGHTEDGE_THREADS");
  if (raw == nullptr) return 0;
  const long v = std::strtol(raw, nullptr, 10);
  return v > 0 ? static_cast<int>(v) : 1;
}

std::atomic<int> g_override{0};

}  // namespace

int thread_cap() {
  const int forced = g_override.load(std::memory_order_relaxed);
  const int hw = std::max(1u, std::thread::hardware_concurrency());
  int cap = forced > 0 ? forced : hw;
  static const int from_env = env_cap();
  if (forced == 0 && from_env > 0) cap = std::min(cap, from_env);
  return std::max(1, cap);
}

void set_thread_cap(int threads) { g_override.store(threads, std::memory_order_relaxed); }

void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t)>& fn) {
  const std::int64_t count = end - begin;
  if (count <= 0) return;
  const int workers = static_cast<int>(std::min<std::int64_t>(thread_cap(), count));
  if (workers <= 1) {
    for (std::int64_t i = begin; i < end; ++i) fn(i);
    return;
  }

  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto run_chunk = [&](std::int64_t lo, std::int64_t hi) {
    try {
      for (std::int64_t i = lo; i < hi; ++i) fn(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers) - 1);
  const std::int64_t chunk = (count + workers - 1) / workers;
  for (int w = 1; w < workers; ++w) {
    const std::int64_t lo = begin + w * chunk;
    const std::int64_t hi = std::min(end, lo + chunk);
    if (lo < hi) pool.emplace_back(run_chunk, lo, hi);
  }
  run_chunk(begin, std::min(end, begin + chunk));
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace straightedge
