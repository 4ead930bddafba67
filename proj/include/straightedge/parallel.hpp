#pragma once

#include <cstdint>
#include <functional>

namespace straightedge {

/// Number of worker threads compute loops may use: hardware concurrency
/// capped by the STRAIGHTEDGE_THREADS environment variable (read once).
/// Always at least 1.
int thread_cap();

/// Overrides the cap for this process (0 restores the environment default).
void set_thread_cap(int threads);

/// Runs fn(i) for i in [begin, end) on up to thread_cap() threads using
/// static chunking. Tasks must write only to per-index slots; callers reduce
/// the slots in index order afterwards, so results never depend on the
/// schedule. Exceptions from tasks are rethrown on the calling thread.
void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t)>& fn);

}  // namespace straightedge
