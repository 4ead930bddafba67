#include "straightedge/distances.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <list>
#include <mutex>
#include <queue>
#include <unordered_map>
#include <vector>

namespace straightedge {

Eigen::VectorXd single_source_distances(const SpatialGraph& g, VertexId s) {
  if (!g.valid_vertex(s)) throw IndexOutOfRange("source vertex out of range");
  const auto n = g.vertex_count();
  Eigen::VectorXd dist = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  dist[s] = 0.0;

  using Item = std::pair<double, VertexId>;  // ties broken by vertex index
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  queue.emplace(0.0, s);
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) continue;  // stale entry
    for (const AdjacencyEntry& e : g.neighbors(v)) {
      const double nd = d + e.length;
      if (nd < dist[e.neighbor]) {
        dist[e.neighbor] = nd;
        queue.emplace(nd, e.neighbor);
      }
    }
  }
  return dist;
}

namespace {
using RowPtr = std::shared_ptr<const Eigen::VectorXd>;
}

struct DistanceProvider::Impl {
  const SpatialGraph* graph = nullptr;
  DistanceMode mode = DistanceMode::kOnDemand;

  // kPrecomputed: all rows, filled at construction.
  std::vector<RowPtr> table;

  // kOnDemand: LRU of complete rows, keyed by source. In-flight rows are held
  // as shared futures so a row is computed once per residency even under
  // concurrent requests.
  std::size_t capacity_rows = 0;
  mutable std::mutex mutex;
  struct CacheEntry {
    std::shared_future<RowPtr> row;
    std::list<VertexId>::iterator lru_pos;
    bool ready = false;
  };
  mutable std::unordered_map<VertexId, CacheEntry> cache;
  mutable std::list<VertexId> lru;  // front = most recent
  mutable ProviderStats stat;

  RowPtr row(VertexId s) const {
    if (mode == DistanceMode::kPrecomputed) return table[static_cast<std::size_t>(s)];

    std::shared_future<RowPtr> fut;
    std::promise<RowPtr> promise;
    bool compute_here = false;
    {
      std::lock_guard<std::mutex> lock(mutex);
      ++stat.row_requests;
      auto it = cache.find(s);
      if (it != cache.end()) {
        lru.splice(lru.begin(), lru, it->second.lru_pos);
        fut = it->second.row;
      } else {
        fut = promise.get_future().share();
        lru.push_front(s);
        cache.emplace(s, CacheEntry{fut, lru.begin(), false});
        compute_here = true;
        evict_locked();
      }
    }
    if (compute_here) {
      RowPtr computed;
      try {
        computed = std::make_shared<const Eigen::VectorXd>(single_source_distances(*graph, s));
      } catch (...) {
        promise.set_exception(std::current_exception());
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(s);
        if (it != cache.end()) {
          lru.erase(it->second.lru_pos);
          cache.erase(it);
        }
        throw;
      }
      promise.set_value(computed);
      std::lock_guard<std::mutex> lock(mutex);
      ++stat.rows_computed;
      auto it = cache.find(s);
      if (it != cache.end()) it->second.ready = true;
      return computed;
    }
    return fut.get();
  }

  // Caller holds the mutex. Evicts least-recently-used completed rows until
  // the cache fits; in-flight rows are never evicted.
  void evict_locked() const {
    while (cache.size() > capacity_rows && !lru.empty()) {
      bool evicted = false;
      for (auto rit = lru.rbegin(); rit != lru.rend(); ++rit) {
        auto it = cache.find(*rit);
        if (it != cache.end() && it->second.ready) {
          lru.erase(std::next(rit).base());
          cache.erase(it);
          evicted = true;
          break;
        }
      }
      if (!evicted) break;
    }
  }
};

DistanceMode DistanceProvider::mode() const { return impl_->mode; }

const SpatialGraph& DistanceProvider::graph() const { return *impl_->graph; }

double DistanceProvider::distance(VertexId a, VertexId b) const {
  const SpatialGraph& g = *impl_->graph;
  if (!g.valid_vertex(a) || !g.valid_vertex(b))
    throw IndexOutOfRange("distance query out of range");
  if (a == b) return 0.0;
  const VertexId lo = std::min(a, b);
  const VertexId hi = std::max(a, b);
  return (*impl_->row(lo))[hi];
}

RowPtr DistanceProvider::source_row(VertexId s) const {
  if (!impl_->graph->valid_vertex(s)) throw IndexOutOfRange("source vertex out of range");
  return impl_->row(s);
}

ProviderStats DistanceProvider::stats() const {
  std::lock_guard<std::mutex> lock(impl_->mutex);
  return impl_->stat;
}

DistanceProvider make_provider(const SpatialGraph& g, DistanceMode mode,
                               std::size_t memory_budget_bytes) {
  auto impl = std::make_shared<DistanceProvider::Impl>();
  impl->graph = &g;
  impl->mode = mode;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const std::size_t row_bytes = n * sizeof(double);

  if (mode == DistanceMode::kPrecomputed) {
    if (n > 0 && n * row_bytes > memory_budget_bytes)
      throw BudgetExceeded("full distance table exceeds the memory budget");
    impl->table.reserve(n);
    for (VertexId s = 0; s < g.vertex_count(); ++s)
      impl->table.push_back(std::make_shared<const Eigen::VectorXd>(single_source_distances(g, s)));
    impl->stat.rows_computed = n;
  } else {
    impl->capacity_rows = row_bytes > 0 ? std::max<std::size_t>(4, memory_budget_bytes / row_bytes)
                                        : std::size_t{4};
  }
  return DistanceProvider(std::move(impl));
}

}  // namespace straightedge
