#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

#include "graph.hpp"

namespace eqdim {

using Distance = std::uint16_t;

/// Dense symmetric hop-count matrix of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  Distance operator()(VertexId u, VertexId v) const noexcept { return d_[u * n_ + v]; }
  Distance& at(VertexId u, VertexId v) noexcept { return d_[u * n_ + v]; }

  /// Row of distances from u.
  std::span<const Distance> row(VertexId u) const { return {d_.data() + u * n_, n_}; }

  Distance diameter() const noexcept {
    return d_.empty() ? Distance{0} : *std::max_element(d_.begin(), d_.end());
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> d_;
};

namespace detail {

inline void bfs_row(const Graph& g, VertexId src, DistanceMatrix& out, std::vector<VertexId>& queue) {
  constexpr auto kUnseen = std::numeric_limits<Distance>::max();
  const auto n = g.order();
  for (VertexId v = 0; v < n; ++v) out.at(src, v) = kUnseen;
  queue.clear();
  queue.push_back(src);
  out.at(src, src) = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto u = queue[head];
    auto du = out(src, u);
    for (auto w : g.neighbors(u))
      if (out(src, w) == kUnseen) {
        out.at(src, w) = static_cast<Distance>(du + 1);
        queue.push_back(w);
      }
  }
}

}  // namespace detail

/**
 * BFS from every source. With `parallel`, sources are split across hardware
 * threads; rows are disjoint so the result does not depend on the schedule.
 */
inline DistanceMatrix all_pairs_distances(const Graph& g, bool parallel = false) {
  const auto n = g.order();
  DistanceMatrix d(n);
  unsigned workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    std::vector<VertexId> queue;
    queue.reserve(n);
    for (VertexId s = 0; s < n; ++s) detail::bfs_row(g, s, d, queue);
    return d;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      std::vector<VertexId> queue;
      queue.reserve(n);
      for (VertexId s = t; s < n; s += workers) detail::bfs_row(g, s, d, queue);
    });
  pool.clear();
  return d;
}

}  // namespace eqdim
