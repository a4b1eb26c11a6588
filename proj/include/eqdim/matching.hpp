#pragma once

#include <algorithm>
#include <vector>

#include "graph.hpp"

namespace eqdim {

/**
 * Maximum cardinality matching in a general graph (Edmonds' blossom shrinking,
 * O(V^3)). Forced-pair graphs are not bipartite in general, so odd cycles must be
 * handled. Vertices are tried in ascending id, making the output deterministic.
 */
class BlossomMatching {
 public:
  BlossomMatching(std::size_t n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
    for (auto [u, v] : edges) {
      if (u == v) continue;
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    match_.assign(n_, kNone);
    solve();
  }

  std::size_t size() const noexcept { return size_; }

  /// Matched pairs (u < v), ascending.
  std::vector<Edge> pairs() const {
    std::vector<Edge> out;
    for (VertexId v = 0; v < n_; ++v)
      if (match_[v] != kNone && v < match_[v]) out.emplace_back(v, match_[v]);
    return out;
  }

 private:
  static constexpr VertexId kNone = static_cast<VertexId>(-1);

  void solve() {
    // Greedy start, then augment from every free vertex.
    for (VertexId v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      for (auto w : adj_[v])
        if (match_[w] == kNone) {
          match_[v] = w;
          match_[w] = v;
          ++size_;
          break;
        }
    }
    for (VertexId v = 0; v < n_; ++v)
      if (match_[v] == kNone && augment_from(v)) ++size_;
  }

  VertexId lca(VertexId a, VertexId b) {
    std::vector<char> used(n_, 0);
    while (true) {
      a = base_[a];
      used[a] = 1;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (used[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  bool augment_from(VertexId root) {
    used_.assign(n_, 0);
    parent_.assign(n_, kNone);
    base_.resize(n_);
    for (VertexId i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::vector<VertexId> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto v = queue[head];
      for (auto to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          auto cur = lca(v, to);
          blossom_.assign(n_, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (VertexId i = 0; i < n_; ++i)
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) {
            // augment along the alternating path ending at `to`
            auto u = to;
            while (u != kNone) {
              auto pv = parent_[u];
              auto ppv = match_[pv];
              match_[u] = pv;
              match_[pv] = u;
              u = ppv;
            }
            return true;
          }
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<VertexId> match_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
  std::size_t size_ = 0;
};

/// Size of a maximum matching over the forced pairs: each matched pair needs its
/// own member in any distance-equalizer set.
inline std::size_t forced_pair_lower_bound(std::size_t n, const std::vector<Edge>& pairs) {
  if (pairs.empty()) return 0;
  return BlossomMatching(n, pairs).size();
}

inline std::size_t forced_pair_lower_bound(const std::vector<Edge>& pairs) {
  std::size_t n = 0;
  for (auto [u, v] : pairs) n = std::max<std::size_t>(n, std::max(u, v) + 1);
  return forced_pair_lower_bound(n, pairs);
}

}  // namespace eqdim
