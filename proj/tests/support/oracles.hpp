#pragma once

// Test-only reference implementations. None of these reuse the library's
// algorithms: distances by Floyd-Warshall, matchings and cliques by exhaustive
// enumeration, graph corpus by canonical-form extension.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "eqdim/graph.hpp"

namespace eqdim::oracle {

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const auto n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (VertexId u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (auto v : g.neighbors(u)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::size_t brute_max_matching(const std::vector<Edge>& edges, std::size_t from = 0, std::uint64_t used = 0) {
  std::size_t best = 0;
  for (std::size_t k = from; k < edges.size(); ++k) {
    auto [u, v] = edges[k];
    std::uint64_t m = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    if (used & m) continue;
    best = std::max(best, 1 + brute_max_matching(edges, k + 1, used | m));
  }
  return best;
}

/// Largest subset that is pairwise adjacent (or pairwise non-adjacent when `independent`).
inline std::size_t brute_max_clique(const Graph& g, bool independent = false) {
  const auto n = g.order();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (VertexId u = 0; u < n && ok; ++u)
      for (VertexId v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v) == independent) ok = false;
    if (ok) best = size;
  }
  return best;
}

namespace detail {

inline int pair_bit(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;  // (0,1)=0, (0,2)=1, (1,2)=2, ...
}

inline std::uint32_t canonical_mask(int n, std::uint32_t mask) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (mask >> pair_bit(i, j) & 1) edges.emplace_back(i, j);
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::uint32_t best = ~0u;
  do {
    std::uint32_t m = 0;
    for (auto [i, j] : edges) m |= 1u << pair_bit(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    best = std::min(best, m);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

}  // namespace detail

/**
 * Every connected graph on 1..max_n vertices, one per isomorphism class.
 * A connected graph always has a non-cut vertex, so extending connected graphs
 * on n-1 vertices by one vertex with a non-empty neighbourhood reaches them all.
 */
inline std::vector<Graph> connected_graph_corpus(int max_n) {
  std::vector<Graph> out;
  std::set<std::uint32_t> level{0};  // n = 1
  out.push_back(build_graph_ids("G1_0", numbered_names(1), {}));
  for (int n = 2; n <= max_n; ++n) {
    std::set<std::uint32_t> next;
    for (auto base : level)
      for (std::uint32_t nb = 1; nb < (1u << (n - 1)); ++nb) {
        std::uint32_t m = base;
        for (int i = 0; i < n - 1; ++i)
          if (nb >> i & 1) m |= 1u << detail::pair_bit(i, n - 1);
        next.insert(detail::canonical_mask(n, m));
      }
    for (auto m : next) {
      std::vector<Edge> e;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
          if (m >> detail::pair_bit(i, j) & 1) e.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
      out.push_back(build_graph_ids("G" + std::to_string(n) + "_" + std::to_string(m), numbered_names(static_cast<std::size_t>(n)), e));
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace eqdim::oracle
