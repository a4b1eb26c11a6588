#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "equalizer.hpp"
#include "matching.hpp"
#include "stats.hpp"

namespace eqdim {

enum class BoundKind { Lower, Upper, Exact };

inline std::string_view to_string(BoundKind k) {
  switch (k) {
    case BoundKind::Lower: return "lower";
    case BoundKind::Upper: return "upper";
    case BoundKind::Exact: return "exact";
  }
  return "?";
}

struct BoundEntry {
  BoundKind kind;
  std::size_t value;
  std::string source;
};

struct BoundsReport {
  std::vector<BoundEntry> entries;

  std::optional<std::size_t> exact() const {
    for (const auto& e : entries)
      if (e.kind == BoundKind::Exact) return e.value;
    return std::nullopt;
  }

  /// Best lower bound, counting exact entries as both bounds.
  std::size_t best_lower() const {
    std::size_t lb = 0;
    for (const auto& e : entries)
      if (e.kind != BoundKind::Upper) lb = std::max(lb, e.value);
    return lb;
  }

  std::optional<std::size_t> best_upper() const {
    std::optional<std::size_t> ub;
    for (const auto& e : entries)
      if (e.kind != BoundKind::Lower) ub = ub ? std::min(*ub, e.value) : e.value;
    return ub;
  }
};

namespace source {
inline constexpr const char* kSingleVertex = "single vertex: no pairs to equalize";
inline constexpr const char* kTrivial = "trivial: |V| >= 2 needs a non-empty set";
inline constexpr const char* kDegreeOne = "degree characterization: eqdim = 1 iff max degree = |V|-1";
inline constexpr const char* kDegreeTwo = "degree characterization: eqdim = 2 iff max degree = |V|-2";
inline constexpr const char* kDegreeThree = "degree characterization: max degree < |V|-2 implies eqdim >= 3";
inline constexpr const char* kPathTwo = "small-graph characterization: eqdim = |V|-1 iff G = P2";
inline constexpr const char* kSmallGraphs = "small-graph characterization: eqdim = |V|-2 iff G in {P3,P4,P5,P6,C3,C4,C5}";
inline constexpr const char* kOrderSeven = "order >= 7 implies eqdim <= |V|-3";
inline constexpr const char* kMaxDegree = "upper bound |V| - max degree";
inline constexpr const char* kClique = "upper bound |V| - clique number (G not complete)";
inline constexpr const char* kDiameter = "upper bound floor((|V|(Diam-1)+1)/Diam)";
inline constexpr const char* kIndependence = "upper bound |V| - independence number (Diam = 2)";
inline constexpr const char* kForcedPairs = "maximum matching over forced pairs (empty W-set)";
}  // namespace source

/// Exhaustive isomorphism test, intended for graphs of at most ~8 vertices.
inline bool isomorphic_small(const Graph& a, const Graph& b) {
  const auto n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> da(n), db(n);
  for (VertexId v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  do {
    bool ok = true;
    for (VertexId u = 0; u < n && ok; ++u) {
      if (da[u] != db[perm[u]]) ok = false;
      for (VertexId v = u + 1; v < n && ok; ++v)
        if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// P3..P6 and C3..C5: the graphs whose equidistant dimension is |V|-2.
inline const std::vector<Graph>& near_full_dimension_graphs() {
  static const std::vector<Graph> graphs = [] {
    std::vector<Graph> g;
    for (std::size_t n = 3; n <= 6; ++n) g.push_back(path_graph(n));
    for (std::size_t n = 3; n <= 5; ++n) g.push_back(cycle_graph(n));
    return g;
  }();
  return graphs;
}

/**
 * Every published bound that applies to `g`. omega- and alpha-based bounds are
 * listed only when `stats` carries those values; the alpha bound additionally
 * requires diameter 2.
 */
inline BoundsReport literature_bounds(const Graph& g, const GraphStats& stats) {
  BoundsReport r;
  const auto n = g.order();
  auto add = [&](BoundKind k, std::size_t v, const char* src) { r.entries.push_back({k, v, src}); };

  if (n == 1) {
    add(BoundKind::Exact, 0, source::kSingleVertex);
    return r;
  }

  add(BoundKind::Lower, 1, source::kTrivial);
  if (stats.max_degree == n - 1) add(BoundKind::Exact, 1, source::kDegreeOne);
  else if (stats.max_degree == n - 2) add(BoundKind::Exact, 2, source::kDegreeTwo);
  else add(BoundKind::Lower, 3, source::kDegreeThree);

  if (n == 2) add(BoundKind::Exact, 1, source::kPathTwo);
  if (n >= 3 && n <= 6) {
    for (const auto& h : near_full_dimension_graphs())
      if (isomorphic_small(g, h)) {
        add(BoundKind::Exact, n - 2, source::kSmallGraphs);
        break;
      }
  }
  if (n >= 7) add(BoundKind::Upper, n - 3, source::kOrderSeven);

  add(BoundKind::Upper, n - stats.max_degree, source::kMaxDegree);
  const bool complete = stats.min_degree == n - 1;
  if (stats.clique_number && !complete) add(BoundKind::Upper, n - *stats.clique_number, source::kClique);
  const auto diam = stats.diameter;
  if (diam >= 1) add(BoundKind::Upper, (n * (diam - 1) + 1) / diam, source::kDiameter);
  if (diam == 2 && stats.independence_number) add(BoundKind::Upper, n - *stats.independence_number, source::kIndependence);
  return r;
}

/// literature_bounds() plus the forced-pair matching bound.
inline BoundsReport all_bounds(const Graph& g, const DistanceMatrix& d, const GraphStats& stats) {
  auto r = literature_bounds(g, stats);
  if (g.order() >= 2) {
    auto lb = forced_pair_lower_bound(g.order(), forced_pairs(witness_family(d)));
    r.entries.push_back({BoundKind::Lower, lb, source::kForcedPairs});
  }
  return r;
}

/// Stats with omega always and alpha only when the diameter is 2, the only case a bound uses it.
inline GraphStats stats_for_bounds(const Graph& g, const DistanceMatrix& d, std::size_t exact_cap = kDefaultExactCap) {
  StatsOptions opt;
  opt.exact_cap = exact_cap;
  opt.independence = d.diameter() == 2;
  return graph_stats(g, d, opt);
}

}  // namespace eqdim
