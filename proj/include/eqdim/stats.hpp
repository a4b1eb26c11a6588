#pragma once

#include <algorithm>
#include <optional>

#include "clique.hpp"
#include "distance.hpp"

namespace eqdim {

struct GraphStats {
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::size_t diameter = 0;
  // Empty when the exact search was skipped (not requested or over the cap).
  std::optional<std::size_t> clique_number;
  std::optional<std::size_t> independence_number;
};

struct StatsOptions {
  std::size_t exact_cap = kDefaultExactCap;
  bool clique = true;
  bool independence = true;
};

/// Degree extremes and diameter always; omega/alpha when requested and order() <= exact_cap.
inline GraphStats graph_stats(const Graph& g, const DistanceMatrix& d, const StatsOptions& opt = {}) {
  GraphStats s;
  s.max_degree = 0;
  s.min_degree = g.order();
  for (VertexId v = 0; v < g.order(); ++v) {
    s.max_degree = std::max(s.max_degree, g.degree(v));
    s.min_degree = std::min(s.min_degree, g.degree(v));
  }
  s.diameter = d.diameter();
  if (g.order() <= opt.exact_cap) {
    if (opt.clique) s.clique_number = clique_number(g, opt.exact_cap);
    if (opt.independence) s.independence_number = independence_number(g, opt.exact_cap);
  }
  return s;
}

}  // namespace eqdim
