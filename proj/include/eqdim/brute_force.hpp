#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "equalizer.hpp"

namespace eqdim {

struct BruteForceOptions {
  std::size_t max_vertices = 16;
  /// Larger graphs are accepted when the caller knows eqdim <= max_cardinality
  /// and the number of subsets up to that size stays below max_subsets.
  std::optional<std::size_t> max_cardinality;
  std::uint64_t max_subsets = 5'000'000;
};

struct BruteForceResult {
  std::size_t value;
  VertexSet set;
};

namespace detail {

inline std::uint64_t subsets_up_to(std::size_t n, std::size_t k, std::uint64_t cap) {
  std::uint64_t total = 0;
  std::uint64_t c = 1;  // C(n, 0)
  for (std::size_t i = 0; i <= k && i <= n; ++i) {
    total += c;
    if (total > cap) return total;
    c = c * (n - i) / (i + 1);
  }
  return total;
}

}  // namespace detail

/**
 * Independent oracle: tries subsets by increasing cardinality, lexicographic
 * within a cardinality, and returns the first that verifies. Uses only
 * is_distance_equalizer(), nothing from the solver.
 */
inline BruteForceResult brute_force_eqdim(const DistanceMatrix& d, const BruteForceOptions& opt = {}) {
  const auto n = d.size();
  std::size_t k_max = n;
  if (n > opt.max_vertices) {
    if (!opt.max_cardinality || detail::subsets_up_to(n, *opt.max_cardinality, opt.max_subsets) > opt.max_subsets)
      throw Error(ErrorKind::SizeCapExceeded, "brute force over " + std::to_string(n) + " vertices exceeds cap " +
                                                  std::to_string(opt.max_vertices));
    k_max = *opt.max_cardinality;
  }
  for (std::size_t k = 0; k <= k_max; ++k) {
    std::vector<VertexId> comb(k);
    std::iota(comb.begin(), comb.end(), VertexId{0});
    while (true) {
      auto s = VertexSet::from_range(n, comb);
      if (is_equalizer(d, s)) return {k, s};
      // next combination in lexicographic order
      std::size_t i = k;
      while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  throw Error(ErrorKind::SizeCapExceeded, "no equalizer set within cardinality " + std::to_string(k_max));
}

inline BruteForceResult brute_force_eqdim(const Graph& g, const BruteForceOptions& opt = {}) {
  return brute_force_eqdim(all_pairs_distances(g), opt);
}

}  // namespace eqdim
