#pragma once

#include <cstddef>
#include <vector>

#include "graph.hpp"

namespace eqdim {

namespace detail {

// Branch and bound over bit sets with greedy sequential colouring as the bound
// (colour classes give an upper bound on any clique inside the candidate set).
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(std::vector<VertexSet> adjacency) : adj_(std::move(adjacency)) {}

  std::vector<VertexId> run() {
    const auto n = adj_.size();
    best_.clear();
    if (n == 0) return best_;
    VertexSet cand = VertexSet::full(n);
    std::vector<VertexId> current;
    expand(current, cand);
    return best_;
  }

 private:
  void colour(const VertexSet& cand, std::vector<VertexId>& order, std::vector<std::size_t>& bound) const {
    order.clear();
    bound.clear();
    VertexSet uncoloured = cand;
    std::size_t colour = 0;
    while (!uncoloured.empty()) {
      ++colour;
      VertexSet q = uncoloured;
      for (auto v = q.first(); v < q.universe(); v = q.next(v + 1)) {
        auto id = static_cast<VertexId>(v);
        uncoloured.reset(id);
        q -= adj_[id];
        order.push_back(id);
        bound.push_back(colour);
      }
    }
  }

  void expand(std::vector<VertexId>& current, VertexSet cand) {
    std::vector<VertexId> order;
    std::vector<std::size_t> bound;
    colour(cand, order, bound);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current.size() + bound[k] <= best_.size()) return;
      auto v = order[k];
      current.push_back(v);
      VertexSet next = cand & adj_[v];
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      cand.reset(v);
    }
  }

  std::vector<VertexSet> adj_;
  std::vector<VertexId> best_;
};

inline void check_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.order() > cap)
    throw Error(ErrorKind::SizeCapExceeded, std::string(what) + " search on '" + g.name() + "' with " +
                                                std::to_string(g.order()) + " vertices exceeds cap " +
                                                std::to_string(cap));
}

}  // namespace detail

inline constexpr std::size_t kDefaultExactCap = 256;

/// A maximum clique, sorted ascending. Throws SizeCapExceeded when order() > cap.
inline std::vector<VertexId> maximum_clique(const Graph& g, std::size_t cap = kDefaultExactCap) {
  detail::check_cap(g, cap, "clique");
  std::vector<VertexSet> adj;
  adj.reserve(g.order());
  for (VertexId v = 0; v < g.order(); ++v) adj.push_back(g.neighbor_set(v));
  auto c = detail::MaxCliqueSearch(std::move(adj)).run();
  std::sort(c.begin(), c.end());
  return c;
}

/// A maximum independent set (maximum clique of the complement), sorted ascending.
inline std::vector<VertexId> maximum_independent_set(const Graph& g, std::size_t cap = kDefaultExactCap) {
  detail::check_cap(g, cap, "independent set");
  const auto n = g.order();
  std::vector<VertexSet> adj;
  adj.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    VertexSet c = VertexSet::full(n) - g.neighbor_set(v);
    c.reset(v);
    adj.push_back(std::move(c));
  }
  auto s = detail::MaxCliqueSearch(std::move(adj)).run();
  std::sort(s.begin(), s.end());
  return s;
}

inline std::size_t clique_number(const Graph& g, std::size_t cap = kDefaultExactCap) {
  return maximum_clique(g, cap).size();
}

inline std::size_t independence_number(const Graph& g, std::size_t cap = kDefaultExactCap) {
  return maximum_independent_set(g, cap).size();
}

}  // namespace eqdim
