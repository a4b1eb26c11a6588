#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace eqdim {

using NamedEdge = std::pair<std::string, std::string>;
using Edge = std::pair<VertexId, VertexId>;

/**
 * Immutable, connected, simple undirected graph. Vertex ids follow the order of
 * the name list given to build_graph(); adjacency lists are sorted.
 */
class Graph {
 public:
  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::string& vertex_name(VertexId v) const { return names_.at(v); }

  std::optional<VertexId> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Throws UnknownVertex.
  VertexId id(std::string_view name) const {
    auto v = find(name);
    if (!v) throw Error(ErrorKind::UnknownVertex, "no vertex named '" + std::string(name) + "'");
    return *v;
  }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  bool adjacent(VertexId u, VertexId v) const {
    const auto& a = adjacency_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
  }

  const VertexSet& neighbor_set(VertexId v) const { return neighbor_sets_.at(v); }

  /// Edges (u < v), sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < order(); ++u)
      for (auto v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend Graph build_graph(std::string name, std::vector<std::string> vertex_names,
                           const std::vector<NamedEdge>& edges);
  friend Graph build_graph_ids(std::string name, std::vector<std::string> vertex_names,
                               const std::vector<Edge>& edges);

 private:
  Graph() = default;

  std::string name_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<VertexSet> neighbor_sets_;
  std::size_t edge_count_ = 0;
};

namespace detail {

inline void check_connected(const Graph& g) {
  const auto n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) {
    auto it = std::find(seen.begin(), seen.end(), 0);
    auto v = static_cast<VertexId>(it - seen.begin());
    throw Error(ErrorKind::Disconnected,
                "graph '" + g.name() + "': vertex '" + g.vertex_name(v) + "' is unreachable from '" +
                    g.vertex_name(0) + "'");
  }
}

}  // namespace detail

/// Builds from integer endpoints; vertex names only label the ids.
inline Graph build_graph_ids(std::string name, std::vector<std::string> vertex_names,
                             const std::vector<Edge>& edges) {
  Graph g;
  g.name_ = std::move(name);
  if (vertex_names.empty()) throw Error(ErrorKind::EmptyGraph, "graph '" + g.name_ + "' has no vertices");
  g.names_ = std::move(vertex_names);
  const auto n = g.names_.size();
  for (VertexId v = 0; v < n; ++v)
    if (!g.index_.emplace(g.names_[v], v).second)
      throw Error(ErrorKind::DuplicateVertex, "vertex name '" + g.names_[v] + "' appears twice");

  g.adjacency_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw Error(ErrorKind::UnknownVertex, "edge endpoint id " + std::to_string(std::max(u, v)) + " out of range");
    if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at '" + g.names_[u] + "'");
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& a : g.adjacency_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    g.edge_count_ += a.size();
  }
  g.edge_count_ /= 2;

  g.neighbor_sets_.reserve(n);
  for (VertexId v = 0; v < n; ++v) g.neighbor_sets_.push_back(VertexSet::from_range(n, g.adjacency_[v]));

  detail::check_connected(g);
  return g;
}

inline Graph build_graph(std::string name, std::vector<std::string> vertex_names,
                         const std::vector<NamedEdge>& edges) {
  std::unordered_map<std::string, VertexId> index;
  for (VertexId v = 0; v < vertex_names.size(); ++v) index.emplace(vertex_names[v], v);
  std::vector<Edge> ids;
  ids.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    if (ia == index.end()) throw Error(ErrorKind::UnknownVertex, "edge endpoint '" + a + "' is not a vertex");
    auto ib = index.find(b);
    if (ib == index.end()) throw Error(ErrorKind::UnknownVertex, "edge endpoint '" + b + "' is not a vertex");
    ids.emplace_back(ia->second, ib->second);
  }
  return build_graph_ids(std::move(name), std::move(vertex_names), ids);
}

/// Names "v0".."v{n-1}".
inline std::vector<std::string> numbered_names(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph_ids("P" + std::to_string(n), numbered_names(n), e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId i = 0; i < n; ++i) e.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  return build_graph_ids("C" + std::to_string(n), numbered_names(n), e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph_ids("K" + std::to_string(n), numbered_names(n), e);
}

/// K_{1,leaves}; the center is v0.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (VertexId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return build_graph_ids("K1," + std::to_string(leaves), numbered_names(leaves + 1), e);
}

}  // namespace eqdim
