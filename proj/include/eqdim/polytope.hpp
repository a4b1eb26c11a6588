#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace eqdim {

/// The four rotationally symmetric convex-polytope families.
enum class PolytopeTag { R2, S, S2, T };

inline constexpr std::array<PolytopeTag, 4> kAllPolytopeTags{PolytopeTag::R2, PolytopeTag::S, PolytopeTag::S2,
                                                             PolytopeTag::T};

inline std::string_view tag_name(PolytopeTag t) {
  switch (t) {
    case PolytopeTag::R2: return "r2";
    case PolytopeTag::S: return "s";
    case PolytopeTag::S2: return "s2";
    case PolytopeTag::T: return "t";
  }
  return "?";
}

/// Display name used for generated graphs, e.g. "R''6".
inline std::string display_name(PolytopeTag t, std::size_t n) {
  switch (t) {
    case PolytopeTag::R2: return "R''" + std::to_string(n);
    case PolytopeTag::S: return "S" + std::to_string(n);
    case PolytopeTag::S2: return "S''" + std::to_string(n);
    case PolytopeTag::T: return "T" + std::to_string(n);
  }
  return "?";
}

inline std::optional<PolytopeTag> parse_tag(std::string_view s) {
  for (auto t : kAllPolytopeTags)
    if (tag_name(t) == s) return t;
  return std::nullopt;
}

/// Smallest n for which the families are well defined.
inline constexpr std::size_t kMinPolytopeN = 3;
/// Smallest n the family results are stated for.
inline constexpr std::size_t kTheoremMinN = 5;

struct PolytopeClass {
  PolytopeTag tag;
  std::size_t n;

  std::size_t block_count() const { return tag == PolytopeTag::R2 ? 6 : 4; }
  std::size_t vertex_count() const { return block_count() * n; }
  std::size_t edge_count() const {
    return (tag == PolytopeTag::R2 || tag == PolytopeTag::T) ? 9 * n : 8 * n;
  }
  /// n is accepted but below the range the family results cover.
  bool below_theorem_range() const { return n < kTheoremMinN; }

  /// Vertex id of block letter `block` ('a'..'f'), index taken mod n.
  VertexId vertex(char block, long long index) const {
    auto b = static_cast<std::size_t>(block - 'a');
    if (b >= block_count())
      throw Error(ErrorKind::UnknownVertex, std::string("block '") + block + "' not in " + display_name(tag, n));
    auto nn = static_cast<long long>(n);
    auto i = ((index % nn) + nn) % nn;
    return static_cast<VertexId>(b * n + static_cast<std::size_t>(i));
  }

  char block_of(VertexId v) const { return static_cast<char>('a' + v / n); }
  std::size_t index_of(VertexId v) const { return v % n; }

  /// Rotation i -> i+shift inside every block.
  VertexId rotate(VertexId v, long long shift) const { return vertex(block_of(v), static_cast<long long>(index_of(v)) + shift); }
};

namespace detail {

struct EdgeFamily {
  char from;
  int from_shift;
  char to;
  int to_shift;
};

inline Graph build_polytope(PolytopeClass pc, std::initializer_list<EdgeFamily> families) {
  if (pc.n < kMinPolytopeN)
    throw Error(ErrorKind::NTooSmall, display_name(pc.tag, pc.n) + ": n must be at least " + std::to_string(kMinPolytopeN));
  std::vector<std::string> names;
  names.reserve(pc.vertex_count());
  for (std::size_t b = 0; b < pc.block_count(); ++b)
    for (std::size_t i = 0; i < pc.n; ++i) names.push_back(std::string(1, static_cast<char>('a' + b)) + std::to_string(i));
  std::vector<Edge> edges;
  edges.reserve(families.size() * pc.n);
  for (const auto& f : families)
    for (long long i = 0; i < static_cast<long long>(pc.n); ++i)
      edges.emplace_back(pc.vertex(f.from, i + f.from_shift), pc.vertex(f.to, i + f.to_shift));
  return build_graph_ids(display_name(pc.tag, pc.n), std::move(names), edges);
}

}  // namespace detail

inline Graph gen_r2(std::size_t n) {
  return detail::build_polytope({PolytopeTag::R2, n}, {{'a', 0, 'a', 1},
                                                       {'f', 0, 'f', 1},
                                                       {'a', 0, 'b', 0},
                                                       {'c', 0, 'd', 0},
                                                       {'e', 0, 'f', 0},
                                                       {'b', 0, 'c', 0},
                                                       {'b', 1, 'c', 0},
                                                       {'d', 0, 'e', 0},
                                                       {'d', 1, 'e', 0}});
}

inline Graph gen_s(std::size_t n) {
  return detail::build_polytope({PolytopeTag::S, n}, {{'a', 0, 'a', 1},
                                                      {'b', 0, 'b', 1},
                                                      {'c', 0, 'c', 1},
                                                      {'d', 0, 'd', 1},
                                                      {'a', 0, 'b', 0},
                                                      {'b', 0, 'c', 0},
                                                      {'c', 0, 'd', 0},
                                                      {'a', 1, 'b', 0}});
}

inline Graph gen_s2(std::size_t n) {
  return detail::build_polytope({PolytopeTag::S2, n}, {{'a', 0, 'a', 1},
                                                       {'b', 0, 'b', 1},
                                                       {'c', 0, 'c', 1},
                                                       {'d', 0, 'd', 1},
                                                       {'a', 0, 'b', 0},
                                                       {'b', 0, 'c', 0},
                                                       {'c', 0, 'd', 0},
                                                       {'b', 1, 'c', 0}});
}

inline Graph gen_t(std::size_t n) {
  return detail::build_polytope({PolytopeTag::T, n}, {{'a', 0, 'a', 1},
                                                      {'b', 0, 'b', 1},
                                                      {'c', 0, 'c', 1},
                                                      {'d', 0, 'd', 1},
                                                      {'a', 0, 'b', 0},
                                                      {'b', 0, 'c', 0},
                                                      {'c', 0, 'd', 0},
                                                      {'a', 1, 'b', 0},
                                                      {'c', 0, 'd', 1}});
}

inline Graph generate(PolytopeClass pc) {
  switch (pc.tag) {
    case PolytopeTag::R2: return gen_r2(pc.n);
    case PolytopeTag::S: return gen_s(pc.n);
    case PolytopeTag::S2: return gen_s2(pc.n);
    case PolytopeTag::T: return gen_t(pc.n);
  }
  throw Error(ErrorKind::ParseError, "unknown polytope class");
}

}  // namespace eqdim
