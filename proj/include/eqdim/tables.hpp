#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polytope.hpp"

namespace eqdim {

// Witness tables for the family constructions, stored as data. Each row covers
// pairs (u_0, v_i) for the indices i that satisfy its condition and names the
// witness x by an index formula.

/// n_coef * n + offset
struct IndexValue {
  int n_coef = 0;
  int offset = 0;
  long long eval(std::size_t n) const { return static_cast<long long>(n_coef) * static_cast<long long>(n) + offset; }
};

/// (i_coef * i + n_coef * n + offset) / divisor, reduced mod n. The division must be exact.
struct IndexFormula {
  int i_coef = 0;
  int n_coef = 0;
  int offset = 0;
  int divisor = 1;

  std::optional<long long> eval(long long i, std::size_t n) const {
    long long num = i_coef * i + static_cast<long long>(n_coef) * static_cast<long long>(n) + offset;
    if (num % divisor != 0) return std::nullopt;
    return num / divisor;
  }
};

enum class Parity { Any, Odd, Even };

struct RowCondition {
  Parity parity = Parity::Any;
  std::vector<IndexValue> only;                            // i must equal one of these
  std::optional<std::pair<IndexValue, IndexValue>> range;  // inclusive
  std::optional<int> at_least;
  bool other = false;  // exclude every value listed explicitly by rows of the same (u, v) group
};

struct TableRow {
  char u_block;
  char v_block;
  RowCondition condition;
  char x_block;
  IndexFormula x_index;
  std::string_view condition_text;
  std::string_view witness_text;
};

struct WitnessTable {
  PolytopeTag tag;
  Parity n_parity;
  std::string_view caption;
  std::vector<TableRow> rows;
};

namespace detail {

inline RowCondition odd() { return {Parity::Odd, {}, {}, {}, false}; }
inline RowCondition even() { return {Parity::Even, {}, {}, {}, false}; }
inline RowCondition other_odd() { return {Parity::Odd, {}, {}, {}, true}; }
inline RowCondition other_even() { return {Parity::Even, {}, {}, {}, true}; }
inline RowCondition only(std::vector<IndexValue> v) { return {Parity::Any, std::move(v), {}, {}, false}; }

}  // namespace detail

inline const WitnessTable& r2_even_table() {
  using namespace detail;
  static const WitnessTable t{
      PolytopeTag::R2,
      Parity::Even,
      "R''n, n even, S = {a_i, b_i, c_i}",
      {
          {'d', 'd', odd(), 'b', {1, 0, 1, 2}, "i odd", "b_{(i+1)/2}"},
          {'d', 'd', even(), 'c', {1, 0, 0, 2}, "i even", "c_{i/2}"},
          {'d', 'e', only({{0, 0}}), 'a', {0, 0, 2, 1}, "i = 0", "a_2"},
          {'d', 'e', only({{1, -1}}), 'c', {0, 0, 3, 1}, "i = n-1", "c_3"},
          {'d', 'e', other_odd(), 'a', {1, 1, 1, 2}, "other odd i", "a_{(n+i+1)/2}"},
          {'d', 'e', other_even(), 'a', {1, 0, 2, 2}, "other even i", "a_{i/2+1}"},
          {'d', 'f', only({{0, 0}, {0, 1}}), 'b', {0, 0, 2, 1}, "i = 0 or i = 1", "b_2"},
          {'d', 'f', only({{1, -1}}), 'b', {0, 0, 3, 1}, "i = n-1", "b_3"},
          {'d', 'f', only({{1, -2}}), 'c', {0, 0, 3, 1}, "i = n-2", "c_3"},
          {'d', 'f', other_odd(), 'a', {1, 0, 3, 2}, "other odd i", "a_{(i+3)/2}"},
          {'d', 'f', other_even(), 'a', {1, 1, 0, 2}, "other even i", "a_{(n+i)/2}"},
          {'e', 'e', odd(), 'c', {1, 0, 1, 2}, "i odd", "c_{(i+1)/2}"},
          {'e', 'e', even(), 'b', {1, 0, 2, 2}, "i even", "b_{i/2+1}"},
          {'e', 'f', only({{0, 0}}), 'c', {0, 0, 2, 1}, "i = 0", "c_2"},
          {'e', 'f', only({{0, 1}}), 'a', {0, 0, 3, 1}, "i = 1", "a_3"},
          {'e', 'f', only({{1, -4}}), 'b', {0, 1, -1, 1}, "i = n-4", "b_{n-1}"},
          {'e', 'f', {Parity::Any, {}, std::pair{IndexValue{1, -3}, IndexValue{1, -1}}, {}, false}, 'a', {0, 1, -1, 1},
           "n-3 <= i <= n-1", "a_{n-1}"},
          {'e', 'f', other_odd(), 'a', {1, 0, 3, 2}, "other odd i", "a_{(i+3)/2}"},
          {'e', 'f', other_even(), 'c', {1, 1, 2, 2}, "other even i", "c_{(n+i)/2+1}"},
          {'f', 'f', odd(), 'c', {1, 0, 1, 2}, "i odd", "c_{(i+1)/2}"},
          {'f', 'f', even(), 'b', {1, 0, 2, 2}, "i even", "b_{i/2+1}"},
      }};
  return t;
}

inline const WitnessTable& s_odd_table() {
  using namespace detail;
  static const WitnessTable t{PolytopeTag::S,
                              Parity::Odd,
                              "Sn, n odd, S = {a_i, c_i}",
                              {
                                  {'b', 'b', odd(), 'a', {1, 0, 1, 2}, "i odd", "a_{(i+1)/2}"},
                                  {'b', 'b', even(), 'c', {1, 0, 0, 2}, "i even", "c_{i/2}"},
                                  {'b', 'd', odd(), 'c', {1, 1, 0, 2}, "i odd", "c_{(n+i)/2}"},
                                  {'b', 'd', even(), 'c', {1, 0, 0, 2}, "i even", "c_{i/2}"},
                                  {'d', 'd', odd(), 'c', {1, 1, 0, 2}, "i odd", "c_{(n+i)/2}"},
                                  {'d', 'd', even(), 'c', {1, 0, 0, 2}, "i even", "c_{i/2}"},
                              }};
  return t;
}

inline const WitnessTable& s2_even_table() {
  using namespace detail;
  static const WitnessTable t{PolytopeTag::S2,
                              Parity::Even,
                              "S''n, n even, S = {a_i, c_i}",
                              {
                                  {'b', 'b', odd(), 'c', {1, 0, -1, 2}, "i odd", "c_{(i-1)/2}"},
                                  {'b', 'b', even(), 'a', {1, 0, 0, 2}, "i even", "a_{i/2}"},
                                  {'b', 'd', only({{1, -1}}), 'c', {0, 1, -1, 1}, "i = n-1", "c_{n-1}"},
                                  {'b', 'd', other_odd(), 'a', {1, 1, -1, 2}, "other odd i", "a_{(n+i-1)/2}"},
                                  {'b', 'd', even(), 'c', {1, 0, 0, 2}, "i even", "c_{i/2}"},
                                  {'d', 'd', odd(), 'a', {1, 0, 1, 2}, "i odd", "a_{(i+1)/2}"},
                                  {'d', 'd', even(), 'c', {1, 0, 0, 2}, "i even", "c_{i/2}"},
                              }};
  return t;
}

inline const WitnessTable& t_table() {
  using namespace detail;
  static const WitnessTable t{
      PolytopeTag::T,
      Parity::Any,
      "Tn, S = {a_i, b_i}",
      {
          {'c', 'c', odd(), 'a', {1, 0, 1, 2}, "i odd", "a_{(i+1)/2}"},
          {'c', 'c', even(), 'b', {1, 0, 0, 2}, "i even", "b_{i/2}"},
          {'c', 'd', odd(), 'b', {1, 0, 1, 2}, "i odd", "b_{(i+1)/2}"},
          {'c', 'd', {Parity::Even, {}, {}, 2, false}, 'a', {1, 0, 2, 2}, "i even, i >= 2", "a_{i/2+1}"},
          {'c', 'd', only({{0, 0}}), 'b', {0, 0, 1, 1}, "i = 0", "b_1"},
          {'d', 'd', odd(), 'b', {1, 0, 1, 2}, "i odd", "b_{(i+1)/2}"},
          {'d', 'd', even(), 'a', {1, 0, 2, 2}, "i even", "a_{i/2+1}"},
      }};
  return t;
}

inline const WitnessTable& witness_table(PolytopeTag tag) {
  switch (tag) {
    case PolytopeTag::R2: return r2_even_table();
    case PolytopeTag::S: return s_odd_table();
    case PolytopeTag::S2: return s2_even_table();
    case PolytopeTag::T: return t_table();
  }
  return t_table();
}

inline bool parity_matches(Parity p, std::size_t n) {
  switch (p) {
    case Parity::Any: return true;
    case Parity::Odd: return n % 2 == 1;
    case Parity::Even: return n % 2 == 0;
  }
  return false;
}

inline std::size_t reduce_mod(long long value, std::size_t n) {
  auto nn = static_cast<long long>(n);
  return static_cast<std::size_t>(((value % nn) + nn) % nn);
}

/// Values named explicitly (by `only` or `range`) by rows of the given group, reduced mod n.
inline std::vector<std::size_t> explicit_indices(const WitnessTable& t, char u_block, char v_block, std::size_t n) {
  std::vector<std::size_t> out;
  for (const auto& r : t.rows) {
    if (r.u_block != u_block || r.v_block != v_block) continue;
    for (const auto& v : r.condition.only) out.push_back(reduce_mod(v.eval(n), n));
    if (r.condition.range) {
      auto lo = r.condition.range->first.eval(n);
      auto hi = r.condition.range->second.eval(n);
      for (auto i = lo; i <= hi; ++i) out.push_back(reduce_mod(i, n));
    }
  }
  return out;
}

/// Whether row applies to index i (0 <= i < n) of its group.
inline bool row_applies(const WitnessTable& t, const TableRow& row, std::size_t i, std::size_t n) {
  if (row.u_block == row.v_block && i == 0) return false;
  const auto& c = row.condition;
  if (c.parity == Parity::Odd && i % 2 == 0) return false;
  if (c.parity == Parity::Even && i % 2 == 1) return false;
  if (c.at_least && static_cast<long long>(i) < *c.at_least) return false;
  if (!c.only.empty()) {
    bool hit = false;
    for (const auto& v : c.only)
      if (reduce_mod(v.eval(n), n) == i) hit = true;
    if (!hit) return false;
  }
  if (c.range) {
    auto lo = c.range->first.eval(n);
    auto hi = c.range->second.eval(n);
    if (static_cast<long long>(i) < lo || static_cast<long long>(i) > hi) return false;
  }
  if (c.other) {
    for (auto e : explicit_indices(t, row.u_block, row.v_block, n))
      if (e == i) return false;
  }
  return true;
}

}  // namespace eqdim
