#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "distance.hpp"
#include "graph.hpp"

namespace eqdim {

/// Vertices equidistant from u and v: { w : d(u,w) = d(v,w) }.
struct WSet {
  VertexId u;
  VertexId v;
  std::vector<VertexId> members;  // ascending
};

inline WSet w_set(const DistanceMatrix& d, VertexId u, VertexId v) {
  if (u == v) throw Error(ErrorKind::SameVertex, "w_set needs two distinct vertices, got id " + std::to_string(u) + " twice");
  WSet w{u, v, {}};
  auto ru = d.row(u);
  auto rv = d.row(v);
  for (VertexId x = 0; x < d.size(); ++x)
    if (ru[x] == rv[x]) w.members.push_back(x);
  return w;
}

inline bool equidistant(const DistanceMatrix& d, VertexId u, VertexId v, VertexId x) { return d(u, x) == d(v, x); }

struct Witness {
  VertexId u;
  VertexId v;
  VertexId x;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/**
 * Proof that `set` is a distance-equalizer set: one witness x in `set` for every
 * pair u < v outside it, listed in lexicographic pair order. Witnesses are the
 * smallest valid id, so certificates for the same set are identical.
 */
struct EqualizerCertificate {
  VertexSet set;
  std::vector<Witness> witnesses;

  std::size_t value() const { return set.count(); }

  /// Re-checks every entry against `d` and that no pair outside the set is missing.
  bool validate(const DistanceMatrix& d) const {
    const auto n = d.size();
    if (set.universe() != n) return false;
    std::size_t k = 0;
    for (VertexId u = 0; u < n; ++u) {
      if (set.test(u)) continue;
      for (VertexId v = u + 1; v < n; ++v) {
        if (set.test(v)) continue;
        if (k >= witnesses.size()) return false;
        const auto& w = witnesses[k++];
        if (w.u != u || w.v != v || w.x >= n || !set.test(w.x) || !equidistant(d, u, v, w.x)) return false;
      }
    }
    return k == witnesses.size();
  }
};

/// Lexicographically first pair outside the set with no equidistant member.
struct FailingPair {
  VertexId u;
  VertexId v;
  friend bool operator==(const FailingPair&, const FailingPair&) = default;
};

using EqualizerCheck = std::variant<EqualizerCertificate, FailingPair>;

inline std::optional<VertexId> first_witness(const DistanceMatrix& d, const VertexSet& s, VertexId u, VertexId v) {
  auto ru = d.row(u);
  auto rv = d.row(v);
  for (auto x = s.first(); x < s.universe(); x = s.next(x + 1))
    if (ru[x] == rv[x]) return static_cast<VertexId>(x);
  return std::nullopt;
}

inline EqualizerCheck is_distance_equalizer(const DistanceMatrix& d, const VertexSet& s) {
  const auto n = d.size();
  EqualizerCertificate cert{s, {}};
  for (VertexId u = 0; u < n; ++u) {
    if (s.test(u)) continue;
    for (VertexId v = u + 1; v < n; ++v) {
      if (s.test(v)) continue;
      auto x = first_witness(d, s, u, v);
      if (!x) return FailingPair{u, v};
      cert.witnesses.push_back({u, v, *x});
    }
  }
  return cert;
}

inline bool is_equalizer(const DistanceMatrix& d, const VertexSet& s) {
  return std::holds_alternative<EqualizerCertificate>(is_distance_equalizer(d, s));
}

struct HitSet {
  VertexId u;
  VertexId v;
  VertexSet members;  // {u, v} together with W(u, v)
};

/**
 * One hit-set per unordered pair, pairs in lexicographic order. A vertex set is a
 * distance-equalizer set exactly when it meets every hit-set.
 */
class WitnessFamily {
 public:
  WitnessFamily() = default;
  explicit WitnessFamily(std::size_t n, std::vector<HitSet> sets) : n_(n), sets_(std::move(sets)) {}

  std::size_t order() const noexcept { return n_; }
  const std::vector<HitSet>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }

  /// Index of pair (u, v), u != v, in sets().
  std::size_t pair_index(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    // pairs before row u: sum_{k<u} (n-1-k)
    return static_cast<std::size_t>(u) * (2 * n_ - u - 1) / 2 + (v - u - 1);
  }

  const HitSet& hit_set(VertexId u, VertexId v) const { return sets_.at(pair_index(u, v)); }

  bool is_hit_by(const VertexSet& s) const {
    for (const auto& h : sets_)
      if (!h.members.intersects(s)) return false;
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::vector<HitSet> sets_;
};

inline WitnessFamily witness_family(const DistanceMatrix& d) {
  const auto n = d.size();
  std::vector<HitSet> sets;
  sets.reserve(n * (n - 1) / 2);
  for (VertexId u = 0; u < n; ++u) {
    auto ru = d.row(u);
    for (VertexId v = u + 1; v < n; ++v) {
      auto rv = d.row(v);
      VertexSet h(n);
      h.set(u);
      h.set(v);
      for (VertexId x = 0; x < n; ++x)
        if (ru[x] == rv[x]) h.set(x);
      sets.push_back({u, v, std::move(h)});
    }
  }
  return WitnessFamily(n, std::move(sets));
}

/// Pairs whose W-set is empty; every equalizer set contains an endpoint of each.
inline std::vector<Edge> forced_pairs(const WitnessFamily& fam) {
  std::vector<Edge> out;
  for (const auto& h : fam.sets())
    if (h.members.count() == 2) out.emplace_back(h.u, h.v);
  return out;
}

}  // namespace eqdim
