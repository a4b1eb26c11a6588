#pragma once

#include <algorithm>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "graph_io.hpp"
#include "polytope.hpp"
#include "tables.hpp"

namespace eqdim {

enum class ClaimKind { LowerBound, ExactValue, EmptyW, TableRow, TableCoverage };
enum class Verdict { Verified, Repaired, Failed };

inline std::string_view to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::LowerBound: return "lower-bound";
    case ClaimKind::ExactValue: return "exact-value";
    case ClaimKind::EmptyW: return "empty-W-assertion";
    case ClaimKind::TableRow: return "table-row";
    case ClaimKind::TableCoverage: return "table-coverage";
  }
  return "?";
}

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Repaired: return "repaired";
    case Verdict::Failed: return "failed";
  }
  return "?";
}

struct BoundEvidence {
  std::size_t forced_pair_bound = 0;
  std::size_t expected = 0;
  std::size_t set_size = 0;           // 0 for lower-bound-only claims
  bool certificate_valid = false;     // against the matrix it was built from
  bool certificate_revalidated = false;  // against a matrix rebuilt from serialized graph
  bool asserted_pairs_forced = false;    // lower-bound claims: listed pair families are forced and disjoint
};

struct EmptyWCounterexample {
  std::size_t i;
  VertexId u;
  VertexId v;
  std::vector<VertexId> members;
};

struct EmptyWEvidence {
  std::vector<EmptyWCounterexample> counterexamples;
  /// When the stated family fails: the shift k for which W(x_i, y_{i+k}) is empty for all i.
  std::optional<long long> corrected_shift;
};

struct TableInstance {
  std::size_t i;
  VertexId u;
  VertexId v;
  VertexId x;
  Distance du;
  Distance dv;
  bool holds;
  std::vector<VertexId> alternates;  // valid witnesses inside the set; filled only when !holds
};

struct ReproReport {
  std::string id;
  PolytopeTag tag;
  std::size_t n;
  ClaimKind kind;
  bool theorem_level = false;
  Verdict verdict = Verdict::Failed;
  std::string detail;

  std::optional<BoundEvidence> bound;
  std::optional<EmptyWEvidence> empty_w;
  std::vector<TableInstance> instances;
  std::vector<Edge> uncovered_pairs;  // coverage claims
};

/// One family of pairs (x_{i+x_shift}, y_{i+y_shift}), i = 0..n-1, claimed to have empty W-sets.
struct PairFamily {
  char x_block;
  int x_shift;
  char y_block;
  int y_shift;
  std::string_view label;
};

struct FamilyClaims {
  PolytopeTag tag;
  std::vector<PairFamily> forced;  // pair families behind the lower bound
  Parity empty_w_parity;           // n for which the empty-W assertions are made
  std::size_t per_n;               // lower bound = per_n * n
  std::string_view set_blocks;     // blocks of the construction set
  Parity exact_parity;             // n for which the exact value is claimed
};

inline const FamilyClaims& family_claims(PolytopeTag tag) {
  static const FamilyClaims r2{PolytopeTag::R2,
                               {{'c', 0, 'd', 0, "c_i-d_i"}, {'b', 0, 'e', -1, "b_i-e_{i-1}"}, {'a', 0, 'f', -1, "a_i-f_{i-1}"}},
                               Parity::Any,
                               3,
                               "abc",
                               Parity::Even};
  static const FamilyClaims s{PolytopeTag::S,
                              {{'a', 0, 'b', 2, "a_i-b_{i+2}"}, {'c', 0, 'd', 0, "c_i-d_i"}},
                              Parity::Odd,
                              2,
                              "ac",
                              Parity::Odd};
  static const FamilyClaims s2{PolytopeTag::S2,
                               {{'a', 0, 'b', 0, "a_i-b_i"}, {'c', 0, 'd', 0, "c_i-d_i"}},
                               Parity::Any,
                               2,
                               "ac",
                               Parity::Even};
  static const FamilyClaims t{PolytopeTag::T,
                              {{'b', 0, 'c', 0, "b_i-c_i"}, {'a', 0, 'd', -1, "a_i-d_{i-1}"}},
                              Parity::Any,
                              2,
                              "ab",
                              Parity::Any};
  switch (tag) {
    case PolytopeTag::R2: return r2;
    case PolytopeTag::S: return s;
    case PolytopeTag::S2: return s2;
    case PolytopeTag::T: return t;
  }
  return t;
}

/// The block-union construction set: {a,b,c} for R''n, {a,c} for Sn and S''n, {a,b} for Tn.
inline VertexSet construction_set(PolytopeClass pc) {
  VertexSet s(pc.vertex_count());
  for (char b : family_claims(pc.tag).set_blocks)
    for (std::size_t i = 0; i < pc.n; ++i) s.set(pc.vertex(b, static_cast<long long>(i)));
  return s;
}

namespace detail {

inline std::string tag_id(PolytopeTag t) { return std::string(tag_name(t)); }

inline void require_theorem_range(PolytopeClass pc) {
  if (pc.n < kTheoremMinN)
    throw Error(ErrorKind::NTooSmall, display_name(pc.tag, pc.n) + ": reproduction needs n >= " + std::to_string(kTheoremMinN));
}

inline std::string parity_text(Parity p) {
  return p == Parity::Odd ? "odd" : p == Parity::Even ? "even" : "any";
}

inline void require_parity(PolytopeClass pc, Parity p, const std::string& what) {
  if (!parity_matches(p, pc.n))
    throw Error(ErrorKind::ParityMismatch, what + " for " + display_name(pc.tag, pc.n) + " requires " + parity_text(p) + " n");
}

struct Instance {
  PolytopeClass pc;
  Graph graph;
  DistanceMatrix dist;
  WitnessFamily family;

  explicit Instance(PolytopeClass c) : pc(c), graph(generate(c)), dist(all_pairs_distances(graph)), family(witness_family(dist)) {}
};

inline bool family_is_forced(const Instance& in, const PairFamily& f) {
  for (std::size_t i = 0; i < in.pc.n; ++i) {
    auto li = static_cast<long long>(i);
    auto u = in.pc.vertex(f.x_block, li + f.x_shift);
    auto v = in.pc.vertex(f.y_block, li + f.y_shift);
    if (in.family.hit_set(u, v).members.count() != 2) return false;
  }
  return true;
}

inline bool families_disjoint(const Instance& in, const std::vector<PairFamily>& fams) {
  VertexSet used(in.pc.vertex_count());
  for (const auto& f : fams)
    for (std::size_t i = 0; i < in.pc.n; ++i) {
      auto li = static_cast<long long>(i);
      for (auto v : {in.pc.vertex(f.x_block, li + f.x_shift), in.pc.vertex(f.y_block, li + f.y_shift)}) {
        if (used.test(v)) return false;
        used.set(v);
      }
    }
  return true;
}

inline ReproReport lower_bound_claim(const Instance& in) {
  const auto& fc = family_claims(in.pc.tag);
  ReproReport r{"lb-" + tag_id(in.pc.tag), in.pc.tag, in.pc.n, ClaimKind::LowerBound, true, Verdict::Failed, {}, {}, {}, {}, {}};
  BoundEvidence ev;
  ev.expected = fc.per_n * in.pc.n;
  ev.forced_pair_bound = forced_pair_lower_bound(in.graph.order(), forced_pairs(in.family));
  ev.asserted_pairs_forced = families_disjoint(in, fc.forced) &&
                             std::all_of(fc.forced.begin(), fc.forced.end(), [&](const auto& f) { return family_is_forced(in, f); });
  bool ok = ev.forced_pair_bound >= ev.expected && ev.asserted_pairs_forced;
  r.verdict = ok ? Verdict::Verified : Verdict::Failed;
  r.detail = "eqdim >= " + std::to_string(ev.expected) + ": forced-pair matching " + std::to_string(ev.forced_pair_bound) +
             (ev.asserted_pairs_forced ? ", listed pair families forced and disjoint" : ", listed pair families NOT all forced/disjoint");
  r.bound = ev;
  return r;
}

inline ReproReport exact_claim(const Instance& in) {
  const auto& fc = family_claims(in.pc.tag);
  ReproReport r{"exact-" + tag_id(in.pc.tag), in.pc.tag, in.pc.n, ClaimKind::ExactValue, true, Verdict::Failed, {}, {}, {}, {}, {}};
  BoundEvidence ev;
  ev.expected = fc.per_n * in.pc.n;
  ev.forced_pair_bound = forced_pair_lower_bound(in.graph.order(), forced_pairs(in.family));
  auto s = construction_set(in.pc);
  ev.set_size = s.count();
  auto check = is_distance_equalizer(in.dist, s);
  std::string why;
  if (const auto* cert = std::get_if<EqualizerCertificate>(&check)) {
    ev.certificate_valid = cert->validate(in.dist);
    // Rebuild from the serialized graph so the re-check shares nothing with the original matrix.
    auto rebuilt = graph_from_json(nlohmann::json::parse(graph_to_json(in.graph).dump()));
    ev.certificate_revalidated = cert->validate(all_pairs_distances(rebuilt));
  } else {
    auto fp = std::get<FailingPair>(check);
    why = "; construction set fails on pair (" + in.graph.vertex_name(fp.u) + ", " + in.graph.vertex_name(fp.v) + ")";
  }
  bool ok = ev.forced_pair_bound == ev.expected && ev.set_size == ev.expected && ev.certificate_valid && ev.certificate_revalidated;
  r.verdict = ok ? Verdict::Verified : Verdict::Failed;
  r.detail = "eqdim = " + std::to_string(ev.expected) + ": lower bound " + std::to_string(ev.forced_pair_bound) + ", |S| = " +
             std::to_string(ev.set_size) + (ev.certificate_revalidated ? ", certificate re-validated" : ", certificate invalid") + why;
  r.bound = ev;
  return r;
}

inline std::vector<VertexId> w_members(const Instance& in, VertexId u, VertexId v) {
  auto h = in.family.hit_set(u, v).members;
  h.reset(u);
  h.reset(v);
  return h.members();
}

inline ReproReport empty_w_claim(const Instance& in, const PairFamily& f) {
  ReproReport r{"emptyw-" + tag_id(in.pc.tag) + "-" + std::string(f.label), in.pc.tag, in.pc.n, ClaimKind::EmptyW, false,
                Verdict::Failed, {}, {}, {}, {}, {}};
  EmptyWEvidence ev;
  const auto n = in.pc.n;
  for (std::size_t i = 0; i < n; ++i) {
    auto li = static_cast<long long>(i);
    auto u = in.pc.vertex(f.x_block, li + f.x_shift);
    auto v = in.pc.vertex(f.y_block, li + f.y_shift);
    auto m = w_members(in, u, v);
    if (!m.empty()) ev.counterexamples.push_back({i, u, v, std::move(m)});
  }
  if (ev.counterexamples.empty()) {
    r.verdict = Verdict::Verified;
    r.detail = "W empty for all " + std::to_string(n) + " pairs";
  } else {
    // Nearest relative shift (ties: smaller) whose family is entirely empty-W.
    auto nn = static_cast<long long>(n);
    for (long long delta = 1; delta <= nn / 2 && !ev.corrected_shift; ++delta)
      for (long long k : {f.y_shift - f.x_shift - delta, f.y_shift - f.x_shift + delta}) {
        PairFamily g{f.x_block, 0, f.y_block, static_cast<int>(k), f.label};
        if (in.pc.vertex(g.x_block, 0) == in.pc.vertex(g.y_block, k)) continue;
        if (family_is_forced(in, g)) {
          ev.corrected_shift = ((k % nn) + nn) % nn;
          break;
        }
      }
    const auto& c = ev.counterexamples.front();
    r.detail = std::to_string(ev.counterexamples.size()) + " of " + std::to_string(n) + " pairs have non-empty W, e.g. W(" +
               in.graph.vertex_name(c.u) + ", " + in.graph.vertex_name(c.v) + ") has " + std::to_string(c.members.size()) +
               " members incl. " + in.graph.vertex_name(c.members.front());
    if (ev.corrected_shift) {
      r.verdict = Verdict::Repaired;
      r.detail += std::string("; W(") + f.x_block + "_i, " + f.y_block + "_{i+" + std::to_string(*ev.corrected_shift) +
                  "}) is empty for all i";
    }
  }
  r.empty_w = std::move(ev);
  return r;
}

inline std::string row_id(PolytopeTag t, std::size_t row) {
  std::string k = std::to_string(row + 1);
  if (k.size() < 2) k = "0" + k;
  return "table-" + tag_id(t) + "-row" + k;
}

inline ReproReport table_row_claim(const Instance& in, const WitnessTable& table, std::size_t row_index, const VertexSet& s) {
  const auto& row = table.rows[row_index];
  const auto n = in.pc.n;
  ReproReport r{row_id(in.pc.tag, row_index), in.pc.tag, n, ClaimKind::TableRow, false, Verdict::Verified, {}, {}, {}, {}, {}};
  std::size_t failures = 0;
  bool all_repairable = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!row_applies(table, row, i, n)) continue;
    auto xi = row.x_index.eval(static_cast<long long>(i), n);
    if (!xi) throw Error(ErrorKind::ParseError, r.id + ": witness index not integral at i = " + std::to_string(i));
    auto u = in.pc.vertex(row.u_block, 0);
    auto v = in.pc.vertex(row.v_block, static_cast<long long>(i));
    auto x = in.pc.vertex(row.x_block, *xi);
    TableInstance ti{i, u, v, x, in.dist(u, x), in.dist(v, x), false, {}};
    ti.holds = ti.du == ti.dv;
    if (!ti.holds) {
      ++failures;
      s.for_each([&](VertexId y) {
        if (in.dist(u, y) == in.dist(v, y)) ti.alternates.push_back(y);
      });
      if (ti.alternates.empty()) all_repairable = false;
    }
    r.instances.push_back(std::move(ti));
  }
  std::string cond(row.condition_text);
  if (row.condition.other) {
    auto ex = explicit_indices(table, row.u_block, row.v_block, n);
    std::sort(ex.begin(), ex.end());
    ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
    cond += " (read as: not in {";
    for (std::size_t k = 0; k < ex.size(); ++k) cond += (k ? "," : "") + std::to_string(ex[k]);
    cond += "})";
  }
  std::string head = std::string("(") + row.u_block + "0, " + row.v_block + "_i), " + cond + " -> " + std::string(row.witness_text);
  if (r.instances.empty()) {
    r.detail = head + ": no index applies at this n";
  } else if (failures == 0) {
    r.detail = head + ": holds for " + std::to_string(r.instances.size()) + " indices";
  } else {
    r.verdict = all_repairable ? Verdict::Repaired : Verdict::Failed;
    const auto& bad = *std::find_if(r.instances.begin(), r.instances.end(), [](const auto& t) { return !t.holds; });
    r.detail = head + ": " + std::to_string(failures) + " of " + std::to_string(r.instances.size()) + " indices fail, e.g. i=" +
               std::to_string(bad.i) + ": d(" + in.graph.vertex_name(bad.u) + "," + in.graph.vertex_name(bad.x) + ")=" +
               std::to_string(bad.du) + " vs d(" + in.graph.vertex_name(bad.v) + "," + in.graph.vertex_name(bad.x) + ")=" +
               std::to_string(bad.dv);
    if (!bad.alternates.empty()) r.detail += "; valid alternate " + in.graph.vertex_name(bad.alternates.front());
  }
  return r;
}

/// Every pair outside the construction set must be matched by some row instance up to rotation.
inline ReproReport table_coverage_claim(const Instance& in, const WitnessTable& table, const VertexSet& s) {
  const auto n = in.pc.n;
  ReproReport r{"table-" + tag_id(in.pc.tag) + "-coverage", in.pc.tag, n, ClaimKind::TableCoverage, false, Verdict::Verified,
                {}, {}, {}, {}, {}};
  auto covered = [&](VertexId p, VertexId q) {
    char bp = in.pc.block_of(p);
    char bq = in.pc.block_of(q);
    auto shift = reduce_mod(static_cast<long long>(in.pc.index_of(q)) - static_cast<long long>(in.pc.index_of(p)), n);
    for (const auto& row : table.rows)
      if (row.u_block == bp && row.v_block == bq && row_applies(table, row, shift, n)) return true;
    return false;
  };
  const auto total = in.pc.vertex_count();
  std::size_t pairs = 0;
  for (VertexId p = 0; p < total; ++p) {
    if (s.test(p)) continue;
    for (VertexId q = p + 1; q < total; ++q) {
      if (s.test(q)) continue;
      ++pairs;
      if (!covered(p, q) && !covered(q, p)) r.uncovered_pairs.emplace_back(p, q);
    }
  }
  if (r.uncovered_pairs.empty()) {
    r.detail = "all " + std::to_string(pairs) + " pairs outside S are covered by a row up to rotation";
  } else {
    r.verdict = Verdict::Failed;
    auto [p, q] = r.uncovered_pairs.front();
    r.detail = std::to_string(r.uncovered_pairs.size()) + " pairs not covered by any row, e.g. (" + in.graph.vertex_name(p) + ", " +
               in.graph.vertex_name(q) + ")";
  }
  return r;
}

}  // namespace detail

/// Lower bound claim for R''n/S''n at odd n, exact claim otherwise.
inline ReproReport verify_theorem(PolytopeClass pc) {
  detail::require_theorem_range(pc);
  const auto& fc = family_claims(pc.tag);
  bool lb_only = (pc.tag == PolytopeTag::R2 || pc.tag == PolytopeTag::S2) && !parity_matches(fc.exact_parity, pc.n);
  if (!lb_only) detail::require_parity(pc, fc.exact_parity, "exact value");
  detail::Instance in(pc);
  return lb_only ? detail::lower_bound_claim(in) : detail::exact_claim(in);
}

inline std::vector<ReproReport> verify_empty_w_claims(PolytopeClass pc) {
  detail::require_theorem_range(pc);
  const auto& fc = family_claims(pc.tag);
  detail::require_parity(pc, fc.empty_w_parity, "empty-W assertions");
  detail::Instance in(pc);
  std::vector<ReproReport> out;
  for (const auto& f : fc.forced) out.push_back(detail::empty_w_claim(in, f));
  return out;
}

/// One report per table row plus a coverage report.
inline std::vector<ReproReport> verify_table(PolytopeClass pc) {
  detail::require_theorem_range(pc);
  const auto& table = witness_table(pc.tag);
  detail::require_parity(pc, table.n_parity, "witness table");
  detail::Instance in(pc);
  auto s = construction_set(pc);
  std::vector<ReproReport> out;
  for (std::size_t k = 0; k < table.rows.size(); ++k) out.push_back(detail::table_row_claim(in, table, k, s));
  out.push_back(detail::table_coverage_claim(in, table, s));
  return out;
}

/// Every claim that applies to (class, n), sharing one generated instance.
inline std::vector<ReproReport> claims_for(PolytopeClass pc) {
  detail::require_theorem_range(pc);
  detail::Instance in(pc);
  const auto& fc = family_claims(pc.tag);
  std::vector<ReproReport> out;
  if (pc.tag == PolytopeTag::R2 || pc.tag == PolytopeTag::S2) out.push_back(detail::lower_bound_claim(in));
  if (parity_matches(fc.exact_parity, pc.n)) out.push_back(detail::exact_claim(in));
  if (parity_matches(fc.empty_w_parity, pc.n))
    for (const auto& f : fc.forced) out.push_back(detail::empty_w_claim(in, f));
  const auto& table = witness_table(pc.tag);
  if (parity_matches(table.n_parity, pc.n)) {
    auto s = construction_set(pc);
    for (std::size_t k = 0; k < table.rows.size(); ++k) out.push_back(detail::table_row_claim(in, table, k, s));
    out.push_back(detail::table_coverage_claim(in, table, s));
  }
  return out;
}

struct ReproSummary {
  std::size_t verified = 0;
  std::size_t repaired = 0;
  std::size_t failed = 0;
  std::size_t theorem_failures = 0;
  /// Table rows without any alternate witness while the exact claim at the same n verified.
  std::size_t inconsistencies = 0;

  bool theorems_ok() const { return theorem_failures == 0 && inconsistencies == 0; }
};

struct FullReport {
  std::size_t n_max;
  std::vector<PolytopeTag> classes;
  std::vector<ReproReport> reports;  // sorted by (id, n)
  ReproSummary summary;
};

/**
 * Runs every applicable claim for n = 5..n_max. Reports are ordered by claim id
 * then n regardless of `parallel`.
 */
inline FullReport run_full_repro(std::size_t n_max, std::vector<PolytopeTag> classes = {kAllPolytopeTags.begin(), kAllPolytopeTags.end()},
                                 bool parallel = false) {
  if (n_max < kTheoremMinN)
    throw Error(ErrorKind::NTooSmall, "n_max must be at least " + std::to_string(kTheoremMinN));
  FullReport full{n_max, classes, {}, {}};
  std::vector<PolytopeClass> jobs;
  for (auto t : classes)
    for (std::size_t n = kTheoremMinN; n <= n_max; ++n) jobs.push_back({t, n});

  std::vector<std::vector<ReproReport>> parts(jobs.size());
  if (parallel) {
    std::vector<std::future<std::vector<ReproReport>>> fut;
    for (auto pc : jobs) fut.push_back(std::async(std::launch::async, [pc] { return claims_for(pc); }));
    for (std::size_t k = 0; k < jobs.size(); ++k) parts[k] = fut[k].get();
  } else {
    for (std::size_t k = 0; k < jobs.size(); ++k) parts[k] = claims_for(jobs[k]);
  }
  for (auto& p : parts)
    for (auto& r : p) full.reports.push_back(std::move(r));
  std::stable_sort(full.reports.begin(), full.reports.end(), [](const auto& a, const auto& b) {
    if (a.id != b.id) return a.id < b.id;
    return a.n < b.n;
  });

  auto& s = full.summary;
  for (const auto& r : full.reports) {
    switch (r.verdict) {
      case Verdict::Verified: ++s.verified; break;
      case Verdict::Repaired: ++s.repaired; break;
      case Verdict::Failed: ++s.failed; break;
    }
    if (r.theorem_level && r.verdict != Verdict::Verified) ++s.theorem_failures;
    if (r.kind == ClaimKind::TableRow && r.verdict == Verdict::Failed) {
      auto exact = std::find_if(full.reports.begin(), full.reports.end(), [&](const auto& o) {
        return o.kind == ClaimKind::ExactValue && o.tag == r.tag && o.n == r.n;
      });
      if (exact != full.reports.end() && exact->verdict == Verdict::Verified) ++s.inconsistencies;
    }
  }
  return full;
}

}  // namespace eqdim
