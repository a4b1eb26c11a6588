#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "bounds.hpp"
#include "graph_io.hpp"
#include "repro.hpp"
#include "solver.hpp"

namespace eqdim {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson names_json(const Graph& g, const std::vector<VertexId>& ids) {
  auto a = OrderedJson::array();
  for (auto v : ids) a.push_back(g.vertex_name(v));
  return a;
}

/// {"set": [names], "witnesses": [{"pair": [u, v], "x": w}, ...], "value": k}
inline OrderedJson certificate_to_json(const Graph& g, const EqualizerCertificate& c) {
  OrderedJson j;
  j["set"] = names_json(g, c.set.members());
  auto w = OrderedJson::array();
  for (const auto& e : c.witnesses)
    w.push_back(OrderedJson{{"pair", {g.vertex_name(e.u), g.vertex_name(e.v)}}, {"x", g.vertex_name(e.x)}});
  j["witnesses"] = std::move(w);
  j["value"] = c.value();
  return j;
}

inline EqualizerCertificate certificate_from_json(const Graph& g, const nlohmann::json& j) {
  try {
    EqualizerCertificate c{VertexSet(g.order()), {}};
    for (const auto& name : j.at("set")) c.set.set(g.id(name.get<std::string>()));
    for (const auto& e : j.at("witnesses")) {
      const auto& p = e.at("pair");
      c.witnesses.push_back({g.id(p.at(0).get<std::string>()), g.id(p.at(1).get<std::string>()), g.id(e.at("x").get<std::string>())});
    }
    return c;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
}

/// One entry per bound: {"kind", "value", "source"}.
inline OrderedJson bounds_to_json(const Graph& g, const BoundsReport& r) {
  OrderedJson j;
  j["graph"] = g.name();
  j["order"] = g.order();
  auto a = OrderedJson::array();
  for (const auto& e : r.entries) a.push_back(OrderedJson{{"kind", to_string(e.kind)}, {"value", e.value}, {"source", e.source}});
  j["bounds"] = std::move(a);
  j["best_lower"] = r.best_lower();
  if (auto ub = r.best_upper()) j["best_upper"] = *ub;
  return j;
}

inline void write_bounds_text(std::ostream& os, const Graph& g, const BoundsReport& r) {
  os << "bounds for " << g.name() << " (|V| = " << g.order() << ")\n";
  for (const auto& e : r.entries) os << "  " << to_string(e.kind) << ": " << e.value << " (" << e.source << ")\n";
  os << "  best interval: [" << r.best_lower() << ", ";
  if (auto ub = r.best_upper()) os << *ub;
  else os << "?";
  os << "]\n";
}

inline OrderedJson solve_to_json(const Graph& g, const SolveResult& r) {
  OrderedJson j;
  j["graph"] = g.name();
  j["status"] = r.exact() ? "optimal" : "budget-exceeded";
  if (r.exact()) j["value"] = r.upper_bound;
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound;
  j["set"] = names_json(g, r.set.members());
  j["nodes"] = r.nodes;
  j["closed_at_root"] = r.closed_at_root;
  j["parallel"] = r.parallel;
  if (r.parallel) j["note"] = "parallel search: value is exact, set may be any optimum";
  return j;
}

inline std::string set_text(const Graph& g, const VertexSet& s) {
  std::string out;
  s.for_each([&](VertexId v) {
    if (!out.empty()) out += ",";
    out += g.vertex_name(v);
  });
  return out;
}

// ---------------------------------------------------------------- repro

inline OrderedJson report_to_json(const Graph& g, const ReproReport& r) {
  OrderedJson j;
  j["id"] = r.id;
  j["class"] = tag_name(r.tag);
  j["n"] = r.n;
  j["kind"] = to_string(r.kind);
  j["theorem_level"] = r.theorem_level;
  j["verdict"] = to_string(r.verdict);
  j["detail"] = r.detail;
  if (r.bound) {
    const auto& b = *r.bound;
    j["evidence"] = OrderedJson{{"forced_pair_bound", b.forced_pair_bound},
                                {"expected", b.expected},
                                {"set_size", b.set_size},
                                {"certificate_valid", b.certificate_valid},
                                {"certificate_revalidated", b.certificate_revalidated},
                                {"asserted_pairs_forced", b.asserted_pairs_forced}};
  }
  if (r.empty_w) {
    auto ce = OrderedJson::array();
    for (const auto& c : r.empty_w->counterexamples)
      ce.push_back(OrderedJson{{"i", c.i}, {"pair", {g.vertex_name(c.u), g.vertex_name(c.v)}}, {"w", names_json(g, c.members)}});
    OrderedJson ev{{"counterexamples", std::move(ce)}};
    if (r.empty_w->corrected_shift) ev["corrected_shift"] = *r.empty_w->corrected_shift;
    j["evidence"] = std::move(ev);
  }
  if (r.kind == ClaimKind::TableRow) {
    auto inst = OrderedJson::array();
    for (const auto& t : r.instances) {
      OrderedJson e{{"i", t.i},
                    {"pair", {g.vertex_name(t.u), g.vertex_name(t.v)}},
                    {"x", g.vertex_name(t.x)},
                    {"d_u_x", t.du},
                    {"d_v_x", t.dv},
                    {"holds", t.holds}};
      if (!t.holds) e["alternates"] = names_json(g, t.alternates);
      inst.push_back(std::move(e));
    }
    j["instances"] = std::move(inst);
  }
  if (r.kind == ClaimKind::TableCoverage) {
    auto a = OrderedJson::array();
    for (auto [p, q] : r.uncovered_pairs) a.push_back({g.vertex_name(p), g.vertex_name(q)});
    j["uncovered_pairs"] = std::move(a);
  }
  return j;
}

inline constexpr const char* kTableInterpretation =
    "'other odd/even i' rows cover the indices of that parity not named by another row of the same (u, v) group";

inline OrderedJson full_report_to_json(const FullReport& f) {
  OrderedJson j;
  j["n_max"] = f.n_max;
  auto cls = OrderedJson::array();
  for (auto t : f.classes) cls.push_back(tag_name(t));
  j["classes"] = std::move(cls);
  j["table_interpretation"] = kTableInterpretation;
  auto claims = OrderedJson::array();
  // Vertex names depend only on (class, n); regenerate them per report.
  for (const auto& r : f.reports) claims.push_back(report_to_json(generate({r.tag, r.n}), r));
  j["claims"] = std::move(claims);
  j["summary"] = OrderedJson{{"verified", f.summary.verified},
                             {"repaired", f.summary.repaired},
                             {"failed", f.summary.failed},
                             {"theorem_failures", f.summary.theorem_failures},
                             {"inconsistencies", f.summary.inconsistencies}};
  return j;
}

/// One line per (claim, n): id, n, verdict, detail.
inline void write_full_report_text(std::ostream& os, const FullReport& f) {
  std::size_t width = 2;
  for (const auto& r : f.reports) width = std::max(width, r.id.size());
  os << "# " << kTableInterpretation << '\n';
  os << std::left << std::setw(static_cast<int>(width)) << "id" << "  " << std::setw(3) << "n" << "  " << std::setw(8) << "verdict"
     << "  detail\n";
  for (const auto& r : f.reports)
    os << std::left << std::setw(static_cast<int>(width)) << r.id << "  " << std::setw(3) << r.n << "  " << std::setw(8)
       << to_string(r.verdict) << "  " << r.detail << '\n';
  const auto& s = f.summary;
  os << "summary: " << s.verified << " verified, " << s.repaired << " repaired, " << s.failed << " failed; theorem-level failures: "
     << s.theorem_failures << ", inconsistencies: " << s.inconsistencies << '\n';
}

}  // namespace eqdim
