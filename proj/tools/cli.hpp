#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqdim/eqdim.hpp"

namespace eqdim::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFalse = 1,
  kUsage = 2,
  kInconclusive = 3,
  kTheoremFailure = 4,
};

inline constexpr const char* kBudgetEnv = "EQDIM_TIME_LIMIT";

struct CliConfig {
  std::string input = "-";
  std::string output;
  std::string cert_path;
  std::string class_name;
  std::vector<std::string> class_filter;
  std::size_t n = 0;
  std::size_t n_max = 12;
  std::string format;  // empty: json for gen, text otherwise
  std::string u;
  std::string v;
  std::string set;
  std::string hint;
  std::optional<double> time_limit;
  std::optional<std::uint64_t> node_limit;
  bool parallel = false;
  std::size_t exact_cap = kDefaultExactCap;
};

namespace detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << text;
}

inline bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace detail

/// Comma-separated names; "a*" expands to every vertex named "a" followed by digits.
inline VertexSet parse_vertex_set(const Graph& g, const std::string& spec) {
  VertexSet s(g.order());
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, tok.find_last_not_of(" \t") - b + 1);
    if (tok.size() > 1 && tok.back() == '*') {
      auto prefix = tok.substr(0, tok.size() - 1);
      bool any = false;
      for (VertexId v = 0; v < g.order(); ++v) {
        const auto& name = g.vertex_name(v);
        if (name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0 &&
            detail::is_digits(std::string_view(name).substr(prefix.size()))) {
          s.set(v);
          any = true;
        }
      }
      if (!any) throw Error(ErrorKind::UnknownVertex, "block pattern '" + tok + "' matches no vertex");
    } else {
      s.set(g.id(tok));
    }
  }
  return s;
}

inline std::optional<double> budget_from_env() {
  if (const char* e = std::getenv(kBudgetEnv)) {
    try {
      double v = std::stod(e);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

class App {
 public:
  App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(std::vector<std::string> args) {
    CLI::App app{"Equidistant dimension toolkit"};
    app.require_subcommand(1, 1);
    CliConfig c;
    c.time_limit = budget_from_env();

    auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
      sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(allowed));
    };
    auto add_in = [&](CLI::App* sub) { sub->add_option("--in,-i", c.input, "Graph file (JSON or DIMACS), '-' for stdin"); };

    auto* gen = app.add_subcommand("gen", "Generate a polytope graph");
    gen->add_option("--class", c.class_name, "r2 | s | s2 | t")->required()->check(CLI::IsMember({"r2", "s", "s2", "t"}));
    gen->add_option("--n", c.n, "Cycle length")->required();
    gen->add_option("--out,-o", c.output, "Output file (stdout when omitted)");
    add_format(gen, {"json", "dimacs"});

    auto* dist = app.add_subcommand("dist", "Distances: full matrix or one pair");
    add_in(dist);
    dist->add_option("--u", c.u);
    dist->add_option("--v", c.v);
    add_format(dist, {"json", "text"});

    auto* wset = app.add_subcommand("wset", "Vertices equidistant from u and v");
    add_in(wset);
    wset->add_option("--u", c.u)->required();
    wset->add_option("--v", c.v)->required();
    add_format(wset, {"json", "text"});

    auto* verify = app.add_subcommand("verify", "Check a distance-equalizer set");
    add_in(verify);
    verify->add_option("--set", c.set, "Comma-separated names; 'a*' selects a whole block")->required();
    verify->add_option("--cert", c.cert_path, "Write the certificate JSON here");
    add_format(verify, {"json", "text"});

    auto* solve = app.add_subcommand("solve", "Exact equidistant dimension");
    add_in(solve);
    solve->add_option("--time-limit", c.time_limit, std::string("Seconds (default from ") + kBudgetEnv + ")")
        ->check(CLI::PositiveNumber);
    solve->add_option("--node-limit", c.node_limit, "Search node budget")->check(CLI::PositiveNumber);
    solve->add_flag("--parallel", c.parallel, "Split the search over threads");
    solve->add_option("--hint", c.hint, "Starting set (same syntax as verify --set)");
    solve->add_option("--cert", c.cert_path, "Write the certificate JSON here");
    add_format(solve, {"json", "text"});

    auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds");
    add_in(bounds);
    bounds->add_option("--cap", c.exact_cap, "Vertex cap for exact clique/independence search")->check(CLI::PositiveNumber);
    add_format(bounds, {"json", "text"});

    auto* repro = app.add_subcommand("repro", "Re-verify the family results");
    repro->add_option("--n-max", c.n_max, "Largest n (from 5)");
    repro->add_option("--class", c.class_filter, "Restrict to classes (repeatable)")
        ->delimiter(',')
        ->check(CLI::IsMember({"r2", "s", "s2", "t"}));
    repro->add_flag("--parallel", c.parallel, "Run instances concurrently");
    repro->add_option("--out,-o", c.output, "Also write the report here");
    add_format(repro, {"json", "text"});

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    }

    if (c.format.empty()) c.format = *gen ? "json" : "text";
    try {
      if (*gen) return cmd_gen(c);
      if (*dist) return cmd_dist(c);
      if (*wset) return cmd_wset(c);
      if (*verify) return cmd_verify(c);
      if (*solve) return cmd_solve(c);
      if (*bounds) return cmd_bounds(c);
      if (*repro) return cmd_repro(c);
    } catch (const Error& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    }
    return kUsage;
  }

 private:
  Graph load(const CliConfig& c) { return parse_graph(detail::read_input(c.input)); }

  void emit(const OrderedJson& j) { out_ << j.dump(2) << '\n'; }

  int cmd_gen(const CliConfig& c) {
    auto pc = PolytopeClass{*parse_tag(c.class_name), c.n};
    auto g = generate(pc);
    if (pc.below_theorem_range())
      err_ << "warning: n = " << c.n << " is below 5; the family results are stated for n >= 5\n";
    std::string text = c.format == "dimacs" ? to_dimacs(g) : graph_to_json(g).dump(2) + "\n";
    if (c.output.empty()) {
      out_ << text;
      err_ << g.name() << ": " << g.order() << " vertices, " << g.edge_count() << " edges\n";
    } else {
      detail::write_output(c.output, text);
      out_ << g.name() << ": " << g.order() << " vertices, " << g.edge_count() << " edges -> " << c.output << '\n';
    }
    return kOk;
  }

  int cmd_dist(const CliConfig& c) {
    auto g = load(c);
    auto d = all_pairs_distances(g);
    if (c.u.empty() != c.v.empty()) throw Error(ErrorKind::ParseError, "--u and --v go together");
    if (!c.u.empty()) {
      auto u = g.id(c.u);
      auto v = g.id(c.v);
      if (c.format == "json") emit(OrderedJson{{"u", c.u}, {"v", c.v}, {"distance", d(u, v)}});
      else out_ << "d(" << c.u << ", " << c.v << ") = " << d(u, v) << '\n';
      return kOk;
    }
    if (c.format == "json") {
      OrderedJson j{{"vertices", g.vertex_names()}, {"diameter", d.diameter()}};
      auto rows = OrderedJson::array();
      for (VertexId u = 0; u < g.order(); ++u) rows.push_back(std::vector<Distance>(d.row(u).begin(), d.row(u).end()));
      j["matrix"] = std::move(rows);
      emit(j);
    } else {
      for (VertexId u = 0; u < g.order(); ++u) {
        out_ << g.vertex_name(u);
        for (auto x : d.row(u)) out_ << ' ' << x;
        out_ << '\n';
      }
    }
    return kOk;
  }

  int cmd_wset(const CliConfig& c) {
    auto g = load(c);
    auto d = all_pairs_distances(g);
    auto w = w_set(d, g.id(c.u), g.id(c.v));
    if (c.format == "json") {
      emit(OrderedJson{{"u", c.u}, {"v", c.v}, {"w", names_json(g, w.members)}, {"forced", w.members.empty()}});
    } else {
      out_ << "W(" << c.u << ", " << c.v << ") = {";
      for (std::size_t k = 0; k < w.members.size(); ++k) out_ << (k ? "," : "") << g.vertex_name(w.members[k]);
      out_ << "}" << (w.members.empty() ? "  (forced pair)" : "") << '\n';
    }
    return kOk;
  }

  int cmd_verify(const CliConfig& c) {
    auto g = load(c);
    auto d = all_pairs_distances(g);
    auto s = parse_vertex_set(g, c.set);
    auto check = is_distance_equalizer(d, s);
    if (auto* cert = std::get_if<EqualizerCertificate>(&check)) {
      auto cj = certificate_to_json(g, *cert);
      if (!c.cert_path.empty()) detail::write_output(c.cert_path, cj.dump(2) + "\n");
      if (c.format == "json") emit(OrderedJson{{"equalizer", true}, {"certificate", cj}});
      else out_ << "distance-equalizer set of size " << cert->value() << " (" << cert->witnesses.size() << " witnessed pairs)\n";
      return kOk;
    }
    auto fp = std::get<FailingPair>(check);
    if (c.format == "json")
      emit(OrderedJson{{"equalizer", false}, {"failing_pair", {g.vertex_name(fp.u), g.vertex_name(fp.v)}}});
    else
      out_ << "not a distance-equalizer set: no member equidistant from " << g.vertex_name(fp.u) << " and " << g.vertex_name(fp.v)
           << '\n';
    return kVerificationFalse;
  }

  int cmd_solve(const CliConfig& c) {
    auto g = load(c);
    auto d = all_pairs_distances(g);
    SolverOptions opt;
    opt.time_limit_seconds = c.time_limit;
    opt.node_limit = c.node_limit;
    opt.parallel = c.parallel;
    if (!c.hint.empty()) opt.hint = parse_vertex_set(g, c.hint);
    auto r = eqdim_exact(d, opt);
    if (!c.cert_path.empty()) detail::write_output(c.cert_path, certificate_to_json(g, r.certificate).dump(2) + "\n");
    if (c.format == "json") {
      auto j = solve_to_json(g, r);
      if (!c.cert_path.empty()) j["certificate_path"] = c.cert_path;
      emit(j);
    } else if (r.exact()) {
      out_ << "eqdim = " << r.upper_bound << '\n' << "set: " << set_text(g, r.set) << '\n';
      if (!c.cert_path.empty()) out_ << "certificate: " << c.cert_path << '\n';
    } else {
      out_ << "inconclusive: eqdim in [" << r.lower_bound << ", " << r.upper_bound << "] (budget exceeded)\n"
           << "best set: " << set_text(g, r.set) << '\n';
    }
    return r.exact() ? kOk : kInconclusive;
  }

  int cmd_bounds(const CliConfig& c) {
    auto g = load(c);
    auto d = all_pairs_distances(g);
    auto stats = stats_for_bounds(g, d, c.exact_cap);
    auto r = all_bounds(g, d, stats);
    if (c.format == "json") emit(bounds_to_json(g, r));
    else write_bounds_text(out_, g, r);
    return kOk;
  }

  int cmd_repro(const CliConfig& c) {
    if (c.n_max < kTheoremMinN) throw Error(ErrorKind::NTooSmall, "--n-max must be at least " + std::to_string(kTheoremMinN));
    std::vector<PolytopeTag> classes;
    for (auto t : kAllPolytopeTags)
      if (c.class_filter.empty() || std::find(c.class_filter.begin(), c.class_filter.end(), tag_name(t)) != c.class_filter.end())
        classes.push_back(t);
    auto full = run_full_repro(c.n_max, classes, c.parallel);
    std::string text;
    if (c.format == "json") {
      text = full_report_to_json(full).dump(2) + "\n";
    } else {
      std::ostringstream os;
      write_full_report_text(os, full);
      text = os.str();
    }
    out_ << text;
    if (!c.output.empty()) detail::write_output(c.output, text);
    return full.summary.theorems_ok() ? kOk : kTheoremFailure;
  }

  std::ostream& out_;
  std::ostream& err_;
};

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return App(out, err).run(args);
}

}  // namespace eqdim::cli
