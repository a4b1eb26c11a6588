#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "graph.hpp"
#include "json.hpp"

namespace eqdim {

// ---------------------------------------------------------------- JSON

inline nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["name"] = g.name();
  j["vertices"] = g.vertex_names();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.vertex_name(u), g.vertex_name(v)});
  j["edges"] = std::move(edges);
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  try {
    std::string name = j.value("name", std::string{});
    auto vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<NamedEdge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "edge must be a pair: " + e.dump());
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return build_graph(std::move(name), std::move(vertices), edges);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
}

// ---------------------------------------------------------------- DIMACS
//
//   c graph <name>
//   c name <i> <symbolic-name>      (1-indexed, one per vertex)
//   p edge <n> <m>
//   e <i> <j>

inline void write_dimacs(std::ostream& os, const Graph& g) {
  os << "c graph " << g.name() << '\n';
  for (VertexId v = 0; v < g.order(); ++v) os << "c name " << v + 1 << ' ' << g.vertex_name(v) << '\n';
  os << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline std::string to_dimacs(const Graph& g) {
  std::ostringstream os;
  write_dimacs(os, g);
  return os.str();
}

inline Graph read_dimacs(std::istream& is) {
  std::string line;
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::map<std::size_t, std::string> names;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") {
      std::string kind;
      ls >> kind;
      if (kind == "graph") {
        std::getline(ls >> std::ws, name);
      } else if (kind == "name") {
        std::size_t i = 0;
        std::string sym;
        if (!(ls >> i >> sym) || i == 0) fail("malformed name comment");
        names[i] = sym;
      }
    } else if (tag == "p") {
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "edge") fail("expected 'p edge <n> <m>'");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail("edge before header");
      std::size_t i = 0;
      std::size_t j = 0;
      if (!(ls >> i >> j)) fail("malformed edge");
      if (i == 0 || j == 0 || i > n || j > n) fail("edge endpoint out of range 1.." + std::to_string(n));
      edges.emplace_back(static_cast<VertexId>(i - 1), static_cast<VertexId>(j - 1));
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw Error(ErrorKind::ParseError, "missing 'p edge' header");
  std::vector<std::string> vertex_names;
  vertex_names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    auto it = names.find(i);
    vertex_names.push_back(it != names.end() ? it->second : std::to_string(i));
  }
  auto g = build_graph_ids(std::move(name), std::move(vertex_names), edges);
  if (g.edge_count() != m)
    throw Error(ErrorKind::ParseError,
                "header declares " + std::to_string(m) + " edges, found " + std::to_string(g.edge_count()));
  return g;
}

inline Graph from_dimacs(const std::string& text) {
  std::istringstream is(text);
  return read_dimacs(is);
}

/// Accepts either format; JSON is recognised by a leading '{'.
inline Graph parse_graph(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorKind::ParseError, ex.what());
    }
    return graph_from_json(j);
  }
  return from_dimacs(text);
}

}  // namespace eqdim
