#include <gtest/gtest.h>

#include "eqdim/eqdim.hpp"
#include "support/oracles.hpp"

using namespace eqdim;

TEST(BuildGraph, SmallestConnectedGraph) {
  auto g = build_graph("P2", {"u", "v"}, {{"u", "v"}});
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(BuildGraph, CycleIsTwoRegular) {
  auto g = build_graph("C5", {"v0", "v1", "v2", "v3", "v4"},
                       {{"v0", "v1"}, {"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v0"}});
  for (VertexId v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(BuildGraph, DuplicateEdgesCollapse) {
  auto g = build_graph("dup", {"a", "b"}, {{"a", "b"}, {"b", "a"}, {"a", "b"}});
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(BuildGraph, Errors) {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error";
    return ErrorKind::ParseError;
  };
  EXPECT_EQ(kind_of([] { build_graph("x", {"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}); }), ErrorKind::Disconnected);
  EXPECT_EQ(kind_of([] { build_graph("x", {"a", "b"}, {{"a", "z"}}); }), ErrorKind::UnknownVertex);
  EXPECT_EQ(kind_of([] { build_graph("x", {"a", "b"}, {{"a", "a"}, {"a", "b"}}); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([] { build_graph("x", {"a", "a"}, {}); }), ErrorKind::DuplicateVertex);
  EXPECT_EQ(kind_of([] { build_graph("x", {}, {}); }), ErrorKind::EmptyGraph);
}

TEST(BuildGraph, ErrorNamesOffender) {
  try {
    build_graph("x", {"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("'c'"), std::string::npos) << e.what();
  }
  try {
    build_graph("x", {"a", "b"}, {{"a", "zz"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
  }
}

TEST(BuildGraph, DeterministicIds) {
  auto a = build_graph("g", {"x", "y", "z"}, {{"z", "x"}, {"y", "z"}});
  auto b = build_graph("g", {"x", "y", "z"}, {{"z", "x"}, {"y", "z"}});
  EXPECT_EQ(a.vertex_names(), b.vertex_names());
  EXPECT_EQ(a.edges(), b.edges());
  EXPECT_EQ(a.id("z"), 2u);
}

TEST(Distances, PathAndCycle) {
  auto p2 = path_graph(2);
  EXPECT_EQ(all_pairs_distances(p2)(0, 1), 1);
  auto c5 = cycle_graph(5);
  auto d = all_pairs_distances(c5);
  EXPECT_EQ(d(0, 2), 2);
  for (VertexId i = 0; i < 5; ++i)
    for (VertexId j = 0; j < 5; ++j) {
      int diff = std::abs(static_cast<int>(i) - static_cast<int>(j));
      EXPECT_EQ(d(i, j), std::min(diff, 5 - diff));
    }
}

TEST(Distances, T5Example) {
  auto g = gen_t(5);
  auto d = all_pairs_distances(g);
  EXPECT_EQ(d(g.id("d0"), g.id("b2")), 4);  // frozen from an independent BFS
  EXPECT_EQ(oracle::floyd_warshall(g)[g.id("d0")][g.id("b2")], 4);
}

// Matrix properties on every generated instance with at most 12 vertices per block.
TEST(Distances, MatchesFloydWarshallAndMetricAxioms) {
  std::vector<Graph> graphs;
  for (auto t : kAllPolytopeTags)
    for (std::size_t n : {5, 6, 9, 12}) graphs.push_back(generate({t, n}));
  for (std::size_t n = 2; n <= 9; ++n) {
    graphs.push_back(path_graph(n));
    graphs.push_back(cycle_graph(std::max<std::size_t>(n, 3)));
  }
  for (const auto& g : graphs) {
    auto d = all_pairs_distances(g);
    auto fw = oracle::floyd_warshall(g);
    const auto n = g.order();
    Distance diam = 0;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v) {
        ASSERT_EQ(d(u, v), fw[u][v]) << g.name();
        ASSERT_EQ(d(u, v), d(v, u));
        ASSERT_EQ(d(u, v) == 1, g.adjacent(u, v));
        diam = std::max(diam, d(u, v));
      }
    for (VertexId u = 0; u < n; ++u) ASSERT_EQ(d(u, u), 0);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v)
        for (VertexId w = 0; w < n; ++w) ASSERT_LE(d(u, w), d(u, v) + d(v, w));
    EXPECT_EQ(d.diameter(), diam);
  }
}

TEST(Distances, ParallelMatchesSequential) {
  auto g = gen_r2(12);
  EXPECT_EQ(all_pairs_distances(g, true), all_pairs_distances(g, false));
}

TEST(Stats, CycleFive) {
  auto g = cycle_graph(5);
  auto s = graph_stats(g, all_pairs_distances(g));
  EXPECT_EQ(s.max_degree, 2u);
  EXPECT_EQ(s.min_degree, 2u);
  EXPECT_EQ(s.diameter, 2u);
  EXPECT_EQ(s.clique_number, 2u);
  EXPECT_EQ(s.independence_number, 2u);
}

TEST(Stats, PolytopeDegreesAndCliques) {
  auto r = gen_r2(6);
  auto sr = graph_stats(r, all_pairs_distances(r));
  EXPECT_EQ(sr.max_degree, 3u);
  EXPECT_EQ(sr.min_degree, 3u);
  auto t = gen_t(6);
  auto st = graph_stats(t, all_pairs_distances(t), {kDefaultExactCap, true, false});
  EXPECT_EQ(st.max_degree, 5u);
  EXPECT_EQ(st.clique_number, 3u);
  EXPECT_FALSE(st.independence_number.has_value());
}

TEST(Stats, CapSkipsExactSearch) {
  auto g = gen_t(6);
  StatsOptions opt;
  opt.exact_cap = 10;
  auto s = graph_stats(g, all_pairs_distances(g), opt);
  EXPECT_EQ(s.max_degree, 5u);
  EXPECT_FALSE(s.clique_number.has_value());
  try {
    clique_number(g, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeCapExceeded);
  }
}

TEST(Stats, CliqueAndIndependenceMatchBruteForce) {
  for (const auto& g : oracle::connected_graph_corpus(7)) {
    auto c = maximum_clique(g);
    ASSERT_EQ(c.size(), oracle::brute_max_clique(g)) << g.name();
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) ASSERT_TRUE(g.adjacent(c[i], c[j]));
    ASSERT_EQ(independence_number(g), oracle::brute_max_clique(g, true)) << g.name();
  }
  // a few 8- and 9-vertex graphs
  for (auto g : {cycle_graph(9), path_graph(9), cycle_graph(8), complete_graph(8), star_graph(7)}) {
    EXPECT_EQ(clique_number(g), oracle::brute_max_clique(g)) << g.name();
    EXPECT_EQ(independence_number(g), oracle::brute_max_clique(g, true)) << g.name();
  }
}

TEST(Stats, Invariants) {
  for (const auto& g : oracle::connected_graph_corpus(6)) {
    if (g.order() < 2) continue;
    auto s = graph_stats(g, all_pairs_distances(g));
    EXPECT_LE(s.min_degree, s.max_degree);
    EXPECT_LE(s.max_degree, g.order() - 1);
    EXPECT_GE(*s.clique_number, 2u);
    EXPECT_GE(*s.independence_number, 1u);
    EXPECT_LE(*s.clique_number, s.max_degree + 1);
  }
}

TEST(GraphIo, JsonRoundTrip) {
  auto g = gen_s2(6);
  auto back = graph_from_json(nlohmann::json::parse(graph_to_json(g).dump()));
  EXPECT_EQ(back.name(), g.name());
  EXPECT_EQ(back.vertex_names(), g.vertex_names());
  EXPECT_EQ(back.edges(), g.edges());
}

TEST(GraphIo, DimacsRoundTripKeepsOrderAndNames) {
  // Vertex order deliberately not sorted by name.
  auto g = build_graph("odd order", {"z", "b3", "a", "q"}, {{"z", "a"}, {"a", "q"}, {"q", "b3"}});
  auto text = to_dimacs(g);
  EXPECT_NE(text.find("p edge 4 3"), std::string::npos);
  auto back = from_dimacs(text);
  EXPECT_EQ(back.name(), "odd order");
  EXPECT_EQ(back.vertex_names(), g.vertex_names());
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_EQ(to_dimacs(back), text);
}

TEST(GraphIo, DimacsHeaderForR2) {
  EXPECT_NE(to_dimacs(gen_r2(6)).find("p edge 36 54\n"), std::string::npos);
}

TEST(GraphIo, DimacsErrors) {
  EXPECT_THROW(from_dimacs("e 1 2\n"), Error);
  EXPECT_THROW(from_dimacs("p edge 2 1\ne 1 3\n"), Error);
  EXPECT_THROW(from_dimacs("p edge 2 2\ne 1 2\n"), Error);
  EXPECT_THROW(from_dimacs("p edge 3 1\ne 1 2\n"), Error);  // disconnected
  auto g = from_dimacs("p edge 2 1\ne 1 2\n");
  EXPECT_EQ(g.vertex_names(), (std::vector<std::string>{"1", "2"}));
}

TEST(GraphIo, ParseGraphSniffsFormat) {
  auto g = gen_t(5);
  EXPECT_EQ(parse_graph(graph_to_json(g).dump()).edges(), g.edges());
  EXPECT_EQ(parse_graph(to_dimacs(g)).edges(), g.edges());
  EXPECT_THROW(parse_graph("{not json"), Error);
}
