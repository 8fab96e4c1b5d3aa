#include <fstream>
#include <string>

#include "arcwalk/datasets.hpp"
#include "arcwalk/error.hpp"
#include "arcwalk/graph.hpp"
#include "doctest.h"

using namespace arcwalk;

namespace {

std::vector<Graph> all_builtins() {
  return {three_community(), karate_club(),     square_triangle(), cycle_graph(3),
          cycle_graph(4),    cycle_graph(7),    path_graph(2),     path_graph(5),
          complete_graph(5), complete_graph(2)};
}

}  // namespace

TEST_CASE("edge list triangle") {
  const Graph g = load_edge_list("1 2\n2 3\n1 3\n");
  CHECK(g.node_count() == 3);
  CHECK(g.arc_count() == 6);
  CHECK(g.betti_number() == 1);
  CHECK_FALSE(g.is_bipartite());
  CHECK(g.neighbors(0) == std::vector<NodeId>{1, 2});
}

TEST_CASE("edge list comments, declarations and id compaction") {
  const Graph g = load_edge_list("# header\n10 20\n\n20 30\n30\n");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("edge list errors") {
  CHECK_THROWS_AS(load_edge_list("1 1\n"), DataError);
  CHECK_THROWS_AS(load_edge_list("1 2\n2 3\n3\n4\n"), DataError);
  CHECK_THROWS_AS(load_edge_list("1 2\n3 4\n"), DataError);
  CHECK_THROWS_AS(load_edge_list("1 x\n"), DataError);
  CHECK_THROWS_AS(load_edge_list(""), DataError);
  try {
    load_edge_list("1 2\n2 3\n3 2\n");
    FAIL("duplicate edge accepted");
  } catch (const DataError& e) {
    const std::string what = e.what();
    CHECK(what.find("line 3") != std::string::npos);
    CHECK(what.find("line 2") != std::string::npos);
  }
}

TEST_CASE("bundled karate file") {
  const Graph g = load_edge_list_file(std::string(ARCWALK_DATA_DIR) + "/karate.edges");
  CHECK(g.node_count() == 34);
  CHECK(g.arc_count() == 156);
  CHECK(g.betti_number() == 45);
  const Graph builtin_karate = karate_club();
  CHECK(g.offsets() == builtin_karate.offsets());
  for (NodeId i = 0; i < g.node_count(); ++i) CHECK(g.neighbors(i) == builtin_karate.neighbors(i));
  CHECK(load_edge_list(karate_edge_list()).arc_count() == 156);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(load_edge_list_file("/nonexistent/graph.edges"), DataError);
}

TEST_CASE("pajek weighted triangle equals edge list triangle") {
  const Graph p = load_pajek(
      "% comment\n*Vertices 3\n1 \"A\" 0.1 0.2\n2 \"B\"\n3 \"C c\"\n*Edges\n1 2 0.5\n2 3 2\n3 1 1\n");
  const Graph e = load_edge_list("1 2\n2 3\n1 3\n");
  CHECK(p.offsets() == e.offsets());
  for (NodeId i = 0; i < 3; ++i) CHECK(p.neighbors(i) == e.neighbors(i));
  REQUIRE(p.labels().size() == 3);
  CHECK(p.labels()[2] == "C c");
}

TEST_CASE("pajek arcs are symmetrized and lists expanded") {
  const Graph g = load_pajek("*Vertices 4\n*Arcs\n1 2\n2 1\n*Arcslist\n3 1 4\n");
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(2, 0));
  CHECK(g.has_edge(2, 3));
}

TEST_CASE("pajek errors") {
  CHECK_THROWS_AS(load_pajek("*Vertices\n*Edges\n1 2\n"), DataError);
  CHECK_THROWS_AS(load_pajek("*Vertices 3\n1 \"a\"\n2 \"b\"\n*Edges\n1 2\n2 3\n"), DataError);
  CHECK_THROWS_AS(load_pajek("*Vertices 2\n*Edges\n1 3\n"), DataError);
  CHECK_THROWS_AS(load_pajek("*Vertices 3\n*Edges\n1 2\n"), DataError);
  CHECK_THROWS_AS(load_pajek("*Vertices 2\n*Matrix\n0 1\n1 0\n"), DataError);
  CHECK_THROWS_AS(load_pajek("1 2\n"), DataError);
}

TEST_CASE("from_edges validation") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), DataError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), DataError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), DataError);
  CHECK_THROWS_AS(Graph::from_edges(0, {}), DataError);
  const Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}}, {.require_connected = false});
  CHECK_FALSE(split.is_connected());
  CHECK_THROWS_AS(split.betti_number(), DataError);
}

TEST_CASE("betti numbers") {
  CHECK(three_community().betti_number() == 19);
  CHECK(karate_club().betti_number() == 45);
  CHECK(path_graph(6).betti_number() == 0);
  CHECK(square_triangle().betti_number() == 2);
  for (std::size_t n = 3; n <= 12; ++n) {
    const Graph c = cycle_graph(n);
    CHECK(c.betti_number() == 1);
    CHECK(c.is_bipartite() == (n % 2 == 0));
  }
}

TEST_CASE("bipartiteness") {
  CHECK(cycle_graph(4).is_bipartite());
  CHECK_FALSE(cycle_graph(3).is_bipartite());
  CHECK_FALSE(square_triangle().is_bipartite());
  CHECK_FALSE(three_community().is_bipartite());
  CHECK(path_graph(5).is_bipartite());
}

TEST_CASE("builtin registry") {
  const Graph t = builtin("three_community");
  CHECK(t.node_count() == 21);
  CHECK(t.arc_count() == 78);
  const Graph k = builtin("karate");
  CHECK(k.node_count() == 34);
  CHECK(k.arc_count() == 156);
  CHECK(k.degree(0) == 16);
  CHECK(k.degree(33) == 17);
  CHECK(k.max_degree() == 17);
  CHECK(builtin("cycle(5)").node_count() == 5);
  CHECK(builtin("path(3)").edge_count() == 2);
  CHECK(builtin("complete(4)").edge_count() == 6);
  CHECK(builtin("square_triangle").edge_count() == 6);
  CHECK_THROWS_AS(builtin("nosuch"), ConfigError);
  CHECK_THROWS_AS(builtin("cycle(2)"), ConfigError);
  CHECK_THROWS_AS(builtin("cycle(x)"), ConfigError);
  CHECK_THROWS_AS(builtin("path(1)"), ConfigError);
}

TEST_CASE("three_community layout") {
  const Graph g = three_community();
  CHECK(g.edge_count() == 39);
  for (NodeId hub : {0u, 12u, 20u}) CHECK(g.degree(hub) == 8);
  CHECK(g.has_edge(0, 12));
  CHECK(g.has_edge(12, 20));
  CHECK(g.has_edge(0, 20));
  for (NodeId i = 0; i < 21; ++i) {
    for (NodeId j : g.neighbors(i)) {
      const bool hub_pair = (i == 0 || i == 12 || i == 20) && (j == 0 || j == 12 || j == 20);
      if (!hub_pair) CHECK(i / 7 == j / 7);
    }
  }
}

TEST_CASE("arc structure invariants on every builtin") {
  for (const Graph& g : all_builtins()) {
    std::size_t sum = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) sum += g.degree(i);
    CHECK(sum == g.arc_count());
    CHECK(g.arc_count() % 2 == 0);
    for (ArcId a = 0; a < g.arc_count(); ++a) {
      const Arc arc = g.arc_at(a);
      CHECK(g.arc_index(arc) == a);
      CHECK(g.tail(a) == arc.tail);
      CHECK(g.head(a) == g.neighbor(arc.tail, arc.slot));
      CHECK(g.reverse(g.reverse(a)) == a);
      CHECK(g.reverse(a) != a);
      CHECK(g.tail(g.reverse(a)) == g.head(a));
    }
    for (NodeId i = 0; i < g.node_count(); ++i) {
      const auto nb = g.neighbors(i);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
    }
  }
}

TEST_CASE("arc_index rejects bad slots") {
  const Graph g = cycle_graph(4);
  CHECK_THROWS_AS(g.arc_index({0, 2}), ConfigError);
  CHECK_THROWS_AS(g.arc_index({4, 0}), ConfigError);
}

TEST_CASE("pajek layout with coordinates and an empty arc section") {
  const Graph g = load_pajek(
      "*Vertices 4\n"
      "     1 \"Bethel\"                      0.0000    0.0000    0.0000\n"
      "     2 \"Dillingham\"                  0.1000    0.2000    0.0000\n"
      "     3 \"Big Mountain\"                0.3000    0.4000    0.0000\n"
      "     4 \"King Salmon\"                 0.5000    0.6000    0.0000\n"
      "*Arcs\n"
      "*Edges\n"
      "     1      2 0.0436\n"
      "     2      3 0.0100\n"
      "     3      4 0.0200\n"
      "     4      1 0.0300\n"
      "     2      1 0.0436\n");
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.is_bipartite());
  CHECK(g.labels()[2] == "Big Mountain");
}
