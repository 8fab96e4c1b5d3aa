#include <cstdlib>
#include <string>

#include "arcwalk/datasets.hpp"
#include "arcwalk/error.hpp"
#include "arcwalk/run.hpp"
#include "doctest.h"

using namespace arcwalk;

namespace {

RunConfig config_for(Command command, const std::string& graph, CoinKind coin = CoinKind::Fourier) {
  RunConfig c;
  c.command = command;
  c.graph = GraphSource::parse(graph);
  c.coin = coin;
  return c;
}

}  // namespace

TEST_CASE("graph source parsing") {
  const GraphSource b = GraphSource::parse("builtin:karate");
  CHECK(b.kind == GraphSource::Kind::Builtin);
  CHECK(b.value == "karate");
  CHECK(b.to_string() == "builtin:karate");
  CHECK(GraphSource::parse("edges:/tmp/a b.txt").value == "/tmp/a b.txt");
  CHECK(GraphSource::parse("pajek:usair.net").kind == GraphSource::Kind::Pajek);
  CHECK_THROWS_AS(GraphSource::parse("karate"), ConfigError);
  CHECK_THROWS_AS(GraphSource::parse("builtin:"), ConfigError);
  CHECK_THROWS_AS(GraphSource::parse("gml:x"), ConfigError);
}

TEST_CASE("mode parsing") {
  CHECK(parse_average_mode("average-finite") == AverageMode::Finite);
  CHECK(parse_average_mode("average-infinite") == AverageMode::Infinite);
  CHECK(parse_average_mode("auto") == AverageMode::Auto);
  CHECK_THROWS_AS(parse_average_mode("forever"), ConfigError);
}

TEST_CASE("metadata matches the graph") {
  for (const char* name : {"builtin:three_community", "builtin:karate", "builtin:cycle(4)"}) {
    for (Command cmd : {Command::Spectrum, Command::Detect, Command::Classical, Command::Average}) {
      const OutputDocument doc = run(config_for(cmd, name));
      const Graph g = load_graph(GraphSource::parse(name));
      const Json& gm = doc.metadata["graph"];
      CHECK(gm["nodes"] == g.node_count());
      CHECK(gm["arcs"] == g.arc_count());
      CHECK(gm["betti"] == g.betti_number());
      CHECK(gm["bipartite"] == g.is_bipartite());
      CHECK(gm["source"] == name);
      CHECK(doc.metadata["command"] == std::string(to_string(cmd)));
      CHECK(doc.metadata["tool"]["name"] == "arcwalk");
    }
  }
}

TEST_CASE("detect payload for the karate club") {
  const OutputDocument doc = run(config_for(Command::Detect, "builtin:karate"));
  const Json& p = doc.payload;
  CHECK(p["hubs"] == Json::array({34, 1}));
  CHECK(p["source"] == "infinite-time");
  CHECK(p["threshold"].get<double>() == round_significant(1.0 / 156.0));
  CHECK(p["communities"][0]["size"] == 19);
  CHECK(p["communities"][1]["size"] == 15);
  CHECK(doc.metadata["parameters"]["threshold_rule"] == "auto (1/D)");
  bool node3 = false;
  bool node20 = false;
  for (const auto& m : p["marginal"]) {
    node3 = node3 || (m["node"] == 3 && m["hub"] == 1);
    node20 = node20 || (m["node"] == 20 && m["hub"] == 34);
  }
  CHECK(node3);
  CHECK(node20);
  CHECK(p["nodes"].size() == 34);
}

TEST_CASE("spectrum payload") {
  const OutputDocument doc = run(config_for(Command::Spectrum, "builtin:three_community", CoinKind::Grover));
  const Json& d = doc.payload["degeneracy"];
  CHECK(d["plus_one"] == 20);
  CHECK(d["minus_one"] == 18);
  CHECK(d["matches_prediction"] == true);
  CHECK(doc.payload["eigenvalues"].size() == 78);
  CHECK(doc.payload["histogram"]["counts"].size() == 20);

  const OutputDocument f = run(config_for(Command::Spectrum, "builtin:karate"));
  CHECK(f.payload["degeneracy"]["largest_multiplicity"] == 1);
  CHECK(f.payload["degeneracy"]["degenerate"].empty());
}

TEST_CASE("average modes") {
  RunConfig c = config_for(Command::Average, "builtin:three_community");
  CHECK(run(c).payload["source"] == "infinite-time");
  c.mode = AverageMode::Finite;
  c.steps = 50;
  CHECK(run(c).payload["source"] == "finite-time(T=50)");
  c.include_initial = true;
  CHECK(run(c).payload["source"] == "finite-time(T=50,t0)");
  const OutputDocument doc = run(c);
  CHECK(doc.payload["normalized"]["values"].size() == 21);
  CHECK(doc.csv.rfind("l,1,2,", 0) == 0);
}

TEST_CASE("sweep payload") {
  RunConfig c = config_for(Command::Sweep, "builtin:karate");
  CHECK_THROWS_AS(run(c), ConfigError);
  c.thresholds = {0.001, 1.0 / 156.0, 0.05};
  const OutputDocument doc = run(c);
  REQUIRE(doc.payload["levels"].size() == 3);
  CHECK(doc.payload["levels"][1]["count"] == 2);
}

TEST_CASE("evolve payload") {
  RunConfig c = config_for(Command::Evolve, "builtin:three_community");
  c.steps = 15;
  c.starts = {1, 13};
  const OutputDocument doc = run(c);
  REQUIRE(doc.payload["runs"].size() == 2);
  CHECK(doc.payload["runs"][1]["initial"] == 13);
  CHECK(doc.payload["runs"][0]["series"].size() == 16);
  CHECK(doc.payload["runs"][0]["series"][0]["probability"][0] == 1.0);
  c.starts = {22};
  CHECK_THROWS_AS(run(c), ConfigError);
}

TEST_CASE("classical payload") {
  RunConfig c = config_for(Command::Classical, "builtin:karate");
  c.steps = 100;
  const OutputDocument doc = run(c);
  CHECK(doc.payload["relaxation_step"] == 26);
  for (const auto& v : doc.payload["stationary_normalized"]) {
    CHECK(v.get<double>() == round_significant(1.0 / 156.0));
  }
}

TEST_CASE("configuration errors") {
  RunConfig c = config_for(Command::Detect, "builtin:karate");
  c.threshold = -0.5;
  CHECK_THROWS_AS(run(c), ConfigError);
  c.threshold.reset();
  c.dense_cap = 100;
  CHECK_THROWS_AS(run(c), ConfigError);
  c.dense_cap = kDefaultDenseCap;
  c.degeneracy_tolerance = 0.0;
  CHECK_THROWS_AS(run(c), ConfigError);
  CHECK_THROWS_AS(run(config_for(Command::Detect, "edges:/nonexistent/file.edges")), DataError);
}

TEST_CASE("dense cap from the environment") {
  ::unsetenv("ARCWALK_DENSE_CAP");
  CHECK(dense_cap_from_env() == kDefaultDenseCap);
  ::setenv("ARCWALK_DENSE_CAP", "123", 1);
  CHECK(dense_cap_from_env() == 123);
  ::setenv("ARCWALK_DENSE_CAP", "12x", 1);
  CHECK_THROWS_AS(dense_cap_from_env(), ConfigError);
  ::unsetenv("ARCWALK_DENSE_CAP");
}

TEST_CASE("identical configurations render identical bytes") {
  for (Command cmd : {Command::Spectrum, Command::Detect, Command::Average}) {
    RunConfig c = config_for(cmd, "builtin:three_community");
    const std::string a = render(run(c), OutputFormat::Json);
    const std::string b = render(run(c), OutputFormat::Json);
    CHECK(a == b);
    CHECK(Json::parse(a)["payload"] == run(c).payload);
    c.format = OutputFormat::Csv;
    CHECK(render(run(c), OutputFormat::Csv) == render(run(c), OutputFormat::Csv));
  }
}
