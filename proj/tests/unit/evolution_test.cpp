#include <cmath>
#include <numeric>

#include "arcwalk/datasets.hpp"
#include "arcwalk/error.hpp"
#include "arcwalk/evolution.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace arcwalk;

namespace {

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST_CASE("basis states") {
  const Graph k = karate_club();
  const WalkState s = basis_state(k, 0, 0);
  CHECK(s.time == 0);
  CHECK(s.norm() == doctest::Approx(1.0));
  const auto p = node_probability(k, s);
  CHECK(p[0] == 1.0);
  CHECK(sum(p) == 1.0);

  const Graph t = three_community();
  const auto p13 = node_probability(t, basis_state(t, 12, 2));
  CHECK(p13[12] == 1.0);
  CHECK(sum(p13) == 1.0);

  CHECK_THROWS_AS(basis_state(k, 34, 0), ConfigError);
  CHECK_THROWS_AS(basis_state(k, 0, 16), ConfigError);
}

TEST_CASE("uniform amplitude gives degree-proportional probability") {
  const Graph g = three_community();
  const double a = 1.0 / std::sqrt(static_cast<double>(g.arc_count()));
  const WalkState s{std::vector<Complex>(g.arc_count(), Complex(a, 0.0)), 0};
  const auto p = node_probability(g, s);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    CHECK(p[i] == doctest::Approx(static_cast<double>(g.degree(i)) / 78.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(node_probability(g, WalkState{std::vector<Complex>(3), 0}), ConfigError);
}

TEST_CASE("one fourier step on the triangle") {
  const WalkOperator op(cycle_graph(3), CoinKind::Fourier);
  const WalkState s = op.apply(basis_state(op.graph(), 0, 0));
  const auto p = node_probability(op.graph(), s);
  CHECK(std::abs(p[0]) < 1e-15);
  CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(p[2] == doctest::Approx(0.5).epsilon(1e-14));

  const Eigen::MatrixXcd u = oracle::dense_walk(op.graph(), true);
  for (ArcId a = 0; a < 6; ++a) CHECK(std::abs(s.amplitudes[a] - u(static_cast<Eigen::Index>(a), 0)) < 1e-15);
}

TEST_CASE("t = 0 is the identity") {
  const WalkOperator op(karate_club(), CoinKind::Fourier);
  const TransitionRow r = transition_probability(op, 5, 0);
  for (NodeId l = 0; l < 34; ++l) CHECK(r.probability[l] == (l == 5 ? 1.0 : 0.0));
}

TEST_CASE("transition probability matches dense powers") {
  for (CoinKind coin : {CoinKind::Grover, CoinKind::Fourier}) {
    for (const Graph& g : {cycle_graph(4), square_triangle(), three_community()}) {
      const WalkOperator op(g, coin);
      for (std::size_t t : {1u, 2u, 3u, 7u}) {
        const TransitionRow r = transition_probability(op, 0, t);
        const auto expected = oracle::transition_row(g, coin == CoinKind::Fourier, 0, t);
        for (NodeId l = 0; l < g.node_count(); ++l) CHECK(std::abs(r.probability[l] - expected[l]) < 1e-12);
      }
    }
  }
}

TEST_CASE("series rows agree with single-time rows and conserve probability") {
  const WalkOperator op(three_community(), CoinKind::Fourier);
  const auto series = transition_series(op, 0, 15);
  REQUIRE(series.size() == 16);
  for (std::size_t t = 0; t <= 15; ++t) {
    CHECK(series[t].time == t);
    CHECK(std::abs(sum(series[t].probability) - 1.0) < 1e-12);
    const TransitionRow single = transition_probability(op, 0, t);
    for (NodeId l = 0; l < 21; ++l) CHECK(series[t].probability[l] == single.probability[l]);
  }
}

TEST_CASE("fourier walk from node 1 stays mostly in its community") {
  const WalkOperator op(three_community(), CoinKind::Fourier);
  for (const TransitionRow& r : transition_series(op, 0, 15)) {
    double inside = 0.0;
    for (NodeId l = 0; l < 7; ++l) inside += r.probability[l];
    CHECK(inside > 0.5);
  }
}

TEST_CASE("normalized rows divide by target degree") {
  const WalkOperator op(karate_club(), CoinKind::Grover);
  const TransitionRow r = transition_probability(op, 33, 4);
  for (NodeId l = 0; l < 34; ++l) {
    CHECK(r.normalized[l] == r.probability[l] / static_cast<double>(op.graph().degree(l)));
  }
}

TEST_CASE("norm drift over 1000 steps on every builtin") {
  for (const Graph& g : {three_community(), karate_club(), square_triangle(), cycle_graph(9),
                         path_graph(4), complete_graph(6)}) {
    for (CoinKind coin : {CoinKind::Fourier, CoinKind::Grover}) {
      const WalkOperator op(g, coin);
      WalkState s = basis_state(g, 0, 0);
      for (int t = 0; t < 1000; ++t) s = op.apply(s);
      CHECK(std::abs(s.norm() - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("light cone on a long cycle") {
  const WalkOperator op(cycle_graph(51), CoinKind::Fourier);
  const NodeId start = 25;
  for (const TransitionRow& r : transition_series(op, start, 24)) {
    for (NodeId l = 0; l < 51; ++l) {
      const std::size_t distance = l > start ? l - start : start - l;
      if (distance > r.time) CHECK(r.probability[l] == 0.0);
    }
  }
}

TEST_CASE("two-node averages") {
  for (CoinKind coin : {CoinKind::Fourier, CoinKind::Grover}) {
    const WalkOperator op(path_graph(2), coin);
    const TransitionRow a = finite_time_average(op, 0, {2, false});
    CHECK(a.time == 2);
    CHECK(a.probability[0] == 0.5);
    CHECK(a.probability[1] == 0.5);
    const TransitionRow b = finite_time_average(op, 0, {2, true});
    CHECK(b.probability[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(b.probability[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  }
  CHECK_THROWS_AS(finite_time_average(WalkOperator(path_graph(2), CoinKind::Grover), 0, {0, false}),
                  ConfigError);
}

TEST_CASE("finite-time average equals mean of the series") {
  const WalkOperator op(square_triangle(), CoinKind::Fourier);
  const auto series = transition_series(op, 2, 30);
  const TransitionRow avg = finite_time_average(op, 2, {30, false});
  for (NodeId l = 0; l < 5; ++l) {
    double m = 0.0;
    for (std::size_t t = 1; t <= 30; ++t) m += series[t].probability[l];
    CHECK(avg.probability[l] == doctest::Approx(m / 30.0).epsilon(1e-13));
  }
}

TEST_CASE("finite-time matrix rows match single rows and are deterministic") {
  const WalkOperator op(three_community(), CoinKind::Fourier);
  const TransitionMatrix m = finite_time_average_matrix(op);
  const TransitionMatrix again = finite_time_average_matrix(op);
  CHECK(m.normalized == again.normalized);
  for (NodeId i : {0u, 7u, 20u}) {
    const TransitionRow r = finite_time_average(op, i);
    for (NodeId l = 0; l < 21; ++l) {
      CHECK(m.probability(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l)) == r.probability[l]);
    }
  }
  for (Eigen::Index i = 0; i < 21; ++i) CHECK(std::abs(m.probability.row(i).sum() - 1.0) < 1e-10);
}
