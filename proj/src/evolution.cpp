#include "arcwalk/evolution.hpp"

#include <algorithm>
#include <string>

#include "arcwalk/error.hpp"
#include "arcwalk/parallel.hpp"

namespace arcwalk {

namespace {

void check_node(const Graph& graph, NodeId node) {
  if (node >= graph.node_count()) {
    throw ConfigError("node " + std::to_string(node + 1) + " is outside 1.." +
                      std::to_string(graph.node_count()));
  }
}

void accumulate_node_probability(const Graph& graph, const std::vector<Complex>& amps,
                                 double weight, std::vector<double>& acc) {
  const auto& offsets = graph.offsets();
  for (NodeId l = 0; l < graph.node_count(); ++l) {
    double p = 0.0;
    for (ArcId a = offsets[l]; a < offsets[l + 1]; ++a) p += std::norm(amps[a]);
    acc[l] += weight * p;
  }
}

void fill_normalized(const Graph& graph, TransitionRow& row) {
  row.normalized.resize(row.probability.size());
  for (NodeId l = 0; l < graph.node_count(); ++l) {
    row.normalized[l] = row.probability[l] / static_cast<double>(graph.degree(l));
  }
}

// Evolves the k_i basis states of `initial` for `last` steps and calls
// visit(t, p) with the arc-averaged node probabilities for every t.
template <class Visit>
void evolve_from_node(const WalkOperator& op, NodeId initial, std::size_t last, Visit&& visit) {
  const Graph& g = op.graph();
  check_node(g, initial);
  const std::size_t k = g.degree(initial);
  const double weight = 1.0 / static_cast<double>(k);
  const std::size_t dim = op.dimension();

  std::vector<std::vector<Complex>> states(k, std::vector<Complex>(dim));
  for (std::size_t s = 0; s < k; ++s) states[s][g.offset(initial) + s] = 1.0;
  std::vector<Complex> scratch(dim);
  std::vector<double> p(g.node_count());

  for (std::size_t t = 0;; ++t) {
    std::fill(p.begin(), p.end(), 0.0);
    for (const auto& amps : states) accumulate_node_probability(g, amps, weight, p);
    visit(t, p);
    if (t == last) break;
    for (auto& amps : states) {
      op.apply(amps, scratch);
      amps.swap(scratch);
    }
  }
}

}  // namespace

WalkState basis_state(const Graph& graph, NodeId node, std::size_t slot) {
  check_node(graph, node);
  WalkState state{std::vector<Complex>(graph.arc_count()), 0};
  state.amplitudes[graph.arc_index({node, slot})] = 1.0;
  return state;
}

std::vector<double> node_probability(const Graph& graph, const WalkState& state) {
  if (state.dimension() != graph.arc_count()) {
    throw ConfigError("state dimension does not match the graph's arc count");
  }
  std::vector<double> p(graph.node_count(), 0.0);
  accumulate_node_probability(graph, state.amplitudes, 1.0, p);
  return p;
}

TransitionRow transition_probability(const WalkOperator& op, NodeId initial, std::size_t t) {
  TransitionRow row{initial, t, {}, {}};
  evolve_from_node(op, initial, t, [&](std::size_t step, const std::vector<double>& p) {
    if (step == t) row.probability = p;
  });
  fill_normalized(op.graph(), row);
  return row;
}

std::vector<TransitionRow> transition_series(const WalkOperator& op, NodeId initial,
                                             std::size_t last) {
  std::vector<TransitionRow> rows;
  rows.reserve(last + 1);
  evolve_from_node(op, initial, last, [&](std::size_t step, const std::vector<double>& p) {
    TransitionRow row{initial, step, p, {}};
    fill_normalized(op.graph(), row);
    rows.push_back(std::move(row));
  });
  return rows;
}

TransitionRow finite_time_average(const WalkOperator& op, NodeId initial,
                                  AveragingWindow window) {
  if (window.steps < 1) throw ConfigError("averaging window needs at least one step");
  const Graph& g = op.graph();
  TransitionRow row{initial, window.steps, std::vector<double>(g.node_count(), 0.0), {}};
  const std::size_t samples = window.steps + (window.include_initial ? 1 : 0);
  evolve_from_node(op, initial, window.steps, [&](std::size_t step, const std::vector<double>& p) {
    if (step == 0 && !window.include_initial) return;
    for (NodeId l = 0; l < g.node_count(); ++l) row.probability[l] += p[l];
  });
  for (double& v : row.probability) v /= static_cast<double>(samples);
  fill_normalized(g, row);
  return row;
}

TransitionMatrix finite_time_average_matrix(const WalkOperator& op, AveragingWindow window) {
  const auto n = static_cast<Eigen::Index>(op.graph().node_count());
  TransitionMatrix m{Eigen::MatrixXd(n, n), Eigen::MatrixXd(n, n)};
  std::vector<TransitionRow> rows(static_cast<std::size_t>(n));
  parallel_for(rows.size(), [&](std::size_t i) { rows[i] = finite_time_average(op, i, window); });
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index l = 0; l < n; ++l) {
      m.probability(i, l) = rows[static_cast<std::size_t>(i)].probability[static_cast<std::size_t>(l)];
      m.normalized(i, l) = rows[static_cast<std::size_t>(i)].normalized[static_cast<std::size_t>(l)];
    }
  }
  return m;
}

}  // namespace arcwalk
