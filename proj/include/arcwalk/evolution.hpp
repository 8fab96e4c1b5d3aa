#pragma once

#include <Eigen/Dense>
#include <vector>

#include "arcwalk/operators.hpp"
#include "arcwalk/state.hpp"

namespace arcwalk {

/// Unit amplitude on the arc (node, slot), t = 0.
WalkState basis_state(const Graph& graph, NodeId node, std::size_t slot);

/// p(i) = sum over the outgoing arcs of i of |psi|^2.
std::vector<double> node_probability(const Graph& graph, const WalkState& state);

/// Transition probabilities from one initial node, averaged over its
/// k_i initial arcs, plus the target-degree normalized form P = p / k_l.
/// For time averages, `time` holds the window length T.
struct TransitionRow {
  NodeId initial = 0;
  std::size_t time = 0;
  std::vector<double> probability;
  std::vector<double> normalized;
};

/// Full N x N matrices; row = initial node, column = target node.
struct TransitionMatrix {
  Eigen::MatrixXd probability;
  Eigen::MatrixXd normalized;
};

TransitionRow transition_probability(const WalkOperator& op, NodeId initial, std::size_t t);

/// Rows for t = 0..last, sharing one set of k_i forward evolutions.
std::vector<TransitionRow> transition_series(const WalkOperator& op, NodeId initial,
                                             std::size_t last);

inline constexpr std::size_t kDefaultAverageSteps = 100;

struct AveragingWindow {
  std::size_t steps = kDefaultAverageSteps;
  bool include_initial = false;  // average over t = 0..T instead of t = 1..T
};

/// Arithmetic mean of p(i->l; t) and P(i->l; t) over the window.
TransitionRow finite_time_average(const WalkOperator& op, NodeId initial,
                                  AveragingWindow window = {});

/// finite_time_average for every initial node. Rows are computed
/// independently and in parallel.
TransitionMatrix finite_time_average_matrix(const WalkOperator& op, AveragingWindow window = {});

}  // namespace arcwalk
