#pragma once

#include <optional>
#include <vector>

#include "arcwalk/graph.hpp"

namespace arcwalk {

/// One push-forward step of the simple random walk:
/// p'(l) = sum over neighbors i of l of p(i) / k_i.
std::vector<double> classical_step(const Graph& graph, const std::vector<double>& dist);

/// k_l / D. Throws DataError on a disconnected graph.
std::vector<double> stationary(const Graph& graph);

/// Half the L1 distance.
double total_variation(const std::vector<double>& a, const std::vector<double>& b);

inline constexpr double kRelaxationThreshold = 0.01;

struct RelaxationTrace {
  std::vector<std::vector<double>> distributions;  // t = 1..T
  std::vector<double> distance;                    // TV to stationary, t = 1..T
  std::optional<std::size_t> relaxation_step;      // first t with TV < 0.01
};

RelaxationTrace relaxation_trace(const Graph& graph, NodeId start, std::size_t steps);

}  // namespace arcwalk
