#include "arcwalk/classical.hpp"

#include <cmath>
#include <string>

#include "arcwalk/error.hpp"

namespace arcwalk {

std::vector<double> classical_step(const Graph& graph, const std::vector<double>& dist) {
  if (dist.size() != graph.node_count()) {
    throw ConfigError("distribution has " + std::to_string(dist.size()) + " entries, graph has " +
                      std::to_string(graph.node_count()) + " nodes");
  }
  std::vector<double> next(dist.size(), 0.0);
  for (NodeId i = 0; i < graph.node_count(); ++i) {
    const double share = dist[i] / static_cast<double>(graph.degree(i));
    for (ArcId a = graph.offset(i); a < graph.offset(i + 1); ++a) next[graph.head(a)] += share;
  }
  return next;
}

std::vector<double> stationary(const Graph& graph) {
  if (!graph.is_connected()) throw DataError("stationary distribution needs a connected graph");
  std::vector<double> p(graph.node_count());
  const auto d = static_cast<double>(graph.arc_count());
  for (NodeId l = 0; l < graph.node_count(); ++l) p[l] = static_cast<double>(graph.degree(l)) / d;
  return p;
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return 0.5 * sum;
}

RelaxationTrace relaxation_trace(const Graph& graph, NodeId start, std::size_t steps) {
  if (steps < 1) throw ConfigError("relaxation trace needs at least one step");
  if (start >= graph.node_count()) throw ConfigError("start node outside the graph");
  const std::vector<double> target = stationary(graph);
  RelaxationTrace trace;
  std::vector<double> p(graph.node_count(), 0.0);
  p[start] = 1.0;
  for (std::size_t t = 1; t <= steps; ++t) {
    p = classical_step(graph, p);
    const double tv = total_variation(p, target);
    if (!trace.relaxation_step && tv < kRelaxationThreshold) trace.relaxation_step = t;
    trace.distributions.push_back(p);
    trace.distance.push_back(tv);
  }
  return trace;
}

}  // namespace arcwalk
