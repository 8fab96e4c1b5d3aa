#include "arcwalk/community.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "arcwalk/error.hpp"
#include "arcwalk/parallel.hpp"

namespace arcwalk {

namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

}  // namespace

std::vector<std::vector<NodeId>> CommunityPartition::members() const {
  std::vector<std::vector<NodeId>> out(hubs.size());
  for (NodeId l = 0; l < assignment.size(); ++l) out[assignment[l]].push_back(l);
  return out;
}

std::vector<std::size_t> CommunityPartition::sizes() const {
  std::vector<std::size_t> out(hubs.size(), 0);
  for (std::size_t c : assignment) ++out[c];
  return out;
}

std::vector<NodeId> hub_candidates(const Graph& graph) {
  std::vector<NodeId> order(graph.node_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return graph.degree(a) > graph.degree(b);
  });
  return order;
}

CommunityPartition detect(const Eigen::MatrixXd& normalized, const Graph& graph, double q,
                          std::string source) {
  const std::size_t n = graph.node_count();
  if (n == 0) throw ConfigError("cannot detect communities on an empty graph");
  if (!(q > 0.0) || !std::isfinite(q)) throw ConfigError("threshold q must be positive");
  if (normalized.rows() != static_cast<Eigen::Index>(n) ||
      normalized.cols() != static_cast<Eigen::Index>(n)) {
    throw ConfigError("averaged matrix must be N x N");
  }

  CommunityPartition part;
  part.threshold = q;
  part.source = std::move(source);
  part.assignment.assign(n, kUnassigned);
  std::size_t remaining = n;

  for (NodeId candidate : hub_candidates(graph)) {
    if (remaining == 0) break;
    std::size_t community = part.assignment[candidate];
    if (community == kUnassigned) {
      community = part.hubs.size();
      part.hubs.push_back(candidate);
      part.assignment[candidate] = community;
      --remaining;
    }
    const auto row = static_cast<Eigen::Index>(candidate);
    for (NodeId l = 0; l < n; ++l) {
      if (part.assignment[l] == kUnassigned && normalized(row, static_cast<Eigen::Index>(l)) > q) {
        part.assignment[l] = community;
        --remaining;
      }
    }
  }

  part.margin.resize(n);
  for (NodeId l = 0; l < n; ++l) {
    const NodeId hub = part.hubs[part.assignment[l]];
    part.margin[l] = normalized(static_cast<Eigen::Index>(hub), static_cast<Eigen::Index>(l)) - q;
  }
  return part;
}

SweepResult sweep(const Eigen::MatrixXd& normalized, const Graph& graph,
                  std::span<const double> thresholds) {
  if (thresholds.empty()) throw ConfigError("threshold sweep needs at least one q");
  if (!std::is_sorted(thresholds.begin(), thresholds.end())) {
    throw ConfigError("threshold sweep values must be ascending");
  }
  SweepResult result;
  result.levels.resize(thresholds.size());
  parallel_for(thresholds.size(), [&](std::size_t r) {
    const CommunityPartition part = detect(normalized, graph, thresholds[r]);
    result.levels[r] = SweepLevel{thresholds[r], part.community_count(), part.sizes()};
  });
  return result;
}

std::vector<MarginEntry> margin_report(const CommunityPartition& partition,
                                       const Eigen::MatrixXd& normalized, double band) {
  std::vector<MarginEntry> out;
  const double q = partition.threshold;
  for (NodeId l = 0; l < partition.assignment.size(); ++l) {
    for (std::size_t c = 0; c < partition.hubs.size(); ++c) {
      const NodeId hub = partition.hubs[c];
      const double margin =
          normalized(static_cast<Eigen::Index>(hub), static_cast<Eigen::Index>(l)) - q;
      out.push_back({l, hub, margin, partition.assignment[l] == c, std::abs(margin) < band * q});
    }
  }
  return out;
}

}  // namespace arcwalk
