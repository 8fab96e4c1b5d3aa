#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "arcwalk/graph.hpp"

namespace arcwalk {

/// Result of threshold detection. Community c is seeded by hubs[c];
/// communities are numbered in the order their hubs were processed.
struct CommunityPartition {
  std::vector<NodeId> hubs;
  std::vector<std::size_t> assignment;  // node -> community
  std::vector<double> margin;           // P(hub of own community -> node) - q
  double threshold = 0.0;
  std::string source;

  std::size_t community_count() const { return hubs.size(); }
  std::vector<std::vector<NodeId>> members() const;
  std::vector<std::size_t> sizes() const;
};

/// Nodes by descending degree, ties by ascending id.
std::vector<NodeId> hub_candidates(const Graph& graph);

/// Threshold detection on an N x N averaged normalized matrix (row = start).
///
/// Candidates are visited by hub_candidates order. An unclassified
/// candidate opens a new community and claims every unclassified l with
/// P(i -> l) > q. A candidate that was already claimed instead adds the
/// unclassified nodes above threshold to the community it belongs to.
/// Stops once every node is classified; a node that clears no threshold
/// ends up as the hub of its own singleton community.
CommunityPartition detect(const Eigen::MatrixXd& normalized, const Graph& graph, double q,
                          std::string source = {});

struct SweepLevel {
  double threshold = 0.0;
  std::size_t count = 0;
  std::vector<std::size_t> sizes;
};

struct SweepResult {
  std::vector<SweepLevel> levels;
};

/// detect for every q in ascending `thresholds`; levels run in parallel.
SweepResult sweep(const Eigen::MatrixXd& normalized, const Graph& graph,
                  std::span<const double> thresholds);

inline constexpr double kDefaultMarginalBand = 0.1;

struct MarginEntry {
  NodeId node = 0;
  NodeId hub = 0;
  double margin = 0.0;   // P(hub -> node) - q
  bool member = false;   // node belongs to this hub's community
  bool marginal = false; // |margin| < band * q
};

/// Margin of every node against every hub of the partition.
std::vector<MarginEntry> margin_report(const CommunityPartition& partition,
                                       const Eigen::MatrixXd& normalized,
                                       double band = kDefaultMarginalBand);

}  // namespace arcwalk
