#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arcwalk {

using NodeId = std::size_t;  // 0-based internally; 1-based at every I/O boundary
using ArcId = std::size_t;

/// Directed arc i -> adjacency(i)[slot].
struct Arc {
  NodeId tail = 0;
  std::size_t slot = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Edge {
  NodeId a = 0;
  NodeId b = 0;
};

struct GraphOptions {
  // Disconnected graphs are refused unless explicitly allowed; only the
  // connectivity-checking operations themselves need them.
  bool require_connected = true;
};

/// Undirected simple graph in the directed-arc basis.
///
/// Arcs are stored in CSR order: the arcs leaving node i occupy the flat
/// range [offset(i), offset(i) + degree(i)), ordered by ascending neighbor
/// id. This ordering fixes the coin basis and therefore the dynamics.
/// Immutable after construction.
class Graph {
 public:
  /// Builds from 0-based edges. Throws DataError on self-loops, duplicate
  /// edges, out-of-range ids, isolated nodes, or (by default) disconnection.
  static Graph from_edges(std::size_t node_count, const std::vector<Edge>& edges,
                          GraphOptions options = {});

  std::size_t node_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return heads_.size() / 2; }
  /// Arc dimension D = sum of degrees.
  std::size_t arc_count() const { return heads_.size(); }

  std::size_t degree(NodeId i) const { return offsets_[i + 1] - offsets_[i]; }
  std::size_t max_degree() const;
  ArcId offset(NodeId i) const { return offsets_[i]; }
  const std::vector<ArcId>& offsets() const { return offsets_; }

  /// Sorted neighbor ids of node i.
  std::vector<NodeId> neighbors(NodeId i) const;
  NodeId neighbor(NodeId i, std::size_t slot) const { return heads_[offsets_[i] + slot]; }
  bool has_edge(NodeId a, NodeId b) const;

  ArcId arc_index(Arc arc) const;
  Arc arc_at(ArcId flat) const;
  NodeId tail(ArcId flat) const { return tails_[flat]; }
  NodeId head(ArcId flat) const { return heads_[flat]; }
  /// Flat index of the opposite arc j -> i.
  ArcId reverse(ArcId flat) const { return reverse_[flat]; }
  const std::vector<ArcId>& reverse_map() const { return reverse_; }

  bool is_connected() const;
  bool is_bipartite() const;
  /// |E| - |V| + 1. Throws DataError for disconnected graphs.
  long betti_number() const;

  std::vector<Edge> edges() const;

  /// Optional per-node labels (e.g. airport codes from a Pajek file).
  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

 private:
  Graph() = default;

  std::vector<ArcId> offsets_{0};
  std::vector<NodeId> heads_;
  std::vector<NodeId> tails_;
  std::vector<ArcId> reverse_;
  std::vector<std::string> labels_;
};

/// Parses a whitespace-separated "i j" edge list with 1-based ids. Lines
/// starting with '#' are comments. A line holding a single id declares a
/// node; a declared node that never gets an edge is rejected as isolated.
/// Ids are compacted to 1..N in ascending order.
Graph load_edge_list(std::string_view text);

/// Parses a Pajek network ("*Vertices n" then "*Edges" / "*Arcs").
/// Weights are discarded and arcs are symmetrized.
Graph load_pajek(std::string_view text);

Graph load_edge_list_file(const std::string& path);
Graph load_pajek_file(const std::string& path);

}  // namespace arcwalk
