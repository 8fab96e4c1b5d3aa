#pragma once

#include <string_view>

#include "arcwalk/graph.hpp"

namespace arcwalk {

/// Three 7-node communities {1-7}, {8-14}, {15-21}. Each hub (1, 13, 21)
/// is joined to the six other members, the members form a 6-cycle in
/// ascending id order, and the hubs form a triangle. N = 21, 39 edges.
Graph three_community();

/// Zachary's karate club, 34 nodes and 78 edges.
Graph karate_club();

Graph cycle_graph(std::size_t n);     // n >= 3
Graph path_graph(std::size_t n);      // n >= 2
Graph complete_graph(std::size_t n);  // n >= 2

/// A square 1-2-3-4 and a triangle 1-2-5 sharing the edge 1-2.
Graph square_triangle();

/// Resolves "three_community", "karate", "square_triangle", "cycle(n)",
/// "path(n)" and "complete(n)". Throws ConfigError for anything else.
Graph builtin(std::string_view name);

/// Edge list of the karate club in the on-disk format.
std::string_view karate_edge_list();

}  // namespace arcwalk
