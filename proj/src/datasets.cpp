#include "arcwalk/datasets.hpp"

#include <array>
#include <charconv>
#include <string>

#include "arcwalk/error.hpp"

namespace arcwalk {

namespace {

constexpr std::array<std::array<int, 2>, 78> kKarateEdges{{
    {1, 2},   {1, 3},   {1, 4},   {1, 5},   {1, 6},   {1, 7},   {1, 8},   {1, 9},
    {1, 11},  {1, 12},  {1, 13},  {1, 14},  {1, 18},  {1, 20},  {1, 22},  {1, 32},
    {2, 3},   {2, 4},   {2, 8},   {2, 14},  {2, 18},  {2, 20},  {2, 22},  {2, 31},
    {3, 4},   {3, 8},   {3, 9},   {3, 10},  {3, 14},  {3, 28},  {3, 29},  {3, 33},
    {4, 8},   {4, 13},  {4, 14},  {5, 7},   {5, 11},  {6, 7},   {6, 11},  {6, 17},
    {7, 17},  {9, 31},  {9, 33},  {9, 34},  {10, 34}, {14, 34}, {15, 33}, {15, 34},
    {16, 33}, {16, 34}, {19, 33}, {19, 34}, {20, 34}, {21, 33}, {21, 34}, {23, 33},
    {23, 34}, {24, 26}, {24, 28}, {24, 30}, {24, 33}, {24, 34}, {25, 26}, {25, 28},
    {25, 32}, {26, 32}, {27, 30}, {27, 34}, {28, 34}, {29, 32}, {29, 34}, {30, 33},
    {30, 34}, {31, 33}, {31, 34}, {32, 33}, {32, 34}, {33, 34},
}};

std::string make_karate_text() {
  std::string text = "# Zachary karate club, 1-indexed\n";
  for (const auto& e : kKarateEdges) {
    text += std::to_string(e[0]) + ' ' + std::to_string(e[1]) + '\n';
  }
  return text;
}

std::size_t parse_size_arg(std::string_view name, std::string_view prefix) {
  // name is "<prefix>(<n>)"
  std::string_view inner = name.substr(prefix.size());
  if (inner.size() < 3 || inner.front() != '(' || inner.back() != ')') {
    throw ConfigError("malformed builtin graph '" + std::string(name) + "'");
  }
  inner = inner.substr(1, inner.size() - 2);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), n);
  if (ec != std::errc() || ptr != inner.data() + inner.size()) {
    throw ConfigError("malformed size in builtin graph '" + std::string(name) + "'");
  }
  return n;
}

}  // namespace

Graph three_community() {
  std::vector<Edge> edges;
  const std::array<std::pair<NodeId, std::array<NodeId, 6>>, 3> groups{{
      {1, {2, 3, 4, 5, 6, 7}},
      {13, {8, 9, 10, 11, 12, 14}},
      {21, {15, 16, 17, 18, 19, 20}},
  }};
  for (const auto& [hub, members] : groups) {
    for (std::size_t m = 0; m < members.size(); ++m) {
      edges.push_back({hub - 1, members[m] - 1});
      edges.push_back({members[m] - 1, members[(m + 1) % members.size()] - 1});
    }
  }
  edges.push_back({0, 12});
  edges.push_back({12, 20});
  edges.push_back({0, 20});
  return Graph::from_edges(21, edges);
}

Graph karate_club() {
  std::vector<Edge> edges;
  edges.reserve(kKarateEdges.size());
  for (const auto& e : kKarateEdges) {
    edges.push_back({static_cast<NodeId>(e[0] - 1), static_cast<NodeId>(e[1] - 1)});
  }
  return Graph::from_edges(34, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ConfigError("cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  if (n < 2) throw ConfigError("path needs at least 2 nodes");
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  if (n < 2) throw ConfigError("complete graph needs at least 2 nodes");
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph::from_edges(n, edges);
}

Graph square_triangle() {
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
}

Graph builtin(std::string_view name) {
  if (name == "three_community") return three_community();
  if (name == "karate") return karate_club();
  if (name == "square_triangle") return square_triangle();
  if (name.starts_with("cycle")) return cycle_graph(parse_size_arg(name, "cycle"));
  if (name.starts_with("path")) return path_graph(parse_size_arg(name, "path"));
  if (name.starts_with("complete")) return complete_graph(parse_size_arg(name, "complete"));
  throw ConfigError("unknown builtin graph '" + std::string(name) + "'");
}

std::string_view karate_edge_list() {
  static const std::string text = make_karate_text();
  return text;
}

}  // namespace arcwalk
