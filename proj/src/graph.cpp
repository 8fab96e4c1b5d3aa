#include "arcwalk/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "arcwalk/error.hpp"

namespace arcwalk {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on whitespace, keeping "double quoted" fields (Pajek labels) intact.
std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    if (line[i] == '"') {
      std::size_t close = line.find('"', i + 1);
      if (close == std::string_view::npos) close = line.size();
      out.push_back(line.substr(i + 1, close - i - 1));
      i = close + 1;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_id(std::string_view token, long& value) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string at_line(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

}  // namespace

Graph Graph::from_edges(std::size_t node_count, const std::vector<Edge>& edges,
                        GraphOptions options) {
  if (node_count == 0) throw DataError("graph has no nodes");
  std::vector<std::vector<NodeId>> adjacency(node_count);
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const Edge& e : edges) {
    if (e.a >= node_count || e.b >= node_count) {
      throw DataError("edge (" + std::to_string(e.a + 1) + ", " + std::to_string(e.b + 1) +
                      ") references a node outside 1.." + std::to_string(node_count));
    }
    if (e.a == e.b) throw DataError("self-loop on node " + std::to_string(e.a + 1));
    auto key = std::minmax(e.a, e.b);
    if (!seen.insert({key.first, key.second}).second) {
      throw DataError("duplicate edge (" + std::to_string(key.first + 1) + ", " +
                      std::to_string(key.second + 1) + ")");
    }
    adjacency[e.a].push_back(e.b);
    adjacency[e.b].push_back(e.a);
  }

  Graph g;
  g.offsets_.assign(1, 0);
  for (NodeId i = 0; i < node_count; ++i) {
    auto& nbrs = adjacency[i];
    if (nbrs.empty()) throw DataError("node " + std::to_string(i + 1) + " is isolated");
    std::sort(nbrs.begin(), nbrs.end());
    for (NodeId j : nbrs) {
      g.heads_.push_back(j);
      g.tails_.push_back(i);
    }
    g.offsets_.push_back(g.heads_.size());
  }

  g.reverse_.resize(g.heads_.size());
  for (ArcId a = 0; a < g.heads_.size(); ++a) {
    const NodeId i = g.tails_[a];
    const NodeId j = g.heads_[a];
    auto first = g.heads_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[j]);
    auto last = g.heads_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[j + 1]);
    g.reverse_[a] = static_cast<ArcId>(std::lower_bound(first, last, i) - g.heads_.begin());
  }

  if (options.require_connected && !g.is_connected()) {
    throw DataError("graph is disconnected");
  }
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (NodeId i = 0; i < node_count(); ++i) best = std::max(best, degree(i));
  return best;
}

std::vector<NodeId> Graph::neighbors(NodeId i) const {
  return {heads_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
          heads_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1])};
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (a >= node_count() || b >= node_count()) return false;
  auto first = heads_.begin() + static_cast<std::ptrdiff_t>(offsets_[a]);
  auto last = heads_.begin() + static_cast<std::ptrdiff_t>(offsets_[a + 1]);
  return std::binary_search(first, last, b);
}

ArcId Graph::arc_index(Arc arc) const {
  if (arc.tail >= node_count() || arc.slot >= degree(arc.tail)) {
    throw ConfigError("no arc at node " + std::to_string(arc.tail + 1) + " slot " +
                      std::to_string(arc.slot));
  }
  return offsets_[arc.tail] + arc.slot;
}

Arc Graph::arc_at(ArcId flat) const {
  if (flat >= arc_count()) throw ConfigError("arc index out of range");
  return {tails_[flat], flat - offsets_[tails_[flat]]};
}

bool Graph::is_connected() const {
  std::vector<bool> seen(node_count(), false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (ArcId a = offsets_[u]; a < offsets_[u + 1]; ++a) {
      if (!seen[heads_[a]]) {
        seen[heads_[a]] = true;
        ++reached;
        stack.push_back(heads_[a]);
      }
    }
  }
  return reached == node_count();
}

bool Graph::is_bipartite() const {
  std::vector<int> color(node_count(), -1);
  for (NodeId s = 0; s < node_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<NodeId> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      NodeId u = frontier.front();
      frontier.pop();
      for (ArcId a = offsets_[u]; a < offsets_[u + 1]; ++a) {
        NodeId v = heads_[a];
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          frontier.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

long Graph::betti_number() const {
  if (!is_connected()) throw DataError("Betti number requires a connected graph");
  return static_cast<long>(edge_count()) - static_cast<long>(node_count()) + 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (ArcId a = 0; a < arc_count(); ++a) {
    if (tails_[a] < heads_[a]) out.push_back({tails_[a], heads_[a]});
  }
  return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != node_count()) {
    throw DataError("label count does not match node count");
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

Graph load_edge_list(std::string_view text) {
  std::set<long> ids;
  std::vector<std::pair<long, long>> raw;
  std::map<std::pair<long, long>, std::size_t> first_seen;
  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string_view line = trim(lines[n]);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = tokenize(line);
    long a = 0;
    long b = 0;
    if (tokens.size() == 1 && parse_id(tokens[0], a) && a >= 1) {
      ids.insert(a);
      continue;
    }
    if (tokens.size() != 2 || !parse_id(tokens[0], a) || !parse_id(tokens[1], b) || a < 1 ||
        b < 1) {
      throw DataError(at_line(n + 1) + "expected two positive node ids");
    }
    if (a == b) throw DataError(at_line(n + 1) + "self-loop on node " + std::to_string(a));
    auto key = std::minmax(a, b);
    auto [it, inserted] = first_seen.emplace(std::pair{key.first, key.second}, n + 1);
    if (!inserted) {
      throw DataError(at_line(n + 1) + "duplicate edge (" + std::to_string(key.first) + ", " +
                      std::to_string(key.second) + "), first seen on line " +
                      std::to_string(it->second));
    }
    ids.insert(a);
    ids.insert(b);
    raw.emplace_back(a, b);
  }
  if (ids.empty()) throw DataError("edge list is empty");

  std::map<long, NodeId> compact;
  for (long id : ids) compact.emplace(id, compact.size());
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [a, b] : raw) edges.push_back({compact.at(a), compact.at(b)});
  return Graph::from_edges(compact.size(), edges);
}

Graph load_pajek(std::string_view text) {
  enum class Section { None, Vertices, Edges, EdgesList };
  Section section = Section::None;
  long declared = -1;
  std::vector<std::string> labels;
  std::size_t vertex_lines = 0;
  std::set<std::pair<long, long>> pairs;

  auto add_pair = [&](long a, long b, std::size_t line_no) {
    if (a < 1 || b < 1 || a > declared || b > declared) {
      throw DataError(at_line(line_no) + "vertex id outside 1.." + std::to_string(declared));
    }
    if (a == b) throw DataError(at_line(line_no) + "self-loop on vertex " + std::to_string(a));
    auto key = std::minmax(a, b);
    pairs.insert({key.first, key.second});
  };

  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string_view line = trim(lines[n]);
    if (line.empty() || line.front() == '%') continue;
    const auto tokens = tokenize(line);
    if (line.front() == '*') {
      const std::string keyword = lower(tokens[0]);
      if (keyword == "*vertices") {
        long count = 0;
        if (section != Section::None || tokens.size() < 2 || !parse_id(tokens[1], count) ||
            count < 1) {
          throw DataError(at_line(n + 1) + "malformed *Vertices header");
        }
        declared = count;
        labels.assign(static_cast<std::size_t>(count), std::string{});
        section = Section::Vertices;
      } else if (keyword == "*edges" || keyword == "*arcs") {
        if (declared < 0) throw DataError(at_line(n + 1) + "edge section before *Vertices");
        section = Section::Edges;
      } else if (keyword == "*edgeslist" || keyword == "*arcslist") {
        if (declared < 0) throw DataError(at_line(n + 1) + "edge section before *Vertices");
        section = Section::EdgesList;
      } else {
        throw DataError(at_line(n + 1) + "unsupported Pajek section '" + std::string(tokens[0]) +
                        "'");
      }
      continue;
    }

    long a = 0;
    long b = 0;
    switch (section) {
      case Section::None:
        throw DataError(at_line(n + 1) + "data before *Vertices header");
      case Section::Vertices:
        if (!parse_id(tokens[0], a) || a < 1 || a > declared) {
          throw DataError(at_line(n + 1) + "vertex line id outside 1.." +
                          std::to_string(declared));
        }
        if (tokens.size() > 1) labels[static_cast<std::size_t>(a - 1)] = std::string(tokens[1]);
        ++vertex_lines;
        break;
      case Section::Edges:
        if (tokens.size() < 2 || !parse_id(tokens[0], a) || !parse_id(tokens[1], b)) {
          throw DataError(at_line(n + 1) + "malformed edge line");
        }
        add_pair(a, b, n + 1);
        break;
      case Section::EdgesList:
        if (!parse_id(tokens[0], a)) throw DataError(at_line(n + 1) + "malformed edge list line");
        for (std::size_t t = 1; t < tokens.size(); ++t) {
          if (!parse_id(tokens[t], b)) throw DataError(at_line(n + 1) + "malformed edge list line");
          add_pair(a, b, n + 1);
        }
        break;
    }
  }
  if (declared < 0) throw DataError("missing *Vertices header");
  if (vertex_lines != 0 && vertex_lines != static_cast<std::size_t>(declared)) {
    throw DataError("*Vertices declares " + std::to_string(declared) + " vertices but " +
                    std::to_string(vertex_lines) + " vertex lines follow");
  }

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    edges.push_back({static_cast<NodeId>(a - 1), static_cast<NodeId>(b - 1)});
  }
  Graph g = Graph::from_edges(static_cast<std::size_t>(declared), edges);
  if (vertex_lines != 0) g = g.with_labels(std::move(labels));
  return g;
}

Graph load_edge_list_file(const std::string& path) { return load_edge_list(read_file(path)); }

Graph load_pajek_file(const std::string& path) { return load_pajek(read_file(path)); }

}  // namespace arcwalk
