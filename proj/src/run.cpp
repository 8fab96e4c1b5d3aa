#include "arcwalk/run.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numbers>
#include <numeric>

#include "arcwalk/classical.hpp"
#include "arcwalk/datasets.hpp"
#include "arcwalk/error.hpp"
#include "arcwalk/evolution.hpp"

namespace arcwalk {

namespace {

struct Averages {
  TransitionMatrix matrix;
  std::string source;
};

std::vector<std::size_t> one_based(std::size_t n) {
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{1});
  return ids;
}

NodeId to_internal(const Graph& g, NodeId one_based_id) {
  if (one_based_id < 1 || one_based_id > g.node_count()) {
    throw ConfigError("node " + std::to_string(one_based_id) + " is outside 1.." +
                      std::to_string(g.node_count()));
  }
  return one_based_id - 1;
}

std::vector<NodeId> starts_or(const RunConfig& config, const Graph& g, NodeId fallback) {
  std::vector<NodeId> out;
  if (config.starts.empty()) out.push_back(fallback);
  for (NodeId id : config.starts) out.push_back(to_internal(g, id));
  return out;
}

SpectralDecomposition spectral_decomposition(const WalkOperator& op, const RunConfig& config) {
  DecomposeOptions options;
  options.degeneracy_tolerance = config.degeneracy_tolerance;
  return decompose(materialize_dense(op, config.dense_cap), options);
}

AverageMode resolve_mode(AverageMode mode, const Graph& g) {
  if (mode != AverageMode::Auto) return mode;
  return g.arc_count() <= kAutoInfiniteLimit ? AverageMode::Infinite : AverageMode::Finite;
}

Averages compute_averages(const WalkOperator& op, const RunConfig& config) {
  if (resolve_mode(config.mode, op.graph()) == AverageMode::Infinite) {
    const SpectralDecomposition dec = spectral_decomposition(op, config);
    return {infinite_time_average_matrix(dec, op.graph()), "infinite-time"};
  }
  AveragingWindow window{config.steps, config.include_initial};
  return {finite_time_average_matrix(op, window),
          "finite-time(T=" + std::to_string(config.steps) +
              (config.include_initial ? ",t0" : "") + ")"};
}

double resolve_threshold(const RunConfig& config, const Graph& g) {
  if (!config.threshold) return 1.0 / static_cast<double>(g.arc_count());
  if (!(*config.threshold > 0.0)) throw ConfigError("threshold q must be positive");
  return *config.threshold;
}

Json graph_metadata(const RunConfig& config, const Graph& g) {
  return Json{{"source", config.graph.to_string()},
              {"nodes", g.node_count()},
              {"arcs", g.arc_count()},
              {"edges", g.edge_count()},
              {"betti", g.betti_number()},
              {"bipartite", g.is_bipartite()}};
}

Json parameters(const RunConfig& config, const Graph& g) {
  Json p{{"steps", config.steps},
         {"include_initial", config.include_initial},
         {"dense_cap", config.dense_cap},
         {"degeneracy_tolerance", config.degeneracy_tolerance}};
  switch (config.command) {
    case Command::Average:
    case Command::Detect:
    case Command::Sweep:
      p["mode"] = std::string(to_string(resolve_mode(config.mode, g)));
      break;
    default:
      break;
  }
  if (config.command == Command::Detect) {
    p["threshold"] = round_significant(resolve_threshold(config, g));
    p["threshold_rule"] = config.threshold ? "explicit" : "auto (1/D)";
    p["marginal_band"] = config.marginal_band;
  }
  if (config.command == Command::Spectrum) p["bins"] = config.bins;
  if (!config.starts.empty()) p["starts"] = config.starts;
  return p;
}

OutputDocument evolve(const RunConfig& config, const WalkOperator& op) {
  OutputDocument doc;
  Json runs = Json::array();
  const Graph& g = op.graph();
  for (NodeId start : starts_or(config, g, 0)) {
    const auto series = transition_series(op, start, config.steps);
    Json frames = Json::array();
    Eigen::MatrixXd heat(static_cast<Eigen::Index>(series.size()),
                         static_cast<Eigen::Index>(g.node_count()));
    for (const TransitionRow& row : series) {
      frames.push_back(Json{{"t", row.time},
                            {"probability", number_array(row.probability)},
                            {"normalized", number_array(row.normalized)}});
      for (NodeId l = 0; l < g.node_count(); ++l) {
        heat(static_cast<Eigen::Index>(row.time), static_cast<Eigen::Index>(l)) = row.normalized[l];
      }
    }
    runs.push_back(Json{{"initial", start + 1}, {"series", frames}});
    if (doc.csv.empty()) {
      std::vector<std::size_t> times(series.size());
      std::iota(times.begin(), times.end(), std::size_t{0});
      doc.csv = emit_heatmap_csv(heat, times, one_based(g.node_count()), "t");
    }
  }
  doc.payload = Json{{"runs", runs}};
  return doc;
}

OutputDocument average(const RunConfig& config, const WalkOperator& op) {
  const Averages avg = compute_averages(op, config);
  OutputDocument doc;
  doc.payload = Json{{"source", avg.source},
                     {"probability", matrix_json(avg.matrix.probability)},
                     {"normalized", matrix_json(avg.matrix.normalized)}};
  doc.csv = emit_heatmap_csv(avg.matrix.normalized);
  return doc;
}

OutputDocument spectrum(const RunConfig& config, const WalkOperator& op) {
  const Graph& g = op.graph();
  const SpectralDecomposition dec = spectral_decomposition(op, config);
  const DegeneracyReport report = degeneracy_report(dec, g);
  const std::vector<double> iprs = ipr(dec, g);
  const auto hist = argument_histogram(dec, config.bins);

  OutputDocument doc;
  Json eigen = Json::array();
  doc.csv = "mu,re,im,arg,ipr";
  for (std::size_t mu = 0; mu < dec.dimension(); ++mu) {
    const Complex lambda = dec.eigenvalues(static_cast<Eigen::Index>(mu));
    const double theta = dec.group_argument(dec.group_of[mu]);
    eigen.push_back(Json{{"mu", mu + 1},
                         {"re", round_significant(lambda.real())},
                         {"im", round_significant(lambda.imag())},
                         {"arg", round_significant(theta)},
                         {"group", dec.group_of[mu] + 1},
                         {"ipr", round_significant(iprs[mu])}});
    doc.csv += "\n" + std::to_string(mu + 1) + "," + format_number(lambda.real()) + "," +
               format_number(lambda.imag()) + "," + format_number(theta) + "," +
               format_number(iprs[mu]);
  }
  Json degenerate = Json::array();
  for (const auto& [value, count] : report.multiplicities) {
    if (count < 2) continue;
    degenerate.push_back(Json{{"re", round_significant(value.real())},
                              {"im", round_significant(value.imag())},
                              {"arg", round_significant(value == Complex(-1.0, 0.0)
                                                            ? -std::numbers::pi
                                                            : std::arg(value))},
                              {"multiplicity", count}});
  }
  const double mean_ipr =
      std::accumulate(iprs.begin(), iprs.end(), 0.0) / static_cast<double>(iprs.size());
  doc.payload = Json{
      {"eigenvalues", eigen},
      {"degeneracy",
       Json{{"groups", dec.groups.size()},
            {"largest_multiplicity", report.largest_multiplicity()},
            {"degenerate", degenerate},
            {"plus_one", report.plus_one},
            {"minus_one", report.minus_one},
            {"predicted_plus_one", report.predicted_plus_one},
            {"predicted_minus_one", report.predicted_minus_one},
            {"matches_prediction", report.matches_prediction()}}},
      {"histogram", Json{{"bins", config.bins}, {"counts", hist}}},
      {"ipr_mean", round_significant(mean_ipr)}};
  return doc;
}

OutputDocument detect_command(const RunConfig& config, const WalkOperator& op) {
  const Graph& g = op.graph();
  const Averages avg = compute_averages(op, config);
  const double q = resolve_threshold(config, g);
  const CommunityPartition part = detect(avg.matrix.normalized, g, q, avg.source);
  const auto margins = margin_report(part, avg.matrix.normalized, config.marginal_band);

  Json hubs = Json::array();
  for (NodeId h : part.hubs) hubs.push_back(h + 1);
  Json communities = Json::array();
  const auto members = part.members();
  for (std::size_t c = 0; c < part.community_count(); ++c) {
    Json ids = Json::array();
    for (NodeId l : members[c]) ids.push_back(l + 1);
    communities.push_back(
        Json{{"hub", part.hubs[c] + 1}, {"size", members[c].size()}, {"members", ids}});
  }
  Json nodes = Json::array();
  Json marginal = Json::array();
  OutputDocument doc;
  doc.csv = "node,community,hub,margin,marginal";
  for (NodeId l = 0; l < g.node_count(); ++l) {
    const std::size_t c = part.assignment[l];
    bool flagged = false;
    for (const MarginEntry& e : margins) {
      if (e.node != l || !e.marginal) continue;
      flagged = true;
      marginal.push_back(Json{{"node", l + 1},
                              {"hub", e.hub + 1},
                              {"margin", round_significant(e.margin)},
                              {"member", e.member}});
    }
    nodes.push_back(Json{{"node", l + 1},
                         {"community", c + 1},
                         {"hub", part.hubs[c] + 1},
                         {"margin", round_significant(part.margin[l])},
                         {"marginal", flagged}});
    doc.csv += "\n" + std::to_string(l + 1) + "," + std::to_string(c + 1) + "," +
               std::to_string(part.hubs[c] + 1) + "," + format_number(part.margin[l]) + "," +
               (flagged ? "true" : "false");
  }
  doc.payload = Json{{"source", avg.source},
                     {"threshold", round_significant(q)},
                     {"hubs", hubs},
                     {"communities", communities},
                     {"nodes", nodes},
                     {"marginal", marginal}};
  return doc;
}

OutputDocument sweep_command(const RunConfig& config, const WalkOperator& op) {
  if (config.thresholds.empty()) throw ConfigError("sweep needs --q-list");
  const Averages avg = compute_averages(op, config);
  const SweepResult result = sweep(avg.matrix.normalized, op.graph(), config.thresholds);
  OutputDocument doc;
  Json levels = Json::array();
  doc.csv = "q,count,sizes";
  for (const SweepLevel& level : result.levels) {
    levels.push_back(Json{{"q", round_significant(level.threshold)},
                          {"count", level.count},
                          {"sizes", level.sizes}});
    std::string sizes;
    for (std::size_t s : level.sizes) sizes += (sizes.empty() ? "" : ";") + std::to_string(s);
    doc.csv += "\n" + format_number(level.threshold) + "," + std::to_string(level.count) + "," +
               sizes;
  }
  doc.payload = Json{{"source", avg.source}, {"levels", levels}};
  return doc;
}

OutputDocument classical_command(const RunConfig& config, const Graph& g) {
  const NodeId start = starts_or(config, g, 0).front();
  const RelaxationTrace trace = relaxation_trace(g, start, config.steps);
  const std::vector<double> pi = stationary(g);
  std::vector<double> pi_normalized(pi.size());
  for (NodeId l = 0; l < g.node_count(); ++l) pi_normalized[l] = pi[l] / static_cast<double>(g.degree(l));

  OutputDocument doc;
  doc.csv = "t,tv";
  for (std::size_t t = 0; t < trace.distance.size(); ++t) {
    doc.csv += "\n" + std::to_string(t + 1) + "," + format_number(trace.distance[t]);
  }
  doc.payload = Json{{"start", start + 1},
                     {"stationary", number_array(pi)},
                     {"stationary_normalized", number_array(pi_normalized)},
                     {"distance", number_array(trace.distance)},
                     {"relaxation_threshold", kRelaxationThreshold},
                     {"relaxation_step", trace.relaxation_step ? Json(*trace.relaxation_step)
                                                               : Json(nullptr)},
                     {"final", number_array(trace.distributions.back())}};
  return doc;
}

}  // namespace

GraphSource GraphSource::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon + 1 == text.size()) {
    throw ConfigError("graph source must be builtin:<name>, edges:<path> or pajek:<path>");
  }
  const std::string_view kind = text.substr(0, colon);
  GraphSource src;
  src.value = std::string(text.substr(colon + 1));
  if (kind == "builtin") {
    src.kind = Kind::Builtin;
  } else if (kind == "edges") {
    src.kind = Kind::EdgeList;
  } else if (kind == "pajek") {
    src.kind = Kind::Pajek;
  } else {
    throw ConfigError("unknown graph source kind '" + std::string(kind) + "'");
  }
  return src;
}

std::string GraphSource::to_string() const {
  switch (kind) {
    case Kind::Builtin:
      return "builtin:" + value;
    case Kind::EdgeList:
      return "edges:" + value;
    case Kind::Pajek:
      return "pajek:" + value;
  }
  return value;
}

std::string_view to_string(Command command) {
  switch (command) {
    case Command::Evolve:
      return "evolve";
    case Command::Average:
      return "average";
    case Command::Spectrum:
      return "spectrum";
    case Command::Detect:
      return "detect";
    case Command::Sweep:
      return "sweep";
    case Command::Classical:
      return "classical";
  }
  return "?";
}

std::string_view to_string(AverageMode mode) {
  switch (mode) {
    case AverageMode::Auto:
      return "auto";
    case AverageMode::Finite:
      return "average-finite";
    case AverageMode::Infinite:
      return "average-infinite";
  }
  return "?";
}

AverageMode parse_average_mode(std::string_view name) {
  if (name == "auto") return AverageMode::Auto;
  if (name == "average-finite" || name == "finite") return AverageMode::Finite;
  if (name == "average-infinite" || name == "infinite") return AverageMode::Infinite;
  throw ConfigError("unknown mode '" + std::string(name) +
                    "' (expected average-finite, average-infinite or auto)");
}

std::size_t dense_cap_from_env(std::size_t fallback) {
  const char* raw = std::getenv("ARCWALK_DENSE_CAP");
  if (raw == nullptr || *raw == '\0') return fallback;
  std::size_t value = 0;
  const std::string_view s(raw);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
    throw ConfigError("ARCWALK_DENSE_CAP must be a positive integer");
  }
  return value;
}

Graph load_graph(const GraphSource& source) {
  switch (source.kind) {
    case GraphSource::Kind::Builtin:
      return builtin(source.value);
    case GraphSource::Kind::EdgeList:
      return load_edge_list_file(source.value);
    case GraphSource::Kind::Pajek:
      return load_pajek_file(source.value);
  }
  throw ConfigError("unknown graph source");
}

OutputDocument run(const RunConfig& config) {
  if (config.steps < 1 && config.command != Command::Evolve) {
    throw ConfigError("--steps must be at least 1");
  }
  if (config.threshold && !(*config.threshold > 0.0)) {
    throw ConfigError("threshold q must be positive");
  }
  if (!(config.degeneracy_tolerance > 0.0) || !(config.degeneracy_tolerance < 1.0)) {
    throw ConfigError("degeneracy tolerance must lie in (0, 1)");
  }
  if (config.bins < 2) throw ConfigError("--bins must be at least 2");
  const Graph g = load_graph(config.graph);
  for (NodeId id : config.starts) to_internal(g, id);

  OutputDocument doc;
  if (config.command == Command::Classical) {
    doc = classical_command(config, g);
  } else {
    const WalkOperator op(g, config.coin);
    switch (config.command) {
      case Command::Evolve:
        doc = evolve(config, op);
        break;
      case Command::Average:
        doc = average(config, op);
        break;
      case Command::Spectrum:
        doc = spectrum(config, op);
        break;
      case Command::Detect:
        doc = detect_command(config, op);
        break;
      case Command::Sweep:
        doc = sweep_command(config, op);
        break;
      case Command::Classical:
        break;
    }
  }
  doc.metadata = Json{{"tool", Json{{"name", kToolName}, {"version", kToolVersion}}},
                      {"command", to_string(config.command)},
                      {"graph", graph_metadata(config, g)},
                      {"coin", to_string(config.coin)},
                      {"parameters", parameters(config, g)}};
  return doc;
}

std::string render(const OutputDocument& doc, OutputFormat format) {
  if (format == OutputFormat::Csv) return doc.csv + "\n";
  return doc.dump_json();
}

}  // namespace arcwalk
