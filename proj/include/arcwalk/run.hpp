#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arcwalk/community.hpp"
#include "arcwalk/graph.hpp"
#include "arcwalk/operators.hpp"
#include "arcwalk/output.hpp"
#include "arcwalk/spectral.hpp"

namespace arcwalk {

inline constexpr std::string_view kToolName = "arcwalk";
inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Command { Evolve, Average, Spectrum, Detect, Sweep, Classical };

enum class AverageMode {
  Auto,      // infinite-time when D <= kAutoInfiniteLimit, else finite-time
  Finite,
  Infinite,
};

inline constexpr std::size_t kAutoInfiniteLimit = 2000;

enum class OutputFormat { Json, Csv };

/// "builtin:<name>", "edges:<path>" or "pajek:<path>".
struct GraphSource {
  enum class Kind { Builtin, EdgeList, Pajek } kind = Kind::Builtin;
  std::string value;

  static GraphSource parse(std::string_view text);
  std::string to_string() const;
};

struct RunConfig {
  Command command = Command::Detect;
  GraphSource graph;
  CoinKind coin = CoinKind::Fourier;
  AverageMode mode = AverageMode::Auto;
  std::vector<NodeId> starts;  // 1-based node ids; empty means all / node 1
  std::size_t steps = 100;
  bool include_initial = false;
  std::optional<double> threshold;  // nullopt = auto (1/D)
  std::vector<double> thresholds;   // sweep
  double marginal_band = kDefaultMarginalBand;
  std::size_t bins = 20;
  std::size_t dense_cap = kDefaultDenseCap;
  double degeneracy_tolerance = kDefaultDegeneracyTolerance;
  OutputFormat format = OutputFormat::Json;
  std::string output_path;  // empty = stdout
};

std::string_view to_string(Command command);
std::string_view to_string(AverageMode mode);
AverageMode parse_average_mode(std::string_view name);

/// ARCWALK_DENSE_CAP when set to a positive integer, else `fallback`.
std::size_t dense_cap_from_env(std::size_t fallback = kDefaultDenseCap);

Graph load_graph(const GraphSource& source);

/// Executes one command. Throws ConfigError / DataError / NumericalError.
OutputDocument run(const RunConfig& config);

/// Renders the document in the configured format.
std::string render(const OutputDocument& doc, OutputFormat format);

}  // namespace arcwalk
