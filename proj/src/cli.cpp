#include "arcwalk/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "arcwalk/error.hpp"
#include "arcwalk/run.hpp"

namespace arcwalk {

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitNumerical = 4;

std::vector<double> parse_q_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ConfigError("bad value '" + item + "' in --q-list");
    out.push_back(value);
  }
  return out;
}

struct RawOptions {
  std::string graph;
  std::string coin = "fourier";
  std::string mode = "auto";
  std::vector<std::size_t> starts;
  std::size_t steps = 100;
  bool include_initial = false;
  std::string threshold = "auto";
  std::string q_list;
  double band = kDefaultMarginalBand;
  std::size_t bins = 20;
  std::size_t dense_cap = 0;
  double degeneracy_tolerance = kDefaultDegeneracyTolerance;
  std::string format = "json";
  std::string output;
};

RunConfig to_config(Command command, const RawOptions& raw) {
  RunConfig config;
  config.command = command;
  config.graph = GraphSource::parse(raw.graph);
  config.coin = parse_coin(raw.coin);
  config.mode = parse_average_mode(raw.mode);
  config.starts.assign(raw.starts.begin(), raw.starts.end());
  config.steps = raw.steps;
  config.include_initial = raw.include_initial;
  if (raw.threshold != "auto") {
    std::size_t used = 0;
    double q = 0.0;
    try {
      q = std::stod(raw.threshold, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != raw.threshold.size()) {
      throw ConfigError("--threshold must be a number or 'auto'");
    }
    config.threshold = q;
  }
  if (!raw.q_list.empty()) config.thresholds = parse_q_list(raw.q_list);
  config.marginal_band = raw.band;
  config.bins = raw.bins;
  config.dense_cap = raw.dense_cap > 0 ? raw.dense_cap : dense_cap_from_env();
  config.degeneracy_tolerance = raw.degeneracy_tolerance;
  if (raw.format == "json") {
    config.format = OutputFormat::Json;
  } else if (raw.format == "csv") {
    config.format = OutputFormat::Csv;
  } else {
    throw ConfigError("--format must be json or csv");
  }
  config.output_path = raw.output;
  return config;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coined quantum walks on graphs and community detection from their averages",
               std::string(kToolName)};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  RawOptions raw;
  struct Entry {
    Command command;
    const char* name;
    const char* help;
  };
  const Entry entries[] = {
      {Command::Evolve, "evolve", "Transition probabilities P(i->l;t) for t = 0..steps"},
      {Command::Average, "average", "Time-averaged transition matrices"},
      {Command::Spectrum, "spectrum", "Eigenvalues, degeneracies, argument histogram and IPR"},
      {Command::Detect, "detect", "Threshold community detection"},
      {Command::Sweep, "sweep", "Community counts over a list of thresholds"},
      {Command::Classical, "classical", "Classical random-walk relaxation baseline"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("--graph", raw.graph, "builtin:<name> | edges:<path> | pajek:<path>")
        ->required();
    sub->add_option("--coin", raw.coin, "fourier | grover");
    sub->add_option("--mode", raw.mode, "average-finite | average-infinite | auto");
    sub->add_option("--start", raw.starts, "initial node id(s), 1-based");
    sub->add_option("--steps", raw.steps, "time steps T");
    sub->add_flag("--include-t0", raw.include_initial, "include t = 0 in finite-time averages");
    sub->add_option("--threshold", raw.threshold, "q, or 'auto' for 1/D");
    sub->add_option("--q-list", raw.q_list, "comma-separated ascending thresholds");
    sub->add_option("--marginal-band", raw.band, "marginal flag band as a fraction of q");
    sub->add_option("--bins", raw.bins, "argument histogram bins");
    sub->add_option("--dense-cap", raw.dense_cap, "max D for dense materialization");
    sub->add_option("--degeneracy-tol", raw.degeneracy_tolerance,
                    "eigenvalue argument grouping tolerance");
    sub->add_option("--format", raw.format, "json | csv");
    sub->add_option("--output,-o", raw.output, "output file (default stdout)");
    subs.emplace_back(sub, e.command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << kToolName << ": error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    Command command = Command::Detect;
    for (const auto& [sub, cmd] : subs) {
      if (sub->parsed()) command = cmd;
    }
    const RunConfig config = to_config(command, raw);
    const OutputDocument doc = run(config);
    const std::string text = render(doc, config.format);
    if (config.output_path.empty()) {
      out << text;
    } else {
      write_file_atomically(config.output_path, text);
    }
    return 0;
  } catch (const ConfigError& e) {
    err << kToolName << ": config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DataError& e) {
    err << kToolName << ": data error: " << e.what() << "\n";
    return kExitData;
  } catch (const NumericalError& e) {
    err << kToolName << ": numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace arcwalk
