#include "arcwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "arcwalk/error.hpp"
#include "arcwalk/parallel.hpp"

namespace arcwalk {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// p_mu(l) for every eigenvector: N x D.
Eigen::MatrixXd node_probability_matrix(const SpectralDecomposition& dec, const Graph& graph) {
  const auto n = static_cast<Eigen::Index>(graph.node_count());
  const auto d = static_cast<Eigen::Index>(dec.dimension());
  Eigen::MatrixXd pm = Eigen::MatrixXd::Zero(n, d);
  const Eigen::MatrixXd sq = dec.eigenvectors.cwiseAbs2();
  for (Eigen::Index l = 0; l < n; ++l) {
    const auto first = static_cast<Eigen::Index>(graph.offset(static_cast<NodeId>(l)));
    const auto k = static_cast<Eigen::Index>(graph.degree(static_cast<NodeId>(l)));
    pm.row(l) = sq.middleRows(first, k).colwise().sum();
  }
  return pm;
}

// Shared precomputation for infinite-time averages over many rows.
class CesaroAverager {
 public:
  CesaroAverager(const SpectralDecomposition& dec, const Graph& graph, ProjectorMode mode)
      : dec_(dec), graph_(graph) {
    if (dec.dimension() != graph.arc_count()) {
      throw ConfigError("decomposition dimension does not match the graph's arc count");
    }
    std::vector<std::size_t> simple;
    for (const auto& group : dec.groups) {
      if (mode == ProjectorMode::Auto && group.size() == 1) {
        simple.push_back(group.front());
      } else {
        ComplexMatrix basis(dec.eigenvectors.rows(), static_cast<Eigen::Index>(group.size()));
        for (std::size_t c = 0; c < group.size(); ++c) {
          basis.col(static_cast<Eigen::Index>(c)) =
              dec.eigenvectors.col(static_cast<Eigen::Index>(group[c]));
        }
        projector_bases_.push_back(std::move(basis));
      }
    }
    const Eigen::MatrixXd all = node_probability_matrix(dec, graph);
    simple_probability_.resize(all.rows(), static_cast<Eigen::Index>(simple.size()));
    for (std::size_t c = 0; c < simple.size(); ++c) {
      simple_probability_.col(static_cast<Eigen::Index>(c)) =
          all.col(static_cast<Eigen::Index>(simple[c]));
    }
  }

  TransitionRow row(NodeId initial) const {
    const Graph& g = graph_;
    if (initial >= g.node_count()) {
      throw ConfigError("node " + std::to_string(initial + 1) + " is outside 1.." +
                        std::to_string(g.node_count()));
    }
    const auto i = static_cast<Eigen::Index>(initial);
    // Rank-one eigenspaces: |<l->m|mu>|^2 |<mu|i->j>|^2 summed over m, j.
    Eigen::VectorXd w = simple_probability_ * simple_probability_.row(i).transpose();

    const ArcId first = g.offset(initial);
    const std::size_t k = g.degree(initial);
    for (const ComplexMatrix& basis : projector_bases_) {
      for (std::size_t s = 0; s < k; ++s) {
        const auto b = static_cast<Eigen::Index>(first + s);
        const Eigen::VectorXcd column = basis * basis.row(b).adjoint();
        for (NodeId l = 0; l < g.node_count(); ++l) {
          const auto lo = static_cast<Eigen::Index>(g.offset(l));
          const auto kl = static_cast<Eigen::Index>(g.degree(l));
          w(static_cast<Eigen::Index>(l)) += column.segment(lo, kl).squaredNorm();
        }
      }
    }

    TransitionRow out{initial, 0, std::vector<double>(g.node_count()),
                      std::vector<double>(g.node_count())};
    for (NodeId l = 0; l < g.node_count(); ++l) {
      out.probability[l] = w(static_cast<Eigen::Index>(l)) / static_cast<double>(k);
      out.normalized[l] = out.probability[l] / static_cast<double>(g.degree(l));
    }
    return out;
  }

 private:
  const SpectralDecomposition& dec_;
  const Graph& graph_;
  Eigen::MatrixXd simple_probability_;
  std::vector<ComplexMatrix> projector_bases_;
};

double circular_gap(double from, double to) {
  // Forward distance on the circle from `from` to `to`, both in (-pi, pi].
  double d = to - from;
  if (d < 0) d += 2.0 * kPi;
  return d;
}

}  // namespace

double SpectralDecomposition::group_argument(std::size_t group) const {
  Complex mean(0.0, 0.0);
  for (std::size_t mu : groups.at(group)) mean += eigenvalues(static_cast<Eigen::Index>(mu));
  double theta = std::arg(mean);
  if (std::abs(theta) < degeneracy_tolerance) return 0.0;
  if (kPi - std::abs(theta) < degeneracy_tolerance) return -kPi;
  return theta;
}

std::vector<std::vector<std::size_t>> group_eigenvalues(const Eigen::VectorXcd& eigenvalues,
                                                        double tolerance) {
  const auto n = static_cast<std::size_t>(eigenvalues.size());
  std::vector<std::vector<std::size_t>> groups;
  if (n == 0) return groups;
  std::vector<double> theta(n);
  for (std::size_t i = 0; i < n; ++i) theta[i] = std::arg(eigenvalues(static_cast<Eigen::Index>(i)));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return theta[a] < theta[b]; });

  groups.push_back({order[0]});
  for (std::size_t r = 1; r < n; ++r) {
    if (theta[order[r]] - theta[order[r - 1]] < tolerance) {
      groups.back().push_back(order[r]);
    } else {
      groups.push_back({order[r]});
    }
  }
  // The cluster at -1 straddles the +-pi cut.
  if (groups.size() > 1 && circular_gap(theta[order[n - 1]], theta[order[0]]) < tolerance) {
    auto& head = groups.front();
    head.insert(head.end(), groups.back().begin(), groups.back().end());
    groups.pop_back();
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

SpectralDecomposition decompose(const ComplexMatrix& u, DecomposeOptions options) {
  if (u.rows() != u.cols() || u.rows() == 0) {
    throw NumericalError("decomposition needs a non-empty square matrix");
  }
  const double defect = unitarity_defect(u);
  if (!(defect <= options.unitarity_tolerance)) {
    throw NumericalError("input is not unitary (max |U^dagger U - I| = " + sci(defect) + ")");
  }

  Eigen::ComplexSchur<ComplexMatrix> schur(u, /*computeU=*/true);
  if (schur.info() != Eigen::Success) throw NumericalError("complex Schur iteration did not converge");

  const ComplexMatrix& t = schur.matrixT();
  const ComplexMatrix& z = schur.matrixU();
  const Eigen::Index n = u.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return std::arg(t(a, a)) < std::arg(t(b, b));
  });

  SpectralDecomposition dec;
  dec.degeneracy_tolerance = options.degeneracy_tolerance;
  dec.eigenvalues.resize(n);
  dec.eigenvectors.resize(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const Eigen::Index src = order[static_cast<std::size_t>(c)];
    dec.eigenvalues(c) = t(src, src);
    dec.eigenvectors.col(c) = z.col(src);
  }

  for (Eigen::Index c = 0; c < n; ++c) {
    const double off = std::abs(std::abs(dec.eigenvalues(c)) - 1.0);
    if (off > options.modulus_tolerance) {
      throw NumericalError("eigenvalue off the unit circle by " + sci(off));
    }
  }
  const ComplexMatrix residual =
      u * dec.eigenvectors - dec.eigenvectors * dec.eigenvalues.asDiagonal();
  const double worst_residual = residual.colwise().norm().maxCoeff();
  if (worst_residual > options.residual_tolerance) {
    throw NumericalError("eigenpair residual " + sci(worst_residual) + " exceeds tolerance");
  }
  const double ortho =
      (dec.eigenvectors.adjoint() * dec.eigenvectors - ComplexMatrix::Identity(n, n))
          .cwiseAbs()
          .maxCoeff();
  if (ortho > options.orthonormality_tolerance) {
    throw NumericalError("eigenvectors not orthonormal (defect " + sci(ortho) + ")");
  }

  dec.groups = group_eigenvalues(dec.eigenvalues, options.degeneracy_tolerance);
  dec.group_of.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t g = 0; g < dec.groups.size(); ++g) {
    for (std::size_t mu : dec.groups[g]) dec.group_of[mu] = g;
  }
  return dec;
}

std::size_t DegeneracyReport::largest_multiplicity() const {
  std::size_t best = 0;
  for (const auto& [value, count] : multiplicities) best = std::max(best, count);
  return best;
}

DegeneracyReport degeneracy_report(const SpectralDecomposition& dec, const Graph& graph) {
  DegeneracyReport report;
  for (std::size_t g = 0; g < dec.groups.size(); ++g) {
    const double theta = dec.group_argument(g);
    const std::size_t count = dec.groups[g].size();
    const Complex value = theta == 0.0 ? Complex(1.0, 0.0)
                          : theta == -kPi ? Complex(-1.0, 0.0)
                                          : std::polar(1.0, theta);
    report.multiplicities.emplace_back(value, count);
    if (theta == 0.0) report.plus_one += count;
    if (theta == -kPi) report.minus_one += count;
  }
  report.betti = graph.betti_number();
  report.bipartite = graph.is_bipartite();
  report.predicted_plus_one = static_cast<std::size_t>(report.betti + 1);
  report.predicted_minus_one =
      static_cast<std::size_t>(report.bipartite ? report.betti + 1 : report.betti - 1);
  return report;
}

TransitionRow infinite_time_average(const SpectralDecomposition& dec, const Graph& graph,
                                    NodeId initial, ProjectorMode mode) {
  return CesaroAverager(dec, graph, mode).row(initial);
}

TransitionMatrix infinite_time_average_matrix(const SpectralDecomposition& dec,
                                              const Graph& graph, ProjectorMode mode) {
  const CesaroAverager averager(dec, graph, mode);
  const auto n = static_cast<Eigen::Index>(graph.node_count());
  std::vector<TransitionRow> rows(graph.node_count());
  parallel_for(rows.size(), [&](std::size_t i) { rows[i] = averager.row(i); });
  TransitionMatrix m{Eigen::MatrixXd(n, n), Eigen::MatrixXd(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    for (Eigen::Index l = 0; l < n; ++l) {
      m.probability(i, l) = row.probability[static_cast<std::size_t>(l)];
      m.normalized(i, l) = row.normalized[static_cast<std::size_t>(l)];
    }
  }
  return m;
}

double inverse_participation_ratio(std::span<const double> p) {
  double sum = 0.0;
  for (double v : p) sum += v * v;
  return sum;
}

std::vector<double> eigenstate_probability(const SpectralDecomposition& dec, const Graph& graph,
                                           std::size_t mu) {
  if (mu >= dec.dimension()) throw ConfigError("eigenstate index out of range");
  if (dec.dimension() != graph.arc_count()) {
    throw ConfigError("decomposition dimension does not match the graph's arc count");
  }
  std::vector<double> p(graph.node_count(), 0.0);
  const auto col = dec.eigenvectors.col(static_cast<Eigen::Index>(mu));
  for (ArcId a = 0; a < graph.arc_count(); ++a) {
    p[graph.tail(a)] += std::norm(col(static_cast<Eigen::Index>(a)));
  }
  return p;
}

std::vector<double> eigenstate_profile(const SpectralDecomposition& dec, const Graph& graph,
                                       std::size_t mu) {
  std::vector<double> p = eigenstate_probability(dec, graph, mu);
  for (NodeId l = 0; l < graph.node_count(); ++l) p[l] /= static_cast<double>(graph.degree(l));
  return p;
}

std::vector<double> ipr(const SpectralDecomposition& dec, const Graph& graph) {
  std::vector<double> out(dec.dimension());
  for (std::size_t mu = 0; mu < dec.dimension(); ++mu) {
    out[mu] = inverse_participation_ratio(eigenstate_probability(dec, graph, mu));
  }
  return out;
}

namespace {

struct LoopArcs {
  std::vector<ArcId> arcs;
  bool closed = false;
};

LoopArcs loop_arcs(const Graph& g, std::span<const NodeId> nodes) {
  if (nodes.size() < 2) throw ConfigError("a loop needs at least two nodes");
  for (std::size_t r = 0; r < nodes.size(); ++r) {
    if (nodes[r] >= g.node_count()) throw ConfigError("loop node outside the graph");
    for (std::size_t s = 0; s < r; ++s) {
      if (nodes[s] == nodes[r]) throw ConfigError("loop visits a node twice");
    }
  }
  std::vector<std::pair<NodeId, NodeId>> steps;
  for (std::size_t r = 0; r + 1 < nodes.size(); ++r) {
    if (!g.has_edge(nodes[r], nodes[r + 1])) {
      throw ConfigError("nodes " + std::to_string(nodes[r] + 1) + " and " +
                        std::to_string(nodes[r + 1] + 1) + " are not adjacent");
    }
    steps.emplace_back(nodes[r], nodes[r + 1]);
  }
  const bool closed = nodes.size() >= 3 && g.has_edge(nodes.back(), nodes.front());
  if (closed) steps.emplace_back(nodes.back(), nodes.front());

  auto arc_between = [&](NodeId from, NodeId to) {
    const auto nbrs = g.neighbors(from);
    const auto slot = static_cast<std::size_t>(
        std::lower_bound(nbrs.begin(), nbrs.end(), to) - nbrs.begin());
    return g.arc_index({from, slot});
  };
  LoopArcs out;
  out.closed = closed;
  for (auto [a, b] : steps) out.arcs.push_back(arc_between(a, b));
  for (auto [a, b] : steps) out.arcs.push_back(arc_between(b, a));
  return out;
}

std::optional<LoopEigenvector> check_pattern(const WalkOperator& op, const LoopArcs& loop,
                                             std::span<const int> signs) {
  const double amp = 1.0 / std::sqrt(static_cast<double>(loop.arcs.size()));
  WalkState v{std::vector<Complex>(op.dimension()), 0};
  for (std::size_t r = 0; r < loop.arcs.size(); ++r) {
    v.amplitudes[loop.arcs[r]] = amp * static_cast<double>(signs[r]);
  }
  const WalkState uv = op.apply(v);
  for (int lambda : {+1, -1}) {
    double worst = 0.0;
    for (std::size_t a = 0; a < v.dimension(); ++a) {
      worst = std::max(worst, std::abs(uv.amplitudes[a] - static_cast<double>(lambda) * v.amplitudes[a]));
    }
    if (worst < 1e-10) {
      return LoopEigenvector{std::move(v), lambda, std::vector<int>(signs.begin(), signs.end())};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<LoopEigenvector> loop_eigenvector(const WalkOperator& op,
                                                std::span<const NodeId> nodes,
                                                std::span<const int> signs) {
  const LoopArcs loop = loop_arcs(op.graph(), nodes);
  if (!loop.closed) return std::nullopt;
  if (signs.size() != loop.arcs.size()) {
    throw ConfigError("sign pattern needs " + std::to_string(loop.arcs.size()) + " entries");
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw ConfigError("signs must be +1 or -1");
  }
  return check_pattern(op, loop, signs);
}

std::vector<LoopEigenvector> find_loop_eigenvectors(const WalkOperator& op,
                                                    std::span<const NodeId> nodes) {
  if (nodes.size() > 6) throw ConfigError("exhaustive sign search is limited to 6 nodes");
  const LoopArcs loop = loop_arcs(op.graph(), nodes);
  if (!loop.closed) return {};
  const std::size_t m = loop.arcs.size();
  std::vector<LoopEigenvector> found;
  std::vector<int> signs(m, 1);
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << (m - 1)); ++pattern) {
    for (std::size_t r = 1; r < m; ++r) signs[r] = ((pattern >> (r - 1)) & 1U) ? -1 : 1;
    if (auto hit = check_pattern(op, loop, signs)) found.push_back(std::move(*hit));
  }
  return found;
}

std::vector<std::size_t> argument_histogram(const SpectralDecomposition& dec, std::size_t bins) {
  if (bins < 2) throw ConfigError("histogram needs at least two bins");
  std::vector<std::size_t> counts(bins, 0);
  const double width = 2.0 * kPi / static_cast<double>(bins);
  for (std::size_t g = 0; g < dec.groups.size(); ++g) {
    const double theta = dec.group_argument(g);
    auto bin = static_cast<std::size_t>(std::floor((theta + kPi) / width));
    bin = std::min(bin, bins - 1);
    counts[bin] += dec.groups[g].size();
  }
  return counts;
}

}  // namespace arcwalk
