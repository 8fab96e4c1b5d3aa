#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arcwalk/evolution.hpp"
#include "arcwalk/operators.hpp"

namespace arcwalk {

inline constexpr double kDefaultDegeneracyTolerance = 1e-8;

struct DecomposeOptions {
  /// Eigenvalues whose arguments differ by less than this share an eigenspace.
  double degeneracy_tolerance = kDefaultDegeneracyTolerance;
  double unitarity_tolerance = 1e-10;
  double residual_tolerance = 1e-8;
  double orthonormality_tolerance = 1e-8;
  double modulus_tolerance = 1e-10;
};

/// Eigenpairs of a unitary matrix, sorted by eigenvalue argument, with the
/// columns of `eigenvectors` orthonormal. Degenerate eigenvalues are
/// grouped into eigenspaces; within a group the basis is arbitrary.
struct SpectralDecomposition {
  Eigen::VectorXcd eigenvalues;
  ComplexMatrix eigenvectors;
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of;
  double degeneracy_tolerance = kDefaultDegeneracyTolerance;

  std::size_t dimension() const { return static_cast<std::size_t>(eigenvalues.size()); }
  /// Argument of the group mean, snapped to exactly 0 or -pi for the
  /// eigenspaces at +1 and -1. Lies in [-pi, pi).
  double group_argument(std::size_t group) const;
};

/// Complex Schur factorization of U. For a normal matrix the triangular
/// factor is diagonal, so the Schur vectors are orthonormal eigenvectors
/// even inside degenerate eigenspaces. Every invariant is verified after
/// the fact; violations throw NumericalError, as does a non-unitary input.
SpectralDecomposition decompose(const ComplexMatrix& u, DecomposeOptions options = {});

/// Groups eigenvalues on the circle by argument distance (single linkage,
/// wrapping at +-pi).
std::vector<std::vector<std::size_t>> group_eigenvalues(const Eigen::VectorXcd& eigenvalues,
                                                        double tolerance);

struct DegeneracyReport {
  std::vector<std::pair<Complex, std::size_t>> multiplicities;
  std::size_t plus_one = 0;
  std::size_t minus_one = 0;
  long betti = 0;
  bool bipartite = false;
  std::size_t predicted_plus_one = 0;
  std::size_t predicted_minus_one = 0;

  bool matches_prediction() const {
    return plus_one == predicted_plus_one && minus_one == predicted_minus_one;
  }
  std::size_t largest_multiplicity() const;
};

/// Observed multiplicities plus the loop-count prediction for the Grover
/// walk: b1 + 1 at +1, and b1 + 1 (bipartite) or b1 - 1 at -1.
DegeneracyReport degeneracy_report(const SpectralDecomposition& dec, const Graph& graph);

enum class ProjectorMode {
  Auto,      // rank-one shortcut for simple eigenvalues, projectors otherwise
  Explicit,  // materialize every eigenspace projector
};

/// Infinite-time (Cesaro) average of the transition probability from
/// `initial`, using eigenspace projectors so degenerate spectra are exact.
TransitionRow infinite_time_average(const SpectralDecomposition& dec, const Graph& graph,
                                    NodeId initial, ProjectorMode mode = ProjectorMode::Auto);

TransitionMatrix infinite_time_average_matrix(const SpectralDecomposition& dec,
                                              const Graph& graph,
                                              ProjectorMode mode = ProjectorMode::Auto);

/// Sum of squares of a probability vector.
double inverse_participation_ratio(std::span<const double> p);

/// p_mu(l): per-node probability of eigenvector mu.
std::vector<double> eigenstate_probability(const SpectralDecomposition& dec, const Graph& graph,
                                           std::size_t mu);
/// P_mu(l) = p_mu(l) / k_l
std::vector<double> eigenstate_profile(const SpectralDecomposition& dec, const Graph& graph,
                                       std::size_t mu);
/// IPR of every eigenvector.
std::vector<double> ipr(const SpectralDecomposition& dec, const Graph& graph);

struct LoopEigenvector {
  WalkState state;
  int eigenvalue = 0;      // +1 or -1
  std::vector<int> signs;  // forward arcs around the loop, then backward arcs
};

/// Amplitudes +-1/sqrt(2n) on the 2n arcs of the node loop. Returns the
/// vector when it is an eigenvector of `op` with eigenvalue +1 or -1 within
/// 1e-10, and nothing for an open chain (closing edge missing).
std::optional<LoopEigenvector> loop_eigenvector(const WalkOperator& op,
                                                std::span<const NodeId> nodes,
                                                std::span<const int> signs);

/// Exhaustive search over sign patterns (first sign fixed to +1), loops of
/// at most 6 nodes. Throws ConfigError if consecutive nodes are not
/// adjacent or a node repeats.
std::vector<LoopEigenvector> find_loop_eigenvectors(const WalkOperator& op,
                                                    std::span<const NodeId> nodes);

/// Counts of eigenvalue arguments over [-pi, pi) in equal bins, using the
/// snapped group argument for every eigenvalue.
std::vector<std::size_t> argument_histogram(const SpectralDecomposition& dec, std::size_t bins);

}  // namespace arcwalk
