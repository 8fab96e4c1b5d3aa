#pragma once

#include <Eigen/Dense>
#include <span>
#include <string_view>
#include <vector>

#include "arcwalk/graph.hpp"
#include "arcwalk/state.hpp"

namespace arcwalk {

using ComplexMatrix = Eigen::MatrixXcd;

enum class CoinKind { Fourier, Grover };

std::string_view to_string(CoinKind coin);
/// Accepts "fourier" or "grover" (case-insensitive).
CoinKind parse_coin(std::string_view name);

/// k x k discrete Fourier matrix, entry (a, b) = exp(2 pi i a b / k) / sqrt(k).
ComplexMatrix fourier_coin(std::size_t k);
/// k x k Grover reflection: (2 - k) / k on the diagonal, 2 / k elsewhere.
ComplexMatrix grover_coin(std::size_t k);
ComplexMatrix make_coin(CoinKind coin, std::size_t k);

/// max_ab |(M^dagger M - I)_ab|
double unitarity_defect(const ComplexMatrix& m);

inline constexpr std::size_t kDefaultDenseCap = 6000;

/// The one-step walk unitary U = S C in structured form: one coin block per
/// node (shared between nodes of equal degree) followed by the arc-reversal
/// permutation S|i->j> = |j->i>. Immutable; apply is reentrant.
class WalkOperator {
 public:
  WalkOperator(Graph graph, CoinKind coin);

  const Graph& graph() const { return graph_; }
  CoinKind coin() const { return coin_; }
  std::size_t dimension() const { return graph_.arc_count(); }

  const ComplexMatrix& block(NodeId i) const { return blocks_[graph_.degree(i)]; }
  /// Shift permutation: arc a is sent to shift()[a].
  const std::vector<ArcId>& shift() const { return graph_.reverse_map(); }

  /// out = U in. Cost O(sum k_i^2). The spans must not alias.
  void apply(std::span<const Complex> in, std::span<Complex> out) const;
  WalkState apply(const WalkState& state) const;

 private:
  Graph graph_;
  CoinKind coin_;
  std::vector<ComplexMatrix> blocks_;  // indexed by degree
};

WalkOperator build_walk_operator(Graph graph, CoinKind coin);

/// Dense D x D matrix of U. Throws ConfigError when D exceeds `cap`.
ComplexMatrix materialize_dense(const WalkOperator& op, std::size_t cap = kDefaultDenseCap);

struct ShiftEquivalence {
  bool permutation_identity = false;  // S P == S'
  bool coin_identity = false;         // S (P C) == S' C, Fourier coin
  explicit operator bool() const { return permutation_identity && coin_identity; }
};

/// On the n-site ring with per-site basis (x->x-1, x->x+1), checks that the
/// arc-reversal shift S composed with the per-site flip P equals the
/// slot-preserving translation S'. Throws ConfigError for n < 3.
ShiftEquivalence verify_shift_equivalence(std::size_t n);

}  // namespace arcwalk
