#include "arcwalk/operators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "arcwalk/error.hpp"

namespace arcwalk {

double WalkState::norm() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

std::string_view to_string(CoinKind coin) {
  return coin == CoinKind::Fourier ? "fourier" : "grover";
}

CoinKind parse_coin(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "fourier") return CoinKind::Fourier;
  if (s == "grover") return CoinKind::Grover;
  throw ConfigError("unknown coin '" + std::string(name) + "' (expected fourier or grover)");
}

ComplexMatrix fourier_coin(std::size_t k) {
  if (k == 0) throw ConfigError("coin dimension must be positive");
  ComplexMatrix c(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  const double scale = 1.0 / std::sqrt(static_cast<double>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      // Reduce a*b mod k first so the phase stays in [0, 2 pi).
      const double phase =
          2.0 * std::numbers::pi * static_cast<double>((a * b) % k) / static_cast<double>(k);
      c(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = std::polar(scale, phase);
    }
  }
  return c;
}

ComplexMatrix grover_coin(std::size_t k) {
  if (k == 0) throw ConfigError("coin dimension must be positive");
  const double kd = static_cast<double>(k);
  ComplexMatrix c = ComplexMatrix::Constant(static_cast<Eigen::Index>(k),
                                            static_cast<Eigen::Index>(k), Complex(2.0 / kd, 0.0));
  c.diagonal().setConstant(Complex((2.0 - kd) / kd, 0.0));
  return c;
}

ComplexMatrix make_coin(CoinKind coin, std::size_t k) {
  return coin == CoinKind::Fourier ? fourier_coin(k) : grover_coin(k);
}

double unitarity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  const ComplexMatrix gram = m.adjoint() * m;
  return (gram - ComplexMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

WalkOperator::WalkOperator(Graph graph, CoinKind coin)
    : graph_(std::move(graph)), coin_(coin), blocks_(graph_.max_degree() + 1) {
  for (NodeId i = 0; i < graph_.node_count(); ++i) {
    const std::size_t k = graph_.degree(i);
    if (blocks_[k].size() == 0) blocks_[k] = make_coin(coin_, k);
  }
}

void WalkOperator::apply(std::span<const Complex> in, std::span<Complex> out) const {
  const std::size_t dim = dimension();
  if (in.size() != dim || out.size() != dim) {
    throw ConfigError("state dimension " + std::to_string(in.size()) +
                      " does not match operator dimension " + std::to_string(dim));
  }
  const auto& offsets = graph_.offsets();
  const auto& reverse = graph_.reverse_map();
  for (NodeId i = 0; i < graph_.node_count(); ++i) {
    const ArcId base = offsets[i];
    const auto k = static_cast<Eigen::Index>(offsets[i + 1] - base);
    const ComplexMatrix& coin = blocks_[static_cast<std::size_t>(k)];
    for (Eigen::Index r = 0; r < k; ++r) {
      Complex acc(0.0, 0.0);
      for (Eigen::Index c = 0; c < k; ++c) acc += coin(r, c) * in[base + static_cast<std::size_t>(c)];
      out[reverse[base + static_cast<std::size_t>(r)]] = acc;
    }
  }
}

WalkState WalkOperator::apply(const WalkState& state) const {
  WalkState next{std::vector<Complex>(state.dimension()), state.time + 1};
  apply(state.amplitudes, next.amplitudes);
  return next;
}

WalkOperator build_walk_operator(Graph graph, CoinKind coin) {
  return WalkOperator(std::move(graph), coin);
}

ComplexMatrix materialize_dense(const WalkOperator& op, std::size_t cap) {
  const std::size_t dim = op.dimension();
  if (dim > cap) {
    throw ConfigError("dense materialization of D=" + std::to_string(dim) +
                      " exceeds the cap of " + std::to_string(cap));
  }
  const Graph& g = op.graph();
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  // Column (i, s) of C is block column s placed in rows of node i; S then
  // moves row a to row reverse(a).
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const ComplexMatrix& coin = op.block(i);
    const ArcId base = g.offset(i);
    for (Eigen::Index r = 0; r < coin.rows(); ++r) {
      const auto row = static_cast<Eigen::Index>(g.reverse(base + static_cast<std::size_t>(r)));
      for (Eigen::Index c = 0; c < coin.cols(); ++c) {
        u(row, static_cast<Eigen::Index>(base) + c) = coin(r, c);
      }
    }
  }
  return u;
}

ShiftEquivalence verify_shift_equivalence(std::size_t n) {
  if (n < 3) throw ConfigError("shift equivalence needs a ring of at least 3 sites");
  const auto dim = static_cast<Eigen::Index>(2 * n);
  // Basis: 2x = |x -> x-1> (left slot), 2x+1 = |x -> x+1> (right slot).
  auto left = [n](std::size_t x) { return static_cast<Eigen::Index>(2 * (x % n)); };
  auto right = [n](std::size_t x) { return static_cast<Eigen::Index>(2 * (x % n) + 1); };

  Eigen::MatrixXd shift = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd flip = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd standard = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t x = 0; x < n; ++x) {
    // S|x -> x+1> = |x+1 -> x>, S|x -> x-1> = |x-1 -> x>
    shift(left(x + 1), right(x)) = 1.0;
    shift(right(x + n - 1), left(x)) = 1.0;
    flip(left(x), right(x)) = 1.0;
    flip(right(x), left(x)) = 1.0;
    // S' keeps the slot and translates: right slot to x-1, left slot to x+1.
    standard(right(x + n - 1), right(x)) = 1.0;
    standard(left(x + 1), left(x)) = 1.0;
  }

  ShiftEquivalence result;
  result.permutation_identity = (shift * flip - standard).cwiseAbs().maxCoeff() == 0.0;

  const ComplexMatrix coin_block = fourier_coin(2);
  ComplexMatrix coin = ComplexMatrix::Zero(dim, dim);
  for (std::size_t x = 0; x < n; ++x) coin.block<2, 2>(left(x), left(x)) = coin_block;
  const ComplexMatrix jammed = flip.cast<Complex>() * coin;
  const ComplexMatrix lhs = shift.cast<Complex>() * jammed;
  const ComplexMatrix rhs = standard.cast<Complex>() * coin;
  result.coin_identity = (lhs - rhs).cwiseAbs().maxCoeff() == 0.0;
  return result;
}

}  // namespace arcwalk
