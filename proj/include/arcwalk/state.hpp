#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace arcwalk {

using Complex = std::complex<double>;

/// Amplitudes over the directed arcs, flat-indexed as in Graph.
struct WalkState {
  std::vector<Complex> amplitudes;
  std::size_t time = 0;

  std::size_t dimension() const { return amplitudes.size(); }
  double norm() const;
};

}  // namespace arcwalk
