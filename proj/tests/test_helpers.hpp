#pragma once

#include <cmath>
#include <vector>

#include "qdiscord/state.hpp"
#include "qdiscord/states.hpp"

namespace qdiscord::test {

inline DensityMatrix bell() { return maximally_entangled(2).density(); }

inline DensityMatrix diag_state(std::vector<double> p, Dims dims) {
  RealVector v = Eigen::Map<RealVector>(p.data(), static_cast<Eigen::Index>(p.size()));
  return DensityMatrix::validated(v.cast<Complex>().asDiagonal(), std::move(dims));
}

/// (|00><00| + |11><11|)/2
inline DensityMatrix classically_correlated() { return diag_state({0.5, 0.0, 0.0, 0.5}, {2, 2}); }

inline DensityMatrix maximally_mixed(Dims dims) {
  const auto n = static_cast<Eigen::Index>(product(dims));
  return DensityMatrix::validated(Matrix::Identity(n, n) / static_cast<double>(n), std::move(dims));
}

/// -sum p log2 p written out directly.
inline double entropy_bits(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p) {
    if (x > 0) s -= x * std::log(x) / std::log(2.0);
  }
  return s;
}

inline PseudopureParams fig_a(double r) {
  return {2, r, {2.0 * std::sqrt(2.0) / 3.0, 1.0 / 3.0}};
}

inline PseudopureParams fig_b(double r) {
  return {3, r, {std::sqrt(7.0) / 3.0, 1.0 / 3.0, 1.0 / 3.0}};
}

}  // namespace qdiscord::test
