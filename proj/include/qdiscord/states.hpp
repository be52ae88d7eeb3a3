#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdiscord/state.hpp"

namespace qdiscord {

/// (1 - r)/(d^2 - 1) I + (r d^2 - 1)/(d^2 - 1) |psi><psi| with
/// |psi> = sum_i u_i |ii>.
struct PseudopureParams {
  std::size_t d;
  double r;
  std::vector<double> u;

  /// Throws InvalidArgument for d < 2, non-finite r, a u of the wrong
  /// length, negative entries, or sum u_i^2 off by more than 1e-12.
  void validate() const;
};

/// Throws NotPSD if the mixture is not positive (checked numerically; this
/// rejects r < 0 and r > 1).
DensityMatrix pseudopure(const PseudopureParams& params);

/// Pseudopure state with u_i = 1/sqrt(d).
DensityMatrix isotropic(std::size_t d, double r);

/// (|0...0> + |1...1>)/sqrt 2 on n >= 2 qubits.
PureState ghz(std::size_t n);

/// Uniform superposition of the n single-excitation basis states.
PureState w_state(std::size_t n);

/// sum_i |ii> / sqrt d.
PureState maximally_entangled(std::size_t d);

/// Product of computational basis states |digits>.
PureState basis_state(const Dims& dims, const std::vector<std::size_t>& digits);

/// First column of a Haar unitary: normalized complex Gaussian vector.
PureState haar_random_pure(const Dims& dims, std::uint64_t seed);

/// G G^dagger / Tr(G G^dagger) with G a d x rank complex Ginibre matrix.
DensityMatrix random_mixed(const Dims& dims, std::size_t rank, std::uint64_t seed);

/// GHZ state plus a Haar-random perturbation of relative size eps,
/// renormalized.
PureState perturbed_ghz(std::size_t n, double eps, std::uint64_t seed);

/// Builds a state from a family string, for example
///   "pp:d=2,r=0.6,u=0.9428,0.3333"   (u is renormalized)
///   "iso:d=3,r=0.7"
///   "ghz:n=3"        "w:n=3"        "me:d=2"
///   "haar:dims=2x2x2,seed=42"
///   "mixed:dims=2x2,rank=4,seed=7"
///   "ghzp:n=3,eps=0.1,seed=5"
/// Throws ParseError for malformed strings; constructor errors propagate.
DensityMatrix state_from_spec(const std::string& spec);

/// Replaces (or appends) the seed of a randomized family string.
std::string with_seed(const std::string& spec, std::uint64_t seed);

Dims parse_dims(const std::string& text);

}  // namespace qdiscord
