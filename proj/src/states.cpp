#include "qdiscord/states.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "qdiscord/error.hpp"
#include "qdiscord/measurement.hpp"
#include "qdiscord/random.hpp"

namespace qdiscord {

void PseudopureParams::validate() const {
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "pseudopure needs d >= 2");
  // The admissible r range is enforced by the PSD check in pseudopure().
  if (!std::isfinite(r)) throw Error(ErrorKind::InvalidArgument, "r must be finite");
  if (u.size() != d) throw Error(ErrorKind::InvalidArgument, "u must have d entries");
  double norm2 = 0.0;
  for (double x : u) {
    if (x < 0.0) throw Error(ErrorKind::InvalidArgument, "u entries must be nonnegative");
    norm2 += x * x;
  }
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument, "sum u_i^2 = " + std::to_string(norm2));
  }
}

DensityMatrix pseudopure(const PseudopureParams& params) {
  params.validate();
  const std::size_t d = params.d;
  const auto n = static_cast<Eigen::Index>(d * d);
  Vector psi = Vector::Zero(n);
  for (std::size_t i = 0; i < d; ++i) psi(static_cast<Eigen::Index>(i * d + i)) = params.u[i];
  const double dd = static_cast<double>(d * d);
  const double noise = (1.0 - params.r) / (dd - 1.0);
  const double weight = (params.r * dd - 1.0) / (dd - 1.0);
  Matrix m = noise * Matrix::Identity(n, n) + weight * (psi * psi.adjoint());
  return DensityMatrix::validated(std::move(m), {d, d});
}

DensityMatrix isotropic(std::size_t d, double r) {
  return pseudopure({d, r, std::vector<double>(d, 1.0 / std::sqrt(static_cast<double>(d)))});
}

PureState ghz(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "GHZ needs at least two qubits");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Vector v = Vector::Zero(dim);
  v(0) = v(dim - 1) = 1.0 / std::sqrt(2.0);
  return PureState::normalized(std::move(v), Dims(n, 2));
}

PureState w_state(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "W state needs at least two qubits");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
  for (std::size_t k = 0; k < n; ++k) v(static_cast<Eigen::Index>(std::size_t{1} << k)) = 1.0;
  return PureState::normalized(std::move(v), Dims(n, 2));
}

PureState maximally_entangled(std::size_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d * d));
  for (std::size_t i = 0; i < d; ++i) v(static_cast<Eigen::Index>(i * d + i)) = 1.0;
  return PureState::normalized(std::move(v), {d, d});
}

PureState basis_state(const Dims& dims, const std::vector<std::size_t>& digits) {
  if (digits.size() != dims.size()) throw Error(ErrorKind::DimMismatch, "one digit per subsystem");
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (digits[k] >= dims[k]) throw Error(ErrorKind::InvalidArgument, "digit out of range");
    index = index * dims[k] + digits[k];
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(product(dims)));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v), dims);
}

namespace {

Vector gaussian_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Vector v(static_cast<Eigen::Index>(n));
  for (auto& x : v) {
    const double re = normal(rng);
    const double im = normal(rng);
    x = Complex(re, im);
  }
  return v;
}

}  // namespace

PureState haar_random_pure(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return PureState::normalized(gaussian_vector(product(dims), rng), dims);
}

DensityMatrix random_mixed(const Dims& dims, std::size_t rank, std::uint64_t seed) {
  const std::size_t d = product(dims);
  if (rank < 1 || rank > d) throw Error(ErrorKind::InvalidArgument, "rank must lie in [1, dim]");
  Rng rng(seed);
  Matrix g(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(rank));
  for (Eigen::Index j = 0; j < g.cols(); ++j) g.col(j) = gaussian_vector(d, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix::validated(std::move(m), dims);
}

PureState perturbed_ghz(std::size_t n, double eps, std::uint64_t seed) {
  const PureState base = ghz(n);
  const PureState noise = haar_random_pure(base.dims(), seed);
  return PureState::normalized(base.amplitudes() + eps * noise.amplitudes(), base.dims());
}

Dims parse_dims(const std::string& text) {
  Dims dims;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(part, &used);
      if (used != part.size() || v < 1) throw std::invalid_argument(part);
      dims.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad dims '" + text + "'");
    }
  }
  if (dims.empty()) throw Error(ErrorKind::ParseError, "empty dims");
  return dims;
}

namespace {

struct FamilySpec {
  std::string family;
  std::map<std::string, std::vector<std::string>> values;
};

FamilySpec split_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  FamilySpec out;
  out.family = spec.substr(0, colon);
  if (out.family.empty()) throw Error(ErrorKind::ParseError, "missing family in '" + spec + "'");
  if (colon == std::string::npos) return out;
  std::stringstream ss(spec.substr(colon + 1));
  std::string token;
  std::string current;
  while (std::getline(ss, token, ',')) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      // Continuation of a list value such as u=0.9,0.3.
      if (current.empty()) throw Error(ErrorKind::ParseError, "value without key in '" + spec + "'");
      out.values[current].push_back(token);
    } else {
      current = token.substr(0, eq);
      out.values[current] = {token.substr(eq + 1)};
    }
  }
  return out;
}

const std::vector<std::string>& require(const FamilySpec& s, const std::string& key) {
  const auto it = s.values.find(key);
  if (it == s.values.end()) {
    throw Error(ErrorKind::ParseError, "family '" + s.family + "' needs '" + key + "='");
  }
  return it->second;
}

double to_double(const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad number '" + text + "'");
  }
}

std::uint64_t to_u64(const std::string& text) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad integer '" + text + "'");
  }
}

double scalar(const FamilySpec& s, const std::string& key) { return to_double(require(s, key).at(0)); }
std::uint64_t integer(const FamilySpec& s, const std::string& key) {
  return to_u64(require(s, key).at(0));
}
std::uint64_t seed_or_zero(const FamilySpec& s) {
  return s.values.contains("seed") ? integer(s, "seed") : 0;
}

}  // namespace

DensityMatrix state_from_spec(const std::string& spec) {
  const FamilySpec s = split_spec(spec);
  if (s.family == "pp") {
    PseudopureParams p{integer(s, "d"), scalar(s, "r"), {}};
    double norm2 = 0.0;
    for (const auto& t : require(s, "u")) {
      p.u.push_back(to_double(t));
      norm2 += p.u.back() * p.u.back();
    }
    if (!(norm2 > 0.0)) throw Error(ErrorKind::InvalidArgument, "u must be nonzero");
    for (double& x : p.u) x /= std::sqrt(norm2);
    return pseudopure(p);
  }
  if (s.family == "iso") return isotropic(integer(s, "d"), scalar(s, "r"));
  if (s.family == "ghz") return ghz(integer(s, "n")).density();
  if (s.family == "w") return w_state(integer(s, "n")).density();
  if (s.family == "me") return maximally_entangled(integer(s, "d")).density();
  if (s.family == "haar") return haar_random_pure(parse_dims(require(s, "dims").at(0)), seed_or_zero(s)).density();
  if (s.family == "mixed") {
    const Dims dims = parse_dims(require(s, "dims").at(0));
    const std::size_t rank = s.values.contains("rank") ? integer(s, "rank") : product(dims);
    return random_mixed(dims, rank, seed_or_zero(s));
  }
  if (s.family == "ghzp") {
    return perturbed_ghz(integer(s, "n"), scalar(s, "eps"), seed_or_zero(s)).density();
  }
  throw Error(ErrorKind::ParseError, "unknown state family '" + s.family + "'");
}

std::string with_seed(const std::string& spec, std::uint64_t seed) {
  FamilySpec s = split_spec(spec);
  s.values["seed"] = {std::to_string(seed)};
  std::string out = s.family + ":";
  bool first = true;
  for (const auto& [key, vals] : s.values) {
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (!first) out += ',';
      first = false;
      out += i == 0 ? key + "=" + vals[i] : vals[i];
    }
  }
  return out;
}

}  // namespace qdiscord
