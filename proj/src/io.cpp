#include "qdiscord/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "qdiscord/error.hpp"

namespace qdiscord {

namespace {

Json complex_to_json(Complex z) { return Json::array({round12(z.real()), round12(z.imag())}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorKind::ParseError, "complex entries must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Matrix matrix_from_rows(const Json& rows, std::size_t n) {
  if (!rows.is_array() || rows.size() != n) {
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(n) + " rows");
  }
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw Error(ErrorKind::ParseError, "row " + std::to_string(i) + " has the wrong length");
    }
    for (std::size_t j = 0; j < n; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = complex_from_json(rows[i][j]);
    }
  }
  return m;
}

Json optional_number(const std::optional<double>& v) {
  return v ? Json(round12(*v)) : Json(nullptr);
}

}  // namespace

double round12(double value) {
  if (!std::isfinite(value)) return value;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

std::string format12(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Json state_to_json(const DensityMatrix& rho) {
  Json rows = Json::array();
  const Matrix& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"dims", rho.dims()}, {"matrix", std::move(rows)}};
}

DensityMatrix state_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("matrix")) {
    throw Error(ErrorKind::ParseError, "state JSON needs 'dims' and 'matrix'");
  }
  Dims dims;
  try {
    dims = doc.at("dims").get<Dims>();
  } catch (const Json::exception&) {
    throw Error(ErrorKind::ParseError, "'dims' must be a list of positive integers");
  }
  if (dims.empty()) throw Error(ErrorKind::ParseError, "'dims' is empty");
  const std::size_t n = product(dims);
  return DensityMatrix::validated(matrix_from_rows(doc.at("matrix"), n), dims);
}

DensityMatrix read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  return state_from_json(doc);
}

Json basis_to_json(const ProjectiveBasis& basis) {
  Json vectors = Json::array();
  for (std::size_t k = 0; k < basis.dim(); ++k) {
    Json v = Json::array();
    const Vector col = basis.vector(k);
    for (Eigen::Index i = 0; i < col.size(); ++i) v.push_back(complex_to_json(col(i)));
    vectors.push_back(std::move(v));
  }
  return Json{{"dim", basis.dim()}, {"vectors", std::move(vectors)}};
}

ProjectiveBasis basis_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("vectors") ||
      !doc.at("dim").is_number_unsigned()) {
    throw Error(ErrorKind::ParseError, "basis JSON needs 'dim' and 'vectors'");
  }
  const auto d = doc.at("dim").get<std::size_t>();
  // vectors are columns; matrix_from_rows reads them as rows.
  const Matrix m = matrix_from_rows(doc.at("vectors"), d).transpose();
  return ProjectiveBasis::from_unitary(m, doc.value("label", std::string("file")));
}

ObservablePair pair_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("q") || !doc.contains("r")) {
    throw Error(ErrorKind::ParseError, "pair JSON needs 'q' and 'r' bases");
  }
  return ObservablePair::make(basis_from_json(doc.at("q")), basis_from_json(doc.at("r")));
}

Json to_json(const CorrelationReport& r) {
  return Json{
      {"measured_side", r.measured_side == Side::First ? "A" : "B"},
      {"mutual_information", round12(r.mutual_information)},
      {"classical_correlation", round12(r.classical_correlation)},
      {"discord", round12(r.discord)},
      {"min_conditional_entropy", round12(r.min_conditional_entropy)},
      {"argmin_basis", basis_to_json(r.argmin_basis)},
      {"conditional_entropy", round12(r.conditional_entropy)},
      {"imbalance", round12(r.imbalance)},
      {"converged", r.converged},
      {"upper_estimate", true},
  };
}

Json to_json(const UncertaintyReport& u) {
  return Json{
      {"s_q_given_b", round12(u.s_q_given_b)}, {"s_r_given_b", round12(u.s_r_given_b)},
      {"log_inv_c", round12(u.log_inv_c)},     {"s_a_given_b", round12(u.s_a_given_b)},
      {"delta_t", round12(u.delta_t)},         {"delta_m", optional_number(u.delta_m)},
      {"delta_f", optional_number(u.delta_f)}, {"s_qq", optional_number(u.s_qq)},
      {"s_rr", optional_number(u.s_rr)},       {"p_q", optional_number(u.p_q)},
      {"p_r", optional_number(u.p_r)},         {"h_pq", optional_number(u.h_pq)},
      {"h_pr", optional_number(u.h_pr)},
  };
}

Json to_json(const BoundReport& b) {
  return Json{
      {"s_rho_a", round12(b.s_rho_a)},
      {"mutual_info", round12(b.mutual_info)},
      {"bound_eq8", round12(b.marginal_information)},
      {"eq8_branch", to_string(b.branch)},
      {"lambda_t", round12(b.lambda_t)},
      {"lambda_m", optional_number(b.lambda_m)},
      {"lambda_f", optional_number(b.lambda_f)},
      {"best_bound", round12(b.best_bound)},
      {"pair", b.pair_label},
  };
}

Json to_json(const EurCheck& e) {
  return Json{
      {"lhs", round12(e.lhs)},
      {"berta_bound", round12(e.berta_bound)},
      {"tightened_bound", round12(e.tightened_bound)},
      {"berta_slack", round12(e.berta_slack)},
      {"tightened_slack", round12(e.tightened_slack)},
      {"imbalance", round12(e.imbalance)},
  };
}

Json to_json(const SameSideReport& r) {
  return Json{
      {"d_ab", round12(r.d_ab)},
      {"d_ac", round12(r.d_ac)},
      {"d_a_bc", round12(r.d_a_bc)},
      {"delta_t", round12(r.delta_t)},
      {"lhs", round12(r.lhs)},
      {"rhs", round12(r.rhs)},
      {"slack", round12(r.slack)},
      {"precondition_gap", round12(r.precondition_gap)},
      {"precondition_met", r.precondition_met},
      {"tau_d", round12(r.tau_d)},
      {"koashi_winter_slack", round12(r.koashi_winter_slack)},
      {"imbalance_ab", round12(r.imbalance_ab)},
  };
}

Json to_json(const CrossSideReport& r) {
  return Json{
      {"d_b_ab", round12(r.d_b_ab)},         {"d_c_ac", round12(r.d_c_ac)},
      {"d_bc_a", round12(r.d_bc_a)},         {"delta_t_ba", round12(r.delta_t_ba)},
      {"delta_t_ca", round12(r.delta_t_ca)}, {"delta_bar", round12(r.delta_bar)},
      {"lhs", round12(r.lhs)},               {"rhs", round12(r.rhs)},
      {"slack", round12(r.slack)},
  };
}

}  // namespace qdiscord
