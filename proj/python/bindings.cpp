#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdiscord/campaigns.hpp"
#include "qdiscord/error.hpp"
#include "qdiscord/monogamy.hpp"
#include "qdiscord/states.hpp"

namespace py = pybind11;
using namespace qdiscord;

namespace {

py::object to_python(const Json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

}  // namespace

PYBIND11_MODULE(_qdiscord, m) {
  m.doc() = "Quantum discord, entropic uncertainty bounds and shareability checks";

  static py::exception<Error> error(m, "QDiscordError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::enum_<Side>(m, "Side").value("A", Side::First).value("B", Side::Second);
  py::enum_<Party>(m, "Party").value("B", Party::B).value("C", Party::C);
  py::enum_<SearchMode>(m, "SearchMode")
      .value("MULTI_START", SearchMode::MultiStartLocal)
      .value("QUBIT_GRID", SearchMode::QubitGridOracle);
  py::enum_<BoundBranch>(m, "BoundBranch")
      .value("MUTUAL_INFO", BoundBranch::MutualInformation)
      .value("MARGINAL_ENTROPY", BoundBranch::MarginalEntropy);

  // States

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init([](const Matrix& data, const Dims& dims) { return DensityMatrix::validated(data, dims); }),
           py::arg("matrix"), py::arg("dims"))
      .def_static("from_pure", [](const Vector& psi, const Dims& dims) {
            return PureState::normalized(psi, dims).density();
          }, py::arg("amplitudes"), py::arg("dims"))
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("dims", &DensityMatrix::dims)
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def("purity", &DensityMatrix::purity)
      .def("__repr__", [](const DensityMatrix& rho) {
        std::string dims;
        for (std::size_t d : rho.dims()) dims += (dims.empty() ? "" : "x") + std::to_string(d);
        return "<DensityMatrix dims=" + dims + ">";
      });

  m.def("pseudopure", [](std::size_t d, double r, std::vector<double> u) {
        return pseudopure({d, r, std::move(u)});
      }, py::arg("d"), py::arg("r"), py::arg("u"));
  m.def("isotropic", &isotropic, py::arg("d"), py::arg("r"));
  m.def("ghz", [](std::size_t n) { return ghz(n).density(); }, py::arg("n"));
  m.def("w_state", [](std::size_t n) { return w_state(n).density(); }, py::arg("n"));
  m.def("maximally_entangled", [](std::size_t d) { return maximally_entangled(d).density(); }, py::arg("d"));
  m.def("haar_random_pure", [](const Dims& dims, std::uint64_t seed) {
        return haar_random_pure(dims, seed).density();
      }, py::arg("dims"), py::arg("seed"));
  m.def("random_mixed", &random_mixed, py::arg("dims"), py::arg("rank"), py::arg("seed"));
  m.def("state_from_spec", &state_from_spec, py::arg("spec"));
  m.def("state_to_json", [](const DensityMatrix& rho) { return state_to_json(rho).dump(); });
  m.def("state_from_json", [](const std::string& text) { return state_from_json(Json::parse(text)); });

  // Entropies and maps

  m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("rho"));
  m.def("partial_trace", &partial_trace, py::arg("rho"), py::arg("keep"));
  m.def("tensor_product", &tensor_product);
  m.def("conditional_entropy", &conditional_entropy, py::arg("rho"), py::arg("conditioning"));
  m.def("mutual_information", &mutual_information, py::arg("rho"));
  m.def("purify", [](const DensityMatrix& rho) {
    const PureState psi = purify(rho);
    return py::make_tuple(psi.amplitudes(), psi.dims());
  });

  // Measurements

  py::class_<ProjectiveBasis>(m, "ProjectiveBasis")
      .def(py::init([](const Matrix& u, std::string label) { return ProjectiveBasis::from_unitary(u, std::move(label)); }),
           py::arg("unitary"), py::arg("label") = "")
      .def_property_readonly("vectors", &ProjectiveBasis::vectors)
      .def_property_readonly("label", &ProjectiveBasis::label)
      .def_property_readonly("dim", &ProjectiveBasis::dim);
  m.def("computational_basis", &computational_basis, py::arg("d"));
  m.def("fourier_basis", &fourier_basis, py::arg("d"));
  m.def("haar_random_unitary", py::overload_cast<std::size_t, std::uint64_t>(&haar_random_unitary),
        py::arg("d"), py::arg("seed"));
  m.def("incompatibility_c", &incompatibility_c);

  py::class_<ObservablePair>(m, "ObservablePair")
      .def(py::init(&ObservablePair::make), py::arg("q"), py::arg("r"))
      .def_readonly("q", &ObservablePair::q)
      .def_readonly("r", &ObservablePair::r)
      .def_readonly("c", &ObservablePair::c);
  m.def("complementary_pair", &complementary_pair, py::arg("d"));
  m.def("random_pair", &random_pair, py::arg("d"), py::arg("seed"));
  m.def("best_pair_search", &best_pair_search, py::arg("rho"), py::arg("samples"), py::arg("seed"));

  // Correlations

  py::class_<OptimizerConfig>(m, "OptimizerConfig")
      .def(py::init([](int restarts, double tolerance, int max_iterations, std::uint64_t seed, SearchMode mode) {
             OptimizerConfig c{restarts, tolerance, max_iterations, seed, mode};
             c.validate();
             return c;
           }),
           py::arg("restarts") = 24, py::arg("tolerance") = 1e-9, py::arg("max_iterations") = 500,
           py::arg("seed") = 0, py::arg("mode") = SearchMode::MultiStartLocal)
      .def_readwrite("restarts", &OptimizerConfig::restarts)
      .def_readwrite("tolerance", &OptimizerConfig::tolerance)
      .def_readwrite("max_iterations", &OptimizerConfig::max_iterations)
      .def_readwrite("seed", &OptimizerConfig::seed)
      .def_readwrite("mode", &OptimizerConfig::mode);

  py::class_<CorrelationReport>(m, "CorrelationReport")
      .def_readonly("measured_side", &CorrelationReport::measured_side)
      .def_readonly("mutual_information", &CorrelationReport::mutual_information)
      .def_readonly("classical_correlation", &CorrelationReport::classical_correlation)
      .def_readonly("discord", &CorrelationReport::discord)
      .def_readonly("min_conditional_entropy", &CorrelationReport::min_conditional_entropy)
      .def_readonly("argmin_basis", &CorrelationReport::argmin_basis)
      .def_readonly("conditional_entropy", &CorrelationReport::conditional_entropy)
      .def_readonly("imbalance", &CorrelationReport::imbalance)
      .def_readonly("converged", &CorrelationReport::converged);

  m.def("quantum_discord", &quantum_discord, py::arg("rho"), py::arg("side") = Side::First,
        py::arg("config") = OptimizerConfig{});
  m.def("classical_correlation", &classical_correlation, py::arg("rho"), py::arg("side") = Side::First,
        py::arg("config") = OptimizerConfig{});
  m.def("discord_measured_on", &discord_measured_on, py::arg("rho"), py::arg("measured"),
        py::arg("other"), py::arg("config") = OptimizerConfig{});
  m.def("measured_conditional_entropy", &measured_conditional_entropy, py::arg("rho"), py::arg("basis"),
        py::arg("side") = Side::First);

  // Uncertainty and bounds

  py::class_<UncertaintyReport>(m, "UncertaintyReport")
      .def_readonly("s_q_given_b", &UncertaintyReport::s_q_given_b)
      .def_readonly("s_r_given_b", &UncertaintyReport::s_r_given_b)
      .def_readonly("log_inv_c", &UncertaintyReport::log_inv_c)
      .def_readonly("s_a_given_b", &UncertaintyReport::s_a_given_b)
      .def_readonly("delta_t", &UncertaintyReport::delta_t)
      .def_readonly("s_qq", &UncertaintyReport::s_qq)
      .def_readonly("s_rr", &UncertaintyReport::s_rr)
      .def_readonly("p_q", &UncertaintyReport::p_q)
      .def_readonly("p_r", &UncertaintyReport::p_r)
      .def_readonly("delta_m", &UncertaintyReport::delta_m)
      .def_readonly("delta_f", &UncertaintyReport::delta_f);
  m.def("uncertainty_report", &uncertainty_report, py::arg("rho"), py::arg("pair"));
  m.def("delta_tomographic", &delta_tomographic, py::arg("rho"), py::arg("pair"));
  m.def("delta_measured", &delta_measured, py::arg("rho"), py::arg("pair"));
  m.def("delta_fano", &delta_fano, py::arg("rho"), py::arg("pair"));

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("s_rho_a", &BoundReport::s_rho_a)
      .def_readonly("mutual_info", &BoundReport::mutual_info)
      .def_readonly("marginal_information", &BoundReport::marginal_information)
      .def_readonly("branch", &BoundReport::branch)
      .def_readonly("lambda_t", &BoundReport::lambda_t)
      .def_readonly("lambda_m", &BoundReport::lambda_m)
      .def_readonly("lambda_f", &BoundReport::lambda_f)
      .def_readonly("best_bound", &BoundReport::best_bound);
  m.def("lambda_bounds", py::overload_cast<const DensityMatrix&, const ObservablePair&>(&lambda_bounds),
        py::arg("rho"), py::arg("pair"));

  py::class_<EurCheck>(m, "EurCheck")
      .def_readonly("lhs", &EurCheck::lhs)
      .def_readonly("berta_bound", &EurCheck::berta_bound)
      .def_readonly("tightened_bound", &EurCheck::tightened_bound)
      .def_readonly("berta_slack", &EurCheck::berta_slack)
      .def_readonly("tightened_slack", &EurCheck::tightened_slack)
      .def_readonly("imbalance", &EurCheck::imbalance);
  m.def("eur_check",
        py::overload_cast<const DensityMatrix&, const ObservablePair&, const OptimizerConfig&>(&eur_check),
        py::arg("rho"), py::arg("pair"), py::arg("config") = OptimizerConfig{});

  // Shareability

  py::class_<SameSideReport>(m, "SameSideReport")
      .def_readonly("d_ab", &SameSideReport::d_ab)
      .def_readonly("d_ac", &SameSideReport::d_ac)
      .def_readonly("d_a_bc", &SameSideReport::d_a_bc)
      .def_readonly("delta_t", &SameSideReport::delta_t)
      .def_readonly("lhs", &SameSideReport::lhs)
      .def_readonly("rhs", &SameSideReport::rhs)
      .def_readonly("slack", &SameSideReport::slack)
      .def_readonly("precondition_gap", &SameSideReport::precondition_gap)
      .def_readonly("precondition_met", &SameSideReport::precondition_met)
      .def_readonly("tau_d", &SameSideReport::tau_d)
      .def_readonly("koashi_winter_slack", &SameSideReport::koashi_winter_slack)
      .def_readonly("imbalance_ab", &SameSideReport::imbalance_ab);
  m.def("same_side_shareability", &same_side_shareability, py::arg("rho_abc"), py::arg("pair"),
        py::arg("config") = OptimizerConfig{});

  py::class_<CrossSideReport>(m, "CrossSideReport")
      .def_readonly("d_b_ab", &CrossSideReport::d_b_ab)
      .def_readonly("d_c_ac", &CrossSideReport::d_c_ac)
      .def_readonly("d_bc_a", &CrossSideReport::d_bc_a)
      .def_readonly("delta_bar", &CrossSideReport::delta_bar)
      .def_readonly("lhs", &CrossSideReport::lhs)
      .def_readonly("rhs", &CrossSideReport::rhs)
      .def_readonly("slack", &CrossSideReport::slack);
  m.def("cross_side_shareability", &cross_side_shareability, py::arg("rho_abc"), py::arg("pair_b"),
        py::arg("pair_c"), py::arg("config") = OptimizerConfig{});

  py::class_<MeasuredPartyBound>(m, "MeasuredPartyBound")
      .def_readonly("lhs", &MeasuredPartyBound::lhs)
      .def_readonly("rhs", &MeasuredPartyBound::rhs)
      .def_readonly("slack", &MeasuredPartyBound::slack);
  m.def("measured_party_bound", &measured_party_bound, py::arg("rho_abc"), py::arg("party"), py::arg("pair"),
        py::arg("config") = OptimizerConfig{});
  m.def("koashi_winter_slack", &koashi_winter_slack, py::arg("rho_abc"), py::arg("config") = OptimizerConfig{});
  m.def("discord_monogamy_score", &discord_monogamy_score, py::arg("rho_abc"),
        py::arg("config") = OptimizerConfig{});
  m.def("concurrence", &concurrence, py::arg("rho"));
  m.def("entanglement_of_formation", &entanglement_of_formation, py::arg("rho"));

  // Campaigns (plain dicts)

  m.def("sweep_pseudopure", [](std::size_t d, std::vector<double> u, double r_min, double r_max, int steps,
                               unsigned threads) {
        SweepOptions o;
        o.d = d;
        o.u = std::move(u);
        o.r_min = r_min;
        o.r_max = r_max;
        o.steps = steps;
        o.threads = threads;
        std::vector<SweepRow> rows;
        {
          py::gil_scoped_release release;
          rows = sweep_pseudopure(o);
        }
        return to_python(sweep_json(rows));
      }, py::arg("d"), py::arg("u"), py::arg("r_min") = 0.0, py::arg("r_max") = 1.0, py::arg("steps") = 101,
      py::arg("threads") = 0);

  m.def("run_fuzz", [](const std::string& family, const std::string& check, int samples, std::uint64_t seed,
                       bool random_pairs, unsigned threads) {
        FuzzOptions o;
        o.family = family;
        o.check = parse_fuzz_check(check);
        o.samples = samples;
        o.seed = seed;
        o.pair = random_pairs ? PairMode::Random : PairMode::Complementary;
        o.threads = threads;
        FuzzResult r;
        {
          py::gil_scoped_release release;
          r = run_fuzz(o);
        }
        return to_python(to_json(r.summary));
      }, py::arg("family"), py::arg("check"), py::arg("samples") = 100, py::arg("seed") = 0,
      py::arg("random_pairs") = false, py::arg("threads") = 0);
}
