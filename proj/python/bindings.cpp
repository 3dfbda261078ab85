#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qqd/closed_forms.hpp"
#include "qqd/errors.hpp"
#include "qqd/measures.hpp"
#include "qqd/sweep.hpp"
#include "qqd/transitions.hpp"
#include "qqd/validation.hpp"

namespace py = pybind11;

namespace {

using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

qqd::ComplexMatrix to_matrix(const ComplexArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw qqd::DimensionMismatch("expected a square 2-D array");
  const auto n = static_cast<std::size_t>(a.shape(0));
  const auto* data = a.data();
  return qqd::ComplexMatrix(n, std::vector<qqd::Complex>(data, data + n * n));
}

qqd::DensityMatrix to_state(const ComplexArray& a) { return qqd::DensityMatrix(to_matrix(a)); }

ComplexArray to_array(const qqd::ComplexMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  ComplexArray out({n, n});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

qqd::NoiseMode mode_of(const std::string& s) { return qqd::parse_mode(s); }
qqd::Family family_of(const std::string& s) { return qqd::parse_family(s); }

py::dict row_to_dict(const qqd::SweepRow& r) {
  py::dict d;
  d["t_gamma"] = r.t_gamma;
  auto put = [&](const char* key, const std::optional<double>& v) {
    if (v) d[key] = *v;
  };
  put("negativity", r.negativity);
  put("discord", r.discord);
  put("geometric_x2", r.geometric_x2);
  put("classical", r.classical);
  put("mutual", r.mutual);
  put("optimal_theta", r.optimal_theta);
  put("optimal_phi", r.optimal_phi);
  return d;
}

qqd::SweepConfig sweep_config(const std::string& family, double param, const std::string& mode, double t_gamma_max,
                              std::size_t n_points, const std::string& measures, double gamma_rate) {
  qqd::SweepConfig cfg;
  cfg.family = family_of(family);
  cfg.param = param;
  cfg.mode = mode_of(mode);
  cfg.t_gamma_max = t_gamma_max;
  cfg.n_points = n_points;
  cfg.measures = qqd::parse_measure_list(measures);
  cfg.gamma_rate = gamma_rate;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Qubit-qutrit correlations under classical dephasing noise";

  auto base = py::register_exception<qqd::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<qqd::InvalidState>(m, "InvalidState", base.ptr());
  py::register_exception<qqd::ParameterOutOfRange>(m, "ParameterOutOfRange", base.ptr());
  py::register_exception<qqd::InvalidConfig>(m, "InvalidConfig", base.ptr());
  py::register_exception<qqd::InvalidTrajectoryConfig>(m, "InvalidTrajectoryConfig", base.ptr());
  py::register_exception<qqd::NegativeTime>(m, "NegativeTime", base.ptr());
  py::register_exception<qqd::DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<qqd::IoFailure>(m, "IoFailure", base.ptr());
  py::register_exception<qqd::InsufficientData>(m, "InsufficientData", base.ptr());
  py::register_exception<qqd::ToleranceBreach>(m, "ToleranceBreach", base.ptr());

  m.def("rho_entangled", [](double p) { return to_array(qqd::rho_entangled(p).matrix()); }, py::arg("p"));
  m.def("rho_separable", [](double r) { return to_array(qqd::rho_separable(r).matrix()); }, py::arg("r"));
  m.def("random_density_matrix", [](std::uint64_t seed) { return to_array(qqd::random_density_matrix(seed).matrix()); },
        py::arg("seed"));

  m.def("hermitian_eigenvalues", [](const ComplexArray& a) { return qqd::hermitian_eigenvalues(to_matrix(a)); },
        py::arg("matrix"));
  m.def("partial_transpose_qubit", [](const ComplexArray& a) { return to_array(qqd::partial_transpose_qubit(to_matrix(a))); },
        py::arg("rho"));
  m.def(
      "partial_trace",
      [](const ComplexArray& a, const std::string& keep) {
        if (keep != "A" && keep != "B") throw qqd::InvalidConfig("keep must be 'A' or 'B'");
        return to_array(qqd::partial_trace(to_state(a), keep == "A" ? qqd::Subsystem::A : qqd::Subsystem::B).matrix());
      },
      py::arg("rho"), py::arg("keep"));

  m.def(
      "apply_channel",
      [](const ComplexArray& rho, double t, const std::string& mode, double gamma_rate) {
        return to_array(qqd::apply_channel(to_state(rho), t, qqd::NoiseConfig(gamma_rate, mode_of(mode))).matrix());
      },
      py::arg("rho"), py::arg("t"), py::arg("mode") = "multilocal", py::arg("gamma_rate") = 1.0);
  m.def(
      "simulate_trajectories",
      [](const ComplexArray& rho, double t, const std::string& mode, double gamma_rate, std::size_t n_trajectories,
         std::uint64_t seed, double mu, std::optional<double> dt) {
        qqd::TrajectoryConfig tcfg;
        tcfg.n_trajectories = n_trajectories;
        tcfg.seed = seed;
        tcfg.mu = mu;
        tcfg.dt = dt;
        const auto est = qqd::simulate_trajectories(to_state(rho), t, qqd::NoiseConfig(gamma_rate, mode_of(mode)), tcfg);
        py::array_t<double> se({6, 6});
        std::copy(est.std_error.begin(), est.std_error.end(), se.mutable_data());
        return py::make_tuple(to_array(est.mean.matrix()), se);
      },
      py::arg("rho"), py::arg("t"), py::arg("mode") = "multilocal", py::arg("gamma_rate") = 1.0,
      py::arg("n_trajectories") = 10000, py::arg("seed") = 0, py::arg("mu") = 1.0, py::arg("dt") = py::none());

  m.def("negativity", [](const ComplexArray& rho) { return qqd::negativity(to_state(rho)); }, py::arg("rho"));
  m.def("von_neumann_entropy", [](const ComplexArray& rho) { return qqd::von_neumann_entropy(to_state(rho)); },
        py::arg("rho"));
  m.def("mutual_information", [](const ComplexArray& rho) { return qqd::mutual_information(to_state(rho)); },
        py::arg("rho"));
  m.def(
      "measured_conditional_entropy",
      [](const ComplexArray& rho, double theta, double phi) {
        return qqd::measured_conditional_entropy(to_state(rho), {theta, phi});
      },
      py::arg("rho"), py::arg("theta"), py::arg("phi"));
  m.def(
      "classical_correlation",
      [](const ComplexArray& rho) {
        const auto c = qqd::classical_correlation(to_state(rho));
        return py::make_tuple(c.value, c.direction.theta, c.direction.phi);
      },
      py::arg("rho"), "Returns (value, theta, phi).");
  m.def("quantum_discord", [](const ComplexArray& rho) { return qqd::quantum_discord(to_state(rho)); }, py::arg("rho"));
  m.def("geometric_discord", [](const ComplexArray& rho) { return qqd::geometric_discord(to_state(rho)); },
        py::arg("rho"));
  m.def(
      "geometric_discord_variational_oracle",
      [](const ComplexArray& rho) { return qqd::geometric_discord_variational_oracle(to_state(rho)); }, py::arg("rho"));
  m.def(
      "evaluate_correlations",
      [](const ComplexArray& rho) {
        const auto r = qqd::evaluate_correlations(to_state(rho));
        py::dict d;
        d["negativity"] = r.negativity;
        d["mutual_info"] = r.mutual_info;
        d["classical"] = r.classical;
        d["discord"] = r.discord;
        d["geometric_discord"] = r.geometric_discord;
        d["geometric_discord_x2"] = r.geometric_discord_x2;
        d["optimal_theta"] = r.optimal_direction.theta;
        d["optimal_phi"] = r.optimal_direction.phi;
        return d;
      },
      py::arg("rho"));

  m.def(
      "closed_negativity",
      [](double p, const std::string& mode, double gamma_tilde) {
        return qqd::closed_negativity(qqd::ClosedFormQuery(qqd::Family::Entangled, mode_of(mode), p, gamma_tilde));
      },
      py::arg("p"), py::arg("mode"), py::arg("gamma_tilde"));
  m.def(
      "closed_geometric_discord",
      [](const std::string& family, double param, const std::string& mode, double gamma_tilde) {
        return qqd::closed_geometric_discord(qqd::ClosedFormQuery(family_of(family), mode_of(mode), param, gamma_tilde));
      },
      py::arg("family"), py::arg("param"), py::arg("mode"), py::arg("gamma_tilde"));
  m.def(
      "find_critical_times",
      [](const std::string& family, const std::string& mode, double param, double gamma_rate) {
        std::vector<std::pair<double, std::string>> out;
        for (const auto& e : qqd::find_critical_times(family_of(family), mode_of(mode), param, gamma_rate)) {
          out.emplace_back(e.t_gamma, e.description);
        }
        return out;
      },
      py::arg("family"), py::arg("mode"), py::arg("param"), py::arg("gamma_rate") = 1.0);

  m.def(
      "sweep",
      [](const std::string& family, double param, const std::string& mode, double t_gamma_max, std::size_t n_points,
         const std::string& measures, double gamma_rate) {
        py::list rows;
        for (const auto& r : qqd::compute_sweep(sweep_config(family, param, mode, t_gamma_max, n_points, measures, gamma_rate))) {
          rows.append(row_to_dict(r));
        }
        return rows;
      },
      py::arg("family"), py::arg("param"), py::arg("mode") = "multilocal", py::arg("t_gamma_max") = 5.0,
      py::arg("n_points") = 201, py::arg("measures") = "negativity,discord,geometric,classical,mutual",
      py::arg("gamma_rate") = 1.0);
  m.def(
      "sweep_csv",
      [](const std::string& family, double param, const std::string& mode, double t_gamma_max, std::size_t n_points,
         const std::string& measures, double gamma_rate) {
        const auto cfg = sweep_config(family, param, mode, t_gamma_max, n_points, measures, gamma_rate);
        return qqd::format_csv(qqd::compute_sweep(cfg), cfg);
      },
      py::arg("family"), py::arg("param"), py::arg("mode") = "multilocal", py::arg("t_gamma_max") = 5.0,
      py::arg("n_points") = 201, py::arg("measures") = "negativity,discord,geometric,classical,mutual",
      py::arg("gamma_rate") = 1.0);
  m.def(
      "detect_transitions",
      [](const std::string& csv_text, double plateau_threshold) {
        qqd::TransitionOptions opt;
        opt.plateau_threshold = plateau_threshold;
        std::vector<std::tuple<double, std::string, std::string>> out;
        for (const auto& t : qqd::detect_transitions(qqd::parse_csv(csv_text), opt)) {
          out.emplace_back(t.t_gamma, t.measure, std::string(qqd::to_string(t.kind)));
        }
        return out;
      },
      py::arg("csv_text"), py::arg("plateau_threshold") = qqd::kDefaultPlateauThreshold,
      "Returns (t_gamma, measure, kind) tuples for a sweep CSV.");
}
