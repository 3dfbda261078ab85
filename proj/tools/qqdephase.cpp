// Command-line front-end: sweep, verify, montecarlo, transitions.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qqd/errors.hpp"
#include "qqd/sweep.hpp"
#include "qqd/transitions.hpp"
#include "qqd/validation.hpp"

namespace {

enum ExitCode { kOk = 0, kConfigError = 2, kToleranceBreach = 3, kIoFailure = 4 };

using nlohmann::json;

struct Args {
  std::string family = "entangled";
  double param = 0.0;
  std::string mode = "multilocal";
  double rate = 1.0;
  double tmax = 5.0;
  std::size_t points = 201;
  std::string measures = "negativity,discord,geometric,classical,mutual";
  std::string format = "csv";
  std::string out;
  std::string in;
  std::uint64_t seed = 42;
  std::size_t trajectories = 10000;
  double dt = 0.0;
  double mu = 1.0;
  std::vector<double> times{0.5, 1.0, 2.0};
  double plateau_threshold = qqd::kDefaultPlateauThreshold;
  unsigned workers = 0;
  std::size_t verify_params = 51;
  std::size_t verify_times = 41;
  std::size_t random_states = 200;
  double closed_form_tol = 1e-8;
  double oracle_tol = 1e-5;
};

qqd::SweepConfig sweep_config(const Args& a) {
  qqd::SweepConfig cfg;
  cfg.family = qqd::parse_family(a.family);
  cfg.param = a.param;
  cfg.mode = qqd::parse_mode(a.mode);
  cfg.gamma_rate = a.rate;
  cfg.t_gamma_max = a.tmax;
  cfg.n_points = a.points;
  cfg.measures = qqd::parse_measure_list(a.measures);
  cfg.output_format = qqd::parse_format(a.format);
  cfg.output_path = a.out;
  cfg.workers = a.workers;
  cfg.validate();
  return cfg;
}

// Writes to --out when given, stdout otherwise.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    qqd::write_text_file(path, text);
  }
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_sweep(const Args& a) {
  auto cfg = sweep_config(a);
  const std::string path = cfg.output_path;
  cfg.output_path.clear();
  const auto rows = qqd::compute_sweep(cfg);
  emit(path, cfg.output_format == qqd::OutputFormat::Csv ? qqd::format_csv(rows, cfg) : qqd::format_json(rows, cfg));
  return kOk;
}

int cmd_verify(const Args& a) {
  qqd::VerifyOptions opt;
  opt.n_params = a.verify_params;
  opt.n_times = a.verify_times;
  opt.n_random_states = a.random_states;
  opt.seed = a.seed;
  opt.workers = a.workers;
  opt.closed_form_tol = a.closed_form_tol;
  opt.oracle_tol = a.oracle_tol;
  const auto report = qqd::run_verify(opt);

  std::ostringstream os;
  if (qqd::parse_format(a.format) == qqd::OutputFormat::Json) {
    json entries = json::array();
    for (const auto& e : report.entries) {
      entries.push_back({{"family", e.family},
                         {"mode", e.mode},
                         {"measure", e.measure},
                         {"max_abs_deviation", e.max_abs_deviation},
                         {"worst_param", e.worst_param},
                         {"worst_t_gamma", e.worst_t_gamma},
                         {"tolerance", e.tolerance},
                         {"passed", e.passed()}});
    }
    os << json{{"passed", report.passed()}, {"entries", entries}}.dump(2) << '\n';
  } else {
    os << "family,mode,measure,max_abs_deviation,worst_param,worst_t_gamma,tolerance,passed\n";
    for (const auto& e : report.entries) {
      os << e.family << ',' << e.mode << ',' << e.measure << ',' << format_number(e.max_abs_deviation) << ','
         << format_number(e.worst_param) << ',' << format_number(e.worst_t_gamma) << ','
         << format_number(e.tolerance) << ',' << (e.passed() ? "true" : "false") << '\n';
    }
  }
  emit(a.out, os.str());
  report.throw_if_failed();
  return kOk;
}

int cmd_montecarlo(const Args& a) {
  auto cfg = sweep_config(a);
  qqd::TrajectoryConfig tcfg;
  tcfg.mu = a.mu;
  tcfg.n_trajectories = a.trajectories;
  if (a.dt > 0.0) tcfg.dt = a.dt;
  tcfg.seed = a.seed;
  tcfg.workers = a.workers;
  qqd::MonteCarloOptions opt;
  opt.t_gammas = a.times;
  const auto report = qqd::run_montecarlo(cfg, tcfg, opt);

  std::ostringstream os;
  if (cfg.output_format == qqd::OutputFormat::Json) {
    json points = json::array();
    for (const auto& p : report.points) {
      json entries = json::array();
      for (const auto& e : p.entries) {
        entries.push_back({{"row", e.row},
                           {"col", e.col},
                           {"analytic", {e.analytic.real(), e.analytic.imag()}},
                           {"estimate", {e.estimate.real(), e.estimate.imag()}},
                           {"std_error", e.std_error},
                           {"z", std::isfinite(e.z) ? json(e.z) : json("inf")}});
      }
      points.push_back(
          {{"t_gamma", p.t_gamma}, {"fraction_within", p.fraction_within}, {"passed", p.passed}, {"entries", entries}});
    }
    os << json{{"passed", report.passed()}, {"points", points}}.dump(2) << '\n';
  } else {
    os << "t_gamma,row,col,analytic_re,analytic_im,estimate_re,estimate_im,std_error,z\n";
    for (const auto& p : report.points) {
      for (const auto& e : p.entries) {
        os << format_number(p.t_gamma) << ',' << e.row << ',' << e.col << ',' << format_number(e.analytic.real())
           << ',' << format_number(e.analytic.imag()) << ',' << format_number(e.estimate.real()) << ','
           << format_number(e.estimate.imag()) << ',' << format_number(e.std_error) << ',' << format_number(e.z)
           << '\n';
      }
    }
  }
  emit(cfg.output_path, os.str());
  for (const auto& p : report.points) {
    std::cerr << "t_gamma=" << p.t_gamma << " within=" << p.fraction_within << (p.passed ? " pass" : " FAIL") << '\n';
  }
  return report.passed() ? kOk : kToleranceBreach;
}

int cmd_transitions(const Args& a) {
  if (a.in.empty()) throw qqd::InvalidConfig("--in <sweep.csv> is required");
  const auto rows = qqd::parse_csv(qqd::read_text_file(a.in));
  qqd::TransitionOptions opt;
  opt.plateau_threshold = a.plateau_threshold;
  const auto found = qqd::detect_transitions(rows, opt);

  std::ostringstream os;
  if (qqd::parse_format(a.format) == qqd::OutputFormat::Json) {
    json arr = json::array();
    for (const auto& t : found) {
      arr.push_back({{"t_gamma", t.t_gamma}, {"measure", t.measure}, {"kind", std::string(qqd::to_string(t.kind))}});
    }
    os << arr.dump(2) << '\n';
  } else {
    os << "t_gamma,measure,kind\n";
    for (const auto& t : found) os << format_number(t.t_gamma) << ',' << t.measure << ',' << qqd::to_string(t.kind) << '\n';
  }
  emit(a.out, os.str());
  return kOk;
}

void add_state_flags(CLI::App* cmd, Args& a) {
  cmd->add_option("--family", a.family, "State family")->check(CLI::IsMember({"entangled", "separable"}));
  cmd->add_option("--param", a.param, "Family parameter p or r");
  cmd->add_option("--mode", a.mode, "Noise mode")->check(CLI::IsMember({"multilocal", "collective", "combined"}));
  cmd->add_option("--rate", a.rate, "Dephasing rate Gamma");
}

}  // namespace

int main(int argc, char** argv) {
  Args a;
  CLI::App app{"Qubit-qutrit correlations under classical dephasing noise"};
  app.require_subcommand(1);
  app.add_option("--workers", a.workers, "Worker threads (0 = hardware concurrency)");

  auto* sweep = app.add_subcommand("sweep", "Correlation measures along the time grid");
  add_state_flags(sweep, a);
  sweep->add_option("--tmax", a.tmax, "Horizon in units of t*Gamma");
  sweep->add_option("--points", a.points, "Number of grid points");
  sweep->add_option("--measures", a.measures, "Comma list of negativity,discord,geometric,classical,mutual");
  sweep->add_option("--format", a.format, "csv or json");
  sweep->add_option("--out", a.out, "Output path (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "Closed-form and variational oracle checks");
  verify->add_option("--params", a.verify_params, "Parameter grid size");
  verify->add_option("--times", a.verify_times, "Time grid size");
  verify->add_option("--states", a.random_states, "Random states for the geometric-discord oracle");
  verify->add_option("--seed", a.seed, "Seed for the random states");
  verify->add_option("--closed-form-tol", a.closed_form_tol, "Tolerance against the closed forms");
  verify->add_option("--oracle-tol", a.oracle_tol, "Tolerance against the variational oracle");
  verify->add_option("--format", a.format, "csv or json");
  verify->add_option("--out", a.out, "Report path (stdout when omitted)");

  auto* mc = app.add_subcommand("montecarlo", "Trajectory average against the analytic channel");
  add_state_flags(mc, a);
  mc->add_option("--seed", a.seed, "Trajectory seed");
  mc->add_option("--trajectories", a.trajectories, "Number of trajectories");
  mc->add_option("--dt", a.dt, "Integration step (default t/1000)");
  mc->add_option("--mu", a.mu, "Coupling strength");
  mc->add_option("--times", a.times, "Sample points in units of t*Gamma");
  mc->add_option("--format", a.format, "csv or json");
  mc->add_option("--out", a.out, "Report path (stdout when omitted)");

  auto* tr = app.add_subcommand("transitions", "Plateaus and zero crossings in a sweep CSV");
  tr->add_option("--in", a.in, "Sweep CSV")->required();
  tr->add_option("--plateau-threshold", a.plateau_threshold, "Flatness threshold per unit t*Gamma");
  tr->add_option("--format", a.format, "csv or json");
  tr->add_option("--out", a.out, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    if (*sweep) return cmd_sweep(a);
    if (*verify) return cmd_verify(a);
    if (*mc) return cmd_montecarlo(a);
    return cmd_transitions(a);
  } catch (const qqd::ToleranceBreach& e) {
    std::cerr << "tolerance breach: " << e.what() << '\n';
    return kToleranceBreach;
  } catch (const qqd::IoFailure& e) {
    std::cerr << "I/O failure: " << e.what() << '\n';
    return kIoFailure;
  } catch (const qqd::Error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigError;
  }
}
