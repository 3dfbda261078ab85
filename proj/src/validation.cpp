#include "qqd/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "parallel.hpp"
#include "qqd/closed_forms.hpp"
#include "qqd/errors.hpp"
#include "qqd/measures.hpp"

namespace qqd {

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n, lo);
  for (std::size_t k = 0; k < n; ++k) v[k] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / (n - 1);
  if (n > 1) v.back() = hi;
  return v;
}

struct Worst {
  double dev = 0.0;
  double param = 0.0;
  double t_gamma = 0.0;
  void offer(double d, double p, double t) {
    if (d > dev || std::isnan(d)) *this = {d, p, t};
  }
};

// Negativity and geometric discord of the channel-evolved family state
// against the closed forms, over the (param, t_gamma) grid.
void closed_form_suite(Family family, NoiseMode mode, const VerifyOptions& o, std::vector<DeviationEntry>& out) {
  const auto params = linspace(0.0, StateParameter::upper_bound(family), o.n_params);
  const auto times = linspace(0.0, o.t_gamma_max, o.n_times);
  const NoiseConfig noise(1.0, mode);

  std::vector<Worst> neg(params.size()), geo(params.size());
  detail::parallel_for(params.size(), o.workers, [&](std::size_t i) {
    const double p = params[i];
    const DensityMatrix rho0 = family_state(StateParameter{family, p});
    for (double tg : times) {
      const DensityMatrix rho = apply_channel(rho0, tg, noise);
      const ClosedFormQuery q(family, mode, p, DephasingFactor::from_t_gamma(tg).gamma_tilde());
      const double n_ref = family == Family::Entangled ? closed_negativity(q) : 0.0;
      neg[i].offer(std::abs(negativity(rho) - n_ref), p, tg);
      geo[i].offer(std::abs(geometric_discord(rho) - closed_geometric_discord(q)), p, tg);
    }
  });

  auto merge = [](const std::vector<Worst>& parts) {
    Worst w;
    for (const auto& p : parts) w.offer(p.dev, p.param, p.t_gamma);
    return w;
  };
  const std::string fam(to_string(family)), md(to_string(mode));
  const Worst wn = merge(neg), wg = merge(geo);
  out.push_back({fam, md, "negativity", wn.dev, wn.param, wn.t_gamma, o.closed_form_tol});
  out.push_back({fam, md, "geometric", wg.dev, wg.param, wg.t_gamma, o.closed_form_tol});
}

double z_score(Complex estimate, Complex analytic, double se) {
  const double dev = std::abs(estimate - analytic);
  if (se > 0.0) return dev / se;
  return dev == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

}  // namespace

DensityMatrix random_density_matrix(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  ComplexMatrix g(kJointDim);
  for (std::size_t i = 0; i < kJointDim; ++i) {
    for (std::size_t j = 0; j < kJointDim; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  ComplexMatrix m = g * g.adjoint();
  m *= 1.0 / m.trace().real();
  // Exact Hermitian symmetry.
  ComplexMatrix sym = m + m.adjoint();
  sym *= 0.5;
  return DensityMatrix(std::move(sym));
}

bool VerifyReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const DeviationEntry& e) { return e.passed(); });
}

void VerifyReport::throw_if_failed() const {
  const DeviationEntry* worst = nullptr;
  for (const auto& e : entries) {
    if (!e.passed() && (!worst || e.max_abs_deviation / e.tolerance > worst->max_abs_deviation / worst->tolerance)) {
      worst = &e;
    }
  }
  if (worst) {
    throw ToleranceBreach(worst->family + "/" + worst->mode + "/" + worst->measure + ": deviation " +
                          std::to_string(worst->max_abs_deviation) + " at param " + std::to_string(worst->worst_param) +
                          ", t_gamma " + std::to_string(worst->worst_t_gamma) + " exceeds " +
                          std::to_string(worst->tolerance));
  }
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.n_params < 2 || options.n_times < 1) throw InvalidConfig("verify grid too small");
  VerifyReport report;
  for (Family family : {Family::Entangled, Family::Separable}) {
    for (NoiseMode mode : {NoiseMode::Multilocal, NoiseMode::Collective}) {
      closed_form_suite(family, mode, options, report.entries);
    }
  }

  std::vector<double> dev(options.n_random_states);
  detail::parallel_for(options.n_random_states, options.workers, [&](std::size_t k) {
    const DensityMatrix rho = random_density_matrix(options.seed + k);
    dev[k] = std::abs(geometric_discord(rho) - geometric_discord_variational_oracle(rho, options.search));
  });
  Worst w;
  for (std::size_t k = 0; k < dev.size(); ++k) w.offer(dev[k], static_cast<double>(k), 0.0);
  report.entries.push_back({"random", "none", "geometric_oracle", w.dev, w.param, 0.0, options.oracle_tol});
  return report;
}

bool MonteCarloReport::passed() const {
  return !points.empty() && std::all_of(points.begin(), points.end(), [](const MonteCarloPoint& p) { return p.passed; });
}

MonteCarloReport run_montecarlo(const DensityMatrix& rho0, const NoiseConfig& noise, const TrajectoryConfig& tcfg,
                                const MonteCarloOptions& options) {
  if (options.t_gammas.empty()) throw InvalidConfig("no Monte Carlo sample times");
  MonteCarloReport report;
  for (double tg : options.t_gammas) {
    const double t = tg / noise.gamma_rate();
    const DensityMatrix exact = apply_channel(rho0, t, noise);
    const TrajectoryEstimate est = simulate_trajectories(rho0, t, noise, tcfg);
    MonteCarloPoint point;
    point.t_gamma = tg;
    std::size_t within = 0;
    for (std::size_t i = 0; i < kJointDim; ++i) {
      for (std::size_t j = 0; j < kJointDim; ++j) {
        EntryZScore e{i, j, exact(i, j), est.mean(i, j), est.se(i, j), 0.0};
        e.z = z_score(e.estimate, e.analytic, e.std_error);
        if (e.z <= options.z_threshold) ++within;
        point.entries.push_back(e);
      }
    }
    point.fraction_within = static_cast<double>(within) / static_cast<double>(point.entries.size());
    point.passed = point.fraction_within >= options.pass_fraction;
    report.points.push_back(std::move(point));
  }
  return report;
}

MonteCarloReport run_montecarlo(const SweepConfig& cfg, const TrajectoryConfig& tcfg, const MonteCarloOptions& options) {
  return run_montecarlo(family_state(StateParameter{cfg.family, cfg.param}), NoiseConfig(cfg.gamma_rate, cfg.mode),
                        tcfg, options);
}

}  // namespace qqd
