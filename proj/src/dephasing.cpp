#include "qqd/dephasing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "qqd/errors.hpp"

namespace qqd {

namespace {

// Eigenvalues of sigma_z and c_z indexed by the local basis label.
constexpr std::array<int, kQubitDim> kSigmaZ{1, -1};
constexpr std::array<int, kQutritDim> kCz{1, 0, -1};

int delta_a(std::size_t i, std::size_t j) {
  return kSigmaZ[i / kQutritDim] - kSigmaZ[j / kQutritDim];
}
int delta_b(std::size_t i, std::size_t j) {
  return kCz[i % kQutritDim] - kCz[j % kQutritDim];
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based stream: output n is a bijective mix of (key, n).
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(splitmix64(seed ^ splitmix64(stream ^ 0xd1b54a32d192ed03ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * counter_++); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Upper-triangle (i <= j) entries, the only ones simulated; the rest follow by
// Hermiticity.
struct EntryPair {
  std::size_t row;
  std::size_t col;
  int da;
  int db;
};

std::vector<EntryPair> upper_triangle() {
  std::vector<EntryPair> pairs;
  for (std::size_t i = 0; i < kJointDim; ++i) {
    for (std::size_t j = i; j < kJointDim; ++j) pairs.push_back({i, j, delta_a(i, j), delta_b(i, j)});
  }
  return pairs;
}

// Moment sums of the phase factor exp(i dphi) over a block of trajectories.
struct Moments {
  std::vector<double> re, im, re2, im2;
  explicit Moments(std::size_t n) : re(n), im(n), re2(n), im2(n) {}
  void add(const Moments& o) {
    for (std::size_t k = 0; k < re.size(); ++k) {
      re[k] += o.re[k];
      im[k] += o.im[k];
      re2[k] += o.re2[k];
      im2[k] += o.im2[k];
    }
  }
};

constexpr std::size_t kBlockSize = 64;

}  // namespace

NoiseConfig::NoiseConfig(double gamma_rate, NoiseMode mode) : gamma_rate_(gamma_rate), mode_(mode) {
  if (!(gamma_rate > 0.0) || !std::isfinite(gamma_rate)) {
    throw InvalidConfig("NoiseConfig: gamma_rate must be positive, got " + std::to_string(gamma_rate));
  }
}

DephasingFactor DephasingFactor::from_t_gamma(double t_gamma) {
  if (!(t_gamma >= 0.0)) throw NegativeTime("DephasingFactor: t*Gamma = " + std::to_string(t_gamma));
  return DephasingFactor(t_gamma, std::exp(-t_gamma / 8.0), std::exp(-t_gamma));
}

DephasingFactor DephasingFactor::from_gamma_tilde(double gamma_tilde) {
  if (!(gamma_tilde > 0.0 && gamma_tilde <= 1.0)) {
    throw ParameterOutOfRange("DephasingFactor: gamma_tilde = " + std::to_string(gamma_tilde) +
                              " outside (0, 1]");
  }
  return DephasingFactor(-std::log(gamma_tilde), std::pow(gamma_tilde, 0.125), gamma_tilde);
}

ExponentMatrix dephasing_exponents(NoiseMode mode) {
  ExponentMatrix k{};
  for (std::size_t i = 0; i < kJointDim; ++i) {
    for (std::size_t j = 0; j < kJointDim; ++j) {
      const int da = delta_a(i, j), db = delta_b(i, j);
      const int local = da * da + db * db;
      const int shared = (da + db) * (da + db);
      switch (mode) {
        case NoiseMode::Multilocal: k[i][j] = local; break;
        case NoiseMode::Collective: k[i][j] = shared; break;
        case NoiseMode::Combined: k[i][j] = local + shared; break;
      }
    }
  }
  return k;
}

DensityMatrix apply_channel(const DensityMatrix& rho0, double t, const NoiseConfig& cfg) {
  if (!(t >= 0.0)) throw NegativeTime("apply_channel: t = " + std::to_string(t));
  if (rho0.dim() != kJointDim) throw DimensionMismatch("apply_channel: expected a 6x6 state");
  const auto k = dephasing_exponents(cfg.mode());
  const double rate = cfg.gamma_rate() * t / 8.0;
  ComplexMatrix out = rho0.matrix();
  for (std::size_t i = 0; i < kJointDim; ++i) {
    for (std::size_t j = 0; j < kJointDim; ++j) {
      if (k[i][j] != 0) out(i, j) *= std::exp(-k[i][j] * rate);
    }
  }
  return DensityMatrix(std::move(out), rho0.herm_tol(), rho0.psd_tol());
}

TrajectoryEstimate simulate_trajectories(const DensityMatrix& rho0, double t, const NoiseConfig& cfg,
                                         const TrajectoryConfig& tcfg) {
  if (!(t >= 0.0)) throw NegativeTime("simulate_trajectories: t = " + std::to_string(t));
  if (rho0.dim() != kJointDim) throw DimensionMismatch("simulate_trajectories: expected a 6x6 state");
  if (!(tcfg.mu > 0.0)) throw InvalidTrajectoryConfig("mu must be positive");
  if (tcfg.n_trajectories < 100) {
    throw InvalidTrajectoryConfig("need at least 100 trajectories, got " +
                                  std::to_string(tcfg.n_trajectories));
  }
  if (t == 0.0) return TrajectoryEstimate{rho0, {}};

  const double dt = tcfg.dt.value_or(t / 1000.0);
  if (!(dt > 0.0) || dt > t / 100.0 * (1.0 + 1e-12)) {
    throw InvalidTrajectoryConfig("dt = " + std::to_string(dt) + " must lie in (0, t/100]");
  }
  const auto n_steps = static_cast<std::size_t>(std::ceil(t / dt - 1e-9));
  const double step = t / static_cast<double>(n_steps);

  const bool local = cfg.mode() != NoiseMode::Collective;
  const bool shared = cfg.mode() != NoiseMode::Multilocal;
  // Field value per step has variance Gamma / (mu^2 step); its integral over
  // the step has standard deviation sqrt(Gamma step) / mu.
  const double increment_sd = std::sqrt(cfg.gamma_rate() * step) / tcfg.mu;
  const double half_mu = 0.5 * tcfg.mu;

  const auto pairs = upper_triangle();
  const std::size_t n_traj = tcfg.n_trajectories;
  const std::size_t n_blocks = (n_traj + kBlockSize - 1) / kBlockSize;
  std::vector<Moments> blocks(n_blocks, Moments(pairs.size()));

  auto run_block = [&](std::size_t b) {
    Moments& m = blocks[b];
    const std::size_t end = std::min(n_traj, (b + 1) * kBlockSize);
    for (std::size_t traj = b * kBlockSize; traj < end; ++traj) {
      CounterRng rng(tcfg.seed, traj);
      std::normal_distribution<double> normal(0.0, increment_sd);
      double wa = 0.0, wb = 0.0, wab = 0.0;
      for (std::size_t s = 0; s < n_steps; ++s) {
        if (local) {
          wa += normal(rng);
          wb += normal(rng);
        }
        if (shared) wab += normal(rng);
      }
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& e = pairs[k];
        const double phase = half_mu * (wa * e.da + wb * e.db + wab * (e.da + e.db));
        const double c = std::cos(phase), s = std::sin(phase);
        m.re[k] += c;
        m.im[k] += s;
        m.re2[k] += c * c;
        m.im2[k] += s * s;
      }
    }
  };

  unsigned workers = tcfg.workers != 0 ? tcfg.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n_blocks));
  if (workers <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) run_block(b);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t b = w; b < n_blocks; b += workers) run_block(b);
      });
    }
  }

  Moments total(pairs.size());
  for (const auto& b : blocks) total.add(b);

  const auto n = static_cast<double>(n_traj);
  ComplexMatrix mean(kJointDim);
  std::array<double, kJointDim * kJointDim> se{};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& e = pairs[k];
    const double mre = total.re[k] / n, mim = total.im[k] / n;
    const double var_re = std::max(0.0, (total.re2[k] - n * mre * mre) / (n - 1.0));
    const double var_im = std::max(0.0, (total.im2[k] - n * mim * mim) / (n - 1.0));
    const Complex factor(mre, mim);
    const double factor_se = std::sqrt((var_re + var_im) / n);
    mean(e.row, e.col) = rho0(e.row, e.col) * factor;
    mean(e.col, e.row) = std::conj(mean(e.row, e.col));
    se[e.row * kJointDim + e.col] = std::abs(rho0(e.row, e.col)) * factor_se;
    se[e.col * kJointDim + e.row] = se[e.row * kJointDim + e.col];
  }
  return TrajectoryEstimate{DensityMatrix(std::move(mean), rho0.herm_tol(), rho0.psd_tol()), se};
}

}  // namespace qqd
