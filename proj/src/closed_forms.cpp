#include "qqd/closed_forms.hpp"

#include <algorithm>
#include <cmath>

#include "qqd/errors.hpp"

namespace qqd {

namespace {

constexpr double kBisectionTol = 1e-10;
constexpr double kTieTol = 1e-13;
constexpr double kZeroTol = 1e-14;

std::size_t active_branch(const std::vector<double>& branches) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < branches.size(); ++k) {
    if (branches[k] > branches[best] + kTieTol) best = k;
  }
  return best;
}

// Scan nodes in gamma_tilde, descending from 1: fine uniform part followed by
// a geometric tail towards 0.
std::vector<double> scan_nodes() {
  constexpr int kUniform = 4096;
  std::vector<double> nodes;
  for (int k = 0; k < kUniform; ++k) nodes.push_back(1.0 - static_cast<double>(k) / kUniform);
  for (double g = 1.0 / kUniform; g > 1e-12; g *= 0.5) nodes.push_back(g);
  return nodes;
}

// Bisect on [lo, hi] (lo < hi) for the boundary where pred flips from its
// value at hi.
template <typename Pred>
double bisect(double lo, double hi, Pred pred) {
  const bool at_hi = pred(hi);
  while (hi - lo > kBisectionTol) {
    const double mid = 0.5 * (lo + hi);
    (pred(mid) == at_hi ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ClosedFormQuery::ClosedFormQuery(Family family, NoiseMode mode, double param, double gamma_tilde)
    : family_(family), mode_(mode), param_(param), gamma_tilde_(gamma_tilde) {
  if (mode == NoiseMode::Combined) throw InvalidConfig("closed forms exist only for multilocal and collective noise");
  (void)StateParameter{family, param};
  (void)DephasingFactor::from_gamma_tilde(gamma_tilde);
}

ClosedFormQuery::ClosedFormQuery(const StateParameter& param, NoiseMode mode, const DephasingFactor& factor)
    : ClosedFormQuery(param.family(), mode, param.value(), factor.gamma_tilde()) {}

double closed_negativity(const ClosedFormQuery& q) {
  if (q.family() != Family::Entangled) throw UnsupportedFamily("closed negativity exists only for the entangled family");
  const double p = q.param(), g = q.gamma_tilde();
  if (q.mode() == NoiseMode::Multilocal) {
    return 0.5 * (std::abs(p * (1.0 + 2.0 * g) - g) + std::abs(p * (2.0 + g) - 1.0) - (p - 1.0) * (g - 1.0));
  }
  const double g2 = g * g;
  return 0.5 * (std::abs(3.0 * p - 1.0) + std::abs(p * (2.0 + g2) - 1.0) - p * (1.0 - g2));
}

std::vector<double> geometric_discord_branches(const ClosedFormQuery& q) {
  const double x = q.param(), g = q.gamma_tilde(), g2 = g * g;
  const double a = (1.0 - 3.0 * x) * (1.0 - 3.0 * x);
  if (q.mode() == NoiseMode::Multilocal) {
    if (q.family() == Family::Entangled) return {a, a * g2, (1.0 - x) * (1.0 - x) * g2};
    return {a, 4.0 * x * x * g2};
  }
  if (q.family() == Family::Entangled) {
    const double b = x * (g2 - 2.0) + 1.0, c = x * (g2 + 2.0) - 1.0;
    return {a, b * b, c * c};
  }
  return {a, x * x * (1.0 - g2) * (1.0 - g2), x * x * (1.0 + g2) * (1.0 + g2)};
}

double closed_geometric_discord(const ClosedFormQuery& q) {
  const double x = q.param(), g = q.gamma_tilde(), g2 = g * g, g4 = g2 * g2;
  const auto branches = geometric_discord_branches(q);
  const double max_term = *std::max_element(branches.begin(), branches.end());
  double base = 0.0;
  if (q.mode() == NoiseMode::Multilocal) {
    base = q.family() == Family::Entangled
               ? 1.0 + 2.0 * g2 - 2.0 * x * (3.0 + 4.0 * g2) + x * x * (9.0 + 10.0 * g2)
               : 1.0 - 6.0 * x + x * x * (9.0 + 4.0 * g2);
  } else {
    base = q.family() == Family::Entangled ? 3.0 - 14.0 * x + x * x * (17.0 + 2.0 * g4)
                                           : 1.0 - 6.0 * x + x * x * (11.0 + 2.0 * g4);
  }
  return std::max(0.0, 0.25 * (base - max_term));
}

std::string to_string(CriticalKind kind) {
  switch (kind) {
    case CriticalKind::GeometricBranchSwitch: return "geometric-discord branch switch";
    case CriticalKind::EntanglementSuddenDeath: return "entanglement sudden death";
  }
  return "unknown";
}

std::vector<CriticalTime> find_critical_times(Family family, NoiseMode mode, double param, double gamma_rate) {
  (void)NoiseConfig{gamma_rate, mode};
  auto query = [&](double g) { return ClosedFormQuery(family, mode, param, g); };
  std::vector<CriticalTime> events;
  auto record = [&](double g, CriticalKind kind) {
    const double tg = -std::log(g);
    if (tg <= 0.0) return;
    events.push_back({tg, tg / gamma_rate, kind, to_string(kind)});
  };

  const auto nodes = scan_nodes();
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const double hi = nodes[k], lo = nodes[k + 1];
    const auto b_hi = active_branch(geometric_discord_branches(query(hi)));
    const auto b_lo = active_branch(geometric_discord_branches(query(lo)));
    if (b_hi != b_lo) {
      const double g = bisect(lo, hi, [&](double s) {
        const auto br = geometric_discord_branches(query(s));
        return br[b_lo] > br[b_hi];
      });
      record(g, CriticalKind::GeometricBranchSwitch);
    }
    if (family == Family::Entangled) {
      auto entangled = [&](double s) { return closed_negativity(query(s)) > kZeroTol; };
      if (entangled(hi) && !entangled(lo)) record(bisect(lo, hi, entangled), CriticalKind::EntanglementSuddenDeath);
    }
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const CriticalTime& a, const CriticalTime& b) { return a.t_gamma < b.t_gamma; });
  return events;
}

}  // namespace qqd
