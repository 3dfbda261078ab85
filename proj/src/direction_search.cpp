#include "qqd/direction_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qqd/errors.hpp"

namespace qqd {

namespace {

constexpr double kPi = std::numbers::pi;

std::array<double, 3> axis(double theta, double phi) noexcept {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

struct Vertex {
  double theta;
  double phi;
  double value;
};

}  // namespace

void MeasurementDirection::validate() const {
  if (!(theta >= 0.0 && theta < kPi) || !(phi >= 0.0 && phi < 2.0 * kPi)) {
    throw InvalidDirection("measurement direction (" + std::to_string(theta) + ", " +
                           std::to_string(phi) + ") outside [0, pi) x [0, 2 pi)");
  }
}

std::array<double, 3> MeasurementDirection::unit_vector() const noexcept { return axis(theta, phi); }

MeasurementDirection MeasurementDirection::from_axis(const std::array<double, 3>& n) {
  const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidDirection("zero or non-finite measurement axis");
  std::array<double, 3> u{n[0] / norm, n[1] / norm, n[2] / norm};
  // Representative of the axis with n_z >= 0.
  if (u[2] < 0.0) u = {-u[0], -u[1], -u[2]};
  double theta = std::acos(std::clamp(u[2], -1.0, 1.0));
  double phi = 0.0;
  if (std::hypot(u[0], u[1]) > 0.0) {
    phi = std::atan2(u[1], u[0]);
    if (phi < 0.0) phi += 2.0 * kPi;
    if (phi >= 2.0 * kPi) phi = 0.0;
  }
  if (theta >= kPi) theta = 0.0;
  return MeasurementDirection{theta, phi};
}

MeasurementDirection MeasurementDirection::canonical(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) throw InvalidDirection("non-finite angles");
  if (theta >= 0.0 && theta < kPi && phi >= 0.0 && phi < 2.0 * kPi) return {theta, phi};
  return from_axis(axis(theta, phi));
}

DirectionSearchResult minimize_over_directions(
    const std::function<double(const std::array<double, 3>&)>& objective,
    const DirectionSearchOptions& options) {
  if (options.theta_points == 0 || options.phi_points == 0) {
    throw InvalidConfig("direction search grid must be non-empty");
  }
  const double d_theta = kPi / static_cast<double>(options.theta_points);
  const double d_phi = 2.0 * kPi / static_cast<double>(options.phi_points);

  Vertex best{0.0, 0.0, objective(axis(0.0, 0.0))};
  for (std::size_t i = 0; i < options.theta_points; ++i) {
    const double theta = d_theta * static_cast<double>(i);
    for (std::size_t j = 0; j < options.phi_points; ++j) {
      const double phi = d_phi * static_cast<double>(j);
      const double v = objective(axis(theta, phi));
      if (v < best.value) best = {theta, phi, v};
    }
  }

  DirectionSearchResult result;
  result.grid_value = best.value;

  auto eval = [&](double theta, double phi) { return Vertex{theta, phi, objective(axis(theta, phi))}; };

  std::array<Vertex, 3> simplex{best, eval(best.theta + 0.5 * d_theta, best.phi),
                                eval(best.theta, best.phi + 0.5 * d_phi)};
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.value < b.value; };

  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    const Vertex& lo = simplex[0];
    const Vertex& hi = simplex[2];
    double diameter = 0.0;
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        diameter = std::max(diameter, std::hypot(simplex[a].theta - simplex[b].theta,
                                                 simplex[a].phi - simplex[b].phi));
      }
    }
    if (hi.value - lo.value <= options.f_tol && diameter <= options.x_tol) break;

    const double c_theta = 0.5 * (simplex[0].theta + simplex[1].theta);
    const double c_phi = 0.5 * (simplex[0].phi + simplex[1].phi);
    auto along = [&](double coef) {
      return eval(c_theta + coef * (hi.theta - c_theta), c_phi + coef * (hi.phi - c_phi));
    };

    const Vertex reflected = along(-1.0);
    if (reflected.value < simplex[0].value) {
      const Vertex expanded = along(-2.0);
      simplex[2] = expanded.value < reflected.value ? expanded : reflected;
    } else if (reflected.value < simplex[1].value) {
      simplex[2] = reflected;
    } else {
      const bool outside = reflected.value < hi.value;
      const Vertex contracted = along(outside ? -0.5 : 0.5);
      if (contracted.value < (outside ? reflected.value : hi.value)) {
        simplex[2] = contracted;
      } else {
        for (int k = 1; k < 3; ++k) {
          simplex[k] = eval(0.5 * (simplex[0].theta + simplex[k].theta),
                            0.5 * (simplex[0].phi + simplex[k].phi));
        }
      }
    }
  }
  std::stable_sort(simplex.begin(), simplex.end(), by_value);
  if (simplex[0].value < best.value) best = simplex[0];

  result.value = best.value;
  result.direction = MeasurementDirection::canonical(best.theta, best.phi);
  result.iterations = iter;
  return result;
}

}  // namespace qqd
