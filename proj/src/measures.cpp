#include "qqd/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qqd/errors.hpp"

namespace qqd {

namespace {

constexpr double kEigenFloor = 1e-12;
constexpr double kOutcomeFloor = 1e-12;

// -sum lambda log2 lambda of a PSD operator whose eigenvalues are `values`.
double entropy_bits(const std::vector<double>& values, double psd_tol) {
  double s = 0.0;
  for (double v : values) {
    if (v < -psd_tol) throw InvalidState("entropy: eigenvalue " + std::to_string(v) + " below PSD floor");
    if (v > kEigenFloor) s -= v * std::log2(v);
  }
  return s;
}

// p * S(M / p) for an unnormalized PSD block M with trace p.
double weighted_entropy(const ComplexMatrix& m, double psd_tol) {
  const double p = m.trace().real();
  if (p < kOutcomeFloor) return 0.0;
  double s = 0.0;
  for (double v : hermitian_eigenvalues(m, 1e-9)) {
    if (v < -psd_tol) throw InvalidState("conditional state has eigenvalue " + std::to_string(v));
    if (v > kEigenFloor * p) s -= v * std::log2(v / p);
  }
  return s;
}

// 2x2 projector (I + sign n.sigma) / 2.
ComplexMatrix qubit_projector(const std::array<double, 3>& n, double sign) {
  const double nx = sign * n[0], ny = sign * n[1], nz = sign * n[2];
  return ComplexMatrix(2, {Complex(0.5 * (1.0 + nz), 0.0), Complex(0.5 * nx, -0.5 * ny),
                           Complex(0.5 * nx, 0.5 * ny), Complex(0.5 * (1.0 - nz), 0.0)});
}

// Tr_A((P (x) I) rho) for a 2x2 qubit operator P.
ComplexMatrix measured_block(const ComplexMatrix& rho, const ComplexMatrix& proj) {
  ComplexMatrix out(kQutritDim);
  for (std::size_t a = 0; a < kQubitDim; ++a) {
    for (std::size_t ap = 0; ap < kQubitDim; ++ap) {
      const Complex w = proj(a, ap);
      if (w == Complex{}) continue;
      for (std::size_t b = 0; b < kQutritDim; ++b) {
        for (std::size_t bp = 0; bp < kQutritDim; ++bp) {
          out(b, bp) += w * rho(ap * kQutritDim + b, a * kQutritDim + bp);
        }
      }
    }
  }
  return out;
}

double conditional_entropy_along(const DensityMatrix& rho, const std::array<double, 3>& n) {
  double s = 0.0;
  for (double sign : {1.0, -1.0}) {
    s += weighted_entropy(measured_block(rho.matrix(), qubit_projector(n, sign)), rho.psd_tol());
  }
  return s;
}

double hs_distance_to_measured(const DensityMatrix& rho, const std::array<double, 3>& n) {
  const ComplexMatrix id3 = ComplexMatrix::identity(kQutritDim);
  const ComplexMatrix p = kron(qubit_projector(n, 1.0), id3);
  const ComplexMatrix q = kron(qubit_projector(n, -1.0), id3);
  const ComplexMatrix& m = rho.matrix();
  return hs_norm_sq(m - (p * m * p + q * m * q));
}

void require_joint(const DensityMatrix& rho, const char* what) {
  if (rho.dim() != kJointDim) throw DimensionMismatch(std::string(what) + ": expected a 6x6 state");
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < a.dim(); ++k) s += a(i, k) * b(k, i);
  }
  return s.real();
}

}  // namespace

ComplexMatrix BlochDecomposition::reconstruct(const GeneratorSet& basis) const {
  const ComplexMatrix id2 = ComplexMatrix::identity(kQubitDim);
  const ComplexMatrix id3 = ComplexMatrix::identity(kQutritDim);
  ComplexMatrix m = ComplexMatrix::identity(kJointDim);
  for (std::size_t i = 0; i < 3; ++i) m += x[i] * kron(basis.pauli[i], id3);
  for (std::size_t j = 0; j < 8; ++j) m += y[j] * kron(id2, basis.gellmann[j]);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 8; ++j) m += t[i][j] * kron(basis.pauli[i], basis.gellmann[j]);
  }
  m *= 1.0 / 6.0;
  return m;
}

double negativity(const DensityMatrix& rho) {
  require_joint(rho, "negativity");
  double n = 0.0;
  for (double eta : hermitian_eigenvalues(partial_transpose_qubit(rho), rho.herm_tol())) {
    n += std::abs(eta) - eta;
  }
  return n;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_bits(hermitian_eigenvalues(rho.matrix(), rho.herm_tol()), rho.psd_tol());
}

double mutual_information(const DensityMatrix& rho) {
  require_joint(rho, "mutual_information");
  return von_neumann_entropy(partial_trace(rho, Subsystem::A)) +
         von_neumann_entropy(partial_trace(rho, Subsystem::B)) - von_neumann_entropy(rho);
}

double measured_conditional_entropy(const DensityMatrix& rho, const MeasurementDirection& dir) {
  require_joint(rho, "measured_conditional_entropy");
  dir.validate();
  return conditional_entropy_along(rho, dir.unit_vector());
}

ClassicalCorrelation classical_correlation(const DensityMatrix& rho, const DirectionSearchOptions& options) {
  require_joint(rho, "classical_correlation");
  const auto search = minimize_over_directions(
      [&](const std::array<double, 3>& n) { return conditional_entropy_along(rho, n); }, options);
  const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
  return ClassicalCorrelation{s_b - search.value, search.direction, search.value};
}

double quantum_discord(const DensityMatrix& rho, const DirectionSearchOptions& options) {
  return mutual_information(rho) - classical_correlation(rho, options).value;
}

BlochDecomposition bloch_decomposition(const DensityMatrix& rho, const GeneratorSet& basis) {
  require_joint(rho, "bloch_decomposition");
  const ComplexMatrix id2 = ComplexMatrix::identity(kQubitDim);
  const ComplexMatrix id3 = ComplexMatrix::identity(kQutritDim);
  const ComplexMatrix& m = rho.matrix();
  BlochDecomposition out;
  for (std::size_t i = 0; i < 3; ++i) out.x[i] = real_trace_product(m, kron(basis.pauli[i], id3));
  for (std::size_t j = 0; j < 8; ++j) out.y[j] = 1.5 * real_trace_product(m, kron(id2, basis.gellmann[j]));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      out.t[i][j] = 1.5 * real_trace_product(m, kron(basis.pauli[i], basis.gellmann[j]));
    }
  }
  return out;
}

double geometric_discord(const BlochDecomposition& bloch) {
  const auto& x = bloch.x;
  const auto& t = bloch.t;
  ComplexMatrix k(3);
  double x_norm_sq = 0.0, t_norm_sq = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    x_norm_sq += x[i] * x[i];
    for (std::size_t j = 0; j < 8; ++j) t_norm_sq += t[i][j] * t[i][j];
    for (std::size_t l = 0; l < 3; ++l) {
      double tt = 0.0;
      for (std::size_t j = 0; j < 8; ++j) tt += t[i][j] * t[l][j];
      k(i, l) = x[i] * x[l] / 6.0 + tt / 9.0;
    }
  }
  const double k_max = hermitian_eigenvalues(k).back();
  return x_norm_sq / 6.0 + t_norm_sq / 9.0 - k_max;
}

double geometric_discord(const DensityMatrix& rho) {
  return std::max(0.0, geometric_discord(bloch_decomposition(rho)));
}

double geometric_discord_variational_oracle(const DensityMatrix& rho, const DirectionSearchOptions& options) {
  require_joint(rho, "geometric_discord_variational_oracle");
  const auto search = minimize_over_directions(
      [&](const std::array<double, 3>& n) { return hs_distance_to_measured(rho, n); }, options);
  return std::max(0.0, search.value);
}

CorrelationRecord evaluate_correlations(const DensityMatrix& rho, const DirectionSearchOptions& options) {
  CorrelationRecord rec;
  rec.negativity = negativity(rho);
  rec.mutual_info = mutual_information(rho);
  const auto cc = classical_correlation(rho, options);
  rec.classical = cc.value;
  rec.optimal_direction = cc.direction;
  rec.discord = rec.mutual_info - rec.classical;
  rec.geometric_discord = geometric_discord(rho);
  rec.geometric_discord_x2 = 2.0 * rec.geometric_discord;
  return rec;
}

}  // namespace qqd
