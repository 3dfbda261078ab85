#include "qqd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qqd/errors.hpp"

namespace qqd {

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiOffTol = 1e-13;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()));
  }
}

void require_joint(const ComplexMatrix& m, const char* what) {
  if (m.dim() != kJointDim) {
    throw DimensionMismatch(std::string(what) + ": expected 6x6 joint operator, got " +
                            std::to_string(m.dim()) + "x" + std::to_string(m.dim()));
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimensionMismatch("ComplexMatrix: " + std::to_string(entries_.size()) +
                            " entries for dimension " + std::to_string(dim_));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

double ComplexMatrix::hermitian_deviation() const noexcept {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) noexcept {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double herm_tol) {
  const double deviation = m.hermitian_deviation();
  if (!(deviation <= herm_tol)) {
    throw NonHermitianInput("hermitian_eigensystem: deviation " + std::to_string(deviation) +
                            " exceeds tolerance");
  }
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  double frob = std::sqrt(hs_norm_sq(a));
  const double threshold = kJacobiOffTol * std::max(1.0, frob);

  int sweep = 0;
  while (off_diagonal_norm(a) >= threshold) {
    if (++sweep > kMaxJacobiSweeps) {
      throw NoConvergence("hermitian_eigensystem: no convergence after 100 sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double mag = std::abs(g);
        if (mag == 0.0) continue;
        // Phase-rotate (p,q) to a real symmetric 2x2 block, then apply the
        // classical Jacobi rotation that annihilates it.
        const Complex phase = std::conj(g) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Rotation columns: V(:,p) = (c, -s*phase), V(:,q) = (s, c*phase).
        const Complex vpp = c, vqp = -s * phase, vpq = s, vqq = c * phase;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * vpp + akq * vqp;
          a(k, q) = akp * vpq + akq * vqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
          a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * vpp + vkq * vqp;
          v(k, q) = vkp * vpq + vkq * vqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double herm_tol) {
  return hermitian_eigensystem(m, herm_tol).values;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

double hs_norm_sq(const ComplexMatrix& m) noexcept {
  double sum = 0.0;
  for (const auto& e : m.entries()) sum += std::norm(e);
  return sum;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double herm_tol, double psd_tol)
    : matrix_(std::move(m)), herm_tol_(herm_tol), psd_tol_(psd_tol) {
  if (matrix_.dim() == 0) throw InvalidState("DensityMatrix: empty matrix");
  const double deviation = matrix_.hermitian_deviation();
  if (!(deviation <= herm_tol_)) {
    throw InvalidState("DensityMatrix: not Hermitian (deviation " + std::to_string(deviation) + ")");
  }
  const Complex tr = matrix_.trace();
  if (!(std::abs(tr - 1.0) <= herm_tol_)) {
    throw InvalidState("DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
  }
  const double min_eig = hermitian_eigenvalues(matrix_, herm_tol_).front();
  if (!(min_eig >= -psd_tol_)) {
    throw InvalidState("DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
  }
}

ComplexMatrix partial_trace(const ComplexMatrix& joint, Subsystem keep) {
  require_joint(joint, "partial_trace");
  if (keep == Subsystem::A) {
    ComplexMatrix out(kQubitDim);
    for (std::size_t a = 0; a < kQubitDim; ++a) {
      for (std::size_t ap = 0; ap < kQubitDim; ++ap) {
        for (std::size_t b = 0; b < kQutritDim; ++b) {
          out(a, ap) += joint(a * kQutritDim + b, ap * kQutritDim + b);
        }
      }
    }
    return out;
  }
  ComplexMatrix out(kQutritDim);
  for (std::size_t b = 0; b < kQutritDim; ++b) {
    for (std::size_t bp = 0; bp < kQutritDim; ++bp) {
      for (std::size_t a = 0; a < kQubitDim; ++a) {
        out(b, bp) += joint(a * kQutritDim + b, a * kQutritDim + bp);
      }
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  return DensityMatrix(partial_trace(rho.matrix(), keep), rho.herm_tol(), rho.psd_tol());
}

ComplexMatrix partial_transpose_qubit(const ComplexMatrix& joint) {
  require_joint(joint, "partial_transpose_qubit");
  ComplexMatrix out(kJointDim);
  for (std::size_t a = 0; a < kQubitDim; ++a) {
    for (std::size_t ap = 0; ap < kQubitDim; ++ap) {
      for (std::size_t b = 0; b < kQutritDim; ++b) {
        for (std::size_t bp = 0; bp < kQutritDim; ++bp) {
          out(a * kQutritDim + b, ap * kQutritDim + bp) =
              joint(ap * kQutritDim + b, a * kQutritDim + bp);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_transpose_qubit(const DensityMatrix& rho) {
  return partial_transpose_qubit(rho.matrix());
}

}  // namespace qqd
