#pragma once

// Dense complex matrices for the qubit (2), qutrit (3) and joint (6) Hilbert
// spaces. The joint product basis is ordered |00>,|01>,|02>,|10>,|11>,|12>,
// i.e. index = 3 * qubit + qutrit.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qqd {

using Complex = std::complex<double>;

inline constexpr std::size_t kQubitDim = 2;
inline constexpr std::size_t kQutritDim = 3;
inline constexpr std::size_t kJointDim = kQubitDim * kQutritDim;

inline constexpr double kDefaultHermTol = 1e-10;
inline constexpr double kDefaultPsdTol = 1e-9;

/// Square row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix.
  explicit ComplexMatrix(std::size_t dim);
  /// Row-major entries; throws DimensionMismatch unless entries.size() == dim*dim.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * dim_ + col];
  }

  Complex trace() const noexcept;
  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  /// max |M[i][j] - conj(M[j][i])|.
  double hermitian_deviation() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// max_ij |a_ij - b_ij|; throws DimensionMismatch on differing dims.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues ascending; column k of `vectors` is the eigenvector for values[k].
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Cyclic complex Jacobi diagonalization.
/// Throws NonHermitianInput if the Hermitian check fails and NoConvergence
/// if the off-diagonal mass is still above 1e-13 after 100 sweeps.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double herm_tol = kDefaultHermTol);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double herm_tol = kDefaultHermTol);

/// (kron A B)[i*dimB + k][j*dimB + l] = A[i][j] * B[k][l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(M^dagger M).
double hs_norm_sq(const ComplexMatrix& m) noexcept;

/// Hermitian, unit-trace, positive-semidefinite matrix. Validated on construction.
class DensityMatrix {
 public:
  /// Throws InvalidState if any invariant fails.
  explicit DensityMatrix(ComplexMatrix m, double herm_tol = kDefaultHermTol,
                         double psd_tol = kDefaultPsdTol);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return matrix_(row, col);
  }
  double herm_tol() const noexcept { return herm_tol_; }
  double psd_tol() const noexcept { return psd_tol_; }

 private:
  ComplexMatrix matrix_;
  double herm_tol_;
  double psd_tol_;
};

enum class Subsystem { A, B };

/// Partial trace of a 6x6 joint operator; keep=A yields 2x2, keep=B yields 3x3.
/// Throws DimensionMismatch for any other input size.
ComplexMatrix partial_trace(const ComplexMatrix& joint, Subsystem keep);
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Transpose on the qubit factor: out[(a,b),(a',b')] = in[(a',b),(a,b')].
ComplexMatrix partial_transpose_qubit(const ComplexMatrix& joint);
ComplexMatrix partial_transpose_qubit(const DensityMatrix& rho);

}  // namespace qqd
