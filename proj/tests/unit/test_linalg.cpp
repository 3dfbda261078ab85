#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qqd/errors.hpp"
#include "qqd/linalg.hpp"
#include "qqd/states.hpp"
#include "test_support.hpp"

using namespace qqd;
using qqd::testing::diag;
using Catch::Matchers::WithinAbs;

TEST_CASE("identity has unit eigenvalues", "[linalg][eigen]") {
  const auto values = hermitian_eigenvalues(ComplexMatrix::identity(6));
  REQUIRE(values.size() == 6);
  for (double v : values) CHECK_THAT(v, WithinAbs(1.0, 1e-14));
}

TEST_CASE("diagonal eigenvalues come back ascending", "[linalg][eigen]") {
  const auto values = hermitian_eigenvalues(diag({3.0, 1.0, 2.0}));
  CHECK(values == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("partial transpose of the maximally entangled state has one eigenvalue -1/2", "[linalg][eigen]") {
  const auto values = hermitian_eigenvalues(partial_transpose_qubit(rho_entangled(0.0)));
  const auto negatives = std::count_if(values.begin(), values.end(), [](double v) { return v < -1e-12; });
  CHECK(negatives == 1);
  CHECK_THAT(values.front(), WithinAbs(-0.5, 1e-12));
}

TEST_CASE("non-Hermitian input is rejected", "[linalg][eigen]") {
  ComplexMatrix m = ComplexMatrix::identity(3);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(m), NonHermitianInput);
}

TEST_CASE("random Hermitian spectra reconstruct trace and norm", "[linalg][eigen][property]") {
  for (std::size_t dim : {2u, 3u, 6u}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      std::mt19937_64 rng(seed * 7919 + dim);
      const ComplexMatrix m = qqd::testing::random_hermitian(dim, rng);
      const EigenSystem es = hermitian_eigensystem(m);
      REQUIRE(std::is_sorted(es.values.begin(), es.values.end()));
      const double sum = std::accumulate(es.values.begin(), es.values.end(), 0.0);
      const double sum_sq = std::inner_product(es.values.begin(), es.values.end(), es.values.begin(), 0.0);
      CHECK_THAT(sum, WithinAbs(m.trace().real(), 1e-10));
      CHECK_THAT(sum_sq, WithinAbs(hs_norm_sq(m), 1e-9));
      for (std::size_t k = 0; k < dim; ++k) {
        double residual = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
          Complex mv = 0.0;
          for (std::size_t c = 0; c < dim; ++c) mv += m(r, c) * es.vectors(c, k);
          residual += std::norm(mv - es.values[k] * es.vectors(r, k));
        }
        CHECK(std::sqrt(residual) <= 1e-10);
      }
    }
  }
}

TEST_CASE("degenerate spectra keep a stable order", "[linalg][eigen]") {
  const auto values = hermitian_eigenvalues(diag({2.0, 1.0, 2.0, 1.0, 0.0, 2.0}));
  CHECK(values == std::vector<double>{0.0, 1.0, 1.0, 2.0, 2.0, 2.0});
}

TEST_CASE("kron examples", "[linalg][kron]") {
  const auto& gen = generators();
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(3)) == ComplexMatrix::identity(6));
  CHECK(kron(gen.pauli[2], gen.c_z) == diag({1, 0, -1, -1, 0, 1}));

  const ComplexMatrix flip = kron(gen.pauli[0], ComplexMatrix::identity(3));
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t r = 0; r < 6; ++r) CHECK(flip(r, j) == Complex(r == 3 + j ? 1.0 : 0.0));
  }
}

TEST_CASE("kron index layout", "[linalg][kron]") {
  std::mt19937_64 rng(3);
  const ComplexMatrix a = qqd::testing::ginibre(2, rng), b = qqd::testing::ginibre(3, rng);
  const ComplexMatrix k = kron(a, b);
  REQUIRE(k.dim() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) CHECK(k(i * 3 + r, j * 3 + c) == a(i, j) * b(r, c));
}

TEST_CASE("partial trace examples", "[linalg][ptrace]") {
  ComplexMatrix mixed3 = ComplexMatrix::identity(3);
  mixed3 *= 1.0 / 3.0;
  const DensityMatrix product = qqd::testing::product_state(diag({1, 0}), mixed3);
  CHECK(max_abs_diff(partial_trace(product, Subsystem::B).matrix(), mixed3) < 1e-15);

  const DensityMatrix e0 = rho_entangled(0.0);
  CHECK(max_abs_diff(partial_trace(e0, Subsystem::B).matrix(), diag({0.5, 0, 0.5})) < 1e-15);
  CHECK(max_abs_diff(partial_trace(e0, Subsystem::A).matrix(), diag({0.5, 0.5})) < 1e-15);
}

TEST_CASE("partial trace rejects wrong dimension", "[linalg][ptrace]") {
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(4), Subsystem::A), DimensionMismatch);
  CHECK_THROWS_AS(partial_transpose_qubit(ComplexMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("partial trace of product states recovers the factors", "[linalg][ptrace][property]") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed);
    const ComplexMatrix a = qqd::testing::random_state_matrix(2, rng);
    const ComplexMatrix b = qqd::testing::random_state_matrix(3, rng);
    const DensityMatrix rho = qqd::testing::product_state(a, b);
    CHECK(max_abs_diff(partial_trace(rho, Subsystem::A).matrix(), a) < 1e-12);
    CHECK(max_abs_diff(partial_trace(rho, Subsystem::B).matrix(), b) < 1e-12);
  }
}

TEST_CASE("partial transpose properties", "[linalg][ptrans]") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed + 100);
    const ComplexMatrix a = qqd::testing::random_state_matrix(2, rng);
    const ComplexMatrix b = qqd::testing::random_state_matrix(3, rng);
    const ComplexMatrix pt = partial_transpose_qubit(kron(a, b));
    CHECK(max_abs_diff(pt, kron(a.transpose(), b)) < 1e-15);
    CHECK(hermitian_eigenvalues(pt).front() >= -1e-12);

    const ComplexMatrix m = qqd::testing::random_state_matrix(6, rng);
    const ComplexMatrix mt = partial_transpose_qubit(m);
    CHECK(partial_transpose_qubit(mt) == m);
    CHECK(mt.hermitian_deviation() <= 1e-14);
    CHECK(std::abs(mt.trace() - m.trace()) <= 1e-14);
  }
  CHECK_THAT(hermitian_eigenvalues(partial_transpose_qubit(rho_entangled(0.0))).front(), WithinAbs(-0.5, 1e-12));
}

TEST_CASE("Hilbert-Schmidt norm examples", "[linalg][hs]") {
  CHECK(hs_norm_sq(ComplexMatrix::identity(6)) == 6.0);
  CHECK(hs_norm_sq(ComplexMatrix(6)) == 0.0);
  CHECK_THAT(hs_norm_sq(rho_entangled(0.0).matrix()), WithinAbs(1.0, 1e-15));
}

TEST_CASE("density matrix validation", "[linalg][density]") {
  CHECK_NOTHROW(DensityMatrix(diag({0.5, 0.5})));
  CHECK_THROWS_AS(DensityMatrix(diag({0.5, 0.6})), InvalidState);
  CHECK_THROWS_AS(DensityMatrix(diag({1.5, -0.5})), InvalidState);
  ComplexMatrix skew = diag({0.5, 0.5});
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix(skew), InvalidState);
  CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), DimensionMismatch);
}
