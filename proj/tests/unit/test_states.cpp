#include <catch_amalgamated.hpp>

#include <array>

#include "qqd/errors.hpp"
#include "qqd/linalg.hpp"
#include "qqd/states.hpp"

using namespace qqd;
using Catch::Matchers::WithinAbs;

namespace {

// Qubit |0>,|1> swapped together with qutrit |0>,|2>.
ComplexMatrix relabel(const ComplexMatrix& m) {
  constexpr std::array<std::size_t, 6> perm{5, 4, 3, 2, 1, 0};
  ComplexMatrix out(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) out(perm[i], perm[j]) = m(i, j);
  return out;
}

double min_pt_eigenvalue(const DensityMatrix& rho) { return hermitian_eigenvalues(partial_transpose_qubit(rho)).front(); }

void check_diagonal(const DensityMatrix& rho, const std::array<double, 6>& expected) {
  for (std::size_t k = 0; k < 6; ++k) CHECK_THAT(rho(k, k).real(), WithinAbs(expected[k], 1e-15));
}

}  // namespace

TEST_CASE("parameter ranges are enforced", "[states]") {
  CHECK_NOTHROW(StateParameter(Family::Entangled, 0.5));
  CHECK_NOTHROW(StateParameter(Family::Separable, 1.0 / 3.0));
  CHECK_THROWS_AS(StateParameter(Family::Entangled, 0.51), ParameterOutOfRange);
  CHECK_THROWS_AS(StateParameter(Family::Entangled, -0.01), ParameterOutOfRange);
  CHECK_THROWS_AS(StateParameter(Family::Separable, 0.34), ParameterOutOfRange);
  CHECK_THROWS_AS(rho_entangled(0.6), ParameterOutOfRange);
  CHECK_THROWS_AS(rho_separable(-0.1), ParameterOutOfRange);
}

TEST_CASE("entangled family at p = 0 is the pure Bell-like state", "[states]") {
  const DensityMatrix rho = rho_entangled(0.0);
  CHECK_THAT(hs_norm_sq(rho.matrix()), WithinAbs(1.0, 1e-15));
  for (std::size_t i : {2u, 3u})
    for (std::size_t j : {2u, 3u}) CHECK_THAT(rho(i, j).real(), WithinAbs(0.5, 1e-15));
}

TEST_CASE("entangled family at p = 0.25", "[states]") {
  const DensityMatrix rho = rho_entangled(0.25);
  check_diagonal(rho, {0.125, 0.125, 0.25, 0.25, 0.125, 0.125});
  CHECK_THAT(rho(0, 5).real(), WithinAbs(0.125, 1e-15));
  CHECK_THAT(rho(5, 0).real(), WithinAbs(0.125, 1e-15));
  CHECK_THAT(rho(2, 3).real(), WithinAbs(0.25, 1e-15));
  CHECK_THAT(rho(3, 2).real(), WithinAbs(0.25, 1e-15));
}

TEST_CASE("separable family examples", "[states]") {
  const DensityMatrix r0 = rho_separable(0.0);
  check_diagonal(r0, {0, 0, 0.5, 0.5, 0, 0});
  CHECK(max_abs_diff(r0.matrix(), ComplexMatrix::diagonal(std::array<double, 6>{0, 0, 0.5, 0.5, 0, 0})) < 1e-15);

  const DensityMatrix r_third = rho_separable(1.0 / 3.0);
  CHECK_THAT(r_third.matrix().trace().real(), WithinAbs(1.0, 1e-15));
  for (std::size_t k = 0; k < 6; ++k) CHECK_THAT(r_third(k, k).real(), WithinAbs(1.0 / 6.0, 1e-15));

  const DensityMatrix r = rho_separable(0.25);
  check_diagonal(r, {0.125, 0.125, 0.25, 0.25, 0.125, 0.125});
  CHECK_THAT(r(0, 5).real(), WithinAbs(0.125, 1e-15));
  CHECK_THAT(r(2, 3).real(), WithinAbs(0.125, 1e-15));
}

TEST_CASE("entangled family is NPT except at p = 1/3", "[states][property]") {
  for (int k = 0; k <= 50; ++k) {
    const double p = 0.5 * k / 50.0;
    const DensityMatrix rho = rho_entangled(p);
    const double lam = min_pt_eigenvalue(rho);
    if (std::abs(p - 1.0 / 3.0) < 1e-12) {
      CHECK(lam >= -1e-9);
    } else {
      CHECK(lam < -1e-9);
    }
  }
  CHECK(min_pt_eigenvalue(rho_entangled(1.0 / 3.0)) >= -1e-9);
}

TEST_CASE("separable family is PPT on the whole range", "[states][property]") {
  for (int k = 0; k < 34; ++k) {
    const double r = (1.0 / 3.0) * k / 33.0;
    CHECK(min_pt_eigenvalue(rho_separable(r)) >= -1e-9);
  }
}

TEST_CASE("families are symmetric under joint relabeling", "[states][property]") {
  for (int k = 0; k <= 10; ++k) {
    const DensityMatrix e = rho_entangled(0.05 * k);
    const DensityMatrix s = rho_separable((1.0 / 3.0) * k / 10.0);
    CHECK(max_abs_diff(relabel(e.matrix()), e.matrix()) <= 1e-14);
    CHECK(max_abs_diff(relabel(s.matrix()), s.matrix()) <= 1e-14);
  }
}

TEST_CASE("generator normalization and orthogonality", "[states][generators]") {
  const auto& gen = generators();
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(gen.pauli[i].trace()) < 1e-15);
    CHECK(gen.pauli[i].hermitian_deviation() == 0.0);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(std::abs((gen.pauli[i] * gen.pauli[j]).trace() - Complex(i == j ? 2.0 : 0.0)) <= 1e-14);
    }
  }
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(std::abs(gen.gellmann[i].trace()) < 1e-14);
    CHECK(gen.gellmann[i].hermitian_deviation() == 0.0);
    for (std::size_t j = 0; j < 8; ++j) {
      CHECK(std::abs((gen.gellmann[i] * gen.gellmann[j]).trace() - Complex(i == j ? 2.0 : 0.0)) <= 1e-14);
    }
  }
  CHECK_THAT((gen.gellmann[2] * gen.gellmann[2]).trace().real(), WithinAbs(2.0, 1e-15));
  CHECK(std::abs((gen.gellmann[0] * gen.gellmann[1]).trace()) < 1e-15);
  CHECK(gen.c_z == ComplexMatrix::diagonal(std::array<double, 3>{1, 0, -1}));
  CHECK(hermitian_eigenvalues(gen.c_z) == std::vector<double>{-1, 0, 1});
}

TEST_CASE("family_state dispatches on the family", "[states]") {
  CHECK(family_state(StateParameter(Family::Entangled, 0.2)).matrix() == rho_entangled(0.2).matrix());
  CHECK(family_state(StateParameter(Family::Separable, 0.2)).matrix() == rho_separable(0.2).matrix());
}
