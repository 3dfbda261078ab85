#include "qqd/states.hpp"

#include <cmath>
#include <string>

#include "qqd/errors.hpp"

namespace qqd {

namespace {

constexpr std::size_t idx(std::size_t qubit, std::size_t qutrit) { return qubit * kQutritDim + qutrit; }

// Component shared by both families: the {|00>,|01>,|11>,|12>} populations and
// the |00><12| coherence, all weighted by w.
void add_common_block(ComplexMatrix& m, double w) {
  m(idx(0, 0), idx(0, 0)) += w;
  m(idx(0, 1), idx(0, 1)) += w;
  m(idx(1, 1), idx(1, 1)) += w;
  m(idx(1, 2), idx(1, 2)) += w;
  m(idx(0, 0), idx(1, 2)) += w;
  m(idx(1, 2), idx(0, 0)) += w;
}

void check_range(Family family, double value) {
  const double hi = StateParameter::upper_bound(family);
  if (!(value >= 0.0 && value <= hi)) {
    throw ParameterOutOfRange(std::string(family == Family::Entangled ? "p" : "r") + " = " +
                              std::to_string(value) + " outside [0, " + std::to_string(hi) + "]");
  }
}

GeneratorSet build_generators() {
  using namespace std::complex_literals;
  GeneratorSet g;
  g.pauli[0] = ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0});
  g.pauli[1] = ComplexMatrix(2, {0.0, -1i, 1i, 0.0});
  g.pauli[2] = ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0});

  const Complex o = 0.0;
  g.gellmann[0] = ComplexMatrix(3, {o, 1.0, o, 1.0, o, o, o, o, o});
  g.gellmann[1] = ComplexMatrix(3, {o, -1i, o, 1i, o, o, o, o, o});
  g.gellmann[2] = ComplexMatrix(3, {1.0, o, o, o, -1.0, o, o, o, o});
  g.gellmann[3] = ComplexMatrix(3, {o, o, 1.0, o, o, o, 1.0, o, o});
  g.gellmann[4] = ComplexMatrix(3, {o, o, -1i, o, o, o, 1i, o, o});
  g.gellmann[5] = ComplexMatrix(3, {o, o, o, o, o, 1.0, o, 1.0, o});
  g.gellmann[6] = ComplexMatrix(3, {o, o, o, o, o, -1i, o, 1i, o});
  const double s = 1.0 / std::sqrt(3.0);
  g.gellmann[7] = ComplexMatrix(3, {s, o, o, o, s, o, o, o, -2.0 * s});

  g.c_z = ComplexMatrix(3, {1.0, o, o, o, o, o, o, o, -1.0});
  return g;
}

}  // namespace

StateParameter::StateParameter(Family family, double value) : family_(family), value_(value) {
  check_range(family, value);
}

double StateParameter::upper_bound(Family family) noexcept {
  return family == Family::Entangled ? 0.5 : 1.0 / 3.0;
}

const GeneratorSet& generators() {
  static const GeneratorSet set = build_generators();
  return set;
}

DensityMatrix rho_entangled(double p) {
  check_range(Family::Entangled, p);
  ComplexMatrix m(kJointDim);
  add_common_block(m, p / 2.0);
  const double w = (1.0 - 2.0 * p) / 2.0;
  m(idx(0, 2), idx(0, 2)) = w;
  m(idx(1, 0), idx(1, 0)) = w;
  m(idx(0, 2), idx(1, 0)) = w;
  m(idx(1, 0), idx(0, 2)) = w;
  return DensityMatrix(std::move(m));
}

DensityMatrix rho_separable(double r) {
  check_range(Family::Separable, r);
  ComplexMatrix m(kJointDim);
  add_common_block(m, r / 2.0);
  m(idx(0, 2), idx(1, 0)) = r / 2.0;
  m(idx(1, 0), idx(0, 2)) = r / 2.0;
  const double w = (1.0 - 2.0 * r) / 2.0;
  m(idx(0, 2), idx(0, 2)) = w;
  m(idx(1, 0), idx(1, 0)) = w;
  return DensityMatrix(std::move(m));
}

DensityMatrix family_state(const StateParameter& param) {
  return param.family() == Family::Entangled ? rho_entangled(param.value())
                                             : rho_separable(param.value());
}

}  // namespace qqd
