#include "idtrade/povm4.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace idt {

namespace {

const Complex kI{0.0, 1.0};

// a I - i (b X + c Y + d Z)
ComplexMatrix from_quaternion(double a, double b, double c, double d) {
  return ComplexMatrix(2, 2, {Complex{a, -d}, Complex{-c, -b}, Complex{c, -b}, Complex{a, d}});
}

ComplexVector first_column(const ComplexMatrix& u) { return {u(0, 0), u(1, 0)}; }

template <std::size_t N>
DiscretePOVM realize(const KrausSeed& seed, const std::array<ComplexMatrix, N>& unitaries) {
  const double amplitude = 1.0 / std::sqrt(static_cast<double>(N));
  DiscretePOVM povm;
  for (const auto& u : unitaries) {
    povm.kraus.push_back(Complex{amplitude, 0.0} * conjugate_local(seed.a0, u));
    povm.guesses.push_back(direction_of(first_column(u)));
  }
  povm.completeness_residual = completeness_residual(povm.kraus);
  return povm;
}

}  // namespace

std::array<ComplexMatrix, 4> tetrahedral_unitaries() {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const double c0 = 1.0 / std::sqrt(3.0);
  return {id,
          c0 * id - (kI * std::sqrt(6.0) / 3.0) * pauli_y(),
          c0 * id + (kI * std::sqrt(6.0) / 6.0) * pauli_y() + (kI * std::sqrt(2.0) / 2.0) * pauli_x(),
          c0 * id + (kI * std::sqrt(6.0) / 6.0) * pauli_y() - (kI * std::sqrt(2.0) / 2.0) * pauli_x()};
}

std::array<ComplexMatrix, 4> tetrahedral_unitaries_uncorrected() {
  auto u = tetrahedral_unitaries();
  u[1] = (1.0 / std::sqrt(3.0)) * ComplexMatrix::identity(2) - kI * pauli_y();
  return u;
}

std::array<ComplexMatrix, 12> tetrahedral_group() {
  std::array<ComplexMatrix, 12> g;
  std::size_t n = 0;
  g[n++] = from_quaternion(1, 0, 0, 0);
  g[n++] = from_quaternion(0, 1, 0, 0);
  g[n++] = from_quaternion(0, 0, 1, 0);
  g[n++] = from_quaternion(0, 0, 0, 1);
  for (int sb : {1, -1})
    for (int sc : {1, -1})
      for (int sd : {1, -1}) g[n++] = from_quaternion(0.5, 0.5 * sb, 0.5 * sc, 0.5 * sd);
  return g;
}

DiscretePOVM build_discrete(const KrausSeed& seed, DiscreteRealization realization) {
  if (!seed.validated) throw std::invalid_argument("build_discrete: seed is not validated");
  DiscretePOVM povm = realization == DiscreteRealization::FourOutcome
                          ? realize(seed, tetrahedral_unitaries())
                          : realize(seed, tetrahedral_group());
  if (povm.completeness_residual > kDiscreteCompletenessLimit) {
    throw std::runtime_error("build_discrete: operators are not complete for this seed (residual " +
                             std::to_string(povm.completeness_residual) + ")");
  }
  return povm;
}

double four_outcome_twirl_deviation(const ComplexMatrix& x) {
  ComplexMatrix avg(4, 4);
  for (const auto& u : tetrahedral_unitaries()) avg = avg + conjugate_local(x, u);
  return frobenius_distance(0.25 * avg, twirl(x));
}

std::array<double, 6> tetrahedral_dot_products(const std::array<ComplexMatrix, 4>& unitaries) {
  std::array<std::array<double, 3>, 4> b;
  for (std::size_t i = 0; i < 4; ++i) b[i] = bloch_vector(first_column(unitaries[i]));
  std::array<double, 6> dots{};
  std::size_t n = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      dots[n++] = b[i][0] * b[j][0] + b[i][1] * b[j][1] + b[i][2] * b[j][2];
  return dots;
}

}  // namespace idt
