#include "idtrade/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace idt {

using std::numbers::pi;

Direction Direction::from_angles(double polar, double azimuth) {
  if (!std::isfinite(polar) || !std::isfinite(azimuth)) {
    throw std::invalid_argument("Direction: non-finite angle");
  }
  if (polar < 0.0 || polar > pi) {
    throw std::invalid_argument("Direction: polar angle " + std::to_string(polar) +
                                " outside [0, pi]");
  }
  double az = std::fmod(azimuth, 2.0 * pi);
  if (az < 0.0) az += 2.0 * pi;
  if (az >= 2.0 * pi) az = 0.0;
  return {polar, az};
}

Direction Direction::from_bloch(const std::array<double, 3>& v) {
  const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (!(r > 0.0)) throw std::invalid_argument("Direction: zero Bloch vector");
  const double z = std::clamp(v[2] / r, -1.0, 1.0);
  return from_angles(std::acos(z), std::atan2(v[1], v[0]));
}

std::array<double, 3> Direction::bloch() const {
  return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
          std::cos(polar)};
}

std::string_view to_string(EncodingMode mode) {
  return mode == EncodingMode::Antiparallel ? "antiparallel" : "parallel";
}

EncodingMode parse_encoding_mode(std::string_view name) {
  if (name == "antiparallel") return EncodingMode::Antiparallel;
  if (name == "parallel") return EncodingMode::Parallel;
  throw std::invalid_argument("unknown encoding mode '" + std::string(name) + "'");
}

ComplexVector spin_state(const Direction& d) {
  return {std::cos(d.polar / 2.0), std::polar(std::sin(d.polar / 2.0), d.azimuth)};
}

ComplexVector orthogonal_state(const ComplexVector& psi) {
  if (psi.dim() != 2) throw std::invalid_argument("orthogonal_state: expected a 2-vector");
  if (std::abs(psi.squared_norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("orthogonal_state: input is not normalized");
  }
  return {-std::conj(psi[1]), std::conj(psi[0])};
}

std::array<double, 3> bloch_vector(const ComplexVector& psi) {
  if (psi.dim() != 2) throw std::invalid_argument("bloch_vector: expected a 2-vector");
  const Complex coh = std::conj(psi[0]) * psi[1];
  return {2.0 * coh.real(), 2.0 * coh.imag(), std::norm(psi[0]) - std::norm(psi[1])};
}

Direction direction_of(const ComplexVector& psi) { return Direction::from_bloch(bloch_vector(psi)); }

ComplexVector encoded_state(const Direction& d, EncodingMode mode) {
  const ComplexVector psi = spin_state(d);
  return mode == EncodingMode::Antiparallel ? tensor_product(psi, orthogonal_state(psi))
                                            : tensor_product(psi, psi);
}

ComplexMatrix encode(const Direction& d, EncodingMode mode) {
  const ComplexVector phi = encoded_state(d, mode);
  return ComplexMatrix::outer(phi, phi);
}

ComplexMatrix spin_rotation(const Direction& d) {
  const double c = std::cos(d.polar / 2.0);
  const double s = std::sin(d.polar / 2.0);
  return ComplexMatrix(2, 2,
                       {c, -std::polar(s, -d.azimuth),  //
                        std::polar(s, d.azimuth), c});
}

Direction haar_sample(Rng& rng) {
  std::uniform_real_distribution<double> cos_dist(-1.0, 1.0);
  std::uniform_real_distribution<double> az_dist(0.0, 2.0 * pi);
  const double u = cos_dist(rng);
  const double az = az_dist(rng);
  return {std::acos(u), az};
}

ComplexMatrix haar_unitary(Rng& rng) {
  std::normal_distribution<double> normal;
  double q[4];
  double r2 = 0.0;
  do {
    r2 = 0.0;
    for (double& x : q) {
      x = normal(rng);
      r2 += x * x;
    }
  } while (r2 < 1e-24);
  const double r = std::sqrt(r2);
  for (double& x : q) x /= r;
  // q0 I - i (q1 X + q2 Y + q3 Z)
  const Complex a{q[0], -q[3]};
  const Complex b{-q[2], -q[1]};
  return ComplexMatrix(2, 2, {a, b, -std::conj(b), std::conj(a)});
}

ComplexVector singlet_state() {
  const double h = 1.0 / std::numbers::sqrt2;
  return {0.0, h, -h, 0.0};
}

ComplexVector triplet_zero_state() {
  const double h = 1.0 / std::numbers::sqrt2;
  return {0.0, h, h, 0.0};
}

ComplexVector basis_ket(std::size_t index) {
  if (index >= 4) throw std::invalid_argument("basis_ket: index out of range");
  ComplexVector e(4);
  e[index] = 1.0;
  return e;
}

SubspaceProjectors subspace_projectors() {
  ComplexMatrix singlet = ComplexMatrix::outer(singlet_state(), singlet_state());
  ComplexMatrix triplet = ComplexMatrix::identity(4) - singlet;
  return {std::move(singlet), std::move(triplet)};
}

ComplexMatrix pauli_x() { return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix pauli_y() {
  return ComplexMatrix(2, 2, {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0});
}
ComplexMatrix pauli_z() { return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }

}  // namespace idt
