#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string_view>

#include "idtrade/linalg.hpp"

namespace idt {

using Rng = std::mt19937_64;

/// A point on the Bloch sphere. Stands in for an SU(2) element modulo the
/// stabilizer phase, which no quantity in this library depends on.
struct Direction {
  double polar = 0.0;    ///< [0, pi]
  double azimuth = 0.0;  ///< [0, 2pi)

  /// Throws std::invalid_argument for polar outside [0, pi] or non-finite
  /// input; azimuth is wrapped into [0, 2pi).
  static Direction from_angles(double polar, double azimuth);
  /// Direction of a (not necessarily normalized) Bloch vector.
  static Direction from_bloch(const std::array<double, 3>& v);
  static Direction north() { return {}; }

  std::array<double, 3> bloch() const;
};

enum class EncodingMode { Antiparallel, Parallel };

std::string_view to_string(EncodingMode mode);
/// Accepts "antiparallel" / "parallel"; throws std::invalid_argument otherwise.
EncodingMode parse_encoding_mode(std::string_view name);

/// (cos(polar/2), e^{i azimuth} sin(polar/2))
ComplexVector spin_state(const Direction& d);

/// (-conj(psi_1), conj(psi_0)); throws std::invalid_argument if psi is not
/// a unit 2-vector within 1e-9.
ComplexVector orthogonal_state(const ComplexVector& psi);

/// Bloch direction of a single-qubit ket (global phase discarded).
Direction direction_of(const ComplexVector& psi);
std::array<double, 3> bloch_vector(const ComplexVector& psi);

/// Two-qubit ket |psi>|psi_perp> (antiparallel) or |psi>|psi> (parallel).
ComplexVector encoded_state(const Direction& d, EncodingMode mode);
/// Density matrix of encoded_state.
ComplexMatrix encode(const Direction& d, EncodingMode mode);

/// SU(2) rotation taking |0> to spin_state(d), with no extra rotation about
/// the target axis.
ComplexMatrix spin_rotation(const Direction& d);

/// Uniform point on the sphere: cos(polar) ~ U[-1,1], azimuth ~ U[0,2pi).
Direction haar_sample(Rng& rng);

/// Haar-random element of SU(2), drawn as a uniform unit quaternion.
ComplexMatrix haar_unitary(Rng& rng);

/// Projectors onto the singlet line and the triplet space of two qubits.
struct SubspaceProjectors {
  ComplexMatrix singlet;  ///< |Psi-><Psi-|
  ComplexMatrix triplet;  ///< I - |Psi-><Psi-|
};

SubspaceProjectors subspace_projectors();

/// (|01> - |10>)/sqrt2
ComplexVector singlet_state();
/// (|01> + |10>)/sqrt2
ComplexVector triplet_zero_state();
/// Computational two-qubit basis ket, index in order 00, 01, 10, 11.
ComplexVector basis_ket(std::size_t index);

/// Pauli matrices.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace idt
