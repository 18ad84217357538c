#pragma once

#include <array>

#include "idtrade/encoding.hpp"
#include "idtrade/linalg.hpp"

namespace idt {

/// Tolerance on the singlet/triplet weights for a seed to count as valid.
inline constexpr double kSeedTolerance = 1e-8;

/// Seed operator A0 of a covariant instrument A_h = (U_h x U_h) A0 (U_h x U_h)^dag.
///
/// The instrument is trace preserving iff Tr[A0^dag A0 M1] = 1 and
/// Tr[A0^dag A0 M2] = 3, with M1, M2 the singlet and triplet projectors.
/// Seeds that fail this are still representable; `validated` records the
/// outcome and the weights are kept for reporting.
struct KrausSeed {
  ComplexMatrix a0;
  bool validated = false;
  double singlet_weight = 0.0;
  double triplet_weight = 0.0;
};

/// Throws std::invalid_argument for non-4x4 input; otherwise never throws.
KrausSeed validate_seed(const ComplexMatrix& a0);

/// Haar average of (U x U) X (U x U)^dag, in closed form:
/// Tr[X M1] M1 + Tr[X M2] M2 / 3.
ComplexMatrix twirl(const ComplexMatrix& x);

/// (U x U) X (U x U)^dag for a single-qubit unitary U.
ComplexMatrix conjugate_local(const ComplexMatrix& x, const ComplexMatrix& u);

/// A_h for the rotation taking |0> to spin_state(d). Throws
/// std::invalid_argument for an unvalidated seed.
ComplexMatrix orbit_element(const KrausSeed& seed, const Direction& d);
/// A_h for an arbitrary SU(2) element. Same precondition.
ComplexMatrix orbit_element(const KrausSeed& seed, const ComplexMatrix& u);

/// A0 split into eight half-columns: v1..v4 are rows 0-1 of columns 0-3,
/// v5..v8 rows 2-3 of columns 0-3. Stored zero-based (v[0] is v1).
struct VectorDecomposition {
  std::array<ComplexVector, 8> v;

  ComplexMatrix reassemble() const;
};

VectorDecomposition vector_decompose(const ComplexMatrix& a0);
inline VectorDecomposition vector_decompose(const KrausSeed& seed) {
  return vector_decompose(seed.a0);
}

/// (sum_i |v_i|^2, |v2 - v3|^2 + |v7 - v6|^2). Equals (4, 2) for valid seeds.
struct ConstraintValues {
  double norm_sum = 0.0;
  double difference_sum = 0.0;
};

ConstraintValues constraint_values(const VectorDecomposition& vd);

/// f and g with F = 1/2 + f/12 and I = 1/2 + g/12 (antiparallel encoding).
struct FgValues {
  double f = 0.0;
  double g = 0.0;
};

FgValues fg_functionals(const VectorDecomposition& vd);

/// Rescales the singlet and triplet column blocks of x independently so the
/// result is a valid seed: A0 = x (alpha M1 + beta M2). Throws
/// std::invalid_argument if either block of x vanishes.
KrausSeed normalize_seed(const ComplexMatrix& x);

/// Random valid seed: i.i.d. complex Gaussian 4x4 entries, then normalize_seed.
KrausSeed random_validated_seed(Rng& rng);

/// Random valid seed near `base`: base + scale * (complex Gaussian), then
/// normalize_seed.
KrausSeed perturbed_seed(const ComplexMatrix& base, double scale, Rng& rng);

}  // namespace idt
