#pragma once

#include <array>
#include <vector>

#include "idtrade/evaluator.hpp"
#include "idtrade/instrument.hpp"

namespace idt {

/// U0..U3 whose images U_i|0> form a regular tetrahedron on the Bloch sphere:
///   U0 = I,  U1 = (1/sqrt3) I - i sqrt(2/3) Y,
///   U2 = (1/sqrt3) I + i (1/sqrt6) Y + i (1/sqrt2) X,
///   U3 = (1/sqrt3) I + i (1/sqrt6) Y - i (1/sqrt2) X.
std::array<ComplexMatrix, 4> tetrahedral_unitaries();

/// The same list with the malformed U1 = (1/sqrt3) I - i Y.
/// That U1 is not unitary; kept to demonstrate the failure.
std::array<ComplexMatrix, 4> tetrahedral_unitaries_uncorrected();

/// The twelve rotations of the tetrahedral group as SU(2) matrices (one
/// representative of each +/- pair). An exact unitary 2-design, so its
/// average reproduces twirl() for every 4x4 operator.
std::array<ComplexMatrix, 12> tetrahedral_group();

enum class DiscreteRealization {
  FourOutcome,      ///< A_i = 1/2 (U_i x U_i) A0 (U_i x U_i)^dag over tetrahedral_unitaries()
  TetrahedralGroup  ///< A_i = 1/sqrt12 (V x V) A0 (V x V)^dag over tetrahedral_group()
};

/// Finite covariant instrument generated from a seed.
struct DiscretePOVM {
  std::vector<ComplexMatrix> kraus;
  std::vector<Direction> guesses;  ///< Bloch direction of U_i|0>
  double completeness_residual = 0.0;

  Instrument instrument() const { return {kraus, guesses}; }
};

inline constexpr double kDiscreteCompletenessLimit = 1e-6;

/// Throws std::invalid_argument for an unvalidated seed, and std::runtime_error
/// when the chosen realization is not complete for this seed (residual above
/// kDiscreteCompletenessLimit). The four-outcome set is complete for the
/// optimal seeds but not for a generic seed; the tetrahedral group always is.
DiscretePOVM build_discrete(const KrausSeed& seed,
                            DiscreteRealization realization = DiscreteRealization::FourOutcome);

/// || 1/4 sum_i (U_i x U_i) X (U_i x U_i)^dag - twirl(X) ||_F
double four_outcome_twirl_deviation(const ComplexMatrix& x);

/// Pairwise dot products of the Bloch vectors of U_i|0>, in order
/// (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
std::array<double, 6> tetrahedral_dot_products(const std::array<ComplexMatrix, 4>& unitaries);

}  // namespace idt
