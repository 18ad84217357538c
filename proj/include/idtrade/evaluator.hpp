#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "idtrade/encoding.hpp"
#include "idtrade/instrument.hpp"
#include "idtrade/linalg.hpp"
#include "idtrade/moments.hpp"

namespace idt {

enum class Provenance { Analytic, TraceFormula, MonteCarlo, Optimizer, Bound };

std::string_view to_string(Provenance p);

/// Average information gain and disturbance of one measurement strategy.
struct TradeoffPoint {
  double information = 0.0;
  double disturbance = 0.0;
  EncodingMode mode = EncodingMode::Antiparallel;
  Provenance provenance = Provenance::TraceFormula;
};

// Trace formulas for a covariant instrument. They require a validated seed
// (std::invalid_argument otherwise) and moments of the encoding in question.

/// I = Tr[A0^dag A0 M00]
double information(const KrausSeed& seed, const MomentSet& moments);
/// D = 1 - sum_{i,j,k} <j i| A0 M_jk A0^dag |k i>
double disturbance(const KrausSeed& seed, const MomentSet& moments);
TradeoffPoint evaluate(const KrausSeed& seed, const MomentSet& moments);

/// The same two quadratic forms without the validity check; the optimizer
/// evaluates them on arbitrary matrices.
double information_functional(const ComplexMatrix& a0, const MomentSet& moments);
double fidelity_functional(const ComplexMatrix& a0, const MomentSet& moments);

/// A finite measurement: Kraus operator r comes with the guessed direction r.
struct Instrument {
  std::vector<ComplexMatrix> kraus;
  std::vector<Direction> guesses;
};

/// Frobenius distance of sum_r A_r^dag A_r from I4.
double completeness_residual(const std::vector<ComplexMatrix>& kraus);

/// Throws std::invalid_argument if guesses and operators differ in number,
/// an operator is not 4x4, or the set is not complete within `tol`.
void check_instrument(const Instrument& instrument, double tol = 1e-6);

struct MonteCarloEstimate {
  EncodingMode mode = EncodingMode::Antiparallel;
  std::size_t samples = 0;
  double information = 0.0;
  double information_stderr = 0.0;
  double disturbance = 0.0;
  double disturbance_stderr = 0.0;
  /// Largest single-sample disturbance seen.
  double max_sample_disturbance = 0.0;

  TradeoffPoint point() const {
    return {information, disturbance, mode, Provenance::MonteCarlo};
  }
};

/// Haar-sampled estimate of the average information and disturbance of a
/// finite instrument acting on the encoded direction. Deterministic given
/// `seed`. Throws as check_instrument, and for samples < 2.
MonteCarloEstimate monte_carlo_evaluate(const Instrument& instrument, EncodingMode mode,
                                        std::uint64_t seed, std::size_t samples);

struct CovariantizationReport {
  MonteCarloEstimate original;
  /// Estimate for the instrument averaged over conjugations
  /// (U_h U_r^dag x U_h U_r^dag) A_r (...)^dag with guesses U_h|0>.
  MonteCarloEstimate covariant;
  double information_sigmas = 0.0;
  double disturbance_sigmas = 0.0;

  bool agrees(double sigmas = 3.0) const {
    return information_sigmas <= sigmas && disturbance_sigmas <= sigmas;
  }
};

CovariantizationReport covariantize_check(const Instrument& instrument, EncodingMode mode,
                                          std::uint64_t seed, std::size_t samples);

/// |a - b| in units of the combined standard error. Returns 0 when the values
/// coincide to 1e-12 and infinity when they differ with zero error.
double sigma_distance(double a, double a_err, double b, double b_err);

}  // namespace idt
