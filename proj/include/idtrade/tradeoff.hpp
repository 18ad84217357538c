#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "idtrade/evaluator.hpp"
#include "idtrade/instrument.hpp"
#include "idtrade/moments.hpp"

namespace idt {

/// Information of the projective measurement on the second spin alone, which
/// leaves the first spin untouched.
inline constexpr double kInformationMin = 2.0 / 3.0;
/// Largest information gain on antiparallel spins, (3 + sqrt3)/6.
double information_max_antiparallel();
/// Upper end of the optimal-measurement family parameter, arccos(1/sqrt3).
double mdm_theta_max();

/// g + sqrt(24 - 2 g^2), the largest f reachable at a given g.
/// Domain [2, 2 sqrt3]; throws std::domain_error outside it.
double f_max(double g);

/// Smallest disturbance compatible with information I on antiparallel spins:
/// 1 - I - sqrt(-1/3 + 2I - 2I^2). Domain [2/3, (3 + sqrt3)/6]; throws
/// std::domain_error outside it.
double d_min(double information);

/// Distance from (information, disturbance) to the graph of d_min, to first
/// order: |r| / |grad r| for r = (1 - I - D)^2 + 1/3 - 2I + 2I^2. Unlike
/// D - d_min(I), whose square root turns rounding of order 1e-16 in I into
/// 1e-8 near I = (3 + sqrt3)/6, this stays well conditioned along the whole
/// curve. Returns +inf for points on the other branch (1 - I - D < 0).
double bound_distance(double information, double disturbance);

/// Same for the graph of f_max: r = (f - g)^2 - 24 + 2 g^2 on the branch f >= g.
double f_max_distance(double g, double f);

/// Minimal-disturbance seed
///   A0(theta) = |00><Psi-| + sqrt3 cos(theta) |00><Psi+| + sqrt3 sin(theta) |10><11|
/// for theta in [0, arccos(1/sqrt3)]. It interpolates between the most
/// informative measurement (theta = 0) and the undisturbing one.
/// Throws std::domain_error for theta out of range.
KrausSeed mdm_seed(double theta);

/// Same family with coefficient (sqrt6/2) cos(theta) on |00><Psi+|, as it is
/// sometimes quoted. Not trace preserving for theta != pi/2; returned
/// unvalidated so callers can show which condition breaks.
KrausSeed mdm_seed_uncorrected(double theta);

struct OptimizerConfig {
  int restarts = 20;
  std::uint64_t seed = 0;
  /// Achieved information must lie within this distance of the target.
  double information_tolerance = 1e-7;
  int max_bisection_steps = 60;
  int max_line_search_iterations = 2000;
  /// Angle by which the weight direction stays away from pure fidelity /
  /// pure information, so ties are broken towards the frontier.
  double endpoint_tilt = 1e-7;
};

struct OptimizationReport {
  EncodingMode mode = EncodingMode::Antiparallel;
  double target_information = 0.0;
  double achieved_information = 0.0;
  double achieved_disturbance = 0.0;
  KrausSeed seed;
  int iterations = 0;
  bool converged = false;
};

/// Range of information values on the minimal-disturbance frontier: the
/// information of the best undisturbing seed and the largest information
/// reachable at all. Found numerically.
std::pair<double, double> feasible_information_range(const MomentSet& moments,
                                                     const OptimizerConfig& config = {});

/// Maximizes the fidelity over valid seeds subject to information == target.
///
/// Trace preservation is built into the parameterization: the singlet and
/// triplet column blocks of A0 live on spheres of radius 1 and sqrt3. The
/// information constraint is met by bisecting the weight of a combined
/// objective cos(phi) F + sin(phi) I, each maximized by multi-start L-BFGS,
/// with an augmented-Lagrangian polish when the frontier has a jump.
///
/// Throws std::domain_error if target lies outside the feasible range.
OptimizationReport optimize(double target_information, const MomentSet& moments,
                            const OptimizerConfig& config = {});

enum class CurveMethod { Analytic, Optimizer };

struct BoundCurve {
  EncodingMode mode = EncodingMode::Antiparallel;
  std::vector<TradeoffPoint> points;  ///< strictly increasing information
  double information_lo = 0.0;
  double information_hi = 0.0;
  bool converged = true;
};

/// n_points >= 2 samples of the minimal-disturbance frontier, uniformly
/// spaced in information. The analytic method exists only for antiparallel
/// spins (std::invalid_argument otherwise).
BoundCurve bound_curve(EncodingMode mode, int n_points, CurveMethod method,
                       const OptimizerConfig& config = {});

struct ComparisonRow {
  double information = 0.0;
  double antiparallel_disturbance = 0.0;
  double parallel_disturbance = 0.0;
  /// (D_par - D_anti) / D_par, when D_par is resolvably positive.
  std::optional<double> reduction_ratio;
};

struct Comparison {
  std::vector<ComparisonRow> rows;
  double parallel_information_max = 0.0;
  bool converged = true;
};

/// Antiparallel bound (closed form) against the optimizer-derived parallel
/// frontier at n_points >= 3 common information values in
/// [2/3, parallel maximum].
Comparison compare_encodings(int n_points, const OptimizerConfig& config = {});

}  // namespace idt
