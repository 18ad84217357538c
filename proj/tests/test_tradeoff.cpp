#include <gtest/gtest.h>

#include <chrono>
#include <numbers>

#include "idtrade/evaluator.hpp"
#include "idtrade/tradeoff.hpp"
#include "oracles.hpp"

using namespace idt;

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);
const double kIMax = (3.0 + kSqrt3) / 6.0;
const double kDAtIMax = (3.0 - kSqrt3) / 6.0;
const double kDAtThreeQuarters = 0.25 - 1.0 / std::sqrt(24.0);

const MomentSet& anti() { return cached_moments(EncodingMode::Antiparallel); }
const MomentSet& par() { return cached_moments(EncodingMode::Parallel); }

// Euclidean distance to the curve (I(t), D(t)), t in [0, arccos(1/sqrt3)],
// by dense scan plus golden-section refinement.
double brute_force_curve_distance(double info, double dist) {
  auto d2 = [&](double t) {
    const double i = 0.5 + kSqrt3 / 6.0 * std::cos(t);
    const double d = 0.5 - kSqrt3 / 6.0 * std::cos(t) - kSqrt6 / 6.0 * std::sin(t);
    return (i - info) * (i - info) + (d - dist) * (d - dist);
  };
  const double hi = std::acos(1.0 / kSqrt3);
  const int n = 20000;
  int best = 0;
  for (int k = 1; k <= n; ++k)
    if (d2(hi * k / n) < d2(hi * best / n)) best = k;
  double a = hi * std::max(0, best - 1) / n, b = hi * std::min(n, best + 1) / n;
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double x1 = b - r * (b - a), x2 = a + r * (b - a);
    if (d2(x1) < d2(x2)) b = x2; else a = x1;
  }
  return std::sqrt(d2(0.5 * (a + b)));
}

KrausSeed special_seed() {
  ComplexMatrix m(4, 4);
  m(0, 1) = std::sqrt(2.0 + kSqrt3);
  m(0, 2) = std::sqrt(2.0 - kSqrt3);
  return validate_seed(m);
}

}  // namespace

TEST(FMax, Endpoints) {
  EXPECT_NEAR(f_max(2.0), 6.0, 1e-14);
  EXPECT_NEAR(f_max(2.0 * kSqrt3), 2.0 * kSqrt3, 1e-12);
}

TEST(FMax, OptimalFamily) {
  for (int i = 1; i < 20; ++i) {
    const double t = mdm_theta_max() * i / 20.0;
    EXPECT_NEAR(f_max(2.0 * kSqrt3 * std::cos(t)),
                2.0 * kSqrt3 * std::cos(t) + 2.0 * kSqrt6 * std::sin(t), 1e-12);
  }
}

TEST(FMax, DomainChecked) {
  EXPECT_THROW(f_max(1.9), std::domain_error);
  EXPECT_THROW(f_max(3.5), std::domain_error);
}

TEST(DMin, Endpoints) {
  EXPECT_NEAR(d_min(2.0 / 3.0), 0.0, 1e-12);
  EXPECT_NEAR(d_min(kIMax), kDAtIMax, 1e-12);
  EXPECT_NEAR(d_min(0.75), kDAtThreeQuarters, 1e-12);
}

TEST(DMin, DomainChecked) {
  EXPECT_THROW(d_min(0.6), std::domain_error);
  EXPECT_THROW(d_min(0.8), std::domain_error);
}

TEST(DMin, StrictlyIncreasingWithSteepEnd) {
  double prev = d_min(kInformationMin);
  for (int k = 1; k <= 1000; ++k) {
    const double x = kInformationMin + (kIMax - kInformationMin) * k / 1000.0;
    const double y = d_min(x);
    EXPECT_GT(y, prev) << x;
    prev = y;
  }
  const double h = 1e-8;
  const double slope_mid = (d_min(0.72 + h) - d_min(0.72)) / h;
  const double slope_end = (d_min(kIMax) - d_min(kIMax - h)) / h;
  EXPECT_LT(slope_mid, 2.0);
  EXPECT_GT(slope_end, 100.0);
}

TEST(BoundDistance, ZeroOnCurveAndEuclideanNearIt) {
  for (int k = 0; k <= 40; ++k) {
    const double t = mdm_theta_max() * k / 40.0;
    const double i = 0.5 + kSqrt3 / 6.0 * std::cos(t);
    const double d = 0.5 - kSqrt3 / 6.0 * std::cos(t) - kSqrt6 / 6.0 * std::sin(t);
    EXPECT_LE(bound_distance(i, d), 1e-14);
    // Near the ends the nearest conic point can lie past the end of the arc.
    if (k < 3 || k > 37) continue;
    for (double off : {1e-4, -1e-4}) {
      EXPECT_NEAR(bound_distance(i, d + off), brute_force_curve_distance(i, d + off), 1e-7);
      EXPECT_NEAR(bound_distance(i + off, d), brute_force_curve_distance(i + off, d), 1e-7);
    }
  }
  EXPECT_TRUE(std::isinf(bound_distance(0.7, 0.9)));
}

TEST(BoundDistance, FMaxCurve) {
  for (int k = 0; k <= 40; ++k) {
    const double g = 2.0 + (2.0 * kSqrt3 - 2.0) * k / 40.0;
    EXPECT_LE(f_max_distance(g, f_max(g)), 1e-13);
  }
  EXPECT_NEAR(f_max_distance(2.0 * kSqrt3 + 1e-6, 2.0 * kSqrt3 + 1e-6), 1e-6, 1e-9);
  EXPECT_TRUE(std::isinf(f_max_distance(3.0, 2.0)));
}

TEST(OptimalFamily, ThetaZeroIsTheSpecialSeed) {
  EXPECT_LE(frobenius_distance(mdm_seed(0.0).a0, special_seed().a0), 1e-12);
  const TradeoffPoint p = evaluate(mdm_seed(0.0), anti());
  EXPECT_NEAR(p.information, kIMax, 1e-12);
  EXPECT_NEAR(p.disturbance, kDAtIMax, 1e-12);
}

TEST(OptimalFamily, UndisturbingEnd) {
  const TradeoffPoint p = evaluate(mdm_seed(mdm_theta_max()), anti());
  EXPECT_NEAR(p.information, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(p.disturbance, 0.0, 1e-12);
}

TEST(OptimalFamily, ThreeQuarters) {
  const TradeoffPoint p = evaluate(mdm_seed(std::numbers::pi / 6.0), anti());
  EXPECT_NEAR(p.information, 0.75, 1e-12);
  EXPECT_NEAR(p.disturbance, kDAtThreeQuarters, 1e-12);
}

TEST(OptimalFamily, SaturatesBoundOnGrid) {
  for (int k = 0; k < 50; ++k) {
    const double t = mdm_theta_max() * k / 49.0;
    const KrausSeed s = mdm_seed(t);
    ASSERT_TRUE(s.validated);
    const TradeoffPoint p = evaluate(s, anti());
    EXPECT_NEAR(p.information, 0.5 + kSqrt3 / 6.0 * std::cos(t), 1e-9);
    EXPECT_NEAR(p.disturbance, 0.5 - kSqrt3 / 6.0 * std::cos(t) - kSqrt6 / 6.0 * std::sin(t), 1e-9);
    EXPECT_LE(bound_distance(p.information, p.disturbance), 1e-9);
    const FgValues fg = fg_functionals(vector_decompose(s));
    EXPECT_LE(f_max_distance(fg.g, fg.f), 1e-9);
  }
}

TEST(OptimalFamily, DomainChecked) {
  EXPECT_THROW(mdm_seed(-0.01), std::domain_error);
  EXPECT_THROW(mdm_seed(1.0), std::domain_error);
}

TEST(OptimalFamily, UncorrectedCoefficientBreaksTracePreservation) {
  const KrausSeed s = mdm_seed_uncorrected(0.0);
  EXPECT_FALSE(s.validated);
  EXPECT_NEAR(s.singlet_weight, 1.0, 1e-12);
  EXPECT_NEAR(s.triplet_weight, 1.5, 1e-12);
  // The two coefficients coincide only where cos(theta) = 0.
  for (int k = 0; k < 10; ++k) EXPECT_FALSE(mdm_seed_uncorrected(0.1 * k).validated);
}

TEST(Optimizer, FeasibleRanges) {
  const auto [alo, ahi] = feasible_information_range(anti());
  EXPECT_NEAR(alo, 2.0 / 3.0, 1e-6);
  EXPECT_NEAR(ahi, kIMax, 1e-9);
  const auto [plo, phi] = feasible_information_range(par());
  EXPECT_NEAR(plo, 2.0 / 3.0, 1e-6);
  EXPECT_NEAR(phi, 0.75, 1e-9);
}

TEST(Optimizer, AntiparallelAnchors) {
  const OptimizationReport top = optimize(kIMax, anti());
  EXPECT_TRUE(top.converged);
  EXPECT_NEAR(top.achieved_disturbance, kDAtIMax, 1e-4);
  const OptimizationReport mid = optimize(0.75, anti());
  EXPECT_TRUE(mid.converged);
  EXPECT_NEAR(mid.achieved_information, 0.75, 1e-7);
  EXPECT_NEAR(mid.achieved_disturbance, kDAtThreeQuarters, 1e-4);
  EXPECT_TRUE(mid.seed.validated);
  EXPECT_GT(mid.iterations, 0);
}

TEST(Optimizer, ParallelAtThreeQuarters) {
  const OptimizationReport r = optimize(0.75, par());
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.mode, EncodingMode::Parallel);
  EXPECT_NEAR(r.achieved_disturbance, 0.25, 5e-3);
  const double ratio = (r.achieved_disturbance - kDAtThreeQuarters) / r.achieved_disturbance;
  EXPECT_NEAR(ratio, std::sqrt(2.0 / 3.0), 0.02 * std::sqrt(2.0 / 3.0));
}

TEST(Optimizer, ParallelMatchesIndependentSolver) {
  // Parallel frontier from an independent SQP solve over the full 4x4 seed
  // with both trace conditions as explicit equality constraints.
  const std::pair<double, double> frozen[] = {{0.70, 0.01716}, {0.72, 0.0502}, {0.74, 0.1214}};
  for (const auto& [info, dist] : frozen) {
    const OptimizationReport r = optimize(info, par());
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.achieved_disturbance, dist, 5e-4) << info;
  }
}

TEST(Optimizer, NeverBeatsTheBound) {
  for (int k = 0; k <= 12; ++k) {
    const double target = kInformationMin + (kIMax - kInformationMin) * k / 12.0;
    const OptimizationReport r = optimize(target, anti());
    EXPECT_TRUE(r.converged) << target;
    EXPECT_NEAR(r.achieved_information, target, 1e-6);
    const double info = std::clamp(r.achieved_information, kInformationMin, kIMax);
    EXPECT_GE(r.achieved_disturbance, d_min(info) - 1e-6) << target;
    const TradeoffPoint check = evaluate(r.seed, anti());
    EXPECT_NEAR(check.disturbance, r.achieved_disturbance, 1e-10);
  }
}

TEST(Optimizer, RejectsInfeasibleTargets) {
  EXPECT_THROW(optimize(0.9, anti()), std::domain_error);
  EXPECT_THROW(optimize(0.77, par()), std::domain_error);
  OptimizerConfig bad;
  bad.restarts = 0;
  EXPECT_THROW(optimize(0.7, anti(), bad), std::invalid_argument);
}

TEST(Optimizer, DeterministicGivenSeed) {
  OptimizerConfig c;
  c.seed = 17;
  const OptimizationReport a = optimize(0.72, par(), c), b = optimize(0.72, par(), c);
  EXPECT_EQ(a.achieved_disturbance, b.achieved_disturbance);
  EXPECT_EQ(a.seed.a0, b.seed.a0);
}

TEST(BoundCurve, AnalyticEndpoints) {
  const BoundCurve c = bound_curve(EncodingMode::Antiparallel, 2, CurveMethod::Analytic);
  ASSERT_EQ(c.points.size(), 2u);
  EXPECT_NEAR(c.points[0].information, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(c.points[0].disturbance, 0.0, 1e-12);
  EXPECT_NEAR(c.points[1].information, kIMax, 1e-12);
  EXPECT_NEAR(c.points[1].disturbance, kDAtIMax, 1e-12);
  EXPECT_EQ(c.points[0].provenance, Provenance::Bound);
}

TEST(BoundCurve, Preconditions) {
  EXPECT_THROW(bound_curve(EncodingMode::Parallel, 5, CurveMethod::Analytic),
               std::invalid_argument);
  EXPECT_THROW(bound_curve(EncodingMode::Antiparallel, 1, CurveMethod::Analytic),
               std::invalid_argument);
}

TEST(BoundCurve, OptimizerRecoversAnalyticCurve) {
  const auto t0 = std::chrono::steady_clock::now();
  const BoundCurve c = bound_curve(EncodingMode::Antiparallel, 9, CurveMethod::Optimizer);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_TRUE(c.converged);
  ASSERT_EQ(c.points.size(), 9u);
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    const TradeoffPoint& p = c.points[i];
    EXPECT_EQ(p.provenance, Provenance::Optimizer);
    if (i > 0) EXPECT_GT(p.information, c.points[i - 1].information);
    EXPECT_GE(p.disturbance, 0.0);
    EXPECT_NEAR(p.disturbance, d_min(std::clamp(p.information, kInformationMin, kIMax)), 1e-3);
  }
  EXPECT_LE(seconds, 60.0);
}

TEST(Comparison, OrderingRatioAndMonotonicity) {
  const Comparison cmp = compare_encodings(9);
  EXPECT_TRUE(cmp.converged);
  EXPECT_NEAR(cmp.parallel_information_max, 0.75, 1e-9);
  ASSERT_EQ(cmp.rows.size(), 9u);
  std::optional<double> prev;
  for (const ComparisonRow& r : cmp.rows) {
    EXPECT_GE(r.parallel_disturbance, r.antiparallel_disturbance - 1e-9) << r.information;
    if (r.reduction_ratio) {
      if (prev) EXPECT_GE(*r.reduction_ratio, *prev * 0.98) << r.information;
      prev = r.reduction_ratio;
    }
  }
  const ComparisonRow& last = cmp.rows.back();
  EXPECT_NEAR(last.information, 0.75, 1e-9);
  EXPECT_NEAR(last.antiparallel_disturbance, kDAtThreeQuarters, 1e-6);
  ASSERT_TRUE(last.reduction_ratio.has_value());
  EXPECT_NEAR(*last.reduction_ratio, std::sqrt(2.0 / 3.0), 0.02 * std::sqrt(2.0 / 3.0));
}
