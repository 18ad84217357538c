#include "idtrade/tradeoff.hpp"

#include <ceres/ceres.h>
#include <glog/logging.h>

#include <algorithm>
#include <array>
#include <limits>
#include <mutex>
#include <optional>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>

#include "idtrade/parallel.hpp"

namespace idt {

double information_max_antiparallel() { return (3.0 + std::sqrt(3.0)) / 6.0; }

double mdm_theta_max() { return std::acos(1.0 / std::sqrt(3.0)); }

double f_max(double g) {
  const double hi = 2.0 * std::sqrt(3.0);
  if (!(g >= 2.0 - 1e-12 && g <= hi + 1e-12)) {
    throw std::domain_error("f_max: g = " + std::to_string(g) + " outside [2, 2sqrt3]");
  }
  // 24 - 2g^2 in factored form, exact at the upper end.
  return g + std::sqrt(std::max(0.0, 2.0 * (hi - g) * (hi + g)));
}

double d_min(double information) {
  const double hi = information_max_antiparallel();
  if (!(information >= kInformationMin - 1e-12 && information <= hi + 1e-12)) {
    throw std::domain_error("d_min: information " + std::to_string(information) +
                            " outside [2/3, (3+sqrt3)/6]");
  }
  // -1/3 + 2I - 2I^2 = 2 (I - (3 - sqrt3)/6) ((3 + sqrt3)/6 - I); the factored
  // form vanishes exactly at I = hi instead of leaving rounding noise that the
  // square root would amplify to ~1e-8.
  const double radicand = 2.0 * (information - (3.0 - std::sqrt(3.0)) / 6.0) * (hi - information);
  return 1.0 - information - std::sqrt(std::max(0.0, radicand));
}

namespace {

double conic_distance(double residual, double gx, double gy) {
  const double norm = std::hypot(gx, gy);
  return norm > 0.0 ? std::abs(residual) / norm : std::numeric_limits<double>::infinity();
}

}  // namespace

double bound_distance(double information, double disturbance) {
  const double gap = 1.0 - information - disturbance;
  if (gap < -1e-9) return std::numeric_limits<double>::infinity();
  const double r = gap * gap + 1.0 / 3.0 - 2.0 * information + 2.0 * information * information;
  return conic_distance(r, -2.0 * gap - 2.0 + 4.0 * information, -2.0 * gap);
}

double f_max_distance(double g, double f) {
  const double gap = f - g;
  if (gap < -1e-9) return std::numeric_limits<double>::infinity();
  const double r = gap * gap - 24.0 + 2.0 * g * g;
  return conic_distance(r, -2.0 * gap + 4.0 * g, 2.0 * gap);
}

namespace {

ComplexMatrix mdm_matrix(double theta, double psi_plus_coefficient) {
  const ComplexVector ket00 = basis_ket(0);
  return ComplexMatrix::outer(ket00, singlet_state()) +
         Complex{psi_plus_coefficient * std::cos(theta), 0.0} *
             ComplexMatrix::outer(ket00, triplet_zero_state()) +
         Complex{std::sqrt(3.0) * std::sin(theta), 0.0} *
             ComplexMatrix::outer(basis_ket(2), basis_ket(3));
}

}  // namespace

KrausSeed mdm_seed(double theta) {
  const double hi = mdm_theta_max();
  if (!(theta >= -1e-12 && theta <= hi + 1e-12)) {
    throw std::domain_error("mdm_seed: theta = " + std::to_string(theta) +
                            " outside [0, arccos(1/sqrt3)]");
  }
  return validate_seed(mdm_matrix(std::clamp(theta, 0.0, hi), std::sqrt(3.0)));
}

KrausSeed mdm_seed_uncorrected(double theta) {
  return validate_seed(mdm_matrix(theta, std::sqrt(6.0) / 2.0));
}

// ---------------------------------------------------------------------------
// Optimizer

namespace {

constexpr std::size_t kDim = 32;
constexpr std::size_t kSingletDim = 8;
using Vec = std::array<double, kDim>;
using Form = std::array<double, kDim * kDim>;

const double kSqrt3 = std::sqrt(3.0);

// Orthonormal real basis of 4x4 complex matrices adapted to the column split
// A0 = A0 M1 + A0 M2: coordinates 0-7 span e_r <Psi-| (and i times it),
// 8-31 span e_r <tau_s| for the triplet basis tau = |00>, Psi+, |11>.
const std::array<ComplexMatrix, kDim>& coordinate_basis() {
  static const std::array<ComplexMatrix, kDim> basis = [] {
    const std::array<ComplexVector, 4> bras{singlet_state(), basis_ket(0), triplet_zero_state(),
                                            basis_ket(3)};
    std::array<ComplexMatrix, kDim> b;
    std::size_t k = 0;
    for (const auto& bra : bras)
      for (std::size_t r = 0; r < 4; ++r)
        for (Complex phase : {Complex{1.0, 0.0}, Complex{0.0, 1.0}})
          b[k++] = ComplexMatrix::outer(phase * basis_ket(r), bra);
    return b;
  }();
  return basis;
}

ComplexMatrix to_matrix(const Vec& z) {
  const auto& basis = coordinate_basis();
  ComplexMatrix m(4, 4);
  for (std::size_t k = 0; k < kDim; ++k)
    if (z[k] != 0.0) m = m + Complex{z[k], 0.0} * basis[k];
  return m;
}

// Symmetric matrix of a real quadratic form q(A0), by polarization.
Form polarize(const std::function<double(const ComplexMatrix&)>& q) {
  const auto& basis = coordinate_basis();
  std::array<double, kDim> diag{};
  for (std::size_t k = 0; k < kDim; ++k) diag[k] = q(basis[k]);
  Form form{};
  for (std::size_t k = 0; k < kDim; ++k) {
    form[k * kDim + k] = diag[k];
    for (std::size_t l = k + 1; l < kDim; ++l) {
      const double v = 0.5 * (q(basis[k] + basis[l]) - diag[k] - diag[l]);
      form[k * kDim + l] = v;
      form[l * kDim + k] = v;
    }
  }
  return form;
}

void apply(const Form& q, const Vec& z, Vec& out) {
  for (std::size_t k = 0; k < kDim; ++k) {
    double s = 0.0;
    const double* row = &q[k * kDim];
    for (std::size_t l = 0; l < kDim; ++l) s += row[l] * z[l];
    out[k] = s;
  }
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < kDim; ++k) s += a[k] * b[k];
  return s;
}

// Maps free parameters x to seed coordinates z with |z_singlet| = 1 and
// |z_triplet| = sqrt3, i.e. onto the set of trace-preserving seeds.
bool project(const double* x, Vec& z, double& n1, double& n2) {
  n1 = 0.0;
  n2 = 0.0;
  for (std::size_t k = 0; k < kSingletDim; ++k) n1 += x[k] * x[k];
  for (std::size_t k = kSingletDim; k < kDim; ++k) n2 += x[k] * x[k];
  n1 = std::sqrt(n1);
  n2 = std::sqrt(n2);
  if (!(n1 > 1e-150) || !(n2 > 1e-150)) return false;
  for (std::size_t k = 0; k < kSingletDim; ++k) z[k] = x[k] / n1;
  for (std::size_t k = kSingletDim; k < kDim; ++k) z[k] = kSqrt3 * x[k] / n2;
  return true;
}

struct Problem {
  explicit Problem(const MomentSet& moments)
      : mode(moments.mode),
        info(polarize([&](const ComplexMatrix& a) { return information_functional(a, moments); })),
        fid(polarize([&](const ComplexMatrix& a) { return fidelity_functional(a, moments); })) {}

  EncodingMode mode;
  Form info;
  Form fid;

  double information(const Vec& z) const {
    Vec t;
    apply(info, z, t);
    return dot(z, t);
  }
  double fidelity(const Vec& z) const {
    Vec t;
    apply(fid, z, t);
    return dot(z, t);
  }
};

// cost(z) and d cost / dz for a function of the seed coordinates.
using CoordinateCost = std::function<double(const Vec& z, Vec& grad_z)>;

class SphereProductCost final : public ceres::FirstOrderFunction {
 public:
  explicit SphereProductCost(CoordinateCost cost) : cost_(std::move(cost)) {}

  bool Evaluate(const double* x, double* cost, double* gradient) const override {
    Vec z;
    double n1 = 0.0, n2 = 0.0;
    if (!project(x, z, n1, n2)) return false;
    Vec gz;
    *cost = cost_(z, gz);
    if (gradient != nullptr) {
      // Chain rule through the two radial normalizations.
      double r1 = 0.0, r2 = 0.0;
      for (std::size_t k = 0; k < kSingletDim; ++k) r1 += gz[k] * z[k];
      for (std::size_t k = kSingletDim; k < kDim; ++k) r2 += gz[k] * z[k] / 3.0;
      for (std::size_t k = 0; k < kSingletDim; ++k) gradient[k] = (gz[k] - r1 * z[k]) / n1;
      for (std::size_t k = kSingletDim; k < kDim; ++k)
        gradient[k] = kSqrt3 * (gz[k] - r2 * z[k]) / n2;
    }
    return true;
  }

  int NumParameters() const override { return static_cast<int>(kDim); }

 private:
  CoordinateCost cost_;
};

struct LocalResult {
  Vec z{};
  double value = -std::numeric_limits<double>::infinity();  // maximized objective
  int iterations = 0;
};

LocalResult maximize_from(const CoordinateCost& negated_cost, Vec x, int max_iterations) {
  ceres::GradientProblem problem(new SphereProductCost(negated_cost));
  ceres::GradientProblemSolver::Options options;
  options.line_search_direction_type = ceres::LBFGS;
  options.max_num_iterations = max_iterations;
  options.function_tolerance = 1e-16;
  options.gradient_tolerance = 1e-14;
  options.parameter_tolerance = 1e-16;
  options.logging_type = ceres::SILENT;
  options.minimizer_progress_to_stdout = false;
  ceres::GradientProblemSolver::Summary summary;
  ceres::Solve(options, problem, x.data(), &summary);

  LocalResult r;
  double n1 = 0.0, n2 = 0.0;
  if (!project(x.data(), r.z, n1, n2)) return r;
  Vec unused;
  r.value = -negated_cost(r.z, unused);
  r.iterations = static_cast<int>(summary.iterations.size());
  return r;
}

Vec random_start(Rng& rng) {
  std::normal_distribution<double> normal;
  Vec x;
  for (double& v : x) v = normal(rng);
  return x;
}

// Ceres' line search warns through glog when an interpolation polynomial
// degenerates near convergence; the warnings carry no information here.
void quiet_line_search_warnings() {
  static std::once_flag once;
  std::call_once(once, [] {
    if (FLAGS_minloglevel < google::GLOG_ERROR) FLAGS_minloglevel = google::GLOG_ERROR;
  });
}

struct FrontierPoint {
  double phi = 0.0;
  Vec z{};
  double information = 0.0;
  double fidelity = 0.0;
};

class FrontierSolver {
 public:
  FrontierSolver(const MomentSet& moments, const OptimizerConfig& config)
      : problem_(moments), config_(config) {
    if (config.restarts < 1) throw std::invalid_argument("optimizer: restarts must be >= 1");
    quiet_line_search_warnings();
  }

  const Problem& problem() const { return problem_; }
  int iterations() const { return iterations_; }

  // Maximizer of cos(phi) F + sin(phi) I from the given warm starts plus
  // `random_starts` Gaussian starts.
  FrontierPoint solve(double phi, const std::vector<Vec>& warm, int random_starts) {
    Form combined;
    const double wf = std::cos(phi), wi = std::sin(phi);
    for (std::size_t k = 0; k < combined.size(); ++k)
      combined[k] = wf * problem_.fid[k] + wi * problem_.info[k];
    const CoordinateCost cost = [&combined](const Vec& z, Vec& gz) {
      Vec qz;
      apply(combined, z, qz);
      for (std::size_t k = 0; k < kDim; ++k) gz[k] = -2.0 * qz[k];
      return -dot(z, qz);
    };

    std::vector<Vec> starts = warm;
    Rng rng = stream_rng(config_.seed, solve_count_++);
    for (int r = 0; r < random_starts; ++r) starts.push_back(random_start(rng));

    LocalResult best;
    for (const Vec& x0 : starts) {
      LocalResult r = maximize_from(cost, x0, config_.max_line_search_iterations);
      iterations_ += r.iterations;
      if (r.value > best.value + 1e-13) best = r;
    }
    return point(phi, best.z);
  }

  // Maximizes F - nu (I - t) - mu/2 (I - t)^2 with increasing mu.
  FrontierPoint polish(const FrontierPoint& start, double target) {
    Vec z = start.z;
    double nu = 0.0, mu = 10.0;
    for (int round = 0; round < 12; ++round) {
      const CoordinateCost cost = [&](const Vec& zz, Vec& gz) {
        Vec qf, qi;
        apply(problem_.fid, zz, qf);
        apply(problem_.info, zz, qi);
        const double gap = dot(zz, qi) - target;
        const double w = nu + mu * gap;
        for (std::size_t k = 0; k < kDim; ++k) gz[k] = -2.0 * qf[k] + 2.0 * w * qi[k];
        return -dot(zz, qf) + nu * gap + 0.5 * mu * gap * gap;
      };
      LocalResult r = maximize_from(cost, z, config_.max_line_search_iterations);
      iterations_ += r.iterations;
      z = r.z;
      const double gap = problem_.information(z) - target;
      if (std::abs(gap) <= 0.1 * config_.information_tolerance) break;
      nu += mu * gap;
      mu *= 10.0;
    }
    return point(start.phi, z);
  }

  // Frontier endpoints, by continuation in the tilt towards pure F / pure I.
  FrontierPoint low_end() {
    if (!low_) low_ = endpoint(false);
    return *low_;
  }
  FrontierPoint high_end() {
    if (!high_) high_ = endpoint(true);
    return *high_;
  }

 private:
  FrontierPoint point(double phi, const Vec& z) const {
    return {phi, z, problem_.information(z), problem_.fidelity(z)};
  }

  FrontierPoint endpoint(bool information_side) {
    const double half_pi = std::numbers::pi / 2.0;
    auto angle = [&](double tilt) { return information_side ? half_pi - tilt : tilt; };
    FrontierPoint p = solve(angle(1e-2), {}, config_.restarts);
    for (double tilt = 1e-3; tilt >= config_.endpoint_tilt * 0.999; tilt /= 10.0)
      p = solve(angle(tilt), {p.z}, 0);
    return p;
  }

  Problem problem_;
  OptimizerConfig config_;
  std::uint64_t solve_count_ = 0;
  int iterations_ = 0;
  std::optional<FrontierPoint> low_;
  std::optional<FrontierPoint> high_;
};

OptimizationReport make_report(const FrontierSolver& solver, double target,
                               const FrontierPoint& p, const OptimizerConfig& config) {
  OptimizationReport report;
  report.mode = solver.problem().mode;
  report.target_information = target;
  report.achieved_information = p.information;
  report.achieved_disturbance = 1.0 - p.fidelity;
  report.seed = validate_seed(to_matrix(p.z));
  report.iterations = solver.iterations();
  report.converged = std::abs(p.information - target) <= config.information_tolerance;
  return report;
}

OptimizationReport optimize_with(FrontierSolver& solver, double target,
                                 const OptimizerConfig& config) {
  const FrontierPoint lo_end = solver.low_end();
  const FrontierPoint hi_end = solver.high_end();
  const double tol = config.information_tolerance;
  if (!(target >= lo_end.information - 1e-6 && target <= hi_end.information + 1e-6)) {
    throw std::domain_error("optimize: target information " + std::to_string(target) +
                            " outside feasible range [" + std::to_string(lo_end.information) +
                            ", " + std::to_string(hi_end.information) + "]");
  }
  if (target <= lo_end.information + tol) return make_report(solver, target, lo_end, config);
  if (target >= hi_end.information - tol) return make_report(solver, target, hi_end, config);

  // Illinois regula falsi on phi; I(phi) is nondecreasing.
  FrontierPoint lo = lo_end, hi = hi_end;
  double flo = lo.information - target, fhi = hi.information - target;
  FrontierPoint best = std::abs(flo) < std::abs(fhi) ? lo : hi;
  int side = 0;
  const int interior_random = std::max(1, config.restarts / 10);
  for (int step = 0; step < config.max_bisection_steps; ++step) {
    double phi = (lo.phi * fhi - hi.phi * flo) / (fhi - flo);
    if (!(phi > lo.phi && phi < hi.phi) || step % 4 == 3) phi = 0.5 * (lo.phi + hi.phi);
    const FrontierPoint mid = solver.solve(phi, {lo.z, hi.z}, interior_random);
    const double fmid = mid.information - target;
    if (std::abs(fmid) < std::abs(best.information - target)) best = mid;
    if (std::abs(fmid) <= tol) break;
    if (fmid < 0.0) {
      lo = mid;
      flo = fmid;
      if (side == -1) fhi *= 0.5;
      side = -1;
    } else {
      hi = mid;
      fhi = fmid;
      if (side == 1) flo *= 0.5;
      side = 1;
    }
    if (hi.phi - lo.phi < 1e-15) break;
  }
  if (std::abs(best.information - target) > tol) best = solver.polish(best, target);
  return make_report(solver, target, best, config);
}

}  // namespace

std::pair<double, double> feasible_information_range(const MomentSet& moments,
                                                     const OptimizerConfig& config) {
  FrontierSolver solver(moments, config);
  return {solver.low_end().information, solver.high_end().information};
}

OptimizationReport optimize(double target_information, const MomentSet& moments,
                            const OptimizerConfig& config) {
  FrontierSolver solver(moments, config);
  return optimize_with(solver, target_information, config);
}

BoundCurve bound_curve(EncodingMode mode, int n_points, CurveMethod method,
                       const OptimizerConfig& config) {
  if (n_points < 2) throw std::invalid_argument("bound_curve: need at least 2 points");
  BoundCurve curve;
  curve.mode = mode;

  if (method == CurveMethod::Analytic) {
    if (mode != EncodingMode::Antiparallel) {
      throw std::invalid_argument("bound_curve: closed form exists only for antiparallel spins");
    }
    curve.information_lo = kInformationMin;
    curve.information_hi = information_max_antiparallel();
    for (int i = 0; i < n_points; ++i) {
      const double info =
          i + 1 == n_points
              ? curve.information_hi
              : curve.information_lo +
                    (curve.information_hi - curve.information_lo) * i / (n_points - 1);
      curve.points.push_back({info, d_min(info), mode, Provenance::Bound});
    }
    return curve;
  }

  FrontierSolver solver(cached_moments(mode), config);
  curve.information_lo = solver.low_end().information;
  curve.information_hi = solver.high_end().information;
  for (int i = 0; i < n_points; ++i) {
    const double target =
        i + 1 == n_points ? curve.information_hi
                          : curve.information_lo +
                                (curve.information_hi - curve.information_lo) * i / (n_points - 1);
    const OptimizationReport r = optimize_with(solver, target, config);
    curve.converged = curve.converged && r.converged;
    if (!curve.points.empty() && !(r.achieved_information > curve.points.back().information))
      continue;
    curve.points.push_back(
        {r.achieved_information, r.achieved_disturbance, mode, Provenance::Optimizer});
  }
  return curve;
}

Comparison compare_encodings(int n_points, const OptimizerConfig& config) {
  if (n_points < 3) throw std::invalid_argument("compare_encodings: need at least 3 points");
  FrontierSolver solver(cached_moments(EncodingMode::Parallel), config);
  Comparison cmp;
  cmp.parallel_information_max = solver.high_end().information;
  const double lo = kInformationMin;
  const double hi = std::min(cmp.parallel_information_max, information_max_antiparallel());
  for (int i = 0; i < n_points; ++i) {
    const double target = i + 1 == n_points ? hi : lo + (hi - lo) * i / (n_points - 1);
    const OptimizationReport r = optimize_with(solver, target, config);
    cmp.converged = cmp.converged && r.converged;
    ComparisonRow row;
    row.information = r.achieved_information;
    row.parallel_disturbance = std::max(0.0, r.achieved_disturbance);
    row.antiparallel_disturbance = d_min(std::clamp(row.information, kInformationMin,
                                                    information_max_antiparallel()));
    if (row.parallel_disturbance > 1e-6) {
      row.reduction_ratio =
          (row.parallel_disturbance - row.antiparallel_disturbance) / row.parallel_disturbance;
    }
    cmp.rows.push_back(row);
  }
  return cmp;
}

}  // namespace idt
