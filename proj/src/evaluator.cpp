#include "idtrade/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "idtrade/parallel.hpp"

namespace idt {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Analytic: return "analytic";
    case Provenance::TraceFormula: return "trace_formula";
    case Provenance::MonteCarlo: return "monte_carlo";
    case Provenance::Optimizer: return "optimizer";
    case Provenance::Bound: return "bound";
  }
  return "unknown";
}

double information_functional(const ComplexMatrix& a0, const MomentSet& moments) {
  return trace(adjoint(a0) * a0 * moments(0, 0)).real();
}

double fidelity_functional(const ComplexMatrix& a0, const MomentSet& moments) {
  const ComplexMatrix a0_adj = adjoint(a0);
  double f = 0.0;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) {
      const ComplexMatrix x = a0 * moments(j, k) * a0_adj;
      for (std::size_t i = 0; i < 2; ++i) f += x(2 * j + i, 2 * k + i).real();
    }
  return f;
}

namespace {

void require_validated(const KrausSeed& seed, const char* what) {
  if (!seed.validated) {
    throw std::invalid_argument(std::string(what) + ": seed is not trace preserving (weights " +
                                std::to_string(seed.singlet_weight) + ", " +
                                std::to_string(seed.triplet_weight) + ")");
  }
}

struct Moments2 {
  double sum = 0.0;
  double sum_sq = 0.0;
  void add(double x) {
    sum += x;
    sum_sq += x * x;
  }
  void merge(const Moments2& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
  }
  std::pair<double, double> mean_and_stderr(std::size_t n) const {
    const double dn = static_cast<double>(n);
    const double mean = sum / dn;
    const double var = std::max(0.0, sum_sq / dn - mean * mean) * dn / (dn - 1.0);
    return {mean, std::sqrt(var / dn)};
  }
};

struct McAccumulator {
  Moments2 info;
  Moments2 dist;
  double max_dist = 0.0;
};

void merge_acc(McAccumulator& into, const McAccumulator& from) {
  into.info.merge(from.info);
  into.dist.merge(from.dist);
  into.max_dist = std::max(into.max_dist, from.max_dist);
}

// Fidelity of the first qubit of |y><y| with |psi>, i.e. sum_i |<psi i|y>|^2.
double first_qubit_overlap(const ComplexVector& psi, const ComplexVector& y) {
  const Complex a = std::conj(psi[0]) * y[0] + std::conj(psi[1]) * y[2];
  const Complex b = std::conj(psi[0]) * y[1] + std::conj(psi[1]) * y[3];
  return std::norm(a) + std::norm(b);
}

MonteCarloEstimate finish(const McAccumulator& acc, EncodingMode mode, std::size_t samples) {
  MonteCarloEstimate est;
  est.mode = mode;
  est.samples = samples;
  std::tie(est.information, est.information_stderr) = acc.info.mean_and_stderr(samples);
  std::tie(est.disturbance, est.disturbance_stderr) = acc.dist.mean_and_stderr(samples);
  est.max_sample_disturbance = acc.max_dist;
  return est;
}

}  // namespace

double information(const KrausSeed& seed, const MomentSet& moments) {
  require_validated(seed, "information");
  return information_functional(seed.a0, moments);
}

double disturbance(const KrausSeed& seed, const MomentSet& moments) {
  require_validated(seed, "disturbance");
  return 1.0 - fidelity_functional(seed.a0, moments);
}

TradeoffPoint evaluate(const KrausSeed& seed, const MomentSet& moments) {
  return {information(seed, moments), disturbance(seed, moments), moments.mode,
          Provenance::TraceFormula};
}

double completeness_residual(const std::vector<ComplexMatrix>& kraus) {
  ComplexMatrix sum(4, 4);
  for (const auto& a : kraus) sum = sum + adjoint(a) * a;
  return frobenius_distance(sum, ComplexMatrix::identity(4));
}

void check_instrument(const Instrument& instrument, double tol) {
  if (instrument.kraus.empty()) throw std::invalid_argument("instrument has no operators");
  if (instrument.kraus.size() != instrument.guesses.size()) {
    throw std::invalid_argument("instrument: " + std::to_string(instrument.kraus.size()) +
                                " operators but " + std::to_string(instrument.guesses.size()) +
                                " guesses");
  }
  for (const auto& a : instrument.kraus)
    if (a.rows() != 4 || a.cols() != 4)
      throw std::invalid_argument("instrument: operators must be 4x4");
  const double residual = completeness_residual(instrument.kraus);
  if (residual > tol) {
    throw std::invalid_argument("instrument is not complete: residual " +
                                std::to_string(residual));
  }
}

MonteCarloEstimate monte_carlo_evaluate(const Instrument& instrument, EncodingMode mode,
                                        std::uint64_t seed, std::size_t samples) {
  check_instrument(instrument);
  if (samples < 2) throw std::invalid_argument("monte_carlo_evaluate: need at least 2 samples");

  std::vector<ComplexVector> guess_states;
  for (const auto& d : instrument.guesses) guess_states.push_back(spin_state(d));

  const McAccumulator acc = parallel_reduce<McAccumulator>(
      seed, samples,
      [&](Rng& rng, std::size_t count, McAccumulator& a) {
        for (std::size_t s = 0; s < count; ++s) {
          const Direction d = haar_sample(rng);
          const ComplexVector psi = spin_state(d);
          const ComplexVector phi = encoded_state(d, mode);
          double info = 0.0, fid = 0.0;
          for (std::size_t r = 0; r < instrument.kraus.size(); ++r) {
            const ComplexVector y = instrument.kraus[r] * phi;
            info += y.squared_norm() * std::norm(inner(guess_states[r], psi));
            fid += first_qubit_overlap(psi, y);
          }
          a.info.add(info);
          a.dist.add(1.0 - fid);
          a.max_dist = std::max(a.max_dist, std::abs(1.0 - fid));
        }
      },
      merge_acc);
  return finish(acc, mode, samples);
}

CovariantizationReport covariantize_check(const Instrument& instrument, EncodingMode mode,
                                          std::uint64_t seed, std::size_t samples) {
  CovariantizationReport report;
  report.original = monte_carlo_evaluate(instrument, mode, seed, samples);

  std::vector<ComplexMatrix> guess_rotations_adj;
  for (const auto& d : instrument.guesses) guess_rotations_adj.push_back(adjoint(spin_rotation(d)));

  // Outcome (r, h) of the covariant instrument has operator
  // (V x V) A_r (V x V)^dag with V = U_h U_r^dag and guess U_h|0>. The
  // integral over h is sampled jointly with the input direction.
  const McAccumulator acc = parallel_reduce<McAccumulator>(
      seed ^ 0x5bd1e995ULL, samples,
      [&](Rng& rng, std::size_t count, McAccumulator& a) {
        for (std::size_t s = 0; s < count; ++s) {
          const Direction d = haar_sample(rng);
          const ComplexMatrix uh = haar_unitary(rng);
          const ComplexVector psi = spin_state(d);
          const ComplexVector phi = encoded_state(d, mode);
          const ComplexVector guess{uh(0, 0), uh(1, 0)};
          const double guess_fid = std::norm(inner(guess, psi));
          double info = 0.0, fid = 0.0;
          for (std::size_t r = 0; r < instrument.kraus.size(); ++r) {
            const ComplexMatrix v = uh * guess_rotations_adj[r];
            const ComplexMatrix vv = tensor_product(v, v);
            const ComplexVector y = vv * (instrument.kraus[r] * (adjoint(vv) * phi));
            info += y.squared_norm() * guess_fid;
            fid += first_qubit_overlap(psi, y);
          }
          a.info.add(info);
          a.dist.add(1.0 - fid);
          a.max_dist = std::max(a.max_dist, std::abs(1.0 - fid));
        }
      },
      merge_acc);
  report.covariant = finish(acc, mode, samples);

  report.information_sigmas =
      sigma_distance(report.original.information, report.original.information_stderr,
                     report.covariant.information, report.covariant.information_stderr);
  report.disturbance_sigmas =
      sigma_distance(report.original.disturbance, report.original.disturbance_stderr,
                     report.covariant.disturbance, report.covariant.disturbance_stderr);
  return report;
}

double sigma_distance(double a, double a_err, double b, double b_err) {
  const double diff = std::abs(a - b);
  if (diff <= 1e-12) return 0.0;
  const double err = std::sqrt(a_err * a_err + b_err * b_err);
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  return diff / err;
}

}  // namespace idt
