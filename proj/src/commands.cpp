#include "idtrade/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "idtrade/evaluator.hpp"
#include "idtrade/instrument.hpp"
#include "idtrade/povm4.hpp"
#include "idtrade/seed_io.hpp"
#include "idtrade/tradeoff.hpp"

namespace idt {

namespace {

// Loads and validates a seed file; returns an exit code on failure.
std::optional<int> load_seed(const std::string& path, KrausSeed& seed, std::ostream& err) {
  try {
    seed = validate_seed(read_seed_file(path).matrix);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  }
  return std::nullopt;
}

// Writes CSV text to options.out or to `out`. On success the summary stream
// is `out` when the CSV went to a file and `err` otherwise.
int emit_csv(const std::string& csv, const GlobalOptions& options, std::ostream& out,
             std::ostream& err) {
  if (!options.out) {
    out << csv;
    return kExitOk;
  }
  std::ofstream f(*options.out, std::ios::binary);
  if (!f || !(f << csv) || !f.flush()) {
    err << "error: cannot write " << *options.out << '\n';
    return kExitIoError;
  }
  return kExitOk;
}

std::ostream& summary_stream(const GlobalOptions& options, std::ostream& out, std::ostream& err) {
  return options.out ? out : err;
}

void print_weights(const KrausSeed& seed, std::ostream& out) {
  out << "singlet_weight: " << format_number(seed.singlet_weight) << '\n'
      << "triplet_weight: " << format_number(seed.triplet_weight) << '\n'
      << "valid: " << (seed.validated ? "yes" : "no") << '\n';
}

DiscretePOVM discretize(const KrausSeed& seed) {
  try {
    return build_discrete(seed, DiscreteRealization::FourOutcome);
  } catch (const std::runtime_error&) {
    return build_discrete(seed, DiscreteRealization::TetrahedralGroup);
  }
}

}  // namespace

int cmd_validate(const std::string& path, const GlobalOptions& /*options*/, std::ostream& out,
                 std::ostream& err) {
  KrausSeed seed;
  if (auto code = load_seed(path, seed, err)) return *code;
  print_weights(seed, out);
  return seed.validated ? kExitOk : kExitDomainFailure;
}

int cmd_evaluate(const std::string& path, const GlobalOptions& options, std::ostream& out,
                 std::ostream& err) {
  KrausSeed seed;
  if (auto code = load_seed(path, seed, err)) return *code;
  if (!seed.validated) {
    print_weights(seed, out);
    err << "error: seed is not trace preserving\n";
    return kExitDomainFailure;
  }
  const TradeoffPoint p = evaluate(seed, cached_moments(options.mode));
  out << "mode: " << to_string(options.mode) << '\n'
      << "information: " << format_number(p.information) << '\n'
      << "disturbance: " << format_number(p.disturbance) << '\n';

  if (options.mc_samples) {
    const DiscretePOVM povm = discretize(seed);
    const MonteCarloEstimate mc =
        monte_carlo_evaluate(povm.instrument(), options.mode, options.seed, *options.mc_samples);
    out << "mc_outcomes: " << povm.kraus.size() << '\n'
        << "mc_samples: " << mc.samples << '\n'
        << "mc_information: " << format_number(mc.information) << " +- "
        << format_number(mc.information_stderr) << '\n'
        << "mc_disturbance: " << format_number(mc.disturbance) << " +- "
        << format_number(mc.disturbance_stderr) << '\n';
  }
  return kExitOk;
}

int cmd_sweep(int points, const GlobalOptions& options, std::ostream& out, std::ostream& err) {
  if (points < 2) {
    err << "usage error: sweep needs --points >= 2\n";
    return kExitIoError;
  }
  const MomentSet& moments = cached_moments(EncodingMode::Antiparallel);
  const double theta_max = mdm_theta_max();

  if (options.paper_coefficients) {
    // Uncorrected |00><Psi+| coefficient: report the broken trace condition.
    int failures = 0;
    for (int i = 0; i < points; ++i) {
      const double theta = theta_max * (points - 1 - i) / (points - 1);
      const KrausSeed s = mdm_seed_uncorrected(theta);
      out << "theta " << format_number(theta) << ": singlet_weight "
          << format_number(s.singlet_weight) << ", triplet_weight "
          << format_number(s.triplet_weight) << (s.validated ? " ok" : " VIOLATES trace condition")
          << '\n';
      if (!s.validated) ++failures;
    }
    out << "violations: " << failures << " of " << points << '\n';
    return failures > 0 ? kExitDomainFailure : kExitOk;
  }

  std::vector<CurveRow> rows;
  double max_gap = 0.0;
  for (int i = 0; i < points; ++i) {
    // Descending theta gives ascending information.
    const double theta = i + 1 == points ? 0.0 : theta_max * (points - 1 - i) / (points - 1);
    const TradeoffPoint p = evaluate(mdm_seed(theta), moments);
    // d_min is infinitely steep at the top end, where a few ulps of error in
    // the evaluated information would move it by ~1e-8; take the bound at the
    // family's closed-form information instead.
    const double info = 0.5 + std::sqrt(3.0) / 6.0 * std::cos(theta);
    const double bound = d_min(std::clamp(info, kInformationMin, information_max_antiparallel()));
    max_gap = std::max(max_gap, bound_distance(p.information, p.disturbance));
    rows.push_back({p, {format_number(theta), format_number(bound)}});
  }

  std::ostringstream csv;
  const std::vector<std::string> extra{"theta", "analytic_disturbance"};
  write_curve_csv(csv, extra, rows);
  if (int code = emit_csv(csv.str(), options, out, err); code != kExitOk) return code;
  summary_stream(options, out, err) << "max distance to analytic bound: "
                                    << format_number(max_gap) << '\n';
  return kExitOk;
}

int cmd_compare(int points, int restarts, const GlobalOptions& options, std::ostream& out,
                std::ostream& err) {
  if (points < 3) {
    err << "usage error: compare needs --points >= 3\n";
    return kExitIoError;
  }
  if (restarts < 1) {
    err << "usage error: compare needs --restarts >= 1\n";
    return kExitIoError;
  }
  OptimizerConfig config;
  config.restarts = restarts;
  config.seed = options.seed;
  const Comparison cmp = compare_encodings(points, config);

  std::vector<CurveRow> rows;
  for (const auto& r : cmp.rows) {
    rows.push_back({{r.information, r.antiparallel_disturbance, EncodingMode::Antiparallel,
                     Provenance::Bound},
                    {""}});
    rows.push_back({{r.information, r.parallel_disturbance, EncodingMode::Parallel,
                     Provenance::Optimizer},
                    {r.reduction_ratio ? format_number(*r.reduction_ratio) : std::string{}}});
  }
  std::ostringstream csv;
  const std::vector<std::string> extra{"ratio"};
  write_curve_csv(csv, extra, rows);
  if (int code = emit_csv(csv.str(), options, out, err); code != kExitOk) return code;

  std::ostream& summary = summary_stream(options, out, err);
  summary << "parallel information max: " << format_number(cmp.parallel_information_max) << '\n';
  // The last row sits at the parallel maximum, which is where I = 3/4 lies.
  const ComparisonRow& last = cmp.rows.back();
  if (std::abs(last.information - 0.75) < 1e-6 && last.reduction_ratio) {
    summary << "ratio at I=0.75: " << format_number(*last.reduction_ratio) << '\n';
  } else {
    summary << "ratio at I=" << format_number(last.information) << ": "
            << (last.reduction_ratio ? format_number(*last.reduction_ratio) : "n/a") << '\n';
  }
  if (!cmp.converged) {
    err << "warning: optimizer did not converge at every point\n";
    return kExitNotConverged;
  }
  return kExitOk;
}

int cmd_povm4_check(const std::optional<std::string>& path, const GlobalOptions& options,
                    std::ostream& out, std::ostream& err) {
  const auto unitaries =
      options.paper_coefficients ? tetrahedral_unitaries_uncorrected() : tetrahedral_unitaries();
  bool all_unitary = true;
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    const ComplexMatrix& u = unitaries[i];
    const double residual = frobenius_distance(u * adjoint(u), ComplexMatrix::identity(2));
    const bool ok = residual <= 1e-12;
    all_unitary = all_unitary && ok;
    out << "U" << i << " unitarity residual: " << format_number(residual)
        << (ok ? "" : "  NOT UNITARY") << '\n';
  }
  if (!all_unitary) return kExitDomainFailure;

  out << "bloch dot products:";
  for (double d : tetrahedral_dot_products(unitaries)) out << ' ' << format_number(d);
  out << '\n';

  KrausSeed seed = mdm_seed(0.0);
  if (path) {
    if (auto code = load_seed(*path, seed, err)) return *code;
  }
  if (!seed.validated) {
    print_weights(seed, out);
    err << "error: seed is not trace preserving\n";
    return kExitDomainFailure;
  }
  out << "twirl deviation of A0^dag A0: "
      << format_number(four_outcome_twirl_deviation(adjoint(seed.a0) * seed.a0)) << '\n';

  DiscretePOVM povm;
  try {
    povm = build_discrete(seed, DiscreteRealization::FourOutcome);
  } catch (const std::runtime_error& e) {
    out << "four-outcome set: incomplete (" << e.what() << ")\n";
    return kExitDomainFailure;
  }
  out << "completeness residual: " << format_number(povm.completeness_residual) << '\n';

  if (options.mc_samples) {
    const TradeoffPoint exact = evaluate(seed, cached_moments(options.mode));
    const MonteCarloEstimate mc =
        monte_carlo_evaluate(povm.instrument(), options.mode, options.seed, *options.mc_samples);
    const double si = sigma_distance(mc.information, mc.information_stderr, exact.information, 0.0);
    const double sd = sigma_distance(mc.disturbance, mc.disturbance_stderr, exact.disturbance, 0.0);
    out << "trace formula: information " << format_number(exact.information) << ", disturbance "
        << format_number(exact.disturbance) << '\n'
        << "monte carlo:   information " << format_number(mc.information) << " +- "
        << format_number(mc.information_stderr) << ", disturbance "
        << format_number(mc.disturbance) << " +- " << format_number(mc.disturbance_stderr)
        << '\n'
        << "deviation (sigma): " << format_number(si) << ", " << format_number(sd) << '\n';
    if (si > 3.0 || sd > 3.0) return kExitDomainFailure;
  }
  return kExitOk;
}

}  // namespace idt
