#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "idtrade/evaluator.hpp"
#include "idtrade/instrument.hpp"
#include "idtrade/moments.hpp"
#include "idtrade/povm4.hpp"
#include "idtrade/tradeoff.hpp"

namespace py = pybind11;
using namespace idt;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2) throw std::invalid_argument("expected a 2-d array");
  const auto r = a.unchecked<2>();
  ComplexMatrix m(r.shape(0), r.shape(1));
  for (py::ssize_t i = 0; i < r.shape(0); ++i)
    for (py::ssize_t j = 0; j < r.shape(1); ++j) m(i, j) = r(i, j);
  return m;
}

CArray to_array(const ComplexMatrix& m) {
  CArray out({m.rows(), m.cols()});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
  return out;
}

CArray stack(const std::vector<ComplexMatrix>& ms) {
  CArray out({ms.size(), std::size_t{4}, std::size_t{4}});
  auto w = out.mutable_unchecked<3>();
  for (std::size_t k = 0; k < ms.size(); ++k)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) w(k, i, j) = ms[k](i, j);
  return out;
}

KrausSeed checked_seed(const CArray& a0) {
  const KrausSeed s = validate_seed(to_matrix(a0));
  if (!s.validated)
    throw std::invalid_argument("seed violates the trace conditions (singlet weight " +
                                std::to_string(s.singlet_weight) + ", triplet weight " +
                                std::to_string(s.triplet_weight) + ")");
  return s;
}

DiscreteRealization parse_realization(const std::string& name) {
  if (name == "four") return DiscreteRealization::FourOutcome;
  if (name == "group") return DiscreteRealization::TetrahedralGroup;
  throw std::invalid_argument("realization must be 'four' or 'group', got '" + name + "'");
}

OptimizerConfig config(int restarts, std::uint64_t seed) {
  OptimizerConfig c;
  c.restarts = restarts;
  c.seed = seed;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Information/disturbance tradeoff for spin-pair direction encodings";

  m.def("information_max", &information_max_antiparallel);
  m.def("theta_max", &mdm_theta_max);
  m.def("d_min", &d_min, py::arg("information"));
  m.def("f_max", &f_max, py::arg("g"));
  m.def("bound_distance", &bound_distance, py::arg("information"), py::arg("disturbance"));

  m.def(
      "validate_seed",
      [](const CArray& a0) {
        const KrausSeed s = validate_seed(to_matrix(a0));
        py::dict d;
        d["validated"] = s.validated;
        d["singlet_weight"] = s.singlet_weight;
        d["triplet_weight"] = s.triplet_weight;
        return d;
      },
      py::arg("a0"));

  m.def(
      "mdm_seed", [](double theta) { return to_array(mdm_seed(theta).a0); }, py::arg("theta"));

  m.def(
      "evaluate",
      [](const CArray& a0, const std::string& mode) {
        const TradeoffPoint p = evaluate(checked_seed(a0), cached_moments(parse_encoding_mode(mode)));
        return py::make_tuple(p.information, p.disturbance);
      },
      py::arg("a0"), py::arg("mode") = "antiparallel",
      "(information, disturbance) of the covariant instrument generated by a0.");

  m.def(
      "fg",
      [](const CArray& a0) {
        const FgValues v = fg_functionals(vector_decompose(to_matrix(a0)));
        return py::make_tuple(v.f, v.g);
      },
      py::arg("a0"));

  m.def(
      "moments",
      [](const std::string& mode, int resolution) {
        const MomentSet ms = moment_set(parse_encoding_mode(mode), resolution);
        return stack({ms(0, 0), ms(0, 1), ms(1, 0), ms(1, 1)}).reshape({2, 2, 4, 4});
      },
      py::arg("mode") = "antiparallel", py::arg("resolution") = kDefaultMomentResolution,
      "Array of shape (2, 2, 4, 4) holding M_jk.");

  m.def(
      "optimize",
      [](double target, const std::string& mode, int restarts, std::uint64_t seed) {
        OptimizationReport r;
        {
          py::gil_scoped_release release;
          r = optimize(target, cached_moments(parse_encoding_mode(mode)), config(restarts, seed));
        }
        py::dict d;
        d["information"] = r.achieved_information;
        d["disturbance"] = r.achieved_disturbance;
        d["seed"] = to_array(r.seed.a0);
        d["iterations"] = r.iterations;
        d["converged"] = r.converged;
        return d;
      },
      py::arg("target"), py::arg("mode") = "antiparallel", py::arg("restarts") = 20,
      py::arg("seed") = 0);

  m.def(
      "bound_curve",
      [](const std::string& mode, int n_points, const std::string& method) {
        if (method != "analytic" && method != "optimizer")
          throw std::invalid_argument("method must be 'analytic' or 'optimizer'");
        BoundCurve c;
        {
          py::gil_scoped_release release;
          c = bound_curve(parse_encoding_mode(mode), n_points,
                          method == "analytic" ? CurveMethod::Analytic : CurveMethod::Optimizer);
        }
        py::array_t<double> out({c.points.size(), std::size_t{2}});
        auto w = out.mutable_unchecked<2>();
        for (std::size_t i = 0; i < c.points.size(); ++i) {
          w(i, 0) = c.points[i].information;
          w(i, 1) = c.points[i].disturbance;
        }
        return out;
      },
      py::arg("mode") = "antiparallel", py::arg("n_points") = 21, py::arg("method") = "analytic",
      "Array of (information, disturbance) rows, information increasing.");

  m.def(
      "compare",
      [](int n_points) {
        Comparison c;
        {
          py::gil_scoped_release release;
          c = compare_encodings(n_points);
        }
        py::list rows;
        for (const ComparisonRow& r : c.rows) {
          py::dict d;
          d["information"] = r.information;
          d["antiparallel"] = r.antiparallel_disturbance;
          d["parallel"] = r.parallel_disturbance;
          d["ratio"] = r.reduction_ratio ? py::cast(*r.reduction_ratio) : py::none();
          rows.append(d);
        }
        return rows;
      },
      py::arg("n_points") = 11);

  m.def(
      "build_discrete",
      [](const CArray& a0, const std::string& realization) {
        const DiscretePOVM p = build_discrete(checked_seed(a0), parse_realization(realization));
        py::array_t<double> guesses({p.guesses.size(), std::size_t{3}});
        auto w = guesses.mutable_unchecked<2>();
        for (std::size_t i = 0; i < p.guesses.size(); ++i) {
          const auto b = p.guesses[i].bloch();
          for (int c = 0; c < 3; ++c) w(i, c) = b[c];
        }
        return py::make_tuple(stack(p.kraus), guesses);
      },
      py::arg("a0"), py::arg("realization") = "four",
      "(kraus, guesses): Kraus operators of shape (k, 4, 4) and guess Bloch vectors (k, 3).");

  m.def(
      "monte_carlo",
      [](const CArray& a0, const std::string& mode, std::uint64_t seed, std::size_t samples,
         const std::string& realization) {
        const DiscretePOVM p = build_discrete(checked_seed(a0), parse_realization(realization));
        MonteCarloEstimate e;
        {
          py::gil_scoped_release release;
          e = monte_carlo_evaluate(p.instrument(), parse_encoding_mode(mode), seed, samples);
        }
        py::dict d;
        d["information"] = e.information;
        d["information_stderr"] = e.information_stderr;
        d["disturbance"] = e.disturbance;
        d["disturbance_stderr"] = e.disturbance_stderr;
        d["samples"] = e.samples;
        return d;
      },
      py::arg("a0"), py::arg("mode") = "antiparallel", py::arg("seed") = 0,
      py::arg("samples") = 100000, py::arg("realization") = "four",
      "Sampled information and disturbance of the discrete instrument built from a0.");
}
