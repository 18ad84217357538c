#include "idtrade/moments.hpp"

#include <boost/math/special_functions/legendre.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "idtrade/parallel.hpp"

namespace idt {

namespace {

// Per-entry running sums of value and value^2, kept separately for the real
// and imaginary parts.
struct EntryAccumulator {
  explicit EntryAccumulator(std::size_t n = 16) : sum(n), sum_sq(n) {}
  std::vector<Complex> sum;
  std::vector<Complex> sum_sq;

  void add(std::span<const Complex> x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      sum[i] += x[i];
      sum_sq[i] += Complex{x[i].real() * x[i].real(), x[i].imag() * x[i].imag()};
    }
  }
  void merge(const EntryAccumulator& o) {
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] += o.sum[i];
      sum_sq[i] += o.sum_sq[i];
    }
  }
  std::pair<ComplexMatrix, ComplexMatrix> finish(std::size_t n) const {
    ComplexMatrix mean(4, 4), err(4, 4);
    const double dn = static_cast<double>(n);
    for (std::size_t i = 0; i < sum.size(); ++i) {
      const Complex mu = sum[i] / dn;
      const double var_re = std::max(0.0, sum_sq[i].real() / dn - mu.real() * mu.real());
      const double var_im = std::max(0.0, sum_sq[i].imag() / dn - mu.imag() * mu.imag());
      mean(i / 4, i % 4) = mu;
      err(i / 4, i % 4) = Complex{std::sqrt(var_re / (dn - 1.0)), std::sqrt(var_im / (dn - 1.0))};
    }
    return {mean, err};
  }
};

// Integrand of M_jk at one direction: conj(psi_j) psi_k rho.
void moment_integrand(const Direction& d, EncodingMode mode,
                      std::array<std::array<ComplexMatrix, 2>, 2>& out) {
  const ComplexVector psi = spin_state(d);
  const ComplexMatrix rho = encode(d, mode);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) out[j][k] = (std::conj(psi[j]) * psi[k]) * rho;
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  // legendre_p_zeros returns the nonnegative roots in ascending order.
  const std::vector<double> half = boost::math::legendre_p_zeros<double>(n);
  std::vector<double> nodes;
  nodes.reserve(n);
  for (auto it = half.rbegin(); it != half.rend(); ++it)
    if (*it != 0.0) nodes.push_back(-*it);
  for (double x : half) nodes.push_back(x);

  std::vector<double> weights(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double x = nodes[i];
    const double dp = boost::math::legendre_p_prime(n, x);
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return {std::move(nodes), std::move(weights)};
}

MomentSet moment_set(EncodingMode mode, int resolution) {
  if (resolution < kMinMomentResolution) {
    throw std::invalid_argument("moment_set: resolution " + std::to_string(resolution) +
                                " below minimum " + std::to_string(kMinMomentResolution));
  }
  const auto [nodes, weights] = gauss_legendre(resolution);
  const int n_az = resolution;

  MomentSet result;
  result.mode = mode;
  for (auto& row : result.m)
    for (auto& e : row) e = ComplexMatrix(4, 4);

  std::array<std::array<ComplexMatrix, 2>, 2> f;
  // Normalized measure: du/2 * dphi/(2pi).
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    const double polar = std::acos(std::clamp(nodes[a], -1.0, 1.0));
    const double w = weights[a] / 2.0 / n_az;
    for (int b = 0; b < n_az; ++b) {
      const double az = 2.0 * std::numbers::pi * b / n_az;
      moment_integrand(Direction{polar, az}, mode, f);
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) result.m[j][k] = result.m[j][k] + w * f[j][k];
    }
  }
  return result;
}

const MomentSet& cached_moments(EncodingMode mode) {
  static const MomentSet anti = moment_set(EncodingMode::Antiparallel);
  static const MomentSet par = moment_set(EncodingMode::Parallel);
  return mode == EncodingMode::Antiparallel ? anti : par;
}

MomentEstimate monte_carlo_moments(EncodingMode mode, std::uint64_t seed, std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("monte_carlo_moments: need at least 2 samples");
  using Acc = std::array<EntryAccumulator, 4>;
  const Acc total = parallel_reduce<Acc>(
      seed, samples,
      [mode](Rng& rng, std::size_t count, Acc& acc) {
        std::array<std::array<ComplexMatrix, 2>, 2> f;
        for (std::size_t s = 0; s < count; ++s) {
          moment_integrand(haar_sample(rng), mode, f);
          for (std::size_t jk = 0; jk < 4; ++jk) acc[jk].add(f[jk / 2][jk % 2].entries());
        }
      },
      [](Acc& into, const Acc& from) {
        for (std::size_t jk = 0; jk < 4; ++jk) into[jk].merge(from[jk]);
      });

  MomentEstimate est;
  est.mean.mode = mode;
  est.samples = samples;
  for (std::size_t jk = 0; jk < 4; ++jk) {
    auto [mean, err] = total[jk].finish(samples);
    est.mean.m[jk / 2][jk % 2] = std::move(mean);
    est.standard_error[jk / 2][jk % 2] = std::move(err);
  }
  return est;
}

std::pair<ComplexMatrix, ComplexMatrix> monte_carlo_encoding_average(EncodingMode mode,
                                                                     std::uint64_t seed,
                                                                     std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("monte_carlo_encoding_average: need 2+ samples");
  const EntryAccumulator total = parallel_reduce<EntryAccumulator>(
      seed, samples,
      [mode](Rng& rng, std::size_t count, EntryAccumulator& acc) {
        for (std::size_t s = 0; s < count; ++s) acc.add(encode(haar_sample(rng), mode).entries());
      },
      [](EntryAccumulator& into, const EntryAccumulator& from) { into.merge(from); });
  return total.finish(samples);
}

}  // namespace idt
