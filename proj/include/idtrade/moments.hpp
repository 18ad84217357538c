#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "idtrade/encoding.hpp"
#include "idtrade/linalg.hpp"

namespace idt {

/// The four Haar moments M_jk = \int dg <psi(g)|j> rho(g) <k|psi(g)>
/// of an encoding, as 4x4 operators.
struct MomentSet {
  EncodingMode mode = EncodingMode::Antiparallel;
  std::array<std::array<ComplexMatrix, 2>, 2> m;

  const ComplexMatrix& operator()(std::size_t j, std::size_t k) const { return m.at(j).at(k); }
};

inline constexpr int kMinMomentResolution = 64;
inline constexpr int kDefaultMomentResolution = 256;

/// Product quadrature: `resolution` Gauss-Legendre nodes in cos(polar) times
/// `resolution` trapezoid nodes in azimuth. The integrands are trigonometric
/// polynomials of low degree, so any admissible resolution is exact to
/// rounding. Throws std::invalid_argument for resolution < 64.
MomentSet moment_set(EncodingMode mode, int resolution = kDefaultMomentResolution);

/// Process-wide immutable moment set at the default resolution.
const MomentSet& cached_moments(EncodingMode mode);

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// Monte Carlo estimate of the moments. The standard-error matrices hold the
/// standard error of the real part in .real() and of the imaginary part in
/// .imag(), entrywise.
struct MomentEstimate {
  MomentSet mean;
  std::array<std::array<ComplexMatrix, 2>, 2> standard_error;
  std::size_t samples = 0;
};

MomentEstimate monte_carlo_moments(EncodingMode mode, std::uint64_t seed, std::size_t samples);

/// Monte Carlo average of encode(d, mode) with entrywise standard errors
/// (same packing as MomentEstimate).
std::pair<ComplexMatrix, ComplexMatrix> monte_carlo_encoding_average(EncodingMode mode,
                                                                     std::uint64_t seed,
                                                                     std::size_t samples);

}  // namespace idt
