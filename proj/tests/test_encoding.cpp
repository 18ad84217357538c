#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "idtrade/encoding.hpp"
#include "idtrade/moments.hpp"
#include "oracles.hpp"

using namespace idt;
using std::numbers::pi;

namespace {

Direction random_direction(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return Direction::from_angles(std::acos(1.0 - 2.0 * u(rng)), 2.0 * pi * u(rng));
}

double dist(const ComplexVector& a, const ComplexVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

TEST(Direction, BlochVectorIsUnit) {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 100; ++n) {
    const auto b = random_direction(rng).bloch();
    EXPECT_NEAR(std::hypot(b[0], b[1], b[2]), 1.0, 1e-12);
  }
}

TEST(Direction, RejectsBadPolarAngle) {
  EXPECT_THROW(Direction::from_angles(-0.1, 0.0), std::invalid_argument);
  EXPECT_THROW(Direction::from_angles(4.0, 0.0), std::invalid_argument);
  EXPECT_NEAR(Direction::from_angles(1.0, 2.0 * pi + 0.5).azimuth, 0.5, 1e-12);
}

TEST(SpinState, ReferenceDirection) {
  EXPECT_LE(dist(spin_state(Direction::north()), ComplexVector{1.0, 0.0}), 1e-15);
}

TEST(SpinState, SouthPole) {
  EXPECT_LE(dist(spin_state(Direction::from_angles(pi, 0.0)), ComplexVector{0.0, 1.0}), 1e-15);
}

TEST(SpinState, Equator) {
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_LE(dist(spin_state(Direction::from_angles(pi / 2, pi / 2)),
                 ComplexVector{h, Complex{0.0, h}}),
            1e-15);
}

TEST(SpinState, UnitNormAndBlochRoundTrip) {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 100; ++n) {
    const Direction d = random_direction(rng);
    const ComplexVector psi = spin_state(d);
    EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
    const auto b = bloch_vector(psi), e = d.bloch();
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(b[k], e[k], 1e-12);
  }
}

TEST(OrthogonalState, Poles) {
  EXPECT_LE(dist(orthogonal_state({1.0, 0.0}), ComplexVector{0.0, 1.0}), 1e-15);
  EXPECT_LE(dist(orthogonal_state({0.0, 1.0}), ComplexVector{-1.0, 0.0}), 1e-15);
}

TEST(OrthogonalState, IsOrthogonalUnit) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    const ComplexVector psi = spin_state(random_direction(rng));
    const ComplexVector perp = orthogonal_state(psi);
    EXPECT_LE(std::abs(inner(psi, perp)), 1e-12);
    EXPECT_NEAR(perp.norm(), 1.0, 1e-12);
  }
}

TEST(OrthogonalState, RejectsNonUnitInput) {
  EXPECT_THROW(orthogonal_state({1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(orthogonal_state(ComplexVector{1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST(Encode, ReferenceDirection) {
  ComplexMatrix anti(4, 4), par(4, 4);
  anti(1, 1) = 1.0;
  par(0, 0) = 1.0;
  EXPECT_LE(frobenius_distance(encode(Direction::north(), EncodingMode::Antiparallel), anti),
            1e-15);
  EXPECT_LE(frobenius_distance(encode(Direction::north(), EncodingMode::Parallel), par), 1e-15);
}

TEST(Encode, PureUnitTraceStates) {
  std::mt19937_64 rng(4);
  for (auto mode : {EncodingMode::Antiparallel, EncodingMode::Parallel}) {
    for (int n = 0; n < 50; ++n) {
      const ComplexMatrix rho = encode(random_direction(rng), mode);
      EXPECT_NEAR(trace(rho).real(), 1.0, 1e-12);
      EXPECT_NEAR(trace(rho * rho).real(), 1.0, 1e-12);
      EXPECT_TRUE(is_hermitian(rho, 1e-12));
      EXPECT_TRUE(is_positive_semidefinite(rho, 1e-12));
    }
  }
}

TEST(Encode, MatchesIndependentConstruction) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 50; ++n) {
    const Direction d = random_direction(rng);
    for (bool anti : {true, false}) {
      const auto k = oracle::encoded(d.polar, d.azimuth, anti);
      ComplexMatrix expected(4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) expected(i, j) = k[i] * std::conj(k[j]);
      const auto mode = anti ? EncodingMode::Antiparallel : EncodingMode::Parallel;
      EXPECT_LE(frobenius_distance(encode(d, mode), expected), 1e-12);
    }
  }
}

TEST(Encode, PhaseOfOrthogonalStateDropsOut) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * pi);
  for (int n = 0; n < 50; ++n) {
    const Direction d = random_direction(rng);
    const ComplexVector psi = spin_state(d);
    const ComplexVector perp = std::polar(1.0, phase(rng)) * orthogonal_state(psi);
    const ComplexVector ket = tensor_product(psi, perp);
    EXPECT_LE(frobenius_distance(ComplexMatrix::outer(ket, ket),
                                 encode(d, EncodingMode::Antiparallel)),
              1e-12);
  }
}

TEST(Encode, RotationCovariance) {
  std::mt19937_64 rng(7);
  for (auto mode : {EncodingMode::Antiparallel, EncodingMode::Parallel}) {
    const ComplexMatrix rho0 = encode(Direction::north(), mode);
    for (int n = 0; n < 50; ++n) {
      const Direction d = random_direction(rng);
      const ComplexMatrix u = spin_rotation(d);
      EXPECT_LE(dist(u * ComplexVector{1.0, 0.0}, spin_state(d)), 1e-12);
      const ComplexMatrix uu = tensor_product(u, u);
      EXPECT_LE(frobenius_distance(uu * rho0 * adjoint(uu), encode(d, mode)), 1e-12);
    }
  }
}

TEST(HaarSample, FirstAndSecondMomentsOfCosPolar) {
  Rng rng(8);
  const int n = 100000;
  double m1 = 0.0, m2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double c = std::cos(haar_sample(rng).polar);
    m1 += c;
    m2 += c * c;
  }
  EXPECT_NEAR(m1 / n, 0.0, 0.02);
  EXPECT_NEAR(m2 / n, 1.0 / 3.0, 0.02);
}

TEST(HaarSample, DeterministicGivenSeed) {
  Rng a(99), b(99);
  for (int i = 0; i < 1000; ++i) {
    const Direction x = haar_sample(a), y = haar_sample(b);
    ASSERT_EQ(x.polar, y.polar);
    ASSERT_EQ(x.azimuth, y.azimuth);
  }
}

TEST(HaarSample, AverageEncodingMatchesQuadrature) {
  // M00 + M11 is the Haar average of the encoding.
  ComplexMatrix expected(4, 4);
  expected(0, 0) = expected(3, 3) = 1.0 / 6.0;
  expected(1, 1) = expected(2, 2) = 1.0 / 3.0;
  expected(1, 2) = expected(2, 1) = -1.0 / 6.0;
  const MomentSet& m = cached_moments(EncodingMode::Antiparallel);
  EXPECT_LE(oracle::max_abs_diff(m(0, 0) + m(1, 1), expected), 1e-12);

  const auto [mean, err] = monte_carlo_encoding_average(EncodingMode::Antiparallel, 3, 100000);
  EXPECT_LE(oracle::max_abs_diff(mean, expected), 0.01);
}

TEST(HaarUnitary, IsSpecialUnitary) {
  Rng rng(9);
  for (int n = 0; n < 100; ++n) {
    const ComplexMatrix u = haar_unitary(rng);
    EXPECT_TRUE(is_unitary(u, 1e-12));
    EXPECT_NEAR(std::abs(u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0) - 1.0), 0.0, 1e-12);
  }
}

TEST(SubspaceProjectors, ComplementaryIdempotents) {
  const auto [m1, m2] = subspace_projectors();
  EXPECT_LE(frobenius_norm(m1 * m2), 1e-15);
  EXPECT_LE(frobenius_distance(m1 * m1, m1), 1e-12);
  EXPECT_LE(frobenius_distance(m2 * m2, m2), 1e-12);
  EXPECT_NEAR(trace(m1).real(), 1.0, 1e-12);
  EXPECT_NEAR(trace(m2).real(), 3.0, 1e-12);
  EXPECT_LE(frobenius_distance(m1 + m2, ComplexMatrix::identity(4)), 1e-15);
}

TEST(SubspaceProjectors, Eigenvectors) {
  const auto [m1, m2] = subspace_projectors();
  EXPECT_LE(dist(m1 * singlet_state(), singlet_state()), 1e-15);
  EXPECT_LE(dist(m2 * triplet_zero_state(), triplet_zero_state()), 1e-15);
  EXPECT_LE((m1 * triplet_zero_state()).norm(), 1e-15);
}

TEST(EncodingMode, ParsesNames) {
  EXPECT_EQ(parse_encoding_mode("antiparallel"), EncodingMode::Antiparallel);
  EXPECT_EQ(parse_encoding_mode("parallel"), EncodingMode::Parallel);
  EXPECT_THROW(parse_encoding_mode("sideways"), std::invalid_argument);
  EXPECT_EQ(to_string(EncodingMode::Parallel), "parallel");
}
