#include "idtrade/instrument.hpp"

#include <cmath>
#include <stdexcept>

namespace idt {

namespace {

void require_4x4(const ComplexMatrix& m, const char* what) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw std::invalid_argument(std::string(what) + ": expected a 4x4 matrix");
  }
}

const SubspaceProjectors& projectors() {
  static const SubspaceProjectors p = subspace_projectors();
  return p;
}

ComplexMatrix gaussian_matrix(Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> e(16);
  for (auto& z : e) z = Complex{normal(rng), normal(rng)};
  return ComplexMatrix(4, 4, std::move(e));
}

}  // namespace

KrausSeed validate_seed(const ComplexMatrix& a0) {
  require_4x4(a0, "validate_seed");
  const ComplexMatrix gram = adjoint(a0) * a0;
  KrausSeed seed;
  seed.a0 = a0;
  seed.singlet_weight = trace(gram * projectors().singlet).real();
  seed.triplet_weight = trace(gram * projectors().triplet).real();
  seed.validated = std::abs(seed.singlet_weight - 1.0) <= kSeedTolerance &&
                   std::abs(seed.triplet_weight - 3.0) <= kSeedTolerance;
  return seed;
}

ComplexMatrix twirl(const ComplexMatrix& x) {
  require_4x4(x, "twirl");
  const auto& p = projectors();
  const Complex w1 = trace(x * p.singlet);
  const Complex w2 = trace(x * p.triplet);
  return w1 * p.singlet + (w2 / 3.0) * p.triplet;
}

ComplexMatrix conjugate_local(const ComplexMatrix& x, const ComplexMatrix& u) {
  const ComplexMatrix uu = tensor_product(u, u);
  return uu * x * adjoint(uu);
}

ComplexMatrix orbit_element(const KrausSeed& seed, const ComplexMatrix& u) {
  if (!seed.validated) throw std::invalid_argument("orbit_element: seed is not validated");
  return conjugate_local(seed.a0, u);
}

ComplexMatrix orbit_element(const KrausSeed& seed, const Direction& d) {
  if (!seed.validated) throw std::invalid_argument("orbit_element: seed is not validated");
  if (d.polar == 0.0) return seed.a0;
  return conjugate_local(seed.a0, spin_rotation(d));
}

VectorDecomposition vector_decompose(const ComplexMatrix& a0) {
  require_4x4(a0, "vector_decompose");
  VectorDecomposition vd;
  for (std::size_t half = 0; half < 2; ++half)
    for (std::size_t col = 0; col < 4; ++col)
      vd.v[half * 4 + col] = ComplexVector{a0(2 * half, col), a0(2 * half + 1, col)};
  return vd;
}

ComplexMatrix VectorDecomposition::reassemble() const {
  ComplexMatrix a0(4, 4);
  for (std::size_t half = 0; half < 2; ++half)
    for (std::size_t col = 0; col < 4; ++col) {
      const ComplexVector& vi = v[half * 4 + col];
      a0(2 * half, col) = vi[0];
      a0(2 * half + 1, col) = vi[1];
    }
  return a0;
}

ConstraintValues constraint_values(const VectorDecomposition& vd) {
  const auto& v = vd.v;
  ConstraintValues c;
  for (const auto& vi : v) c.norm_sum += vi.squared_norm();
  c.difference_sum = (v[1] - v[2]).squared_norm() + (v[6] - v[5]).squared_norm();
  return c;
}

FgValues fg_functionals(const VectorDecomposition& vd) {
  const auto& v = vd.v;
  auto n2 = [](const ComplexVector& x) { return x.squared_norm(); };
  FgValues out;
  out.f = n2(v[1]) - n2(v[2]) + n2(v[6]) - n2(v[5]) - n2(v[0]) - n2(v[7]) +
          n2(v[6] - v[5] + v[0]) + n2(v[7] + v[1] - v[2]) - 2.0;
  out.g = n2(v[1]) - n2(v[2]) + n2(v[5]) - n2(v[6]);
  return out;
}

KrausSeed normalize_seed(const ComplexMatrix& x) {
  require_4x4(x, "normalize_seed");
  const auto& p = projectors();
  const ComplexMatrix gram = adjoint(x) * x;
  const double s1 = trace(gram * p.singlet).real();
  const double s2 = trace(gram * p.triplet).real();
  if (!(s1 > 1e-300) || !(s2 > 1e-300)) {
    throw std::invalid_argument("normalize_seed: singlet or triplet block vanishes");
  }
  const ComplexMatrix scale = (1.0 / std::sqrt(s1)) * p.singlet + std::sqrt(3.0 / s2) * p.triplet;
  return validate_seed(x * scale);
}

KrausSeed random_validated_seed(Rng& rng) { return normalize_seed(gaussian_matrix(rng)); }

KrausSeed perturbed_seed(const ComplexMatrix& base, double scale, Rng& rng) {
  require_4x4(base, "perturbed_seed");
  return normalize_seed(base + Complex{scale, 0.0} * gaussian_matrix(rng));
}

}  // namespace idt
