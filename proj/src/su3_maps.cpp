#include "cohomap/su3_maps.hpp"

#include <cmath>
#include <stdexcept>

namespace cohomap {

OddFoldParam OddFoldParam::from_k(long long k) {
  if (k % 2 == 0) throw std::invalid_argument("fold parameter k must be odd");
  OddFoldParam p;
  p.k = k;
  p.m = static_cast<int>((std::llabs(k) - 1) / 2);
  p.sigma = k > 0 ? 1 : -1;
  return p;
}

Matrix3c normal_geodesic(double t) {
  Matrix3c G = Matrix3c::Zero();
  const double c = std::cos(t), s = std::sin(t);
  G(0, 0) = c;
  G(0, 1) = -s;
  G(1, 0) = s;
  G(1, 1) = c;
  G(2, 2) = 1.0;
  return G;
}

double orbit_invariant_x(const Matrix3c& B, double eps) {
  require_special_unitary(B, eps);
  // eigenvalues of B conj(B) are {e^{2it}, e^{-2it}, 1}: the trace is an
  // invariant of B -> A B A^T
  double tr = (B * B.conjugate()).trace().real();
  double x = (3.0 - tr) / 4.0;
  if (x < -1e-9 || x > 1.0 + 1e-9) {
    throw std::domain_error("orbit invariant outside [0, 1]: input off-manifold");
  }
  return std::clamp(x, 0.0, 1.0);
}

double orbit_invariant_x_trace_form(const Matrix3c& B) {
  Complex tr = B.trace();
  Complex v = Complex(1.0, 0.0) - 0.25 * (tr - 1.0) * (tr - 1.0);
  return v.real();
}

double recover_slice_parameter(const Matrix3c& B, double eps) {
  double x = orbit_invariant_x(B, eps);
  return std::asin(std::sqrt(x));
}

namespace {

Eigen::Vector3cd cofactor_axis(const Matrix3c& B, double eps) {
  Eigen::Vector3cd c;
  c(0) = cofactor_conjugate(B, 1, 2, eps) - cofactor_conjugate(B, 2, 1, eps);
  c(1) = cofactor_conjugate(B, 2, 0, eps) - cofactor_conjugate(B, 0, 2, eps);
  c(2) = cofactor_conjugate(B, 0, 1, eps) - cofactor_conjugate(B, 1, 0, eps);
  return c;
}

Matrix3c psi_with(const OddFoldParam& p, const HalfAnglePolys& polys,
                  const Matrix3c& B, double eps) {
  require_special_unitary(B, eps);
  const double x = orbit_invariant_x(B, eps);
  const double f = polys.eval_f(x);
  const double g = polys.eval_g(x);

  Matrix3c out = 0.5 * f * (B + B.transpose()) +
                 (0.5 * p.sigma * g) * (B - B.transpose());
  if (p.m >= 1) {
    const double h = polys.eval_h(x);
    const Eigen::Vector3cd c = cofactor_axis(B, eps);
    out += (0.25 * h) * (c * c.transpose());
  }
  if (special_unitary_residual(out) > 1e-8) {
    throw std::runtime_error("psi output failed the unitarity assertion");
  }
  return out;
}

}  // namespace

Matrix3c psi(long long k, const Matrix3c& B, double eps) {
  const auto p = OddFoldParam::from_k(k);
  return psi_with(p, halfangle_cached(p.m), B, eps);
}

PsiMap::PsiMap(long long k)
    : param_(OddFoldParam::from_k(k)), polys_(build_halfangle(param_.m)) {}

Matrix3c PsiMap::operator()(const Matrix3c& B) const {
  return psi_with(param_, polys_, B, 1e-9);
}

Matrix3c psi_polynomial_witness(long long k, const Matrix3c& B) {
  const auto p = OddFoldParam::from_k(k);
  const auto& polys = halfangle_cached(p.m);

  // cofactor matrix: C(i,j) equals conj(B(i,j)) on SU(3) but is a
  // polynomial in the entries
  Matrix3c C;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      C(i, j) = B(i1, j1) * B(i2, j2) - B(i1, j2) * B(i2, j1);
    }
  }
  Complex tr(0.0, 0.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) tr += B(i, j) * C(j, i);
  const Complex x = (Complex(3.0, 0.0) - tr) / 4.0;

  auto horner_c = [&](const std::vector<BigInt>& coeffs) {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      acc = acc * x + Complex(it->convert_to<double>(), 0.0);
    }
    return acc;
  };

  const Complex f = horner_c(polys.f);
  const Complex g = horner_c(polys.g);
  Matrix3c out = 0.5 * f * (B + B.transpose()) +
                 (0.5 * static_cast<double>(p.sigma)) * g * (B - B.transpose());
  if (p.m >= 1) {
    const Complex h = horner_c(polys.h);
    Eigen::Vector3cd c;
    c(0) = C(1, 2) - C(2, 1);
    c(1) = C(2, 0) - C(0, 2);
    c(2) = C(0, 1) - C(1, 0);
    out += 0.25 * h * (c * c.transpose());
  }
  return out;
}

Matrix3c power_map(long long k, const Matrix3c& B, double eps) {
  require_special_unitary(B, eps);
  Matrix3c base = k >= 0 ? B : Matrix3c(B.adjoint());
  unsigned long long e = static_cast<unsigned long long>(k >= 0 ? k : -k);
  Matrix3c acc = Matrix3c::Identity();
  while (e > 0) {
    if (e & 1ull) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string RealizationPlan::describe() const {
  switch (kind) {
    case Kind::realizable:
      return "rho:" + std::to_string(1LL << m) + " o psi:" +
             std::to_string(2 * ell + 1);
    case Kind::not_realizable:
      return "not-realizable";
    case Kind::zero_caveat:
      return "zero-caveat";
  }
  return {};
}

RealizationPlan realize_degree(long long d) {
  RealizationPlan plan;
  plan.degree = d;
  if (d == 0) {
    plan.kind = RealizationPlan::Kind::zero_caveat;
    return plan;
  }
  int v2 = 0;
  long long odd = d;
  while (odd % 2 == 0) {
    odd /= 2;
    ++v2;
  }
  if (v2 % 2 != 0) {
    plan.kind = RealizationPlan::Kind::not_realizable;
    return plan;
  }
  plan.kind = RealizationPlan::Kind::realizable;
  plan.m = v2 / 2;
  plan.ell = (odd - 1) / 2;
  return plan;
}

Matrix3c apply_realization(const RealizationPlan& plan, const Matrix3c& B,
                           double eps) {
  if (plan.kind != RealizationPlan::Kind::realizable) {
    throw std::invalid_argument("plan is not realizable: " + plan.describe());
  }
  Matrix3c inner = psi(2 * plan.ell + 1, B, eps);
  return power_map(1LL << plan.m, inner, eps);
}

}  // namespace cohomap
