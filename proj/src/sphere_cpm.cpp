#include "cohomap/sphere_cpm.hpp"

#include <cmath>
#include <stdexcept>

#include "cohomap/halfangle.hpp"

namespace cohomap {

Eigen::VectorXd sphere_power(long long k, const Eigen::VectorXd& p, double eps) {
  if (p.size() < 2) throw std::invalid_argument("sphere point needs length >= 2");
  if (std::abs(p.norm() - 1.0) > eps) {
    throw std::domain_error("sphere point is not unit norm");
  }
  const double c = std::clamp(p(0), -1.0, 1.0);
  auto [T, U] = chebyshev_eval(k, c);
  Eigen::VectorXd out(p.size());
  out(0) = T;
  out.tail(p.size() - 1) = U * p.tail(p.size() - 1);
  return out;
}

namespace {

struct CpmSplit {
  Eigen::VectorXd u, v;   // z' = u + i v with u.v = 0, |u| >= |v|
  double t = 0.0;         // atan2(|v|, |u|) in [0, pi/4]
  double zeta_abs = 0.0;
};

CpmSplit cpm_split(const Eigen::VectorXcd& z) {
  Complex zeta = Complex(0.0, 0.0);
  for (Eigen::Index i = 0; i < z.size(); ++i) zeta += z(i) * z(i);
  CpmSplit s;
  s.zeta_abs = std::abs(zeta);
  const Complex phase = std::exp(Complex(0.0, -std::arg(zeta) / 2.0));
  Eigen::VectorXcd zp = phase * z;
  s.u = zp.real();
  s.v = zp.imag();
  s.t = std::atan2(s.v.norm(), s.u.norm());
  return s;
}

}  // namespace

double cpm_slice_parameter(const Eigen::VectorXcd& z) {
  return cpm_split(z).t;
}

Eigen::VectorXcd cpm_fold(long long k, const Eigen::VectorXcd& z, double eps) {
  if (k % 2 == 0) throw std::invalid_argument("fold parameter k must be odd");
  if (z.size() < 2) throw std::invalid_argument("projective point needs length >= 2");
  if (std::abs(z.norm() - 1.0) > eps) {
    throw std::domain_error("projective representative is not unit norm");
  }

  const CpmSplit s = cpm_split(z);
  const Eigen::Index n = z.size();

  if (s.zeta_abs < kCpmZetaThreshold) {
    // t = pi/4 locus: fixed for k = 1 (mod 4), mapped to the conjugate
    // class for k = 3 (mod 4); both phase-choice independent.
    const long long kmod = ((k % 4) + 4) % 4;
    Eigen::VectorXcd out(n);
    const Eigen::VectorXd uh = s.u / s.u.norm();
    const Eigen::VectorXd vh = s.v / s.v.norm();
    const double r = 1.0 / std::sqrt(2.0);
    if (kmod == 1) {
      out.real() = r * uh;
      out.imag() = r * vh;
    } else {
      out.real() = -r * uh;
      out.imag() = r * vh;
    }
    return out;
  }

  if (s.v.norm() < kCpmRealLocusThreshold) {
    return z;  // t = 0 fixed locus (real classes)
  }

  const Eigen::VectorXd uh = s.u / s.u.norm();
  const Eigen::VectorXd vh = s.v / s.v.norm();
  const double kt = static_cast<double>(k) * s.t;
  Eigen::VectorXcd out(n);
  out.real() = std::cos(kt) * uh;
  out.imag() = std::sin(kt) * vh;
  return out;
}

double projective_residual(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  Complex s = b.adjoint() * a;  // <b, a>
  Complex phase = std::abs(s) > 0 ? std::conj(s) / std::abs(s) : Complex(1.0, 0.0);
  return (phase * a - b).norm();
}

}  // namespace cohomap
