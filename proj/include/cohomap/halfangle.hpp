#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

namespace cohomap {

using BigInt = boost::multiprecision::cpp_int;

/// Hard cap on the half-angle index. Coefficients grow like 8^j; the cap
/// keeps construction and evaluation sane (the library's own uses stay
/// below j = 30).
inline constexpr int kMaxHalfAngleIndex = 60;

/// Exact integer coefficients (ascending monomial order) of the degree-j
/// half-angle polynomials:
///   cos((2j+1) t) = f_j(sin^2 t) cos t
///   sin((2j+1) t) = g_j(sin^2 t) sin t
///   h_j = (1 - f_j) / x   (exact division; identically f_j + x h_j = 1)
struct HalfAnglePolys {
  int j = 0;
  std::vector<BigInt> f, g, h;

  double eval_f(double x) const;
  double eval_g(double x) const;
  double eval_h(double x) const;

 private:
  friend HalfAnglePolys build_halfangle(int j);
  // exact coefficients rewritten in the x^i (1-x)^{d-i} basis (for f and
  // g these are the defining binomial sums); evaluation in this basis is
  // well conditioned on [0, 1], where the monomial basis loses ~4^j
  std::vector<long double> f_bn, g_bn, h_bn;
};

/// Expands the defining binomial sums exactly; h by exact polynomial
/// division of 1 - f by x. Throws std::overflow_error past the index cap
/// and std::invalid_argument for j < 0.
HalfAnglePolys build_halfangle(int j);

/// Shared cache of built polynomials (thread-safe).
const HalfAnglePolys& halfangle_cached(int j);

double eval_f(int j, double x);
double eval_g(int j, double x);
double eval_h(int j, double x);

/// Exact integer coefficients of T_|k| and U_{|k|-1} in c = cos t.
struct ChebyshevPair {
  int k = 0;
  std::vector<BigInt> T, U;
};

ChebyshevPair chebyshev_coeffs(int k);

/// (T_k(c), U_{k-1}(c)) by the three-term recurrence, with the sign
/// convention T_k(cos t) = cos kt and U_{k-1}(cos t) sin t = sin kt for
/// every integer k (so U_{k-1} picks up sgn k, and U_{-1} = 0).
/// Throws std::domain_error when |c| > 1 + 1e-12.
std::pair<double, double> chebyshev_eval(long long k, double c);

}  // namespace cohomap
