#include "cohomap/halfangle.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cohomap {

namespace {

std::vector<BigInt> binomial_row(int n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (int k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
  return row;
}

// coefficients of (1-x)^p, ascending
std::vector<BigInt> one_minus_x_pow(int p) {
  auto row = binomial_row(p);
  for (int k = 1; k <= p; k += 2) row[k] = -row[k];
  return row;
}

// exact change of basis from monomials to x^i (1-x)^{d-i}:
// b_i = sum_k a_k C(d-k, i-k)
std::vector<long double> bernstein_form(const std::vector<BigInt>& mono) {
  if (mono.empty()) return {};
  const int d = static_cast<int>(mono.size()) - 1;
  std::vector<BigInt> b(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    if (mono[k] == 0) continue;
    const auto row = binomial_row(d - k);
    for (int r = 0; r <= d - k; ++r) b[k + r] += mono[k] * row[r];
  }
  std::vector<long double> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i].convert_to<long double>();
  return out;
}

// p(x) = sum b_i x^i (1-x)^{d-i}, accumulated descending in i
double eval_bernstein(const std::vector<long double>& b, double x) {
  if (b.empty()) return 0.0;
  const long double omx = 1.0L - static_cast<long double>(x);
  long double acc = b.back();
  long double w = 1.0L;
  for (int i = static_cast<int>(b.size()) - 2; i >= 0; --i) {
    w *= omx;
    acc = acc * x + b[static_cast<std::size_t>(i)] * w;
  }
  return static_cast<double>(acc);
}

}  // namespace

double HalfAnglePolys::eval_f(double x) const { return eval_bernstein(f_bn, x); }
double HalfAnglePolys::eval_g(double x) const { return eval_bernstein(g_bn, x); }
double HalfAnglePolys::eval_h(double x) const { return eval_bernstein(h_bn, x); }

HalfAnglePolys build_halfangle(int j) {
  if (j < 0) throw std::invalid_argument("half-angle index must be >= 0");
  if (j > kMaxHalfAngleIndex) {
    throw std::overflow_error("half-angle index exceeds the coefficient guard");
  }

  HalfAnglePolys P;
  P.j = j;
  P.f.assign(j + 1, 0);
  P.g.assign(j + 1, 0);

  const auto binom = binomial_row(2 * j + 1);
  for (int i = 0; i <= j; ++i) {
    const auto base = one_minus_x_pow(j - i);
    BigInt cf = binom[2 * i];
    BigInt cg = binom[2 * i + 1];
    if (i % 2 != 0) {
      cf = -cf;
      cg = -cg;
    }
    for (int d = 0; d < static_cast<int>(base.size()); ++d) {
      P.f[i + d] += cf * base[d];
      P.g[i + d] += cg * base[d];
    }
  }

  // h = (1 - f)/x, exact division (constant term of 1 - f vanishes)
  if (P.f[0] != 1) throw std::runtime_error("half-angle construction: f(0) != 1");
  P.h.resize(j >= 1 ? j : 0);
  for (int d = 1; d <= j; ++d) P.h[d - 1] = -P.f[d];

  P.f_bn = bernstein_form(P.f);
  P.g_bn = bernstein_form(P.g);
  P.h_bn = bernstein_form(P.h);
  return P;
}

const HalfAnglePolys& halfangle_cached(int j) {
  static std::mutex mu;
  static std::map<int, HalfAnglePolys> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(j);
  if (it == cache.end()) it = cache.emplace(j, build_halfangle(j)).first;
  return it->second;
}

double eval_f(int j, double x) { return halfangle_cached(j).eval_f(x); }
double eval_g(int j, double x) { return halfangle_cached(j).eval_g(x); }
double eval_h(int j, double x) { return halfangle_cached(j).eval_h(x); }

ChebyshevPair chebyshev_coeffs(int k) {
  ChebyshevPair out;
  out.k = k;
  const int n = std::abs(k);
  std::vector<BigInt> tm1{1}, t{0, 1};  // T_0, T_1
  std::vector<BigInt> um1{1}, u{0, 2};  // U_0, U_1
  auto step = [](std::vector<BigInt>& prev, std::vector<BigInt>& cur) {
    std::vector<BigInt> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  };
  for (int i = 1; i < n; ++i) step(tm1, t);
  for (int i = 1; i < n - 1; ++i) step(um1, u);

  out.T = (n == 0) ? std::vector<BigInt>{1} : t;
  if (n == 0) {
    out.U = {};  // U_{-1} = 0
  } else {
    out.U = (n == 1) ? std::vector<BigInt>{1} : u;
    if (k < 0) {
      for (auto& c : out.U) c = -c;
    }
  }
  return out;
}

std::pair<double, double> chebyshev_eval(long long k, double c) {
  if (std::abs(c) > 1.0 + 1e-12) {
    throw std::domain_error("chebyshev_eval: argument outside [-1, 1]");
  }
  const long long n = std::llabs(k);
  if (n == 0) return {1.0, 0.0};
  double tm1 = 1.0, t = c;   // T_0, T_1
  double um1 = 1.0, u = 2 * c;  // U_0, U_1
  for (long long i = 1; i < n; ++i) {
    double tn = 2 * c * t - tm1;
    tm1 = t;
    t = tn;
  }
  for (long long i = 1; i < n - 1; ++i) {
    double un = 2 * c * u - um1;
    um1 = u;
    u = un;
  }
  double U = (n == 1) ? 1.0 : u;
  if (k < 0) U = -U;
  return {t, U};
}

}  // namespace cohomap
