#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cohomap/halfangle.hpp"
#include "cohomap/random.hpp"

using namespace cohomap;

TEST_CASE("half-angle coefficients for small j") {
  const auto P0 = build_halfangle(0);
  CHECK(P0.f == std::vector<BigInt>{1});
  CHECK(P0.g == std::vector<BigInt>{1});
  CHECK(P0.h.empty());

  // expansions of the defining sums, done by hand
  const auto P1 = build_halfangle(1);
  CHECK(P1.f == std::vector<BigInt>({1, -4}));
  CHECK(P1.g == std::vector<BigInt>({3, -4}));
  CHECK(P1.h == std::vector<BigInt>({4}));

  const auto P2 = build_halfangle(2);
  CHECK(P2.f == std::vector<BigInt>({1, -12, 16}));
  CHECK(P2.g == std::vector<BigInt>({5, -20, 16}));
  CHECK(P2.h == std::vector<BigInt>({12, -16}));
}

TEST_CASE("degree and endpoint values") {
  for (int j = 0; j <= 25; ++j) {
    const auto& P = halfangle_cached(j);
    CHECK(static_cast<int>(P.f.size()) == j + 1);
    CHECK(static_cast<int>(P.g.size()) == j + 1);
    CHECK(static_cast<int>(P.h.size()) == std::max(j, 0));
    CHECK(P.eval_f(0.0) == 1.0);
    CHECK(P.eval_g(0.0) == static_cast<double>(2 * j + 1));
  }
}

TEST_CASE("evaluation examples") {
  CHECK(eval_f(1, 0.5) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(eval_g(2, 0.75) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("exact identity f + x h = 1") {
  for (int j = 0; j <= 25; ++j) {
    const auto& P = halfangle_cached(j);
    std::vector<BigInt> sum = P.f;
    for (std::size_t d = 0; d < P.h.size(); ++d) sum[d + 1] += P.h[d];
    CHECK(sum[0] == 1);
    for (std::size_t d = 1; d < sum.size(); ++d) CHECK(sum[d] == 0);
  }
}

TEST_CASE("trig and pythagorean identities") {
  RandomSource rng(17);
  for (int j = 0; j <= 25; ++j) {
    const auto& P = halfangle_cached(j);
    for (int s = 0; s < 100; ++s) {
      const double t = rng.uniform01() * std::numbers::pi;
      const double x = std::sin(t) * std::sin(t);
      CHECK(std::abs(P.eval_f(x) * std::cos(t) - std::cos((2 * j + 1) * t)) <= 1e-9);
      CHECK(std::abs(P.eval_g(x) * std::sin(t) - std::sin((2 * j + 1) * t)) <= 1e-9);
      const double u = rng.uniform01();
      const double f = P.eval_f(u), g = P.eval_g(u);
      CHECK(std::abs(f * f * (1 - u) + g * g * u - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("relaxed identity tolerance past j = 25") {
  RandomSource rng(19);
  for (int j : {30, 40}) {
    const auto P = build_halfangle(j);
    for (int s = 0; s < 100; ++s) {
      const double t = rng.uniform01() * std::numbers::pi;
      const double x = std::sin(t) * std::sin(t);
      CHECK(std::abs(P.eval_f(x) * std::cos(t) - std::cos((2 * j + 1) * t)) <= 1e-6);
      const double u = rng.uniform01();
      CHECK(std::abs(P.eval_f(u) + u * P.eval_h(u) - 1.0) <= 1e-6);
    }
  }
}

TEST_CASE("index guard") {
  CHECK_NOTHROW(build_halfangle(60));
  CHECK_THROWS_AS(build_halfangle(61), std::overflow_error);
  CHECK_THROWS_AS(build_halfangle(-1), std::invalid_argument);
}

TEST_CASE("chebyshev evaluation") {
  CHECK(chebyshev_eval(1, 0.3).first == doctest::Approx(0.3));
  CHECK(chebyshev_eval(1, 0.3).second == doctest::Approx(1.0));

  auto [t2, u1] = chebyshev_eval(2, 0.0);
  CHECK(t2 == doctest::Approx(-1.0));
  CHECK(u1 == doctest::Approx(0.0));

  const double c = std::cos(0.7);
  auto [t3, u2] = chebyshev_eval(3, c);
  CHECK(std::abs(t3 - std::cos(2.1)) <= 1e-12);
  CHECK(std::abs(u2 - std::sin(2.1) / std::sin(0.7)) <= 1e-12);

  // sign convention for negative k: cos(-kt) and sin(-kt)/sin(t)
  auto [tm3, um3] = chebyshev_eval(-3, c);
  CHECK(std::abs(tm3 - std::cos(2.1)) <= 1e-12);
  CHECK(std::abs(um3 + std::sin(2.1) / std::sin(0.7)) <= 1e-12);

  auto [t0, um1] = chebyshev_eval(0, c);
  CHECK(t0 == doctest::Approx(1.0));
  CHECK(um1 == doctest::Approx(0.0));

  CHECK_THROWS_AS(chebyshev_eval(2, 1.1), std::domain_error);
}

TEST_CASE("chebyshev coefficients and endpoint normalization") {
  for (int k : {0, 1, 2, 3, 5, 8, -4}) {
    const auto pair = chebyshev_coeffs(k);
    BigInt t1 = 0, u1 = 0;
    for (const auto& c : pair.T) t1 += c;
    for (const auto& c : pair.U) u1 += c;
    CHECK(t1 == 1);          // T_|k|(1) = 1
    CHECK(u1 == BigInt(k));  // U_{k-1}(1) = k
  }
  const auto p2 = chebyshev_coeffs(2);
  CHECK(p2.T == std::vector<BigInt>({-1, 0, 2}));
  CHECK(p2.U == std::vector<BigInt>({0, 2}));
}

TEST_CASE("half-angle polynomials line up with chebyshev") {
  RandomSource rng(23);
  for (int j = 0; j <= 15; ++j) {
    const auto& P = halfangle_cached(j);
    for (int s = 0; s < 100; ++s) {
      const double c = 2.0 * rng.uniform01() - 1.0;
      auto [T, U] = chebyshev_eval(2 * j + 1, c);
      CHECK(std::abs(P.eval_g(1 - c * c) - U) <= 1e-9);
      CHECK(std::abs(P.eval_f(1 - c * c) * c - T) <= 1e-9);
    }
  }
}
