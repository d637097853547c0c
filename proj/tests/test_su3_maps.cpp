#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cohomap/su3_maps.hpp"

using namespace cohomap;

namespace {

constexpr double kPi = std::numbers::pi;

Matrix3c phase_diag() {
  Matrix3c A = Matrix3c::Zero();
  A(0, 0) = std::exp(Complex(0, kPi / 4));
  A(1, 1) = std::exp(Complex(0, -kPi / 4));
  A(2, 2) = 1.0;
  return A;
}

double max_abs_diff(const Matrix3c& a, const Matrix3c& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("normal geodesic values") {
  CHECK(max_abs_diff(normal_geodesic(0.0), Matrix3c::Identity()) == 0.0);

  Matrix3c quarter;
  quarter << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  CHECK(max_abs_diff(normal_geodesic(kPi / 2), quarter) <= 1e-15);

  Matrix3c half = Matrix3c::Zero();
  half(0, 0) = -1.0;
  half(1, 1) = -1.0;
  half(2, 2) = 1.0;
  CHECK(max_abs_diff(normal_geodesic(kPi), half) <= 1e-15);

  RandomSource rng(2);
  for (int s = 0; s < 20; ++s) {
    const double t = rng.uniform01() * 2 * kPi;
    CHECK(special_unitary_residual(normal_geodesic(t)) <= 1e-14);
    CHECK(max_abs_diff(normal_geodesic(t + 2 * kPi), normal_geodesic(t)) <= 1e-13);
  }
}

TEST_CASE("orbit invariant x") {
  CHECK(orbit_invariant_x(Matrix3c::Identity()) == 0.0);

  RandomSource rng(4);
  for (int s = 0; s < 100; ++s) {
    const double t = rng.uniform01() * 2 * kPi;
    const double x = orbit_invariant_x(normal_geodesic(t));
    CHECK(std::abs(x - std::sin(t) * std::sin(t)) <= 1e-12);
  }

  // pinned counterexample: the printed trace form is not orbit-invariant
  const Matrix3c A = phase_diag();
  const Matrix3c B = A * normal_geodesic(kPi / 4) * A.transpose();
  Matrix3c expected;
  const double r = std::sqrt(2.0) / 2.0;
  expected << Complex(0, r), -r, 0, r, Complex(0, -r), 0, 0, 0, 1;
  CHECK(max_abs_diff(B, expected) <= 1e-15);
  CHECK(orbit_invariant_x(B) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(orbit_invariant_x_trace_form(B) == doctest::Approx(1.0).epsilon(1e-13));

  Matrix3c bad = Matrix3c::Identity();
  bad(2, 2) = 1.5;
  CHECK_THROWS_AS(orbit_invariant_x(bad), std::domain_error);
}

TEST_CASE("psi identity and transposition") {
  RandomSource rng(8);
  for (int s = 0; s < 50; ++s) {
    const Matrix3c B = haar_special_unitary(3, rng);
    CHECK(max_abs_diff(psi(1, B), B) <= 1e-14);
    CHECK(max_abs_diff(psi(-1, B), B.transpose()) <= 1e-14);
  }
  CHECK_THROWS_AS(psi(2, Matrix3c::Identity()), std::invalid_argument);
  Matrix3c bad = Matrix3c::Identity();
  bad(0, 0) = 1.5;
  CHECK_THROWS_AS(psi(3, bad), std::domain_error);
}

TEST_CASE("psi folds the normal geodesic") {
  RandomSource rng(9);
  for (int s = 0; s < 100; ++s) {
    const double t = rng.uniform01() * 2 * kPi;
    CHECK(max_abs_diff(psi(3, normal_geodesic(t)), normal_geodesic(3 * t)) <= 1e-10);
  }
}

TEST_CASE("psi counterexample orbit is folded correctly") {
  const Matrix3c A = phase_diag();
  const Matrix3c B = A * normal_geodesic(kPi / 4) * A.transpose();
  // hand-checkable: A gamma(3 pi/4) A^T
  const double r = std::sqrt(2.0) / 2.0;
  Matrix3c expected;
  expected << Complex(0, -r), -r, 0, r, Complex(0, r), 0, 0, 0, 1;
  CHECK(max_abs_diff(psi(3, B), expected) <= 1e-10);
  CHECK(max_abs_diff(psi(3, B), A * normal_geodesic(3 * kPi / 4) * A.transpose()) <=
        1e-10);
}

TEST_CASE("psi equivariance on a sample") {
  RandomSource rng(10);
  double res = 0.0;
  for (int s = 0; s < 100; ++s) {
    const Matrix3c A = haar_special_unitary(3, rng);
    const Matrix3c B = haar_special_unitary(3, rng);
    for (long long k : {3LL, -3LL, 5LL, -7LL}) {
      res = std::max(res, max_abs_diff(psi(k, A * B * A.transpose()),
                                       A * psi(k, B) * A.transpose()));
    }
  }
  CHECK(res <= 1e-8);
}

TEST_CASE("psi transpose relation and semigroup") {
  RandomSource rng(12);
  for (int s = 0; s < 30; ++s) {
    const Matrix3c B = haar_special_unitary(3, rng);
    for (long long k : {3LL, 5LL, 9LL}) {
      CHECK(max_abs_diff(psi(-k, B), psi(k, B).transpose()) <= 1e-10);
    }
    CHECK(max_abs_diff(psi(3, psi(5, B)), psi(15, B)) <= 1e-7);
    CHECK(max_abs_diff(psi(3, psi(-3, B)), psi(-9, B)) <= 1e-7);
  }
}

TEST_CASE("psi map object matches the free function") {
  const PsiMap map(5);
  RandomSource rng(13);
  const Matrix3c B = haar_special_unitary(3, rng);
  CHECK(max_abs_diff(map(B), psi(5, B)) == 0.0);
}

TEST_CASE("polynomial witness agrees with psi") {
  RandomSource rng(14);
  double res = 0.0;
  for (int s = 0; s < 100; ++s) {
    const Matrix3c B = haar_special_unitary(3, rng);
    for (long long k : {3LL, -5LL, 7LL}) {
      res = std::max(res, max_abs_diff(psi(k, B), psi_polynomial_witness(k, B)));
    }
  }
  CHECK(res <= 1e-10);
}

TEST_CASE("power map") {
  RandomSource rng(15);
  const Matrix3c B = haar_special_unitary(3, rng);
  CHECK(max_abs_diff(power_map(0, B), Matrix3c::Identity()) == 0.0);
  CHECK(max_abs_diff(power_map(-1, B), B.adjoint()) <= 1e-12);
  CHECK(max_abs_diff(power_map(3, B), B * B * B) <= 1e-13);

  const double t = 0.37;
  CHECK(max_abs_diff(power_map(2, normal_geodesic(t)), normal_geodesic(2 * t)) <=
        1e-13);
}

TEST_CASE("slice parameter recovery") {
  CHECK(recover_slice_parameter(Matrix3c::Identity()) == 0.0);

  RandomSource rng(16);
  for (int s = 0; s < 50; ++s) {
    const Eigen::MatrixXd R = haar_special_orthogonal(3, rng);
    const Matrix3c Rc = R.cast<Complex>();
    const Matrix3c B = Rc * normal_geodesic(0.3) * Rc.transpose();
    CHECK(recover_slice_parameter(B) == doctest::Approx(0.3).epsilon(1e-10));
  }
  // Weyl reflection lands in the canonical slice
  CHECK(recover_slice_parameter(normal_geodesic(2.0)) ==
        doctest::Approx(kPi - 2.0).epsilon(1e-10));
}

TEST_CASE("degree realization plans") {
  const auto p12 = realize_degree(12);
  CHECK(p12.kind == RealizationPlan::Kind::realizable);
  CHECK(p12.m == 1);
  CHECK(p12.ell == 1);

  const auto p7 = realize_degree(7);
  CHECK(p7.kind == RealizationPlan::Kind::realizable);
  CHECK(p7.m == 0);
  CHECK(p7.ell == 3);

  CHECK(realize_degree(2).kind == RealizationPlan::Kind::not_realizable);
  CHECK(realize_degree(8).kind == RealizationPlan::Kind::not_realizable);
  CHECK(realize_degree(0).kind == RealizationPlan::Kind::zero_caveat);

  const auto pm5 = realize_degree(-5);
  CHECK(pm5.kind == RealizationPlan::Kind::realizable);
  CHECK(pm5.m == 0);
  CHECK(pm5.ell == -3);

  const auto p36 = realize_degree(36);
  CHECK(p36.m == 1);
  CHECK(p36.ell == 4);

  // the composed map on the geodesic: rho_2 psi_3 folds t by 6
  RandomSource rng(18);
  const double t = rng.uniform01();
  CHECK((apply_realization(p12, normal_geodesic(t)) - normal_geodesic(6 * t))
            .cwiseAbs()
            .maxCoeff() <= 1e-10);
  CHECK_THROWS_AS(apply_realization(realize_degree(2), Matrix3c::Identity()),
                  std::invalid_argument);
}
