#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cohomap/sphere_cpm.hpp"

using namespace cohomap;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("sphere power examples") {
  Eigen::VectorXd p(3);
  p << std::cos(0.5), std::sin(0.5), 0.0;

  CHECK((sphere_power(1, p) - p).cwiseAbs().maxCoeff() <= 1e-15);

  const Eigen::VectorXd q = sphere_power(2, p);
  CHECK(q(0) == doctest::Approx(std::cos(1.0)).epsilon(1e-13));
  CHECK(q(1) == doctest::Approx(std::sin(1.0)).epsilon(1e-13));
  CHECK(q(2) == 0.0);

  Eigen::VectorXd pole = Eigen::VectorXd::Zero(4);
  pole(0) = 1.0;
  CHECK((sphere_power(3, pole) - pole).cwiseAbs().maxCoeff() == 0.0);

  Eigen::VectorXd off = pole;
  off(0) = 1.5;
  CHECK_THROWS_AS(sphere_power(2, off), std::domain_error);
}

TEST_CASE("sphere power is norm preserving and O(n)-equivariant") {
  RandomSource rng(77);
  double norm_res = 0.0, equiv_res = 0.0;
  for (int s = 0; s < 200; ++s) {
    const Eigen::VectorXd p = uniform_sphere_point(3, rng);
    const Eigen::MatrixXd Q = haar_special_orthogonal(3, rng);
    for (long long k : {2LL, 3LL, -1LL, 5LL}) {
      const Eigen::VectorXd img = sphere_power(k, p);
      norm_res = std::max(norm_res, std::abs(img.norm() - 1.0));
      Eigen::VectorXd moved(4);
      moved(0) = p(0);
      moved.tail(3) = Q * p.tail(3);
      Eigen::VectorXd expect(4);
      expect(0) = img(0);
      expect.tail(3) = Q * img.tail(3);
      equiv_res =
          std::max(equiv_res, (sphere_power(k, moved) - expect).cwiseAbs().maxCoeff());
    }
  }
  CHECK(norm_res <= 1e-10);
  CHECK(equiv_res <= 1e-12);
}

TEST_CASE("cpm fold on the normal geodesic") {
  auto geodesic = [](double t) {
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(4);
    z(0) = std::cos(t);
    z(1) = Complex(0, std::sin(t));
    return z;
  };

  // [1 : 0 : ...] is fixed for every odd k
  for (long long k : {1LL, 3LL, -5LL, 7LL}) {
    CHECK(projective_residual(cpm_fold(k, geodesic(0.0)), geodesic(0.0)) <= 1e-12);
  }

  CHECK(projective_residual(cpm_fold(3, geodesic(0.2)), geodesic(0.6)) <= 1e-12);
  CHECK(projective_residual(cpm_fold(5, geodesic(0.11)), geodesic(0.55)) <= 1e-12);

  CHECK_THROWS_AS(cpm_fold(2, geodesic(0.2)), std::invalid_argument);
  Eigen::VectorXcd off = geodesic(0.2);
  off *= 1.5;
  CHECK_THROWS_AS(cpm_fold(3, off), std::domain_error);
}

TEST_CASE("cpm fold with k = -1 is complex conjugation") {
  RandomSource rng(78);
  for (int s = 0; s < 100; ++s) {
    const Eigen::VectorXcd z = uniform_cpm_point(3, rng);
    const Eigen::VectorXcd img = cpm_fold(-1, z);
    CHECK(projective_residual(img, z.conjugate()) <= 1e-9);
  }
}

TEST_CASE("cpm fold is projectively well defined") {
  RandomSource rng(79);
  double res = 0.0;
  for (int s = 0; s < 300; ++s) {
    const Eigen::VectorXcd z = uniform_cpm_point(2, rng);
    const double alpha = rng.uniform01() * 2 * kPi;
    const Eigen::VectorXcd zr = std::exp(Complex(0, alpha)) * z;
    for (long long k : {1LL, -1LL, 3LL, 5LL, -3LL}) {
      res = std::max(res, projective_residual(cpm_fold(k, zr), cpm_fold(k, z)));
    }
  }
  CHECK(res <= 1e-9);
}

TEST_CASE("cpm fold at the zeta = 0 locus") {
  // t = pi/4 on the geodesic: fixed for k = 1 (mod 4), conjugated
  // for k = 3 (mod 4)
  Eigen::VectorXcd z = Eigen::VectorXcd::Zero(4);
  const double r = 1.0 / std::sqrt(2.0);
  z(0) = r;
  z(1) = Complex(0, r);

  CHECK(projective_residual(cpm_fold(5, z), z) <= 1e-12);
  CHECK(projective_residual(cpm_fold(-3, z), z) <= 1e-12);
  CHECK(projective_residual(cpm_fold(3, z), Eigen::VectorXcd(z.conjugate())) <= 1e-12);
  CHECK(projective_residual(cpm_fold(-1, z), Eigen::VectorXcd(z.conjugate())) <= 1e-12);

  // phase-rotated representative of the same class behaves identically
  RandomSource rng(80);
  for (int s = 0; s < 100; ++s) {
    const double alpha = rng.uniform01() * 2 * kPi;
    const Eigen::VectorXcd zr = std::exp(Complex(0, alpha)) * z;
    CHECK(projective_residual(cpm_fold(3, zr), cpm_fold(3, z)) <= 1e-9);
    CHECK(projective_residual(cpm_fold(5, zr), cpm_fold(5, z)) <= 1e-9);
  }
}

TEST_CASE("cpm slice parameter") {
  Eigen::VectorXcd z = Eigen::VectorXcd::Zero(3);
  z(0) = std::cos(0.31);
  z(1) = Complex(0, std::sin(0.31));
  CHECK(cpm_slice_parameter(z) == doctest::Approx(0.31).epsilon(1e-12));
}
