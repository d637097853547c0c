#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cohomap/degree.hpp"
#include "cohomap/manifold.hpp"
#include "cohomap/sphere_cpm.hpp"
#include "cohomap/su3_maps.hpp"

using namespace cohomap;

namespace {

constexpr double kPi = std::numbers::pi;

PointMap identity_map() {
  return [](const Eigen::VectorXd& p) { return p; };
}

// frame rotated by a fixed det+1 matrix: the signed Jacobian must not move
class RotatedFrameModel final : public ManifoldModel {
 public:
  RotatedFrameModel(const ManifoldModel& base, Eigen::MatrixXd rot)
      : base_(base), rot_(std::move(rot)) {}

  std::string name() const override { return base_.name(); }
  int dim() const override { return base_.dim(); }
  int ambient_dim() const override { return base_.ambient_dim(); }
  Eigen::VectorXd sample(RandomSource& rng) const override { return base_.sample(rng); }
  Eigen::MatrixXd frame(const Eigen::VectorXd& p) const override {
    return base_.frame(p) * rot_;
  }
  Eigen::VectorXd retract(const Eigen::VectorXd& p, const Eigen::VectorXd& xi,
                          double h) const override {
    return base_.retract(p, xi, h);
  }
  Eigen::VectorXd project(const Eigen::VectorXd& p,
                          const Eigen::VectorXd& v) const override {
    return base_.project(p, v);
  }
  double membership_residual(const Eigen::VectorXd& p) const override {
    return base_.membership_residual(p);
  }
  Eigen::VectorXd align_representative(const Eigen::VectorXd& b,
                                       const Eigen::VectorXd& r) const override {
    return base_.align_representative(b, r);
  }
  double singular_gap(const Eigen::VectorXd& p) const override {
    return base_.singular_gap(p);
  }

 private:
  const ManifoldModel& base_;
  Eigen::MatrixXd rot_;
};

}  // namespace

TEST_CASE("model frames are orthonormal and retraction is first-order") {
  RandomSource rng(21);
  for (const char* name : {"su3", "s2", "s3", "cp2", "cp3"}) {
    const auto model = make_manifold(name);
    const Eigen::VectorXd p = model->sample(rng);
    const Eigen::MatrixXd F = model->frame(p);
    CHECK(F.rows() == model->ambient_dim());
    CHECK(F.cols() == model->dim());
    const Eigen::MatrixXd gram =
        F.transpose() * F - Eigen::MatrixXd::Identity(model->dim(), model->dim());
    CHECK(gram.cwiseAbs().maxCoeff() <= 1e-10);

    CHECK((model->retract(p, F.col(0), 0.0) - p).cwiseAbs().maxCoeff() <= 1e-14);
    const double h = 1e-5;
    const Eigen::VectorXd step = model->retract(p, F.col(0), h);
    CHECK(model->membership_residual(step) <= 1e-12);
    CHECK(((step - p) / h - F.col(0)).norm() <= 1e-4);
  }
}

TEST_CASE("differential of the identity map") {
  RandomSource rng(22);
  for (const char* name : {"su3", "s2", "s3", "cp2"}) {
    const auto model = make_manifold(name);
    const Eigen::VectorXd p = model->sample(rng);
    const Eigen::MatrixXd J = differential(identity_map(), *model, p, 1e-4);
    const Eigen::MatrixXd err =
        J - Eigen::MatrixXd::Identity(model->dim(), model->dim());
    CHECK(err.cwiseAbs().maxCoeff() <= 1e-6);
    CHECK(signed_jacobian(identity_map(), *model, p) ==
          doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("transpose map on SU(3) has pointwise jacobian -1") {
  const auto model = make_manifold("su3");
  const PointMap transpose = [](const Eigen::VectorXd& p) {
    return flatten_su3(unflatten_su3(p).transpose().eval());
  };
  RandomSource rng(23);
  for (int s = 0; s < 10; ++s) {
    Eigen::VectorXd p = model->sample(rng);
    if (model->singular_gap(p) < 1e-3) continue;
    CHECK(signed_jacobian(transpose, *model, p) ==
          doctest::Approx(-1.0).epsilon(1e-8));
  }
}

TEST_CASE("left translation is an isometry") {
  const auto model = make_manifold("su3");
  RandomSource rng(24);
  const Matrix3c U = haar_special_unitary(3, rng);
  const PointMap left = [U](const Eigen::VectorXd& p) {
    return flatten_su3((U * unflatten_su3(p)).eval());
  };
  for (int s = 0; s < 5; ++s) {
    const Eigen::VectorXd p = model->sample(rng);
    CHECK(std::abs(std::abs(signed_jacobian(left, *model, p)) - 1.0) <= 1e-6);
  }
}

TEST_CASE("antipodal map on S^2 has jacobian -1") {
  const auto model = make_manifold("s2");
  const PointMap antipodal = [](const Eigen::VectorXd& p) {
    return Eigen::VectorXd(-p);
  };
  RandomSource rng(25);
  for (int s = 0; s < 10; ++s) {
    const Eigen::VectorXd p = model->sample(rng);
    CHECK(signed_jacobian(antipodal, *model, p) ==
          doctest::Approx(-1.0).epsilon(1e-8));
  }
}

TEST_CASE("sphere power jacobian matches the warped-product formula") {
  const auto model = make_manifold("s3");
  const auto spec = MapSpec::parse("power:3");
  const PointMap map = make_point_map(spec, *model);

  RandomSource rng(26);
  for (double t : {0.4, 0.9, 1.3}) {
    Eigen::VectorXd dir = uniform_sphere_point(2, rng);
    Eigen::VectorXd p(4);
    p(0) = std::cos(t);
    p.tail(3) = std::sin(t) * dir;
    const double expected =
        3.0 * std::pow(std::sin(3 * t) / std::sin(t), 2.0);
    CHECK(std::abs(signed_jacobian(map, *model, p) - expected) <= 1e-5 * (1 + std::abs(expected)));
  }
}

TEST_CASE("psi_3 jacobian is step-stable (richardson check)") {
  const auto model = make_manifold("su3");
  const PointMap map = make_point_map(MapSpec::parse("psi:3"), *model);
  const Eigen::VectorXd p = flatten_su3(normal_geodesic(0.7));
  const double j1 = signed_jacobian(map, *model, p, 1e-4);
  const double j2 = signed_jacobian(map, *model, p, 5e-5);
  const double j3 = signed_jacobian(map, *model, p, 2e-4);
  CHECK(std::abs(j1 - j2) <= 1e-4 * (1 + std::abs(j1)));
  CHECK(std::abs(j1 - j3) <= 1e-4 * (1 + std::abs(j1)));
  CHECK(j1 > 0.0);  // orientation preserved along the regular set sampled
}

TEST_CASE("chain rule for composed maps") {
  const auto model = make_manifold("su3");
  const PointMap inner = make_point_map(MapSpec::parse("psi:3"), *model);
  const PointMap outer = make_point_map(MapSpec::parse("rho:2"), *model);
  const PointMap composed = [&](const Eigen::VectorXd& p) { return outer(inner(p)); };

  RandomSource rng(27);
  int tested = 0;
  for (int s = 0; s < 40 && tested < 10; ++s) {
    const Eigen::VectorXd p = model->sample(rng);
    if (model->singular_gap(p) < 1e-2) continue;
    const Eigen::VectorXd q = inner(p);
    if (model->singular_gap(q) < 1e-2) continue;
    ++tested;
    const double lhs = signed_jacobian(composed, *model, p);
    const double rhs = signed_jacobian(outer, *model, q) *
                       signed_jacobian(inner, *model, p);
    CHECK(std::abs(lhs - rhs) <= 1e-4 * (1 + std::abs(rhs)));
  }
  CHECK(tested >= 5);
}

TEST_CASE("jacobian is frame-rotation invariant on spheres") {
  const auto base = make_manifold("s3");
  RandomSource rng(28);
  const Eigen::MatrixXd R = haar_special_orthogonal(3, rng);
  const RotatedFrameModel rotated(*base, R);
  const PointMap map = make_point_map(MapSpec::parse("power:3"), *base);
  for (int s = 0; s < 5; ++s) {
    const Eigen::VectorXd p = base->sample(rng);
    CHECK(std::abs(signed_jacobian(map, *base, p) -
                   signed_jacobian(map, rotated, p)) <= 1e-8);
  }
}

TEST_CASE("degree estimate on the identity map") {
  const auto model = make_manifold("su3");
  DegreeOptions opt;
  opt.samples = 1000;
  opt.seed = 1;
  const auto est = estimate_degree(identity_map(), *model, opt);
  CHECK(est.rounded == 1);
  CHECK(std::abs(est.mean - 1.0) <= 1e-4);
  CHECK(est.accepted);
  CHECK(est.excluded_fraction <= 0.05);
}

TEST_CASE("degree estimate is worker-count independent") {
  const auto model = make_manifold("s2");
  const PointMap map = make_point_map(MapSpec::parse("power:2"), *model);
  DegreeOptions opt;
  opt.samples = 1000;
  opt.seed = 5;
  opt.workers = 1;
  const auto a = estimate_degree(map, *model, opt);
  opt.workers = 3;
  const auto b = estimate_degree(map, *model, opt);
  CHECK(a.mean == b.mean);
  CHECK(a.stderr_ == b.stderr_);
}

TEST_CASE("doubling samples halves the standard error") {
  const auto model = make_manifold("s2");
  const PointMap map = make_point_map(MapSpec::parse("power:2"), *model);
  for (std::uint64_t seed : {11u, 12u, 13u, 14u, 15u}) {
    DegreeOptions opt;
    opt.seed = seed;
    opt.samples = 1500;
    const auto small = estimate_degree(map, *model, opt);
    opt.samples = 3000;
    const auto big = estimate_degree(map, *model, opt);
    const double ratio = big.stderr_ / small.stderr_;
    CHECK(ratio >= 0.6);
    CHECK(ratio <= 0.85);
  }
}

TEST_CASE("small-sample degree estimates land on the paper values") {
  DegreeOptions opt;
  opt.samples = 3000;
  opt.seed = 42;

  const auto su3 = make_manifold("su3");
  const auto psi3 = estimate_degree(make_point_map(MapSpec::parse("psi:3"), *su3),
                                    *su3, opt);
  CHECK(std::abs(psi3.mean - 3.0) <= std::max(0.2, 3 * psi3.stderr_));

  const auto s3 = make_manifold("s3");
  const auto pow3 = estimate_degree(make_point_map(MapSpec::parse("power:3"), *s3),
                                    *s3, opt);
  CHECK(std::abs(pow3.mean - 3.0) <= std::max(0.2, 3 * pow3.stderr_));

  const auto cp3 = make_manifold("cp3");
  const auto fold3 = estimate_degree(make_point_map(MapSpec::parse("fold:3"), *cp3),
                                     *cp3, opt);
  CHECK(std::abs(fold3.mean + 1.0) <= std::max(0.2, 3 * fold3.stderr_));
}

TEST_CASE("estimate input validation") {
  const auto model = make_manifold("s2");
  DegreeOptions opt;
  opt.samples = 500;
  CHECK_THROWS_AS(estimate_degree(identity_map(), *model, opt),
                  std::invalid_argument);
}

TEST_CASE("map/manifold compatibility") {
  const auto s2 = make_manifold("s2");
  CHECK_THROWS_AS(make_point_map(MapSpec::parse("psi:3"), *s2), std::invalid_argument);
  const auto su3 = make_manifold("su3");
  CHECK_THROWS_AS(make_point_map(MapSpec::parse("psi:2"), *su3), std::invalid_argument);
  CHECK_THROWS_AS(make_point_map(MapSpec::parse("fold:2"), *make_manifold("cp2")),
                  std::invalid_argument);
  CHECK_THROWS_AS(MapSpec::parse("nonsense"), std::invalid_argument);
  CHECK(MapSpec::parse("sphere:4").kind == "power");
  CHECK(MapSpec::parse("cpm:3").kind == "fold");
  CHECK(MapSpec::parse("psi:-7").k == -7);
}
