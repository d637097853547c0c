#include "cohomap/manifold.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cohomap/sphere_cpm.hpp"
#include "cohomap/su3_maps.hpp"

namespace cohomap {

Eigen::VectorXd flatten_su3(const Matrix3c& B) {
  Eigen::VectorXd v(18);
  int k = 0;
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      v(k++) = B(i, j).real();
      v(k++) = B(i, j).imag();
    }
  }
  return v;
}

Matrix3c unflatten_su3(const Eigen::VectorXd& v) {
  Matrix3c B;
  int k = 0;
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      B(i, j) = Complex(v(k), v(k + 1));
      k += 2;
    }
  }
  return B;
}

Eigen::VectorXd flatten_complex(const Eigen::VectorXcd& z) {
  Eigen::VectorXd v(2 * z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    v(2 * i) = z(i).real();
    v(2 * i + 1) = z(i).imag();
  }
  return v;
}

Eigen::VectorXcd unflatten_complex(const Eigen::VectorXd& v) {
  Eigen::VectorXcd z(v.size() / 2);
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    z(i) = Complex(v(2 * i), v(2 * i + 1));
  }
  return z;
}

namespace {

class SuThreeModel final : public ManifoldModel {
 public:
  std::string name() const override { return "su3"; }
  int dim() const override { return 8; }
  int ambient_dim() const override { return 18; }

  Eigen::VectorXd sample(RandomSource& rng) const override {
    return flatten_su3(haar_special_unitary(3, rng));
  }

  Eigen::MatrixXd frame(const Eigen::VectorXd& p) const override {
    const Matrix3c P = unflatten_su3(p);
    Eigen::MatrixXd F(18, 8);
    const auto& basis = su3_lie_frame();
    for (int a = 0; a < 8; ++a) F.col(a) = flatten_su3(P * basis[a]);
    return F;
  }

  Eigen::VectorXd retract(const Eigen::VectorXd& p, const Eigen::VectorXd& xi,
                          double h) const override {
    const Matrix3c P = unflatten_su3(p);
    const Matrix3c X = su3_algebra_project(P.adjoint() * unflatten_su3(xi));
    return flatten_su3(P * exp_skew_hermitian(h * X));
  }

  Eigen::VectorXd project(const Eigen::VectorXd& p,
                          const Eigen::VectorXd& v) const override {
    const Matrix3c P = unflatten_su3(p);
    return flatten_su3(P * su3_algebra_project(P.adjoint() * unflatten_su3(v)));
  }

  double membership_residual(const Eigen::VectorXd& p) const override {
    return special_unitary_residual(unflatten_su3(p));
  }

  double singular_gap(const Eigen::VectorXd& p) const override {
    const double t = recover_slice_parameter(unflatten_su3(p), 1e-6);
    return std::min(t, std::numbers::pi / 2.0 - t);
  }
};

class SphereModel final : public ManifoldModel {
 public:
  explicit SphereModel(int n) : n_(n) {}

  std::string name() const override { return "s" + std::to_string(n_); }
  int dim() const override { return n_; }
  int ambient_dim() const override { return n_ + 1; }

  Eigen::VectorXd sample(RandomSource& rng) const override {
    return uniform_sphere_point(n_, rng);
  }

  Eigen::MatrixXd frame(const Eigen::VectorXd& p) const override {
    const int d = n_ + 1;
    Eigen::MatrixXd F(d, n_);
    int pivot = 0;
    p.cwiseAbs().maxCoeff(&pivot);
    int col = 0;
    for (int j = 0; j < d && col < n_; ++j) {
      if (j == pivot) continue;
      Eigen::VectorXd e = Eigen::VectorXd::Unit(d, j);
      e -= e.dot(p) * p;
      for (int c = 0; c < col; ++c) e -= e.dot(F.col(c)) * F.col(c);
      F.col(col++) = e / e.norm();
    }
    // orientation: det[p, e1, ..., en] = +1
    Eigen::MatrixXd full(d, d);
    full.col(0) = p;
    full.rightCols(n_) = F;
    if (full.determinant() < 0) F.col(n_ - 1) = -F.col(n_ - 1);
    return F;
  }

  Eigen::VectorXd retract(const Eigen::VectorXd& p, const Eigen::VectorXd& xi,
                          double h) const override {
    Eigen::VectorXd w = project(p, xi);
    const double norm = w.norm();
    if (norm * std::abs(h) < 1e-300) return p;
    const double theta = h * norm;
    return std::cos(theta) * p + (std::sin(theta) / norm) * w;
  }

  Eigen::VectorXd project(const Eigen::VectorXd& p,
                          const Eigen::VectorXd& v) const override {
    return v - v.dot(p) * p;
  }

  double membership_residual(const Eigen::VectorXd& p) const override {
    return std::abs(p.norm() - 1.0);
  }

  double singular_gap(const Eigen::VectorXd& p) const override {
    const double t = std::atan2(p.tail(n_).norm(), p(0));  // in [0, pi]
    return std::min(t, std::numbers::pi - t);
  }

 private:
  int n_;
};

class CpmModel final : public ManifoldModel {
 public:
  explicit CpmModel(int m) : m_(m) {}

  std::string name() const override { return "cp" + std::to_string(m_); }
  int dim() const override { return 2 * m_; }
  int ambient_dim() const override { return 2 * (m_ + 1); }

  Eigen::VectorXd sample(RandomSource& rng) const override {
    return flatten_complex(uniform_cpm_point(m_, rng));
  }

  Eigen::MatrixXd frame(const Eigen::VectorXd& p) const override {
    const Eigen::VectorXcd z = unflatten_complex(p);
    const int d = m_ + 1;
    // complex orthonormal horizontal basis h_1..h_m
    std::vector<Eigen::VectorXcd> hs;
    int pivot = 0;
    z.cwiseAbs().maxCoeff(&pivot);
    for (int j = 0; j < d && static_cast<int>(hs.size()) < m_; ++j) {
      if (j == pivot) continue;
      Eigen::VectorXcd e = Eigen::VectorXcd::Unit(d, j);
      e -= (z.adjoint() * e).value() * z;
      for (const auto& hcol : hs) e -= (hcol.adjoint() * e).value() * hcol;
      hs.push_back(e / e.norm());
    }
    // complex orientation (h, i h per horizontal direction)
    Eigen::MatrixXd F(2 * d, 2 * m_);
    for (int l = 0; l < m_; ++l) {
      F.col(2 * l) = flatten_complex(hs[l]);
      F.col(2 * l + 1) = flatten_complex(Eigen::VectorXcd(Complex(0, 1) * hs[l]));
    }
    return F;
  }

  Eigen::VectorXd retract(const Eigen::VectorXd& p, const Eigen::VectorXd& xi,
                          double h) const override {
    const Eigen::VectorXcd z = unflatten_complex(p);
    Eigen::VectorXcd w = horizontal(z, unflatten_complex(xi));
    const double norm = w.norm();
    if (norm * std::abs(h) < 1e-300) return p;
    const double theta = h * norm;
    Eigen::VectorXcd out = std::cos(theta) * z + (std::sin(theta) / norm) * w;
    return flatten_complex(out);
  }

  Eigen::VectorXd project(const Eigen::VectorXd& p,
                          const Eigen::VectorXd& v) const override {
    const Eigen::VectorXcd z = unflatten_complex(p);
    return flatten_complex(horizontal(z, unflatten_complex(v)));
  }

  double membership_residual(const Eigen::VectorXd& p) const override {
    return std::abs(unflatten_complex(p).norm() - 1.0);
  }

  Eigen::VectorXd align_representative(const Eigen::VectorXd& base,
                                       const Eigen::VectorXd& rep) const override {
    const Eigen::VectorXcd b = unflatten_complex(base);
    const Eigen::VectorXcd r = unflatten_complex(rep);
    const Complex s = (b.adjoint() * r).value();
    if (std::abs(s) < 1e-300) return rep;
    return flatten_complex(Eigen::VectorXcd(r * (std::conj(s) / std::abs(s))));
  }

  double singular_gap(const Eigen::VectorXd& p) const override {
    const double t = cpm_slice_parameter(unflatten_complex(p));
    return std::min(t, std::numbers::pi / 4.0 - t);
  }

 private:
  Eigen::VectorXcd horizontal(const Eigen::VectorXcd& z,
                              const Eigen::VectorXcd& v) const {
    return v - (z.adjoint() * v).value() * z;
  }

  int m_;
};

}  // namespace

std::unique_ptr<ManifoldModel> make_manifold(const std::string& name) {
  if (name == "su3") return std::make_unique<SuThreeModel>();
  if (name.size() >= 2 && name[0] == 's' && std::isdigit(name[1])) {
    const int n = std::stoi(name.substr(1));
    if (n >= 1 && n <= 7) return std::make_unique<SphereModel>(n);
  }
  if (name.size() >= 3 && name.rfind("cp", 0) == 0) {
    const int m = std::stoi(name.substr(2));
    if (m >= 1 && m <= 5) return std::make_unique<CpmModel>(m);
  }
  throw std::invalid_argument("unknown manifold: " + name);
}

MapSpec MapSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon + 1 >= text.size()) {
    throw std::invalid_argument("map spec must look like kind:k, got '" + text + "'");
  }
  MapSpec spec;
  spec.kind = text.substr(0, colon);
  try {
    spec.k = std::stoll(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("map spec has a non-integer parameter: '" + text + "'");
  }
  if (spec.kind == "sphere") spec.kind = "power";
  if (spec.kind == "cpm") spec.kind = "fold";
  if (spec.kind != "psi" && spec.kind != "rho" && spec.kind != "power" &&
      spec.kind != "fold") {
    throw std::invalid_argument("unknown map kind: '" + spec.kind + "'");
  }
  return spec;
}

std::string MapSpec::str() const { return kind + ":" + std::to_string(k); }

PointMap make_point_map(const MapSpec& spec, const ManifoldModel& model) {
  const std::string manifold = model.name();
  const bool is_su3 = manifold == "su3";
  const bool is_sphere = manifold[0] == 's' && !is_su3;
  const bool is_cpm = manifold.rfind("cp", 0) == 0;

  if (spec.kind == "psi") {
    if (!is_su3) throw std::invalid_argument("psi maps act on su3 only");
    if (spec.k % 2 == 0) throw std::invalid_argument("psi needs odd k");
    PsiMap map(spec.k);
    return [map](const Eigen::VectorXd& p) {
      return flatten_su3(map(unflatten_su3(p)));
    };
  }
  if (spec.kind == "rho") {
    if (!is_su3) throw std::invalid_argument("rho maps act on su3 only");
    const long long k = spec.k;
    return [k](const Eigen::VectorXd& p) {
      return flatten_su3(power_map(k, unflatten_su3(p)));
    };
  }
  if (spec.kind == "power") {
    if (!is_sphere) throw std::invalid_argument("power maps act on spheres only");
    const long long k = spec.k;
    return [k](const Eigen::VectorXd& p) { return sphere_power(k, p); };
  }
  if (spec.kind == "fold") {
    if (!is_cpm) throw std::invalid_argument("fold maps act on cp^m only");
    if (spec.k % 2 == 0) throw std::invalid_argument("fold needs odd k");
    const long long k = spec.k;
    return [k](const Eigen::VectorXd& p) {
      return flatten_complex(cpm_fold(k, unflatten_complex(p)));
    };
  }
  throw std::invalid_argument("unknown map kind: " + spec.kind);
}

}  // namespace cohomap
