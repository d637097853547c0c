#include "cohomap/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace cohomap {

double special_unitary_residual(const MatrixXc& U) {
  const auto n = U.rows();
  MatrixXc gram = U.adjoint() * U - MatrixXc::Identity(n, n);
  double res = gram.cwiseAbs().maxCoeff();
  return std::max(res, std::abs(U.determinant() - Complex(1.0, 0.0)));
}

bool is_special_unitary(const MatrixXc& U, double eps) {
  return U.rows() == U.cols() && special_unitary_residual(U) <= eps;
}

void require_special_unitary(const MatrixXc& U, double eps) {
  if (!is_special_unitary(U, eps)) {
    throw std::domain_error("matrix is not special unitary within tolerance");
  }
}

namespace {

void require_dimension(int n) {
  if (n < 2) throw std::invalid_argument("invalid dimension: n must be >= 2");
}

}  // namespace

MatrixXc haar_special_unitary(int n, RandomSource& rng) {
  require_dimension(n);
  MatrixXc Z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) Z(i, j) = rng.complex_gaussian();

  Eigen::HouseholderQR<MatrixXc> qr(Z);
  MatrixXc Q = qr.householderQ() * MatrixXc::Identity(n, n);
  MatrixXc R = qr.matrixQR().template triangularView<Eigen::Upper>();
  // positive-real-diagonal convention for the triangular factor
  for (int k = 0; k < n; ++k) {
    Complex d = R(k, k);
    Complex phase = std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0, 0.0);
    Q.col(k) *= phase;
  }
  // divide out the determinant phase (principal branch)
  double phi = std::arg(Q.determinant());
  Q *= std::exp(Complex(0.0, -phi / n));
  return Q;
}

Eigen::MatrixXd haar_special_orthogonal(int n, RandomSource& rng) {
  require_dimension(n);
  Eigen::MatrixXd Z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) Z(i, j) = rng.gaussian();

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(Z);
  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    if (R(k, k) < 0) Q.col(k) = -Q.col(k);
  }
  if (Q.determinant() < 0) Q.col(n - 1) = -Q.col(n - 1);
  return Q;
}

Eigen::VectorXd uniform_sphere_point(int n, RandomSource& rng) {
  if (n < 1) throw std::invalid_argument("invalid dimension: n must be >= 1");
  Eigen::VectorXd p(n + 1);
  double norm = 0.0;
  do {
    for (int i = 0; i <= n; ++i) p(i) = rng.gaussian();
    norm = p.norm();
  } while (norm < 1e-100);
  return p / norm;
}

Eigen::VectorXcd uniform_cpm_point(int m, RandomSource& rng) {
  if (m < 1) throw std::invalid_argument("invalid dimension: m must be >= 1");
  Eigen::VectorXcd z(m + 1);
  double norm = 0.0;
  do {
    for (int i = 0; i <= m; ++i) z(i) = rng.complex_gaussian();
    norm = z.norm();
  } while (norm < 1e-100);
  return z / norm;
}

Complex cofactor_conjugate(const Matrix3c& B, int i, int j, double eps) {
  if (i < 0 || i > 2 || j < 0 || j > 2) {
    throw std::invalid_argument("cofactor index out of range");
  }
  require_special_unitary(B, eps);
  // cyclic form absorbs the (-1)^{i+j} sign
  int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
  int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
  return B(i1, j1) * B(i2, j2) - B(i1, j2) * B(i2, j1);
}

const std::array<Matrix3c, 8>& su3_lie_frame() {
  static const std::array<Matrix3c, 8> frame = [] {
    const Complex I(0.0, 1.0);
    const double s = 1.0 / std::sqrt(2.0);
    std::array<Matrix3c, 8> E;
    for (auto& M : E) M.setZero();
    // i/sqrt(2) times the standard Gell-Mann basis; the order fixes the
    // orientation convention.
    E[0](0, 1) = I * s;  E[0](1, 0) = I * s;
    E[1](0, 1) = s;      E[1](1, 0) = -s;
    E[2](0, 0) = I * s;  E[2](1, 1) = -I * s;
    E[3](0, 2) = I * s;  E[3](2, 0) = I * s;
    E[4](0, 2) = s;      E[4](2, 0) = -s;
    E[5](1, 2) = I * s;  E[5](2, 1) = I * s;
    E[6](1, 2) = s;      E[6](2, 1) = -s;
    const double t = 1.0 / std::sqrt(6.0);
    E[7](0, 0) = I * t;  E[7](1, 1) = I * t;  E[7](2, 2) = -2.0 * I * t;
    return E;
  }();
  return frame;
}

Matrix3c su3_algebra_project(const Matrix3c& X) {
  Matrix3c S = 0.5 * (X - X.adjoint());
  Complex tr = S.trace() / 3.0;
  S(0, 0) -= tr;
  S(1, 1) -= tr;
  S(2, 2) -= tr;
  return S;
}

Matrix3c exp_skew_hermitian(const Matrix3c& X) {
  double a = X.norm();
  int squarings = 0;
  Matrix3c Y = X;
  while (a > 0.25) {
    Y *= 0.5;
    a *= 0.5;
    ++squarings;
  }
  // Taylor to order 12: remainder < 0.25^13 / 13! ~ 2e-18
  Matrix3c term = Matrix3c::Identity();
  Matrix3c sum = Matrix3c::Identity();
  for (int k = 1; k <= 12; ++k) {
    term = (term * Y) / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace cohomap
