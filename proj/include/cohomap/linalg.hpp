#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "cohomap/random.hpp"

namespace cohomap {

using Complex = std::complex<double>;
using Matrix3c = Eigen::Matrix3cd;
using MatrixXc = Eigen::MatrixXcd;

/// max(entrywise ||U*U - I||, |det U - 1|)
double special_unitary_residual(const MatrixXc& U);

bool is_special_unitary(const MatrixXc& U, double eps = 1e-9);

/// Throws std::domain_error when U fails the membership check.
void require_special_unitary(const MatrixXc& U, double eps = 1e-9);

/// Haar-distributed U in SU(n). Construction: i.i.d. complex gaussian,
/// QR-orthonormalize with the positive-real-diagonal sign convention,
/// then divide out the determinant phase e^{i phi/n} (principal branch).
/// Satisfies ||U*U - I|| <= 1e-12 and |det U - 1| <= 1e-12.
MatrixXc haar_special_unitary(int n, RandomSource& rng);

/// Haar-distributed R in SO(n) (real), same recipe plus a last-column
/// flip to land in the det = +1 component.
Eigen::MatrixXd haar_special_orthogonal(int n, RandomSource& rng);

/// Uniform point on S^n, returned as a unit vector of length n+1.
Eigen::VectorXd uniform_sphere_point(int n, RandomSource& rng);

/// Fubini-Study-uniform point of CP^m as a unit-norm representative in
/// C^{m+1} (projection of a uniform point of S^{2m+1}).
Eigen::VectorXcd uniform_cpm_point(int m, RandomSource& rng);

/// The (i, j) cofactor of B (0-based). For B in SU(3) this equals
/// conj(B(i, j)); it is computed from 2x2 minors, never by conjugating
/// the entry, so it stays polynomial in the entries of B.
Complex cofactor_conjugate(const Matrix3c& B, int i, int j, double eps = 1e-9);

/// Orthonormal basis of su(3): skew-hermitian traceless matrices with
/// Re tr(Ei* Ek) = delta_ik. The list order fixes the orientation
/// convention used by the degree integrator.
const std::array<Matrix3c, 8>& su3_lie_frame();

/// Projection of an arbitrary 3x3 complex matrix onto su(3).
Matrix3c su3_algebra_project(const Matrix3c& X);

/// exp(X) for skew-hermitian X by scaling-and-squaring Taylor; exact to
/// machine precision for the small steps used in finite differencing.
Matrix3c exp_skew_hermitian(const Matrix3c& X);

}  // namespace cohomap
