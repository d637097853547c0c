#pragma once

#include <Eigen/Dense>

#include "cohomap/linalg.hpp"

namespace cohomap {

/// k-power of S^n in R x R^n coordinates:
///   (cos t, v sin t) -> (cos kt, v sin kt),
/// computed polynomially as (T_k(p0), U_{k-1}(p0) pvec) so it is smooth
/// at the poles. Input must be a unit vector.
Eigen::VectorXd sphere_power(long long k, const Eigen::VectorXd& p,
                             double eps = 1e-9);

// Branch thresholds of the CP^m fold (both loci have measure zero; near
// the thresholds the exact limiting formulas keep the map continuous to
// tolerance).
inline constexpr double kCpmZetaThreshold = 1e-8;       // |z^T z| ~ 0 locus
inline constexpr double kCpmRealLocusThreshold = 1e-12; // ||v|| ~ 0 locus

/// Slice parameter t in [0, pi/4] of [z] for the SO(1+m) action whose
/// normal geodesic is [cos t : i sin t : 0 : ...].
double cpm_slice_parameter(const Eigen::VectorXcd& z);

/// Geodesic k-folding selfmap of CP^m for odd k. Input: unit-norm
/// representative; output: unit-norm representative of the image class.
/// Phase-normalizes so z^T z >= 0, splits z = u + iv (then u.v = 0),
/// reads t = atan2(|v|, |u|) and returns [cos(kt) u^ + i sin(kt) v^];
/// at the t = pi/4 locus the class of z (k = 1 mod 4) or conj(z)
/// (k = 3 mod 4) is returned.
Eigen::VectorXcd cpm_fold(long long k, const Eigen::VectorXcd& z,
                          double eps = 1e-9);

/// Distance between the projective classes [a], [b] of unit vectors:
/// min over phases of ||a e^{i alpha} - b||.
double projective_residual(const Eigen::VectorXcd& a,
                           const Eigen::VectorXcd& b);

}  // namespace cohomap
