#pragma once

#include <string>

#include "cohomap/halfangle.hpp"
#include "cohomap/linalg.hpp"

namespace cohomap {

/// Odd fold parameter k = sigma (2m+1). The half-angle index is
/// m = (|k|-1)/2 and the sign sigma multiplies the antisymmetric part.
struct OddFoldParam {
  long long k = 1;
  int m = 0;
  int sigma = 1;

  /// Throws std::invalid_argument for even k.
  static OddFoldParam from_k(long long k);
};

/// gamma(t) = block rotation by t in the upper-left 2x2, 1 in the corner.
/// The normal geodesic of the action (A, B) -> A B A^T; period 2 pi,
/// canonical slice [0, pi/2].
Matrix3c normal_geodesic(double t);

/// Orbit invariant x = (3 - Re tr(B conj(B))) / 4, clamped to [0, 1].
/// Equals sin^2 t whenever B = A gamma(t) A^T. (The trace-based
/// expression 1 - (tr B - 1)^2 / 4 is not constant on orbits; see
/// orbit_invariant_x_trace_form.)
double orbit_invariant_x(const Matrix3c& B, double eps = 1e-9);

/// The non-invariant trace-based expression, kept for regression tests.
double orbit_invariant_x_trace_form(const Matrix3c& B);

/// Slice parameter t = arcsin(sqrt(x)) in [0, pi/2]; B and gamma(t) lie
/// on the same orbit.
double recover_slice_parameter(const Matrix3c& B, double eps = 1e-9);

/// The selfmap of SU(3) with degree k (k odd):
///   psi_k(B) = f_m(x)(B+B^T)/2 + sigma g_m(x)(B-B^T)/2 + h_m(x) c c^T / 4
/// with c = (cof(1,2)-cof(2,1), cof(2,0)-cof(0,2), cof(0,1)-cof(1,0))
/// built from cofactors. Output unitarity is asserted (1e-8), never
/// projected; failure throws std::runtime_error.
Matrix3c psi(long long k, const Matrix3c& B, double eps = 1e-9);

/// psi with the polynomials bound once; cheap to call in sampling loops.
class PsiMap {
 public:
  explicit PsiMap(long long k);
  Matrix3c operator()(const Matrix3c& B) const;
  long long k() const { return param_.k; }

 private:
  OddFoldParam param_;
  HalfAnglePolys polys_;
};

/// Evaluates psi_k through complex-polynomial arithmetic only (x from the
/// cofactor matrix, no conjugations): witnesses that every entry of the
/// image is a real polynomial in the entries of B. Test/verification path.
Matrix3c psi_polynomial_witness(long long k, const Matrix3c& B);

/// Power map rho_k(B) = B^k by repeated squaring; k <= 0 through the
/// conjugate transpose. Degree k^2 on SU(3).
Matrix3c power_map(long long k, const Matrix3c& B, double eps = 1e-9);

/// Realization of a target degree d = 4^m (2l+1) as rho_{2^m} o psi_{2l+1}.
struct RealizationPlan {
  enum class Kind { realizable, not_realizable, zero_caveat };
  Kind kind = Kind::not_realizable;
  int m = 0;
  long long ell = 0;
  long long degree = 0;

  std::string describe() const;
};

/// d != 0 with even 2-adic valuation -> plan (m = v2(d)/2, l);
/// odd valuation -> not_realizable; d = 0 -> zero_caveat.
RealizationPlan realize_degree(long long d);

/// Applies the composed map of a realizable plan.
Matrix3c apply_realization(const RealizationPlan& plan, const Matrix3c& B,
                           double eps = 1e-9);

}  // namespace cohomap
