#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

namespace cohomap::weyl {

using Rational = boost::rational<long long>;

enum class Parity { odd, even };

inline Parity parity_of(int n) { return n % 2 != 0 ? Parity::odd : Parity::even; }

/// Abstract descriptor of a cohomogeneity-one action with closed normal
/// geodesics: Weyl group order, codimensions and Euler characteristics
/// of the non-principal orbits N0, N1, Euler characteristic of the
/// principal orbit G/H, and the flags the theorems branch on.
struct CohomOneData {
  std::string name;
  int weyl_order = 2;
  int codim0 = 1;
  int codim1 = 1;
  long long chi0 = 0;
  long long chi1 = 0;
  long long chiGH = 0;
  bool isotropy_equal = false;
  bool orientable = true;
  bool rank_equal = false;

  Parity parity0() const { return parity_of(codim0); }
  Parity parity1() const { return parity_of(codim1); }
  long long chiM() const { return chi0 + chi1 - chiGH; }
  long long fold_k(long long j) const { return j * weyl_order / 2 + 1; }

  /// Enforces: |W| even positive, codims positive, rank_equal <=> chiGH > 0.
  /// Throws std::invalid_argument on violation.
  void validate() const;
};

/// Fold parameter of the geodesic k-folding, k = j |W|/2 + 1.
struct FoldParam {
  long long j = 0;
  int weyl_order = 2;
  long long k() const { return j * weyl_order / 2 + 1; }
};

/// Even j is always allowed; odd j only when the isotropy groups at
/// gamma(t0) and gamma(t0 + |W|/2) are equal (not just conjugate).
bool allowed_fold_params(const CohomOneData& data, long long j);

/// Orientation s(l) of G/H x ]l, l+1[ relative to the standard product
/// orientation: s(0) = +1, and crossing the integer i flips the sign iff
/// the orbit there (N0 for even i, N1 for odd i) has even codimension.
int orientation_sign(Parity codim0_parity, Parity codim1_parity, long long ell);

/// The orientation pattern must close up with period |W|: inconsistent
/// exactly when the parities differ and 4 does not divide |W|.
bool orientability_consistent(int weyl_order, Parity codim0_parity,
                              Parity codim1_parity);

/// Degree by proof-level enumeration: the preimages of gamma(tau) are
/// gamma(t_m) with t_m = (m |W| + tau)/k in (0, |W|); the result is
/// sgn(k) * sum of s(floor(t_m)). Exact rational arithmetic. Throws
/// std::domain_error when tau makes some t_m an integer (non-regular
/// value; callers retry with a different tau).
long long degree_oracle_at(const CohomOneData& data, long long j, Rational tau);

/// degree_oracle_at with tau = 1/2, retrying at 1/3 on non-regularity.
long long degree_oracle(const CohomOneData& data, long long j);

/// The degree table exactly as printed (even j: k / +1; odd j:
/// k / 0 / -1 / +1 cases). Where the printed odd-j mixed-parity labeling
/// disagrees with the enumeration, compare_degree flags it.
long long degree_formula(const CohomOneData& data, long long j);

struct DegreeComparison {
  long long formula = 0;
  long long oracle = 0;
  bool discrepancy = false;
};

DegreeComparison compare_degree(const CohomOneData& data, long long j);

/// Lefschetz number by fixed-orbit enumeration: parameters t in [0,|W|)
/// with (k-1) t = 0 mod |W| fold to orbit representatives in [0,1] via
/// t -> 2n +- t; each pointwise-fixed orbit contributes
/// (-sgn j)^codim(orbit) * chi(orbit). j = 0 returns chi(M).
long long lefschetz_oracle(const CohomOneData& data, long long j);

/// The printed Lefschetz table: even j: -j chi(G/H)/2 if both codims
/// odd, else chi(M); odd j: -j chi(G/H)/2 if rank G = rank H, else chi(N0).
long long lefschetz_formula(const CohomOneData& data, long long j);

/// Rational cohomology ring shapes the paper computes with.
struct CohomologyRingDesc {
  enum class Variant { exterior_odd, truncated_polynomial, product_of_spheres };
  Variant variant = Variant::exterior_odd;
  std::vector<int> degrees;               // generator degrees
  int truncation = 0;                     // truncated_polynomial height m
  std::vector<long long> coefficients;    // induced-map coefficient per generator
};

/// Top-degree action: exterior/product variants multiply the generator
/// coefficients; truncated polynomial gives d^m.
long long ring_degree(const CohomologyRingDesc& ring);

/// Alternating trace: product of (1 + (-1)^deg coef) per generator for
/// exterior/product variants; sum d^i, i = 0..m, for truncated polynomial.
long long ring_lefschetz(const CohomologyRingDesc& ring);

/// Solves L = 1 - deg against the closed formulas for a rational
/// homology sphere with both codimensions odd: chi(G/H) = |W|. A
/// supplied chi different from |W| yields a contradiction report.
struct ChiReport {
  long long chi = 0;
  bool consistent = true;
  std::string detail;
};

ChiReport homology_sphere_chi(int weyl_order,
                              std::optional<long long> supplied = std::nullopt);

/// Corollary-2 machinery for M with the rational cohomology of
/// S^{l1} x ... x S^{lm}: enumerates the position receiving the factor k
/// and sign vectors with an even number of -1 entries, keeps those
/// matching -j chi/2 as a linear function of j, and returns the forced
/// chi = 2^{m-1} |W|. `feasible` is false (infeasible report: no
/// rank-equal action can exist) when no assignment survives, which
/// happens exactly when sum l_i is even.
struct SphereProductAssignment {
  int k_position = 0;          // 0-based index of the generator carrying k
  std::vector<int> signs;      // sigma_i in {+1, -1}
};

struct SphereProductChi {
  long long chi = 0;
  bool feasible = false;
  std::vector<SphereProductAssignment> assignments;
};

SphereProductChi product_spheres_chi(const std::vector<int>& degrees,
                                     int weyl_order);

enum class Su3DegreeVerdict { yes, no, zero_caveat };

/// Degrees of selfmaps of SU(3) are exactly 4^m (2l+1); d = 0 (constant
/// map) is reported as a separate caveat.
Su3DegreeVerdict realizable_su3_degree(long long d);

/// Catalog of the worked examples: SU3, S2..S7, CP2..CP5, M7_1, M7_2.
const std::vector<CohomOneData>& catalog();

CohomOneData su3_data();
CohomOneData sphere_data(int n);
CohomOneData cpm_data(int m);

/// Throws std::invalid_argument for unknown names.
const CohomOneData& catalog_entry(const std::string& name);

}  // namespace cohomap::weyl
