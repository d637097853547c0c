#include "cohomap/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace cohomap::weyl {

void CohomOneData::validate() const {
  if (weyl_order <= 0 || weyl_order % 2 != 0) {
    throw std::invalid_argument(name + ": Weyl group order must be even positive");
  }
  if (codim0 < 1 || codim1 < 1) {
    throw std::invalid_argument(name + ": codimensions must be positive");
  }
  if (rank_equal && chiGH <= 0) {
    throw std::invalid_argument(name + ": rank-equal data needs chi(G/H) > 0");
  }
  if (!rank_equal && chiGH != 0) {
    throw std::invalid_argument(name + ": chi(G/H) must vanish unless ranks agree");
  }
}

bool allowed_fold_params(const CohomOneData& data, long long j) {
  if (j % 2 == 0) return true;
  return data.isotropy_equal;
}

int orientation_sign(Parity codim0_parity, Parity codim1_parity, long long ell) {
  // s(0) = +1; crossing integer i flips iff the orbit there (N0 at even
  // i, N1 at odd i) has even codimension
  if (ell < 0) throw std::invalid_argument("orientation_sign: negative interval");
  const bool flip0 = codim0_parity == Parity::even;
  const bool flip1 = codim1_parity == Parity::even;
  const long long n1_crossings = (ell + 1) / 2;  // odd integers in [1, ell]
  const long long n0_crossings = ell / 2;        // even integers in [1, ell]
  long long flips = (flip0 ? n0_crossings : 0) + (flip1 ? n1_crossings : 0);
  return flips % 2 == 0 ? 1 : -1;
}

bool orientability_consistent(int weyl_order, Parity codim0_parity,
                              Parity codim1_parity) {
  if (codim0_parity != codim1_parity) return weyl_order % 4 == 0;
  return true;  // equal parities: period 1 or 2 always divides |W|
}

namespace {

long long floor_rational(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

void require_oracle_pre(const CohomOneData& data, long long j) {
  if (!allowed_fold_params(data, j)) {
    throw std::invalid_argument(
        data.name + ": odd fold parameter needs equal singular isotropy groups");
  }
  if (!data.orientable) {
    throw std::invalid_argument(data.name + ": degree needs an orientation");
  }
}

}  // namespace

long long degree_oracle_at(const CohomOneData& data, long long j, Rational tau) {
  require_oracle_pre(data, j);
  if (tau <= Rational(0) || tau >= Rational(1)) {
    throw std::invalid_argument("regular value tau must lie in (0, 1)");
  }
  const long long W = data.weyl_order;
  const long long k = data.fold_k(j);
  if (k == 0) return 0;  // fold collapses onto N0; no interior preimages

  const Parity p0 = data.parity0();
  const Parity p1 = data.parity1();

  long long total = 0;
  const long long m_lo = k > 0 ? 0 : k;
  const long long m_hi = k > 0 ? k - 1 : -1;
  for (long long m = m_lo; m <= m_hi; ++m) {
    const Rational t = Rational(m * W) / k + tau / k;
    if (t <= Rational(0) || t >= Rational(W)) continue;
    if (t.denominator() == 1) {
      throw std::domain_error("tau is not a regular value: preimage on an orbit boundary");
    }
    total += orientation_sign(p0, p1, floor_rational(t));
  }
  return (k > 0 ? 1 : -1) * total;
}

long long degree_oracle(const CohomOneData& data, long long j) {
  try {
    return degree_oracle_at(data, j, Rational(1, 2));
  } catch (const std::domain_error&) {
    return degree_oracle_at(data, j, Rational(1, 3));
  }
}

long long degree_formula(const CohomOneData& data, long long j) {
  const long long k = data.fold_k(j);
  const bool both_odd = data.parity0() == Parity::odd && data.parity1() == Parity::odd;
  if (j % 2 == 0) {
    return both_odd ? k : 1;
  }
  const bool both_even =
      data.parity0() == Parity::even && data.parity1() == Parity::even;
  if (both_odd) return k;
  if (both_even && data.weyl_order % 4 != 0) return 0;
  if (data.parity0() == Parity::even && data.parity1() == Parity::odd &&
      data.weyl_order % 8 != 0) {
    return -1;
  }
  return 1;
}

DegreeComparison compare_degree(const CohomOneData& data, long long j) {
  DegreeComparison cmp;
  cmp.formula = degree_formula(data, j);
  cmp.oracle = degree_oracle(data, j);
  cmp.discrepancy = cmp.formula != cmp.oracle;
  return cmp;
}

long long lefschetz_oracle(const CohomOneData& data, long long j) {
  if (!allowed_fold_params(data, j)) {
    throw std::invalid_argument(
        data.name + ": odd fold parameter needs equal singular isotropy groups");
  }
  if (j == 0) return data.chiM();  // identity map

  const long long W = data.weyl_order;
  const long long aj = std::llabs(j);
  // fixed parameters of t -> kt on the closed geodesic: (k-1) t = 0
  // (mod |W|), i.e. t in (2/|j|) Z, folded to orbit reps in [0, 1]
  std::set<Rational> reps;
  for (long long i = 0; i < aj * W / 2; ++i) {
    Rational t(2 * i, aj);
    Rational r = t - Rational(2 * floor_rational(t / 2));
    if (r > Rational(1)) r = Rational(2) - r;
    reps.insert(r);
  }

  const int sign_base = j > 0 ? -1 : 1;  // -sgn j
  auto contribution = [&](int codim, long long chi) {
    const int s = codim % 2 == 0 ? 1 : sign_base;
    return s * chi;
  };

  long long L = 0;
  for (const auto& r : reps) {
    if (r == Rational(0)) {
      L += contribution(data.codim0, data.chi0);
    } else if (r == Rational(1)) {
      L += contribution(data.codim1, data.chi1);
    } else {
      L += contribution(1, data.chiGH);  // principal orbit, codimension 1
    }
  }
  return L;
}

long long lefschetz_formula(const CohomOneData& data, long long j) {
  const bool both_odd = data.parity0() == Parity::odd && data.parity1() == Parity::odd;
  if (j % 2 == 0) {
    if (both_odd) return -j * data.chiGH / 2;
    return data.chiM();
  }
  if (data.rank_equal) return -j * data.chiGH / 2;
  return data.chi0;
}

long long ring_degree(const CohomologyRingDesc& ring) {
  switch (ring.variant) {
    case CohomologyRingDesc::Variant::truncated_polynomial: {
      long long d = ring.coefficients.at(0);
      long long out = 1;
      for (int i = 0; i < ring.truncation; ++i) out *= d;
      return out;
    }
    case CohomologyRingDesc::Variant::exterior_odd:
    case CohomologyRingDesc::Variant::product_of_spheres: {
      long long out = 1;
      for (long long c : ring.coefficients) out *= c;
      return out;
    }
  }
  throw std::logic_error("unreachable ring variant");
}

long long ring_lefschetz(const CohomologyRingDesc& ring) {
  switch (ring.variant) {
    case CohomologyRingDesc::Variant::truncated_polynomial: {
      const long long d = ring.coefficients.at(0);
      long long L = 0, p = 1;
      for (int i = 0; i <= ring.truncation; ++i) {
        L += p;
        p *= d;
      }
      return L;
    }
    case CohomologyRingDesc::Variant::exterior_odd:
    case CohomologyRingDesc::Variant::product_of_spheres: {
      if (ring.degrees.size() != ring.coefficients.size()) {
        throw std::invalid_argument("ring descriptor: one coefficient per generator");
      }
      long long L = 1;
      for (std::size_t i = 0; i < ring.degrees.size(); ++i) {
        const long long sign = ring.degrees[i] % 2 != 0 ? -1 : 1;
        L *= 1 + sign * ring.coefficients[i];
      }
      return L;
    }
  }
  throw std::logic_error("unreachable ring variant");
}

ChiReport homology_sphere_chi(int weyl_order, std::optional<long long> supplied) {
  ChiReport report;
  report.chi = weyl_order;  // -j chi/2 = 1 - (j|W|/2 + 1) forces chi = |W|
  if (supplied && *supplied != weyl_order) {
    report.consistent = false;
    report.detail = "supplied chi(G/H) = " + std::to_string(*supplied) +
                    " contradicts the forced value " + std::to_string(weyl_order);
  }
  return report;
}

SphereProductChi product_spheres_chi(const std::vector<int>& degrees,
                                     int weyl_order) {
  if (degrees.empty()) throw std::invalid_argument("need at least one sphere factor");
  if (!std::is_sorted(degrees.begin(), degrees.end()) ||
      std::adjacent_find(degrees.begin(), degrees.end()) != degrees.end()) {
    throw std::invalid_argument("sphere degrees must be strictly increasing");
  }
  const int m = static_cast<int>(degrees.size());

  SphereProductChi out;
  out.chi = (1LL << (m - 1)) * weyl_order;

  // For each position p carrying the factor k and sign vector sigma with
  // an even number of -1 entries, the alternating trace is linear in k
  // with the right slope and zero at k = 1 iff sigma_i = (-1)^{l_i} for
  // i != p and sigma_p = -(-1)^{l_p}.
  for (int p = 0; p < m; ++p) {
    std::vector<int> sigma(m);
    for (int i = 0; i < m; ++i) {
      const int pref = degrees[i] % 2 != 0 ? -1 : 1;  // (-1)^{l_i}
      sigma[i] = i == p ? -pref : pref;
    }
    const long long minus_count =
        std::count(sigma.begin(), sigma.end(), -1);
    if (minus_count % 2 != 0) continue;  // deg psi_k = k forces prod sigma = +1
    out.assignments.push_back({p, sigma});
  }
  out.feasible = !out.assignments.empty();
  return out;
}

Su3DegreeVerdict realizable_su3_degree(long long d) {
  if (d == 0) return Su3DegreeVerdict::zero_caveat;
  int v2 = 0;
  long long v = d;
  while (v % 2 == 0) {
    v /= 2;
    ++v2;
  }
  return v2 % 2 == 0 ? Su3DegreeVerdict::yes : Su3DegreeVerdict::no;
}

CohomOneData su3_data() {
  CohomOneData d;
  d.name = "SU3";
  d.weyl_order = 4;
  d.codim0 = 3;  // SU(3)/SO(3), dimension 5
  d.codim1 = 3;  // SU(3)/SU(2), dimension 5
  d.chi0 = 0;
  d.chi1 = 0;
  d.chiGH = 0;  // principal orbit SU(3)/SO(2), dimension 7
  d.isotropy_equal = true;
  d.orientable = true;
  d.rank_equal = false;
  return d;
}

CohomOneData sphere_data(int n) {
  if (n < 1) throw std::invalid_argument("sphere dimension must be >= 1");
  CohomOneData d;
  d.name = "S" + std::to_string(n);
  d.weyl_order = 2;
  d.codim0 = n;  // poles of the O(n) action
  d.codim1 = n;
  d.chi0 = 1;
  d.chi1 = 1;
  d.chiGH = n % 2 != 0 ? 2 : 0;  // principal orbit S^{n-1}
  d.isotropy_equal = true;       // both poles are fixed by all of O(n)
  d.orientable = true;
  d.rank_equal = n % 2 != 0;
  return d;
}

CohomOneData cpm_data(int m) {
  if (m < 1) throw std::invalid_argument("projective dimension must be >= 1");
  CohomOneData d;
  d.name = "CP" + std::to_string(m);
  d.weyl_order = 4;
  d.codim0 = m;  // N0 = RP^m
  d.codim1 = 2;  // N1 = SO(1+m)/(SO(2) SO(m-1))
  d.chi0 = m % 2 != 0 ? 0 : 1;
  d.chiGH = 0;  // principal orbit has odd dimension 2m - 1
  d.chi1 = (m + 1) - d.chi0 + d.chiGH;  // chi(M) = m + 1
  d.isotropy_equal = true;
  d.orientable = true;
  d.rank_equal = false;
  return d;
}

namespace {

CohomOneData bundle_data(const std::string& name, long long chi_singular,
                         long long chi_principal) {
  CohomOneData d;
  d.name = name;
  d.weyl_order = 2;
  d.codim0 = 3;
  d.codim1 = 3;
  d.chi0 = chi_singular;
  d.chi1 = chi_singular;
  d.chiGH = chi_principal;
  d.isotropy_equal = true;
  d.orientable = true;
  d.rank_equal = true;
  return d;
}

}  // namespace

const std::vector<CohomOneData>& catalog() {
  static const std::vector<CohomOneData> entries = [] {
    std::vector<CohomOneData> v;
    v.push_back(su3_data());
    for (int n = 2; n <= 7; ++n) v.push_back(sphere_data(n));
    for (int m = 2; m <= 5; ++m) v.push_back(cpm_data(m));
    // S^3-bundles over S^4 and CP^2 with sections: principal orbits CP^3
    // (chi 4) and SU(3)/T^2 (chi 6), singular orbits S^4 and CP^2
    v.push_back(bundle_data("M7_1", 2, 4));
    v.push_back(bundle_data("M7_2", 3, 6));
    for (const auto& d : v) d.validate();
    return v;
  }();
  return entries;
}

const CohomOneData& catalog_entry(const std::string& name) {
  for (const auto& d : catalog()) {
    if (d.name == name) return d;
  }
  throw std::invalid_argument("unknown catalog entry: " + name);
}

}  // namespace cohomap::weyl
