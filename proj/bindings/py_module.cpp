#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cohomap/degree.hpp"
#include "cohomap/halfangle.hpp"
#include "cohomap/linalg.hpp"
#include "cohomap/manifold.hpp"
#include "cohomap/sphere_cpm.hpp"
#include "cohomap/su3_maps.hpp"
#include "cohomap/verify.hpp"
#include "cohomap/weyl.hpp"

namespace py = pybind11;
using namespace cohomap;

namespace {

py::object bigint_to_py(const BigInt& v) {
  // route through the decimal string so arbitrary precision survives
  return py::module_::import("builtins").attr("int")(v.str());
}

py::list bigints_to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& c : v) out.append(bigint_to_py(c));
  return out;
}

py::dict estimate_to_dict(const DegreeEstimate& est) {
  py::dict d;
  d["mean"] = est.mean;
  d["stderr"] = est.stderr_;
  d["samples"] = est.samples;
  d["rounded"] = est.rounded;
  d["verdict"] = est.verdict();
  d["excluded_fraction"] = est.excluded_fraction;
  return d;
}

std::string verdict_name(weyl::Su3DegreeVerdict v) {
  switch (v) {
    case weyl::Su3DegreeVerdict::yes: return "yes";
    case weyl::Su3DegreeVerdict::no: return "no";
    case weyl::Su3DegreeVerdict::zero_caveat: return "zero-caveat";
  }
  return {};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "equivariant selfmaps of cohomogeneity-one manifolds: degree and "
            "Lefschetz verification";

  // ---- sampling ----
  py::class_<RandomSource>(m, "RandomSource")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"),
           py::arg("stream") = 0)
      .def("uniform01", &RandomSource::uniform01)
      .def("gaussian", &RandomSource::gaussian)
      .def_property_readonly("seed", &RandomSource::seed)
      .def_property_readonly("stream", &RandomSource::stream);

  m.def("haar_special_unitary",
        [](int n, std::uint64_t seed, std::uint64_t stream) {
          RandomSource rng(seed, stream);
          return MatrixXc(haar_special_unitary(n, rng));
        },
        py::arg("n"), py::arg("seed"), py::arg("stream") = 0);
  m.def("haar_special_orthogonal",
        [](int n, std::uint64_t seed, std::uint64_t stream) {
          RandomSource rng(seed, stream);
          return haar_special_orthogonal(n, rng);
        },
        py::arg("n"), py::arg("seed"), py::arg("stream") = 0);
  m.def("uniform_sphere_point",
        [](int n, std::uint64_t seed, std::uint64_t stream) {
          RandomSource rng(seed, stream);
          return uniform_sphere_point(n, rng);
        },
        py::arg("n"), py::arg("seed"), py::arg("stream") = 0);
  m.def("uniform_cpm_point",
        [](int mdim, std::uint64_t seed, std::uint64_t stream) {
          RandomSource rng(seed, stream);
          return Eigen::VectorXcd(uniform_cpm_point(mdim, rng));
        },
        py::arg("m"), py::arg("seed"), py::arg("stream") = 0);
  m.def("cofactor_conjugate",
        [](const Matrix3c& B, int i, int j) { return cofactor_conjugate(B, i, j); },
        py::arg("B"), py::arg("i"), py::arg("j"));

  // ---- half-angle polynomials ----
  m.def("halfangle_coefficients", [](int j) {
    const auto P = build_halfangle(j);
    py::dict d;
    d["j"] = P.j;
    d["f"] = bigints_to_py(P.f);
    d["g"] = bigints_to_py(P.g);
    d["h"] = bigints_to_py(P.h);
    return d;
  });
  m.def("eval_f", [](int j, double x) { return eval_f(j, x); });
  m.def("eval_g", [](int j, double x) { return eval_g(j, x); });
  m.def("eval_h", [](int j, double x) { return eval_h(j, x); });
  m.def("chebyshev_eval", [](long long k, double c) { return chebyshev_eval(k, c); });

  // ---- SU(3) maps ----
  m.def("normal_geodesic", &normal_geodesic, py::arg("t"));
  m.def("orbit_invariant_x", [](const Matrix3c& B) { return orbit_invariant_x(B); });
  m.def("recover_slice_parameter",
        [](const Matrix3c& B) { return recover_slice_parameter(B); });
  m.def("psi", [](long long k, const Matrix3c& B) { return psi(k, B); },
        py::arg("k"), py::arg("B"));
  m.def("power_map", [](long long k, const Matrix3c& B) { return power_map(k, B); },
        py::arg("k"), py::arg("B"));
  m.def("realize_degree", [](long long d) {
    const auto plan = realize_degree(d);
    py::dict out;
    out["degree"] = plan.degree;
    switch (plan.kind) {
      case RealizationPlan::Kind::realizable:
        out["realizable"] = "yes";
        out["m"] = plan.m;
        out["ell"] = plan.ell;
        out["composition"] = plan.describe();
        break;
      case RealizationPlan::Kind::not_realizable:
        out["realizable"] = "not-realizable";
        break;
      case RealizationPlan::Kind::zero_caveat:
        out["realizable"] = "zero-caveat";
        break;
    }
    return out;
  });
  m.def("apply_realization", [](long long d, const Matrix3c& B) {
    return apply_realization(realize_degree(d), B);
  });

  // ---- sphere and CP^m maps ----
  m.def("sphere_power",
        [](long long k, const Eigen::VectorXd& p) { return sphere_power(k, p); });
  m.def("cpm_fold", [](long long k, const Eigen::VectorXcd& z) {
    return Eigen::VectorXcd(cpm_fold(k, z));
  });
  m.def("projective_residual", &projective_residual);

  // ---- numerical degree ----
  m.def("signed_jacobian",
        [](const std::string& manifold, const std::string& map_spec,
           const Eigen::VectorXd& p, double h) {
          const auto model = make_manifold(manifold);
          return signed_jacobian(make_point_map(MapSpec::parse(map_spec), *model),
                                 *model, p, h);
        },
        py::arg("manifold"), py::arg("map"), py::arg("point"), py::arg("h") = 1e-4);
  m.def("estimate_degree",
        [](const std::string& manifold, const std::string& map_spec,
           long long samples, std::uint64_t seed, double h, int workers) {
          const auto model = make_manifold(manifold);
          DegreeOptions opt;
          opt.samples = samples;
          opt.seed = seed;
          opt.h = h;
          opt.workers = workers;
          DegreeEstimate est;
          {
            py::gil_scoped_release release;
            est = estimate_degree(
                make_point_map(MapSpec::parse(map_spec), *model), *model, opt);
          }
          return estimate_to_dict(est);
        },
        py::arg("manifold"), py::arg("map"), py::arg("samples") = 200000,
        py::arg("seed") = 42, py::arg("h") = 1e-4, py::arg("workers") = 0);

  // ---- Weyl-theoretic engines ----
  py::class_<weyl::CohomOneData>(m, "CohomOneData")
      .def(py::init<>())
      .def_readwrite("name", &weyl::CohomOneData::name)
      .def_readwrite("weyl_order", &weyl::CohomOneData::weyl_order)
      .def_readwrite("codim0", &weyl::CohomOneData::codim0)
      .def_readwrite("codim1", &weyl::CohomOneData::codim1)
      .def_readwrite("chi0", &weyl::CohomOneData::chi0)
      .def_readwrite("chi1", &weyl::CohomOneData::chi1)
      .def_readwrite("chiGH", &weyl::CohomOneData::chiGH)
      .def_readwrite("isotropy_equal", &weyl::CohomOneData::isotropy_equal)
      .def_readwrite("orientable", &weyl::CohomOneData::orientable)
      .def_readwrite("rank_equal", &weyl::CohomOneData::rank_equal)
      .def("chi_m", &weyl::CohomOneData::chiM)
      .def("fold_k", &weyl::CohomOneData::fold_k)
      .def("validate", &weyl::CohomOneData::validate);

  m.def("catalog", [] { return weyl::catalog(); });
  m.def("catalog_entry",
        [](const std::string& name) { return weyl::catalog_entry(name); });
  m.def("allowed_fold_params", &weyl::allowed_fold_params);
  m.def("degree_oracle", &weyl::degree_oracle);
  m.def("degree_formula", &weyl::degree_formula);
  m.def("compare_degree", [](const weyl::CohomOneData& d, long long j) {
    const auto cmp = weyl::compare_degree(d, j);
    py::dict out;
    out["formula"] = cmp.formula;
    out["oracle"] = cmp.oracle;
    out["discrepancy"] = cmp.discrepancy;
    return out;
  });
  m.def("lefschetz_oracle", &weyl::lefschetz_oracle);
  m.def("lefschetz_formula", &weyl::lefschetz_formula);
  m.def("homology_sphere_chi",
        [](int W, std::optional<long long> supplied) {
          const auto r = weyl::homology_sphere_chi(W, supplied);
          py::dict out;
          out["chi"] = r.chi;
          out["consistent"] = r.consistent;
          out["detail"] = r.detail;
          return out;
        },
        py::arg("weyl_order"), py::arg("supplied") = py::none());
  m.def("product_spheres_chi", [](const std::vector<int>& degrees, int W) {
    const auto r = weyl::product_spheres_chi(degrees, W);
    py::dict out;
    out["chi"] = r.chi;
    out["feasible"] = r.feasible;
    py::list assignments;
    for (const auto& a : r.assignments) {
      py::dict entry;
      entry["k_position"] = a.k_position;
      entry["signs"] = a.signs;
      assignments.append(entry);
    }
    out["assignments"] = assignments;
    return out;
  });
  m.def("realizable_su3_degree",
        [](long long d) { return verdict_name(weyl::realizable_su3_degree(d)); });

  m.def("ring_degree_lefschetz",
        [](const std::string& variant, const std::vector<int>& degrees,
           int truncation, const std::vector<long long>& coefficients) {
          weyl::CohomologyRingDesc ring;
          ring.variant =
              variant == "truncated_polynomial"
                  ? weyl::CohomologyRingDesc::Variant::truncated_polynomial
              : variant == "product_of_spheres"
                  ? weyl::CohomologyRingDesc::Variant::product_of_spheres
                  : weyl::CohomologyRingDesc::Variant::exterior_odd;
          ring.degrees = degrees;
          ring.truncation = truncation;
          ring.coefficients = coefficients;
          return py::make_tuple(weyl::ring_degree(ring), weyl::ring_lefschetz(ring));
        },
        py::arg("variant"), py::arg("degrees"), py::arg("truncation"),
        py::arg("coefficients"));

  // ---- invariant suites ----
  m.def("run_verify_suite", [](const std::string& suite) {
    py::list out;
    for (const auto& r : run_verify_suite(suite)) {
      py::dict entry;
      entry["name"] = r.name;
      entry["residual"] = r.residual;
      entry["tolerance"] = r.tolerance;
      entry["pass"] = r.pass;
      out.append(entry);
    }
    return out;
  });
}
