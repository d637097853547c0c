// Command-line front end: verify | degree | apply | table | realize.
// Exit codes: 0 ok, 2 usage, 3 inconclusive estimate, 4 domain failure.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cohomap/degree.hpp"
#include "cohomap/io_json.hpp"
#include "cohomap/manifold.hpp"
#include "cohomap/sphere_cpm.hpp"
#include "cohomap/su3_maps.hpp"
#include "cohomap/verify.hpp"
#include "cohomap/weyl.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitDomain = 4;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

int cmd_verify(const std::string& suite) {
  std::vector<cohomap::CheckResult> results;
  try {
    results = cohomap::run_verify_suite(suite);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name
              << " residual=" << fmt17(r.residual)
              << " tolerance=" << fmt17(r.tolerance) << "\n";
  }
  std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  return all_pass ? kExitOk : 1;
}

struct DegreeArgs {
  std::string manifold;
  std::string map;
  long long samples = 200000;
  std::uint64_t seed = 42;
  double h = 1e-4;
  int workers = 0;
  std::string output;
  bool reproducible = false;
};

int cmd_degree(const DegreeArgs& args) {
  std::unique_ptr<cohomap::ManifoldModel> model;
  cohomap::PointMap map;
  try {
    model = cohomap::make_manifold(args.manifold);
    map = cohomap::make_point_map(cohomap::MapSpec::parse(args.map), *model);
    if (args.samples < 1000) {
      throw std::invalid_argument("estimate commands need --samples >= 1000");
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  cohomap::DegreeOptions opt;
  opt.samples = args.samples;
  opt.seed = args.seed;
  opt.h = args.h;
  opt.workers = args.workers;
  const auto est = cohomap::estimate_degree(map, *model, opt);

  cohomap::Json j = cohomap::degree_estimate_to_json(est);
  j["manifold"] = args.manifold;
  j["map"] = args.map;
  j["seed"] = args.seed;
  j["h"] = args.h;
  if (!args.reproducible) j["generated_at"] = timestamp();
  write_output(j.dump(2) + "\n", args.output);
  return est.accepted ? kExitOk : kExitInconclusive;
}

struct ApplyArgs {
  std::string map;
  std::string input;
  std::string output;
};

int cmd_apply(const ApplyArgs& args) {
  cohomap::MapSpec spec;
  try {
    spec = cohomap::MapSpec::parse(args.map);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  cohomap::Json parsed;
  try {
    std::ifstream in(args.input);
    if (!in) {
      std::cerr << "usage error: cannot open input file: " << args.input << "\n";
      return kExitUsage;
    }
    parsed = cohomap::Json::parse(in);
  } catch (const cohomap::Json::parse_error& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    cohomap::Json out;
    if (spec.kind == "psi" || spec.kind == "rho") {
      if (spec.kind == "psi" && spec.k % 2 == 0) {
        std::cerr << "usage error: psi needs odd k\n";
        return kExitUsage;
      }
      const cohomap::MatrixXc M = cohomap::matrix_from_json(parsed);
      if (M.rows() != 3) {
        std::cerr << "domain failure: psi/rho expect a 3x3 matrix\n";
        return kExitDomain;
      }
      const cohomap::Matrix3c B = M;
      out = cohomap::matrix_to_json(spec.kind == "psi" ? cohomap::psi(spec.k, B)
                                                       : cohomap::power_map(spec.k, B));
    } else if (spec.kind == "fold") {
      if (spec.k % 2 == 0) {
        std::cerr << "usage error: fold needs odd k\n";
        return kExitUsage;
      }
      out = cohomap::cvector_to_json(
          cohomap::cpm_fold(spec.k, cohomap::cvector_from_json(parsed)));
    } else {  // power
      out = cohomap::rvector_to_json(
          cohomap::sphere_power(spec.k, cohomap::rvector_from_json(parsed)));
    }
    write_output(out.dump(2) + "\n", args.output);
    return kExitOk;
  } catch (const std::domain_error& e) {
    std::cerr << "domain failure: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitUsage;
  }
}

struct TableArgs {
  std::vector<std::string> catalog_names;
  std::string weyl_range;
  std::string parities;
  std::vector<long long> js;
  bool j_even = false;
  long long numeric_samples = 0;
  std::uint64_t seed = 42;
  std::string output;
};

void table_row(std::ostream& os, const cohomap::weyl::CohomOneData& d, long long j,
               const std::string& numeric) {
  const auto cmp = cohomap::weyl::compare_degree(d, j);
  const long long Lf = cohomap::weyl::lefschetz_formula(d, j);
  const long long Lo = cohomap::weyl::lefschetz_oracle(d, j);
  std::vector<std::string> flags;
  if (cmp.discrepancy) flags.push_back("deg_table_conflict");
  if (Lf != Lo) flags.push_back("lefschetz_conflict");
  std::string flag_text;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i) flag_text += ';';
    flag_text += flags[i];
  }
  os << d.name << ',' << d.weyl_order << ',' << d.codim0 << ',' << d.codim1 << ','
     << j << ',' << d.fold_k(j) << ',' << cmp.formula << ',' << cmp.oracle << ','
     << numeric << ',' << Lf << ',' << Lo << ',' << flag_text << '\n';
}

int cmd_table(const TableArgs& args) {
  using cohomap::weyl::CohomOneData;
  using cohomap::weyl::Parity;

  std::vector<long long> js = args.js;
  if (args.j_even) js = {-6, -4, -2, 2, 4, 6};
  if (js.empty()) {
    std::cerr << "usage error: table needs --j or --j-even\n";
    return kExitUsage;
  }

  std::vector<CohomOneData> rows;
  try {
    for (const auto& name : args.catalog_names) {
      rows.push_back(cohomap::weyl::catalog_entry(name));
    }
    if (!args.weyl_range.empty()) {
      int lo = 0, hi = 0;
      const auto dots = args.weyl_range.find("..");
      if (dots == std::string::npos) {
        lo = hi = std::stoi(args.weyl_range);
      } else {
        lo = std::stoi(args.weyl_range.substr(0, dots));
        hi = std::stoi(args.weyl_range.substr(dots + 2));
      }
      std::vector<std::pair<Parity, Parity>> pairs;
      if (!args.parities.empty()) {
        const auto comma = args.parities.find(',');
        if (comma == std::string::npos) {
          throw std::invalid_argument("--parities needs the form odd,even");
        }
        auto parse_parity = [](const std::string& s) {
          if (s == "odd") return Parity::odd;
          if (s == "even") return Parity::even;
          throw std::invalid_argument("parity must be odd or even, got '" + s + "'");
        };
        pairs.emplace_back(parse_parity(args.parities.substr(0, comma)),
                           parse_parity(args.parities.substr(comma + 1)));
      } else {
        pairs = {{Parity::odd, Parity::odd},
                 {Parity::odd, Parity::even},
                 {Parity::even, Parity::odd},
                 {Parity::even, Parity::even}};
      }
      for (int W = lo; W <= hi; ++W) {
        if (W % 2 != 0) continue;
        for (auto [p0, p1] : pairs) {
          if (!cohomap::weyl::orientability_consistent(W, p0, p1)) continue;
          CohomOneData d;
          d.name = "grid";
          d.weyl_order = W;
          d.codim0 = p0 == Parity::odd ? 3 : 2;
          d.codim1 = p1 == Parity::odd ? 3 : 2;
          d.chi0 = p0 == Parity::odd ? 0 : 2;
          d.chi1 = p1 == Parity::odd ? 0 : 2;
          d.chiGH = 0;
          d.isotropy_equal = true;
          d.orientable = true;
          d.rank_equal = false;
          rows.push_back(d);
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (rows.empty()) {
    std::cerr << "usage error: table needs --catalog or --weyl\n";
    return kExitUsage;
  }

  std::ostringstream os;
  os << "example,weyl_order,codim0,codim1,j,k,deg_formula,deg_oracle,"
        "deg_numeric,L_formula,L_oracle,flags\n";
  for (const auto& d : rows) {
    for (long long j : js) {
      if (!cohomap::weyl::allowed_fold_params(d, j)) continue;
      std::string numeric;
      if (args.numeric_samples > 0 && d.name != "grid") {
        std::string manifold = d.name, kind;
        for (auto& ch : manifold) ch = static_cast<char>(std::tolower(ch));
        if (manifold == "su3") kind = "psi";
        else if (manifold[0] == 's') kind = "power";
        else if (manifold.rfind("cp", 0) == 0) kind = "fold";
        if (!kind.empty()) {
          const auto model = cohomap::make_manifold(manifold);
          cohomap::MapSpec spec{kind, d.fold_k(j)};
          cohomap::DegreeOptions opt;
          opt.samples = args.numeric_samples;
          opt.seed = args.seed;
          const auto est = cohomap::estimate_degree(
              cohomap::make_point_map(spec, *model), *model, opt);
          numeric = fmt17(est.mean);
        }
      }
      table_row(os, d, j, numeric);
    }
  }
  write_output(os.str(), args.output);
  return kExitOk;
}

int cmd_realize(long long d, const std::string& output, bool reproducible) {
  const auto plan = cohomap::realize_degree(d);
  cohomap::Json j;
  j["degree"] = d;
  switch (plan.kind) {
    case cohomap::RealizationPlan::Kind::realizable:
      j["realizable"] = "yes";
      j["m"] = plan.m;
      j["ell"] = plan.ell;
      j["composition"] = plan.describe();
      break;
    case cohomap::RealizationPlan::Kind::not_realizable:
      j["realizable"] = "not-realizable";
      break;
    case cohomap::RealizationPlan::Kind::zero_caveat:
      j["realizable"] = "zero-caveat";
      j["note"] = "the constant map has degree 0; the closed family covers nonzero degrees";
      break;
  }
  if (!reproducible) j["generated_at"] = timestamp();
  write_output(j.dump(2) + "\n", output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant selfmaps of cohomogeneity-one manifolds: "
               "degree and Lefschetz verification"};
  app.set_config("--config");
  bool reproducible = false;
  app.add_flag("--reproducible", reproducible,
               "suppress timestamps for byte-identical reruns");

  auto* verify = app.add_subcommand("verify", "run a module invariant suite");
  std::string suite;
  verify->add_option("suite", suite,
                     "halfangle | su3 | sphere | cpm | theory | all")
      ->required();

  auto* degree = app.add_subcommand("degree", "Monte-Carlo degree estimate");
  DegreeArgs dargs;
  degree->add_option("--manifold", dargs.manifold, "su3 | sN | cpM")->required();
  degree->add_option("--map", dargs.map, "psi:k | rho:k | power:k | fold:k")
      ->required();
  degree->add_option("--samples", dargs.samples, "sample count (>= 1000)");
  degree->add_option("--seed", dargs.seed, "RNG seed");
  degree->add_option("--step", dargs.h, "finite-difference step h");
  degree->add_option("--workers", dargs.workers,
                     "worker threads (0 = all cores; result is worker-independent)");
  degree->add_option("--output", dargs.output, "write JSON here instead of stdout");

  auto* apply = app.add_subcommand("apply", "apply a map to an encoded point");
  ApplyArgs aargs;
  apply->add_option("--map", aargs.map, "psi:k | rho:k | power:k | fold:k")
      ->required();
  apply->add_option("--input", aargs.input, "input JSON file")->required();
  apply->add_option("--output", aargs.output, "output file (default stdout)");

  auto* table = app.add_subcommand("table", "formula/oracle CSV tables");
  TableArgs targs;
  table->add_option("--catalog", targs.catalog_names,
                    "named catalog entries (SU3, S3, CP3, M7_1, ...)")
      ->delimiter(',');
  table->add_option("--weyl", targs.weyl_range, "Weyl order or range a..b");
  table->add_option("--parities", targs.parities, "codim parities, e.g. odd,even");
  table->add_option("--j", targs.js, "fold parameters")->delimiter(',');
  table->add_flag("--j-even", targs.j_even, "use j in {-6,-4,-2,2,4,6}");
  table->add_option("--numeric-samples", targs.numeric_samples,
                    "fill deg_numeric for catalog rows (slow)");
  table->add_option("--seed", targs.seed, "seed for --numeric-samples");
  table->add_option("--output", targs.output, "write CSV here instead of stdout");

  auto* realize = app.add_subcommand("realize", "degree realization plan for SU(3)");
  long long target_degree = 0;
  std::string realize_output;
  realize->add_option("degree", target_degree, "target degree")->required();
  realize->add_option("--output", realize_output, "write JSON here instead of stdout");

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  dargs.reproducible = reproducible;
  try {
    if (verify->parsed()) return cmd_verify(suite);
    if (degree->parsed()) return cmd_degree(dargs);
    if (apply->parsed()) return cmd_apply(aargs);
    if (table->parsed()) return cmd_table(targs);
    if (realize->parsed()) return cmd_realize(target_degree, realize_output, reproducible);
  } catch (const std::domain_error& e) {
    std::cerr << "domain failure: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
