#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "wzw/cache.hpp"
#include "wzw/modular.hpp"
#include "wzw/verify.hpp"

namespace wzw::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct GlobalOpts {
  double tolerance = 1e-8;
  std::string cache_path;
  std::uint64_t seed = 12345;
};

ordered_json record(const std::string& command, ordered_json inputs, ordered_json results) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  return j;
}

ordered_json complex_json(const Complex& z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json terms_json(const Decomposition& dec) {
  auto arr = ordered_json::array();
  for (const auto& [w, m] : dec.terms) {
    ordered_json t;
    t["weight"] = w;
    t["multiplicity"] = m;
    arr.push_back(std::move(t));
  }
  return arr;
}

ordered_json alcove_json(const FusionRing& ring) {
  auto arr = ordered_json::array();
  for (const auto& w : ring.alcove) arr.push_back(w);
  return arr;
}

void print_decomposition(std::ostream& out, const Decomposition& dec) {
  for (const auto& [w, m] : dec.terms) {
    out << std::setw(4) << m << "  " << format_weight(w) << "\n";
  }
  out << "total multiplicity: " << dec.total_multiplicity() << "\n";
}

std::string fmt_complex(const Complex& z) {
  std::ostringstream os;
  os << std::setprecision(10) << z.real() << (z.imag() < 0 ? "-" : "+")
     << std::setprecision(10) << std::abs(z.imag()) << "i";
  return os.str();
}

int run_verify_grid(const std::string& grid, const std::string& json_path, double tolerance,
                    std::uint64_t seed, std::ostream& out, std::ostream& err) {
  struct RingSpec { std::string alg; int kmax; };
  std::vector<std::string> theorem1_algs;
  std::vector<RingSpec> theorem2_rings, sigma_rings, oracle_rings;
  if (grid == "smoke") {
    theorem1_algs = {"A2"};
    theorem2_rings = {{"A2", 3}};
    sigma_rings = {{"A1", 4}, {"A2", 3}, {"C2", 3}, {"G2", 4}};
    oracle_rings = {{"A1", 3}, {"A2", 2}};
  } else if (grid == "default") {
    theorem1_algs = {"A2", "A3", "A4", "B3", "D5", "E6"};
    theorem2_rings = {{"A2", 4}, {"D5", 2}, {"E6", 3}};
    sigma_rings = {{"A1", 6}, {"A2", 6}, {"A3", 4}, {"A4", 4}, {"B2", 6}, {"B3", 4},
                   {"C2", 6}, {"C3", 4}, {"D4", 4}, {"D5", 3}, {"G2", 6}, {"F4", 4},
                   {"E6", 3}};
    oracle_rings = {{"A1", 6}, {"A2", 4}, {"A3", 3}, {"G2", 3}, {"E6", 3}};
  } else if (grid == "full") {
    theorem1_algs = {"A2", "A3", "A4", "B3", "D5", "E6"};
    theorem2_rings = {{"A2", 4}, {"D5", 2}, {"E6", 3}};
    sigma_rings = {{"A1", 6}, {"A2", 6}, {"A3", 6}, {"A4", 6}, {"B2", 6}, {"B3", 6},
                   {"C2", 6}, {"C3", 6}, {"D4", 6}, {"D5", 6}, {"G2", 12}, {"F4", 4},
                   {"E6", 4}};
    oracle_rings = {{"A1", 6}, {"A2", 4}, {"A3", 3}, {"G2", 3}, {"E6", 3}};
  } else {
    err << "error: unknown grid '" << grid << "' (smoke|default|full)\n";
    return 2;
  }

  std::vector<TheoremReport> reports;
  auto census_counts = ordered_json::array();
  for (const auto& alg : theorem1_algs) {
    SampleSpec spec;
    spec.seed = seed;
    if (alg == "E6") {
      spec.sample_pairs = 4;
      spec.random_max_label = 1;
      spec.forced_pairs = {{{0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 2, 0}},
                           {{0, 0, 0, 1, 0, 0}, {1, 0, 0, 0, 2, 0}}};
    } else if (alg == "A4" || alg == "D5") {
      spec.sample_pairs = 12;
      spec.random_max_label = 2;
    }
    reports.push_back(check_theorem1(root_data(alg), spec));
  }
  for (const auto& [alg, kmax] : theorem2_rings)
    for (int k = 1; k <= kmax; ++k)
      reports.push_back(check_theorem2(make_fusion_ring(root_data(alg), k)));
  for (const auto& [alg, kmax] : sigma_rings)
    for (int k = 1; k <= kmax; ++k) {
      auto md = make_modular_data(make_fusion_ring(root_data(alg), k), tolerance);
      reports.push_back(check_theorem3_4(md));
      auto census = vanishing_census(md);
      ordered_json cj;
      cj["algebra"] = census.algebra;
      cj["level"] = census.level;
      cj["alcove"] = census.alcove_size;
      cj["vanishing"] = census.vanishing_count();
      cj["accidental"] = census.accidental_count();
      census_counts.push_back(std::move(cj));
    }
  for (const auto& [alg, kmax] : oracle_rings)
    for (int k = 1; k <= kmax; ++k)
      reports.push_back(
          check_oracles(make_modular_data(make_fusion_ring(root_data(alg), k), tolerance)));

  bool all_pass = true;
  for (const auto& rep : reports) {
    out << rep.summary() << "\n";
    for (const auto& f : rep.failures) out << "    " << f << "\n";
    all_pass = all_pass && rep.pass();
  }
  out << (all_pass ? "all theorem checks passed" : "THEOREM CHECK FAILURES PRESENT") << "\n";

  if (!json_path.empty()) {
    ordered_json j;
    auto arr = ordered_json::array();
    for (const auto& rep : reports) {
      ordered_json r;
      r["theorem"] = rep.theorem;
      r["algebra"] = rep.algebra;
      if (rep.level >= 0) r["level"] = rep.level;
      r["cases"] = rep.cases;
      r["max_residual"] = rep.max_residual;
      r["failures"] = rep.failures;
      r["pass"] = rep.pass();
      arr.push_back(std::move(r));
    }
    ordered_json results;
    results["reports"] = std::move(arr);
    results["census"] = std::move(census_counts);
    results["all_pass"] = all_pass;
    ordered_json inputs;
    inputs["grid"] = grid;
    inputs["tolerance"] = tolerance;
    inputs["seed"] = seed;
    std::ofstream f(json_path);
    f << record("verify-theorems", std::move(inputs), std::move(results)).dump(2) << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact tensor and level-k fusion multiplicities for simple Lie algebras, "
               "with modular data and sum-rule checks"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--tolerance", g.tolerance, "numeric tolerance for modular checks");
  app.add_option("--cache-dir", g.cache_path, "weight-system cache directory");
  app.add_option("--seed", g.seed, "seed for sampled verification grids");

  std::string alg, lhs, rhs, weight, method = "rs", grid = "default", json_path;
  int level = 0;
  bool as_json = false, as_csv = false, diagnostics = false;

  auto add_alg = [&](CLI::App* c) { c->add_option("--alg", alg, "algebra, e.g. A2, D5, E6")->required(); };

  auto* c_tensor = app.add_subcommand("tensor", "classical tensor product decomposition");
  add_alg(c_tensor);
  c_tensor->add_option("--lhs", lhs)->required();
  c_tensor->add_option("--rhs", rhs)->required();
  c_tensor->add_flag("--diagnostics", diagnostics, "report shifted-weight bookkeeping");
  c_tensor->add_flag("--json", as_json);

  auto* c_fuse = app.add_subcommand("fuse", "level-k fusion product");
  add_alg(c_fuse);
  c_fuse->add_option("--level", level)->required();
  c_fuse->add_option("--lhs", lhs)->required();
  c_fuse->add_option("--rhs", rhs)->required();
  c_fuse->add_option("--method", method, "rs|kw|verlinde")->check(CLI::IsMember({"rs", "kw", "verlinde"}));
  c_fuse->add_flag("--diagnostics", diagnostics);
  c_fuse->add_flag("--json", as_json);

  auto* c_path = app.add_subcommand("path-matrix", "sum of all fusion matrices");
  add_alg(c_path);
  c_path->add_option("--level", level)->required();
  c_path->add_flag("--json", as_json);

  auto* c_smat = app.add_subcommand("smatrix", "modular S matrix and quantum dimensions");
  add_alg(c_smat);
  c_smat->add_option("--level", level)->required();
  c_smat->add_flag("--json", as_json);
  c_smat->add_flag("--csv", as_csv);

  auto* c_sigma = app.add_subcommand("sigma", "column sums Sigma(kappa) with rep types");
  add_alg(c_sigma);
  c_sigma->add_option("--level", level)->required();
  c_sigma->add_flag("--json", as_json);

  auto* c_fs = app.add_subcommand("fs-indicator", "Frobenius-Schur indicators over the alcove");
  add_alg(c_fs);
  c_fs->add_option("--level", level)->required();
  c_fs->add_flag("--json", as_json);

  auto* c_rep = app.add_subcommand("rep-type", "real/complex/quaternionic classification");
  add_alg(c_rep);
  c_rep->add_option("--weight", weight)->required();
  c_rep->add_flag("--json", as_json);

  auto* c_auto = app.add_subcommand("automorphisms", "center automorphisms: orbit and grading");
  add_alg(c_auto);
  c_auto->add_option("--level", level)->required();
  c_auto->add_option("--weight", weight)->required();
  c_auto->add_flag("--json", as_json);

  auto* c_census = app.add_subcommand("census", "vanishing census of Sigma over the alcove");
  add_alg(c_census);
  c_census->add_option("--level", level)->required();
  c_census->add_flag("--json", as_json);

  auto* c_verify = app.add_subcommand("verify-theorems", "run the theorem suites");
  c_verify->add_option("--grid", grid, "smoke|default|full");
  c_verify->add_option("--json", json_path, "write a JSON report here");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  if (!g.cache_path.empty()) set_cache_dir(g.cache_path);

  try {
    if (c_verify->parsed())
      return run_verify_grid(grid, json_path, g.tolerance, g.seed, out, err);

    const RootData& rd = root_data(alg);
    ordered_json inputs;
    inputs["algebra"] = rd.name();

    if (c_tensor->parsed()) {
      Weight a = parse_weight(lhs), b = parse_weight(rhs);
      auto dec = tensor_decompose(rd, a, b, diagnostics);
      if (as_json) {
        inputs["lhs"] = a;
        inputs["rhs"] = b;
        ordered_json res;
        res["terms"] = terms_json(dec);
        res["total_multiplicity"] = dec.total_multiplicity();
        if (diagnostics) {
          ordered_json d;
          d["phi"] = dec.diag.phi;
          d["psi"] = dec.diag.psi;
          d["phi_nonneg"] = dec.diag.phi_nonneg;
          d["psi_nonpos"] = dec.diag.psi_nonpos;
          d["phi0_plus"] = dec.diag.phi0_plus;
          d["psi0_minus"] = dec.diag.psi0_minus;
          res["diagnostics"] = std::move(d);
        }
        out << record("tensor", std::move(inputs), std::move(res)).dump(2) << "\n";
      } else {
        print_decomposition(out, dec);
        if (diagnostics)
          out << "phi=" << dec.diag.phi << " psi=" << dec.diag.psi
              << " phi>=0=" << dec.diag.phi_nonneg << " psi<=0=" << dec.diag.psi_nonpos
              << " phi0+=" << dec.diag.phi0_plus << " psi0-=" << dec.diag.psi0_minus << "\n";
      }
      return 0;
    }

    if (c_fuse->parsed()) {
      Weight a = parse_weight(lhs), b = parse_weight(rhs);
      auto ring = make_fusion_ring(rd, level);
      Decomposition dec;
      if (method == "rs")
        dec = fusion_decompose(ring, a, b, diagnostics);
      else if (method == "kw")
        dec = kac_walton(ring, a, b);
      else
        dec = verlinde(make_modular_data(ring, g.tolerance), a, b);
      if (as_json) {
        inputs["level"] = level;
        inputs["lhs"] = a;
        inputs["rhs"] = b;
        inputs["method"] = method;
        ordered_json res;
        res["terms"] = terms_json(dec);
        res["total_multiplicity"] = dec.total_multiplicity();
        out << record("fuse", std::move(inputs), std::move(res)).dump(2) << "\n";
      } else {
        print_decomposition(out, dec);
      }
      return 0;
    }

    auto ring_or_weight_inputs = [&](ordered_json& in) {
      in["level"] = level;
    };

    if (c_path->parsed()) {
      auto ring = make_fusion_ring(rd, level);
      auto pm = path_matrix(ring);
      if (as_json) {
        ring_or_weight_inputs(inputs);
        ordered_json res;
        res["alcove"] = alcove_json(ring);
        res["matrix"] = pm.x;
        out << record("path-matrix", std::move(inputs), std::move(res)).dump(2) << "\n";
      } else {
        out << "alcove (" << ring.size() << "):";
        for (const auto& w : ring.alcove) out << " " << format_weight(w);
        out << "\n";
        for (const auto& row : pm.x) {
          for (auto v : row) out << std::setw(4) << v;
          out << "\n";
        }
      }
      return 0;
    }

    if (c_smat->parsed()) {
      auto md = make_modular_data(make_fusion_ring(rd, level), g.tolerance);
      if (as_json) {
        ring_or_weight_inputs(inputs);
        inputs["tolerance"] = g.tolerance;
        ordered_json res;
        res["alcove"] = alcove_json(md.ring);
        auto sj = ordered_json::array();
        for (const auto& row : md.s) {
          auto rj = ordered_json::array();
          for (const auto& z : row) rj.push_back(complex_json(z));
          sj.push_back(std::move(rj));
        }
        res["s"] = std::move(sj);
        auto tj = ordered_json::array();
        for (const auto& z : md.t_diag) tj.push_back(complex_json(z));
        res["t_diag"] = std::move(tj);
        res["qdim"] = md.qdim;
        res["s1"] = md.s1;
        res["s2"] = md.s2;
        res["central_charge"] = md.central_charge;
        out << record("smatrix", std::move(inputs), std::move(res)).dump(2) << "\n";
      } else if (as_csv) {
        for (int i = 0; i < md.size(); ++i) {
          out << format_weight(md.ring.alcove[i]);
          for (const auto& z : md.s[i]) out << "," << fmt_complex(z);
          out << "\n";
        }
      } else {
        out << "alcove (" << md.size() << "):";
        for (const auto& w : md.ring.alcove) out << " " << format_weight(w);
        out << "\nquantum dimensions:";
        for (double d : md.qdim) out << " " << std::setprecision(10) << d;
        out << "\ns1=" << md.s1 << " s2=" << md.s2 << " c=" << md.central_charge << "\nS:\n";
        for (const auto& row : md.s) {
          for (const auto& z : row) out << std::setw(24) << fmt_complex(z);
          out << "\n";
        }
      }
      return 0;
    }

    if (c_sigma->parsed()) {
      auto md = make_modular_data(make_fusion_ring(rd, level), g.tolerance);
      auto census = vanishing_census(md);
      if (as_json) {
        ring_or_weight_inputs(inputs);
        ordered_json res;
        auto arr = ordered_json::array();
        for (const auto& e : census.entries) {
          ordered_json ej;
          ej["weight"] = e.kappa;
          ej["type"] = rep_type_name(e.type);
          ej["sigma"] = complex_json(sigma_sum(md, e.kappa));
          ej["abs"] = e.abs_sigma;
          ej["vanished"] = e.vanished;
          arr.push_back(std::move(ej));
        }
        res["sums"] = std::move(arr);
        out << record("sigma", std::move(inputs), std::move(res)).dump(2) << "\n";
      } else {
        for (const auto& e : census.entries)
          out << format_weight(e.kappa) << "  " << std::setw(12) << rep_type_name(e.type) << "  "
              << fmt_complex(sigma_sum(md, e.kappa)) << (e.vanished ? "  (vanishes)" : "")
              << "\n";
      }
      return 0;
    }

    if (c_fs->parsed()) {
      auto md = make_modular_data(make_fusion_ring(rd, level), g.tolerance);
      if (as_json) {
        ring_or_weight_inputs(inputs);
        ordered_json res;
        auto arr = ordered_json::array();
        for (const auto& w : md.ring.alcove) {
          ordered_json ej;
          ej["weight"] = w;
          ej["indicator"] = frobenius_schur(md, w);
          ej["classical_type"] = rep_type_name(rep_type(rd, w));
          arr.push_back(std::move(ej));
        }
        res["indicators"] = std::move(arr);
        out << record("fs-indicator", std::move(inputs), std::move(res)).dump(2) << "\n";
      } else {
        for (const auto& w : md.ring.alcove)
          out << format_weight(w) << "  I=" << std::setw(2) << frobenius_schur(md, w)
              << "  classical " << rep_type_name(rep_type(rd, w)) << "\n";
      }
      return 0;
    }

    if (c_rep->parsed()) {
      Weight w = parse_weight(weight);
      check_rank(rd, w);
      if (!is_dominant(w)) throw std::invalid_argument("weight must be dominant");
      auto t = rep_type(rd, w);
      if (as_json) {
        inputs["weight"] = w;
        ordered_json res;
        res["type"] = rep_type_name(t);
        res["conjugate"] = conjugate(rd, w);
        out << record("rep-type", std::move(inputs), std::move(res)).dump(2) << "\n";
      } else {
        out << rep_type_name(t) << " (conjugate " << format_weight(conjugate(rd, w)) << ")\n";
      }
      return 0;
    }

    if (c_auto->parsed()) {
      Weight w = parse_weight(weight);
      check_rank(rd, w);
      if (!is_dominant(w)) throw std::invalid_argument("weight must be dominant");
      if (level_of(rd, w) > level)
        throw std::invalid_argument("weight has level above " + std::to_string(level));
      auto auts = automorphisms(rd);
      if (as_json) {
        inputs["level"] = level;
        inputs["weight"] = w;
        ordered_json res;
        auto arr = ordered_json::array();
        for (const auto& a : auts) {
          ordered_json aj;
          aj["name"] = a.name;
          aj["order"] = a.order;
          aj["grading_modulus"] = a.grading_modulus;
          aj["tau"] = a.tau(rd, w);
          auto orbit = ordered_json::array();
          Weight cur = w;
          for (int i = 0; i < a.order; ++i) {
            orbit.push_back(cur);
            cur = a.apply(rd, cur, level);
          }
          aj["orbit"] = std::move(orbit);
          arr.push_back(std::move(aj));
        }
        res["automorphisms"] = std::move(arr);
        out << record("automorphisms", std::move(inputs), std::move(res)).dump(2) << "\n";
      } else {
        if (auts.empty()) out << "no non-trivial automorphisms for " << rd.name() << "\n";
        for (const auto& a : auts) {
          out << a.name << " (order " << a.order << ", Z_" << a.grading_modulus
              << " grading): tau=" << a.tau(rd, w) << ", orbit:";
          Weight cur = w;
          for (int i = 0; i < a.order; ++i) {
            out << " " << format_weight(cur);
            cur = a.apply(rd, cur, level);
          }
          out << "\n";
        }
      }
      return 0;
    }

    if (c_census->parsed()) {
      auto md = make_modular_data(make_fusion_ring(rd, level), g.tolerance);
      auto census = vanishing_census(md);
      if (as_json) {
        ring_or_weight_inputs(inputs);
        ordered_json res;
        res["alcove_size"] = census.alcove_size;
        res["threshold"] = census.threshold;
        auto arr = ordered_json::array();
        for (const auto& e : census.entries) {
          ordered_json ej;
          ej["weight"] = e.kappa;
          ej["type"] = rep_type_name(e.type);
          ej["abs_sigma"] = e.abs_sigma;
          ej["vanished"] = e.vanished;
          ej["explained_by"] = e.explained_by;
          arr.push_back(std::move(ej));
        }
        res["entries"] = std::move(arr);
        res["vanishing_count"] = census.vanishing_count();
        res["accidental_count"] = census.accidental_count();
        out << record("census", std::move(inputs), std::move(res)).dump(2) << "\n";
      } else {
        for (const auto& e : census.entries)
          out << format_weight(e.kappa) << "  " << std::setw(12) << rep_type_name(e.type)
              << "  |Sigma|=" << std::scientific << std::setprecision(3) << e.abs_sigma
              << std::defaultfloat << "  "
              << (e.vanished ? (e.explained_by.empty() ? "vanishes" : e.explained_by)
                             : "nonzero")
              << "\n";
        out << "vanishing: " << census.vanishing_count() << " of " << census.alcove_size
            << ", accidental: " << census.accidental_count() << "\n";
      }
      return 0;
    }

    err << "error: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 70;
  }
}

}  // namespace wzw::cli
