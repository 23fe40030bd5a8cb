// Command-line front end: analyze, deform, monodromy, handles, verify, verify-folds.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mixsing/error.hpp"
#include "mixsing/report.hpp"

using namespace mixsing;

namespace {

struct Global {
  bool json = false;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  int seeds = 200;
  double epsilon = 0;
  double delta = 0;
  double delta_t = 0;
  int threads = 0;
  bool no_sweep = false;
  double cluster_tol = 1e-6;
};

struct PolyArgs {
  std::string f;
  std::string g;
  std::string t;
  std::string gamma;
  std::string gamma1;
  std::string gamma2;
};

void add_poly_options(CLI::App* cmd, PolyArgs& a, bool require_f) {
  auto* opt = cmd->add_option("--f", a.f, "holomorphic f, e.g. \"z1^3+z2^3\"");
  if (require_f) opt->required();
  cmd->add_option("--g", a.g, "holomorphic g (omit for n = 0)");
  cmd->add_option("--t", a.t, "deformation parameter (default 1/20)");
  cmd->add_option("--gamma", a.gamma, "linear-g coefficient (default 1)");
  cmd->add_option("--gamma1", a.gamma1, "generic-g coefficient of the z1 power (default 1)");
  cmd->add_option("--gamma2", a.gamma2, "generic-g coefficient of the z2 power (default 1)");
}

GaussianRational parse_constant(const std::string& text) {
  MixedPolynomial p = parse(text);
  if (!p.is_constant()) throw DomainError("expected a constant, got '" + text + "'");
  return p.is_zero() ? GaussianRational() : p.terms()[0].coeff;
}

DeformationOptions options_of(const PolyArgs& a) {
  DeformationOptions o;
  if (!a.t.empty()) {
    GaussianRational t = parse_constant(a.t);
    if (!t.is_real()) throw DomainError("t must be real");
    o.t = t.re();
  }
  if (!a.gamma.empty()) o.gamma = parse_constant(a.gamma);
  if (!a.gamma1.empty()) o.gamma1 = parse_constant(a.gamma1);
  if (!a.gamma2.empty()) o.gamma2 = parse_constant(a.gamma2);
  return o;
}

DeformationSpec spec_of(const PolyArgs& a) {
  return make_deformation(parse(a.f), a.g.empty() ? MixedPolynomial() : parse(a.g), options_of(a));
}

NumericConfig numeric_of(const Global& g) {
  NumericConfig c;
  c.seeds = g.seeds;
  c.seed = g.seed;
  c.accept_tol = g.tol;
  c.cluster_tol = g.cluster_tol;
  c.threads = g.threads;
  c.sweep = !g.no_sweep;
  if (g.epsilon > 0) c.epsilon = g.epsilon;
  if (g.delta > 0) c.delta = g.delta;
  if (g.delta_t > 0) c.delta_t = g.delta_t;
  return c;
}

void emit(const Global& g, const Json& j) {
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render_table(j);
  }
}

int emit_checks(const Global& g, const std::vector<Check>& checks, Json extra = {}) {
  bool all = true;
  Json list = Json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  if (g.json) {
    Json out{{"status", all ? "PASS" : "FAIL"}, {"checks", list}};
    if (!extra.is_null()) out["details"] = extra;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
    }
  }
  return all ? kExitOk : kExitInconsistent;
}

struct LinkArgs {
  std::int64_t p = 0, q = 0, m = 0, n = -1;
};

void add_link_options(CLI::App* cmd, LinkArgs& l, PolyArgs& a) {
  cmd->add_option("--p", l.p, "weight p");
  cmd->add_option("--q", l.q, "weight q");
  cmd->add_option("--m", l.m, "branches of f");
  cmd->add_option("--n", l.n, "branches of g");
  add_poly_options(cmd, a, false);
}

SeifertLinkData link_of(const LinkArgs& l, const PolyArgs& a) {
  if (!a.f.empty()) return spec_of(a).link;
  if (l.p < 1 || l.q < 1 || l.m < 1 || l.n < 0) throw DomainError("give --f [--g] or all of --p --q --m --n");
  if (std::gcd(l.p, l.q) != 1 || l.m <= l.n) throw DomainError("need gcd(p, q) = 1 and m > n >= 0");
  SeifertLinkData s;
  s.p = l.p;
  s.q = l.q;
  s.m = l.m;
  s.n = l.n;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Round-handle and monodromy analysis of f conj(g) deformations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file with defaults for the global options");

  Global g;
  app.add_flag("--json", g.json, "print JSON instead of a table");
  app.add_option("--seed", g.seed, "random seed for numeric searches");
  app.add_option("--tol", g.tol, "acceptance tolerance for fold points");
  app.add_option("--seeds", g.seeds, "random starts for the fold search");
  app.add_option("--epsilon", g.epsilon, "Milnor-ball radius (default: from coefficient scale)");
  app.add_option("--delta", g.delta, "target disk radius to validate");
  app.add_option("--delta-t", g.delta_t, "inner disk radius to validate");
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
  app.add_flag("--no-sweep", g.no_sweep, "skip the deterministic orbit-space sweep");
  app.add_option("--cluster-tol", g.cluster_tol, "relative S^1-orbit clustering tolerance");

  PolyArgs analyze_args;
  bool analyze_numeric = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "full report for f conj(g)");
  add_poly_options(analyze_cmd, analyze_args, true);
  analyze_cmd->add_flag("--numeric", analyze_numeric, "add the numeric fold count as a third ell path");

  PolyArgs deform_args;
  bool deform_probe = false;
  auto* deform_cmd = app.add_subcommand("deform", "assemble F_t and optionally probe genericity");
  add_poly_options(deform_cmd, deform_args, true);
  deform_cmd->add_flag("--probe", deform_probe, "run the genericity probe (linear g only)");

  LinkArgs mono_link;
  PolyArgs mono_args;
  auto* mono_cmd = app.add_subcommand("monodromy", "Delta_0, Delta_1, Delta_* by stage");
  add_link_options(mono_cmd, mono_link, mono_args);

  LinkArgs handle_link;
  PolyArgs handle_args;
  auto* handles_cmd = app.add_subcommand("handles", "round-handle decomposition and fiber ledger");
  add_link_options(handles_cmd, handle_link, handle_args);

  std::int64_t grid_max_m = 6, grid_max_p = 5, example_m = 3;
  bool example1 = false, folds = false;
  PolyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run identity checks");
  verify_cmd->add_option("--grid-max-m", grid_max_m, "largest m in the identity grid");
  verify_cmd->add_option("--grid-max-p", grid_max_p, "largest p in the identity grid");
  verify_cmd->add_flag("--example1", example1, "check f = z1^m + z2^m, g = z1 + 2 z2");
  verify_cmd->add_option("--m", example_m, "m for --example1");
  verify_cmd->add_flag("--folds", folds, "numeric fold count for --f/--g");
  add_poly_options(verify_cmd, verify_args, false);

  PolyArgs fold_args;
  std::string csv_path;
  auto* folds_cmd = app.add_subcommand("verify-folds", "numeric fold orbits of F_t");
  add_poly_options(folds_cmd, fold_args, true);
  folds_cmd->add_option("--csv", csv_path, "write critical-value radii as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*analyze_cmd) {
      AnalysisInput in{analyze_args.f, analyze_args.g, options_of(analyze_args), analyze_numeric, numeric_of(g)};
      AnalysisReport rep = analyze(in);
      emit(g, rep.json);
      return rep.exit_code();
    }
    if (*deform_cmd) {
      DeformationSpec spec = spec_of(deform_args);
      MixedPolynomial ft = assemble(spec);
      Json out = to_json(spec);
      out["F_t"] = to_string(ft);
      if (auto w = detect_weights(ft)) {
        out["weights"] = to_json(*w);
      } else if (auto polar = detect_polar(ft)) {
        out["weights"] = {{"polar_weight", polar->weight}, {"d_p", polar->degree}, {"radial", "none"}};
      }
      LinkCounts after = deformed_link_counts(spec);
      out["deformed_link"] = {{"positive", after.positive}, {"negative", after.negative}};
      int code = kExitOk;
      if (deform_probe) {
        GenericityReport probe = genericity_probe(spec, g.seeds, numeric_of(g));
        out["genericity"] = to_json(probe);
        if (probe.verdict == GenericityVerdict::inconclusive) code = kExitInconclusive;
      }
      emit(g, out);
      return code;
    }
    if (*mono_cmd) {
      SeifertLinkData s = link_of(mono_link, mono_args);
      Json out{{"p", s.p}, {"q", s.q}, {"m", s.m}, {"n", s.n}};
      out.update(monodromy_json(s.p, s.q, s.m, s.n));
      emit(g, out);
      return out["paths_agree"].get<bool>() ? kExitOk : kExitInconsistent;
    }
    if (*handles_cmd) {
      SeifertLinkData s = link_of(handle_link, handle_args);
      HandleDecomposition h = build(s);
      Json out{{"p", s.p}, {"q", s.q}, {"m", s.m}, {"n", s.n}};
      out.update(to_json(h));
      GenusReport gr = genus_report(h);
      out["genus"] = gr.genus;
      out["boundary_circles"] = gr.boundary;
      auto problems = check_ledger(h);
      out["ledger_problems"] = problems;
      emit(g, out);
      return problems.empty() ? kExitOk : kExitInconsistent;
    }
    if (*verify_cmd) {
      std::vector<Check> checks;
      Json extra;
      if (example1) {
        checks = verify_example1(example_m);
      } else if (folds) {
        if (verify_args.f.empty()) throw DomainError("--folds needs --f");
        FoldOrbitReport r;
        checks = verify_folds(spec_of(verify_args), numeric_of(g), &r);
        extra = to_json(r);
        if (r.verdict == FoldVerdict::inconclusive) {
          emit_checks(g, checks, extra);
          return kExitInconclusive;
        }
      } else {
        checks = verify_grid(grid_max_m, grid_max_p);
      }
      return emit_checks(g, checks, extra);
    }
    if (*folds_cmd) {
      DeformationSpec spec = spec_of(fold_args);
      FoldOrbitReport r = find_fold_orbits(assemble(spec), numeric_of(g));
      Json out = to_json(r);
      out["predicted_ell"] = spec.link.n;
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw DomainError("cannot write " + csv_path);
        csv << "circle,radius,orbits\n";
        csv.precision(17);
        for (std::size_t i = 0; i < r.circles.size(); ++i) {
          csv << i << "," << r.circles[i].radius << "," << r.circles[i].orbits << "\n";
        }
      }
      emit(g, out);
      if (r.verdict == FoldVerdict::inconclusive) return kExitInconclusive;
      if (r.verdict == FoldVerdict::degenerate) return kExitInconclusive;
      return r.orbit_count == spec.link.n ? kExitOk : kExitInconsistent;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
