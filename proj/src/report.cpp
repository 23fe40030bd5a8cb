#include "mixsing/report.hpp"

#include <sstream>

#include "mixsing/error.hpp"

namespace mixsing {

namespace {

// Adding 0.0 maps -0.0 to 0.0, so equal values print identically.
double unsigned_zero(double x) { return x + 0.0; }

Json complex_json(std::complex<double> c) { return Json::array({unsigned_zero(c.real()), unsigned_zero(c.imag())}); }

Json complex_list(const std::vector<std::complex<double>>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(complex_json(c));
  return out;
}

Json point_json(const Point& z) { return Json::array({complex_json(z[0]), complex_json(z[1])}); }

MixedPolynomial branch_product(std::int64_t p, std::int64_t q, std::int64_t first, std::int64_t count) {
  MixedPolynomial out = MixedPolynomial::constant(1);
  for (std::int64_t j = first; j < first + count; ++j) {
    out *= MixedPolynomial::monomial(1, {p, 0}) + MixedPolynomial::monomial(GaussianRational(static_cast<long>(j)), {0, q});
  }
  return out;
}

Check check(std::string name, bool ok, std::string detail = {}) { return {std::move(name), ok, std::move(detail)}; }

std::string label(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n) {
  std::ostringstream os;
  os << "(p,q,m,n)=(" << p << "," << q << "," << m << "," << n << ")";
  return os.str();
}

}  // namespace

Json to_json(const WeightData& w) {
  return Json{{"polar_weight", w.polar_weight}, {"d_p", w.d_p},       {"radial_weight", w.radial_weight},
              {"d_r", w.d_r},                   {"ambiguous", w.ambiguous}};
}

Json to_json(const CyclicPoly& c) {
  Json out = Json::array();
  for (const auto& [k, e] : c.factors()) out.push_back({k, e});
  return out;
}

Json to_json(const HandleDecomposition& h) {
  Json pieces = Json::array();
  pieces.push_back({{"id", h.ball_piece.id}, {"kind", "ball"}});
  for (const auto& t : h.solid_tori) pieces.push_back({{"id", t.id}, {"kind", "solid_torus"}});
  Json handles = Json::array();
  for (const auto& r : h.round_handles) {
    handles.push_back({{"index", r.index}, {"d_p", r.d_p}, {"joins", {r.joins_a, r.joins_b}}});
  }
  Json stages = Json::array();
  for (const auto& s : h.stages) {
    Json row{{"index", s.index}, {"chi", s.chi}, {"components", s.components}, {"boundary_circles", s.boundary_circles}};
    if (s.surgery) {
      row["surgery"] = {{"disks_removed", s.surgery->disks_removed}, {"annuli_glued", s.surgery->annuli_glued}};
    }
    stages.push_back(row);
  }
  return Json{{"pieces", pieces}, {"handles", handles}, {"stages", stages}};
}

Json to_json(const FoldOrbitReport& r) {
  Json orbits = Json::array();
  for (const auto& o : r.orbits) {
    orbits.push_back({{"point", point_json(o.point)},
                      {"critical_value", o.critical_value},
                      {"residual", o.residual},
                      {"hits", o.hits},
                      {"morse", to_string(o.morse.verdict)},
                      {"morse_index", o.morse.index},
                      {"hessian_eigenvalues", o.morse.eigenvalues}});
  }
  Json circles = Json::array();
  for (const auto& c : r.circles) circles.push_back({{"radius", c.radius}, {"orbits", c.orbits}});
  Json out{{"verdict", to_string(r.verdict)},
           {"reason", r.reason},
           {"epsilon", r.epsilon},
           {"orbit_count", r.orbit_count},
           {"radii", r.radii()},
           {"circles", circles},
           {"residual", r.residual},
           {"morse_balance", r.morse_balance},
           {"orbits", orbits},
           {"seed_stats",
            {{"seeds", r.stats.seeds},
             {"converged", r.stats.converged},
             {"converged_fraction", r.stats.converged_fraction()},
             {"outside_ball", r.stats.outside_ball},
             {"near_origin", r.stats.near_origin},
             {"not_converged", r.stats.not_converged},
             {"sweep_candidates", r.stats.sweep_candidates},
             {"sweep_converged", r.stats.sweep_converged}}}};
  if (r.delta_t_bound) out["delta_t_bound"] = *r.delta_t_bound;
  out["radii_config_ok"] = r.radii_config_ok;
  return out;
}

Json to_json(const GenericityReport& r) {
  Json points = Json::array();
  for (const auto& p : r.points) {
    points.push_back({{"point", point_json(p.point)},
                      {"z", complex_json(p.z)},
                      {"r", p.r},
                      {"alpha_alignment", complex_json(p.alpha_alignment)},
                      {"alpha_oka", complex_json(p.alpha_oka)},
                      {"excluded_value", complex_json(p.excluded_value)},
                      {"margin", p.margin},
                      {"oka_consistency", p.oka_consistency}});
  }
  Json out{{"verdict", to_string(r.verdict)}, {"fold_verdict", to_string(r.fold_verdict)}, {"points", points}};
  if (!r.points.empty()) out["margin"] = r.margin;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json to_json(const DeformationSpec& d) {
  Json out{{"f", to_string(d.f)}, {"g", to_string(d.g)}, {"t", rational_to_string(d.t)}, {"h_case", to_string(d.h_case)}};
  if (d.h_case == HCase::linear_g) {
    out["gamma"] = d.gamma.to_string();
  } else {
    out["gamma1"] = d.gamma1.to_string();
    out["gamma2"] = d.gamma2.to_string();
  }
  out["h"] = to_string(perturbation(d));
  return out;
}

Json seifert_json(const SeifertLinkData& s) {
  const Degrees deg = degrees(s);
  const HandleDecomposition h = build(s);
  const GenusReport gr = genus_report(h);
  return Json{{"p", s.p},
              {"q", s.q},
              {"m", s.m},
              {"n", s.n},
              {"d_p", deg.d_p},
              {"d_r", deg.d_r},
              {"ell", ell_from_degrees(deg.d_p, deg.d_r, s.p, s.q)},
              {"chi_base", euler_characteristic_base(s.p, s.q, s.m - s.n)},
              {"chi_total", euler_characteristic_total(s)},
              {"chi_paper_literal", chi_paper_literal(s)},
              {"boundary_circles", gr.boundary},
              {"genus", gr.genus},
              {"alphas", complex_list(s.alphas)},
              {"betas", complex_list(s.betas)}};
}

Json monodromy_json(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n) {
  const CyclicPoly h0 = delta_star_h0(p, q, m, n);
  const std::int64_t d_p = p * q * (m - n);
  Json stages = Json::array();
  CyclicPoly cur = h0;
  stages.push_back(to_json(cur));
  for (std::int64_t i = 1; i <= n; ++i) {
    cur = lemma6_step(cur, d_p);
    stages.push_back(to_json(cur));
  }
  const CyclicPoly total = theorem2_total(p, q, m, n);
  const CyclicPoly closed = theorem2_closed_form(p, q, m, n);
  const CyclicPoly delta1 = total * CyclicPoly::cyclic(1);
  return Json{{"delta1_base", to_json(delta1_base(p, q, m - n))},
              {"delta0_h0", to_json(delta0_h0(n))},
              {"delta_star_h0", to_json(h0)},
              {"lemma6_stages", stages},
              {"delta_star", to_json(total)},
              {"delta_star_text", total.to_string()},
              {"paths_agree", cur == total && total == closed},
              {"delta1_coeffs", expand(delta1)},
              {"coeff_order", "ascending"}};
}

int AnalysisReport::exit_code() const {
  if (!consistent) return kExitInconsistent;
  if (numeric_inconclusive) return kExitInconclusive;
  return kExitOk;
}

AnalysisReport analyze(const AnalysisInput& in) {
  const MixedPolynomial f = parse(in.f);
  const MixedPolynomial g = in.g.empty() ? MixedPolynomial() : parse(in.g);
  const DeformationSpec spec = make_deformation(f, g, in.options);
  const SeifertLinkData& s = spec.link;
  const MixedPolynomial product = g.is_zero() ? f : f * conjugate(g);
  auto weights = detect_weights(product);
  if (!weights) throw DomainError("f conj(g) is not polar and radial weighted homogeneous");

  AnalysisReport rep;
  Json issues = Json::array();
  const Degrees deg = degrees(s);
  if (weights->d_p != deg.d_p || weights->d_r != deg.d_r) {
    issues.push_back("detected degrees differ from pq(m-n), pq(m+n)");
  }

  Json ell{{"link_count", nullptr}, {"degree_formula", nullptr}};
  std::optional<std::int64_t> value;
  auto record = [&](const char* key, std::int64_t v) {
    ell[key] = v;
    if (value && *value != v) issues.push_back(std::string("ell path '") + key + "' disagrees");
    if (!value) value = v;
  };
  Json notes = Json::array();
  const LinkCounts after = deformed_link_counts(spec);
  if (sgn(spec.t) == 0) {
    notes.push_back("t = 0: F_t is undeformed, link-count path skipped");
  } else {
    try {
      record("link_count", ell_from_links(link_counts(s), after));
    } catch (const DomainError& e) {
      issues.push_back(std::string("link-count path: ") + e.what());
    }
  }
  try {
    record("degree_formula", ell_from_degrees(weights->d_p, weights->d_r, s.p, s.q));
  } catch (const DomainError& e) {
    issues.push_back(std::string("degree path: ") + e.what());
  }

  const MixedPolynomial ft = assemble(spec);
  std::optional<FoldOrbitReport> folds;
  if (in.numeric) {
    folds = find_fold_orbits(ft, in.numeric_config);
    if (folds->verdict == FoldVerdict::count) {
      record("numeric", folds->orbit_count);
    } else {
      ell["numeric"] = nullptr;
      rep.numeric_inconclusive = true;
    }
  }
  if (value) ell["value"] = *value;

  const HandleDecomposition handles = build(s);
  const Json ledger = to_json(handles);
  for (const auto& problem : check_ledger(handles)) issues.push_back("ledger: " + problem);
  Json mono = monodromy_json(s.p, s.q, s.m, s.n);
  if (!mono["paths_agree"].get<bool>()) issues.push_back("stepwise and closed-form delta_star differ");
  const std::int64_t delta1_degree = static_cast<std::int64_t>(mono["delta1_coeffs"].size()) - 1;
  if (delta1_degree != 1 - euler_characteristic_total(s)) issues.push_back("deg delta1 != 1 - chi");

  rep.consistent = issues.empty();
  Json input = to_json(spec);
  input["F_t"] = to_string(ft);
  rep.json = Json{{"status", rep.consistent ? "OK" : "INCONSISTENT"},
                  {"input", input},
                  {"weights", to_json(*weights)},
                  {"seifert", seifert_json(s)},
                  {"deformed_link", {{"positive", after.positive}, {"negative", after.negative}}},
                  {"ell", ell},
                  {"monodromy", mono},
                  {"handles", ledger},
                  {"issues", issues},
                  {"notes", notes}};
  if (folds) rep.json["numeric"] = to_json(*folds);
  return rep;
}

std::vector<Check> verify_grid(std::int64_t max_m, std::int64_t max_p) {
  std::vector<Check> out;
  int prop1 = 0, chi = 0, lemma6 = 0, degree_law = 0, weights = 0, ledger = 0, total = 0;
  std::string first_failure;
  auto note = [&](bool ok, int& counter, const std::string& what) {
    if (ok) {
      ++counter;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  };
  for (std::int64_t p = 2; p <= max_p; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t m = 1; m <= max_m; ++m) {
        for (std::int64_t n = 0; n < m; ++n) {
          ++total;
          const std::string at = label(p, q, m, n);
          const MixedPolynomial f = branch_product(p, q, 1, m);
          const MixedPolynomial g = branch_product(p, q, m + 1, n);
          const DeformationSpec spec = make_deformation(f, n == 0 ? MixedPolynomial() : g);
          const SeifertLinkData& s = spec.link;
          const Degrees deg = degrees(s);

          const std::int64_t by_degrees = ell_from_degrees(deg.d_p, deg.d_r, p, q);
          const std::int64_t by_links = ell_from_links({m, n}, {m - n, 0});
          const std::int64_t by_deformation = ell_from_links(link_counts(s), deformed_link_counts(spec));
          note(by_degrees == n && by_links == n && by_deformation == n, prop1, "ell identity " + at);

          auto w = detect_weights(n == 0 ? f : f * conjugate(g));
          note(w && w->d_p == deg.d_p && w->d_r == deg.d_r && w->polar_weight == WeightPair{q, p} &&
                   w->radial_weight == WeightPair{q, p},
               weights, "detected weights " + at);

          const HandleDecomposition h = build(s);
          note(h.stages.back().chi - h.stages.front().chi == -2 * n * p * q * (m - n) &&
                   h.stages.back().chi == euler_characteristic_total(s),
               chi, "chi telescoping " + at);
          note(check_ledger(h).empty(), ledger, "ledger " + at);

          CyclicPoly cur = delta_star_h0(p, q, m, n);
          for (std::int64_t i = 0; i < n; ++i) cur = lemma6_step(cur, deg.d_p);
          note(cur == theorem2_total(p, q, m, n) && cur == theorem2_closed_form(p, q, m, n), lemma6,
               "stepwise delta_star " + at);
          const CyclicPoly delta1 = cur * CyclicPoly::cyclic(1);
          note(delta1.is_polynomial() && static_cast<std::int64_t>(expand(delta1).size()) - 1 == 1 - h.stages.back().chi,
               degree_law, "degree law " + at);
        }
      }
    }
  }
  auto summary = [&](const char* name, int passed) {
    out.push_back(check(name, passed == total, std::to_string(passed) + "/" + std::to_string(total)));
  };
  summary("ell_from_degrees = n = ell_from_links", prop1);
  summary("detected weights match degrees()", weights);
  summary("chi(S_ell) - chi(S_0) = -2 n d_p", chi);
  summary("handle ledger invariants", ledger);
  summary("stepwise delta_star = total = closed form", lemma6);
  summary("deg(delta_star (t-1)) = 1 - chi", degree_law);
  if (!first_failure.empty()) out.push_back(check("first failure", false, first_failure));
  return out;
}

std::vector<Check> verify_example1(std::int64_t m) {
  if (m < 2) throw DomainError("m must be at least 2");
  AnalysisInput in;
  in.f = "z1^" + std::to_string(m) + " + z2^" + std::to_string(m);
  in.g = "z1 + 2*z2";
  const AnalysisReport rep = analyze(in);
  const Json& j = rep.json;
  std::vector<Check> out;
  out.push_back(check("status OK", rep.consistent, j["status"].get<std::string>()));
  out.push_back(check("ell by link counts = 1", j["ell"]["link_count"] == 1, j["ell"]["link_count"].dump()));
  out.push_back(check("ell by degrees = 1", j["ell"]["degree_formula"] == 1, j["ell"]["degree_formula"].dump()));
  out.push_back(check("deformed link (m-1, 0)",
                      j["deformed_link"]["positive"] == m - 1 && j["deformed_link"]["negative"] == 0,
                      j["deformed_link"].dump()));
  out.push_back(check("h case linear_g", j["input"]["h_case"] == "linear_g", j["input"]["h_case"].dump()));
  return out;
}

std::vector<Check> verify_folds(const DeformationSpec& d, const NumericConfig& cfg, FoldOrbitReport* out) {
  const FoldOrbitReport r = find_fold_orbits(assemble(d), cfg);
  std::vector<Check> checks;
  checks.push_back(check("fold verdict is count", r.verdict == FoldVerdict::count, r.reason.empty() ? to_string(r.verdict) : to_string(r.verdict) + ": " + r.reason));
  checks.push_back(check("critical circles = n", static_cast<std::int64_t>(r.circles.size()) == d.link.n,
                         std::to_string(r.circles.size()) + " vs " + std::to_string(d.link.n)));
  checks.push_back(check("orbit count = n", r.orbit_count == d.link.n,
                         std::to_string(r.orbit_count) + " vs " + std::to_string(d.link.n)));
  checks.push_back(check(">= 20% of seeds converge", r.stats.converged_fraction() >= 0.2,
                         std::to_string(r.stats.converged) + "/" + std::to_string(r.stats.seeds)));
  if (out) *out = r;
  return checks;
}

namespace {

void render(const Json& j, const std::string& indent, std::ostringstream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const bool nested_array = v.is_array() && !v.empty() && v.front().is_object();
    if (v.is_object() || nested_array) {
      os << indent << it.key() << ":\n";
      if (v.is_object()) {
        render(v, indent + "  ", os);
      } else {
        for (std::size_t i = 0; i < v.size(); ++i) {
          os << indent << "  [" << i << "]\n";
          render(v[i], indent + "    ", os);
        }
      }
    } else {
      os << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

std::string render_table(const Json& j) {
  std::ostringstream os;
  render(j, "", os);
  return os.str();
}

}  // namespace mixsing
