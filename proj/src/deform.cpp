#include "mixsing/deform.hpp"

#include <cmath>

#include "mixsing/error.hpp"
#include "mixsing/homogeneity.hpp"

namespace mixsing {

namespace {

GaussianRational coefficient_of(const MixedPolynomial& p, ExponentPair nu) {
  for (const auto& t : p.terms()) {
    if (t.nu == nu && t.mu == ExponentPair{0, 0}) return t.coeff;
  }
  return {};
}

std::complex<double> eval_at(const MixedPolynomial& p, std::complex<double> z) { return evaluate(p, z, 1.0); }

}  // namespace

std::string to_string(HCase c) { return c == HCase::linear_g ? "linear_g" : "generic_g"; }

std::string to_string(GenericityVerdict v) {
  switch (v) {
    case GenericityVerdict::generic: return "generic";
    case GenericityVerdict::degenerate: return "degenerate";
    case GenericityVerdict::not_applicable: return "not applicable";
    case GenericityVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

DeformationSpec make_deformation(const MixedPolynomial& f, const MixedPolynomial& g, const DeformationOptions& opts) {
  DeformationSpec d;
  d.f = f;
  d.g = g;
  const auto [p, q] = infer_branch_weights(f);
  d.link = extract(f, g, p, q);
  if (opts.t) d.t = *opts.t;
  if (sgn(d.t) < 0 || d.t >= 1) throw DomainError("t must lie in [0, 1)");
  if (opts.gamma) d.gamma = *opts.gamma;
  if (opts.gamma1) d.gamma1 = *opts.gamma1;
  if (opts.gamma2) d.gamma2 = *opts.gamma2;
  d.h_case = (p == 1 && q == 1 && d.link.n == 1) ? HCase::linear_g : HCase::generic_g;
  if (d.h_case == HCase::linear_g && d.link.m < 2) throw DomainError("linear case needs m >= 2");
  if (d.h_case == HCase::linear_g ? d.gamma.is_zero() : (d.gamma1.is_zero() || d.gamma2.is_zero())) {
    throw DomainError("perturbation coefficients must be nonzero");
  }
  return d;
}

MixedPolynomial perturbation(const DeformationSpec& d) {
  const auto& s = d.link;
  if (d.h_case == HCase::linear_g) {
    return MixedPolynomial::monomial(1, {s.m, 0}, {1, 0}) + MixedPolynomial::monomial(1, {s.m - 1, 0}) +
           MixedPolynomial::monomial(d.gamma, {0, s.m - 1});
  }
  return MixedPolynomial::monomial(d.gamma1, {s.p * (s.m - s.n), 0}) +
         MixedPolynomial::monomial(d.gamma2, {0, s.q * (s.m - s.n)});
}

MixedPolynomial assemble(const DeformationSpec& d) {
  MixedPolynomial base = d.g.is_zero() ? d.f : d.f * conjugate(d.g);
  if (sgn(d.t) == 0) return base;
  MixedPolynomial ft = base + scale(perturbation(d), GaussianRational(d.t));
  auto before = detect_polar(base);
  auto after = detect_polar(ft);
  if (!before || !after || before->weight != after->weight || before->degree != after->degree) {
    throw DomainError("perturbation changes the polar weight or degree");
  }
  return ft;
}

LinkCounts deformed_link_counts(const DeformationSpec& d) {
  const auto& s = d.link;
  if (sgn(d.t) == 0) return link_counts(s);
  MixedPolynomial ft = assemble(d);
  std::int64_t lowest = INT64_MAX;
  for (const auto& t : ft.terms()) {
    lowest = std::min(lowest, s.q * (t.nu[0] + t.mu[0]) + s.p * (t.nu[1] + t.mu[1]));
  }
  std::vector<MixedTerm> low;
  for (const auto& t : ft.terms()) {
    if (s.q * (t.nu[0] + t.mu[0]) + s.p * (t.nu[1] + t.mu[1]) == lowest) low.push_back(t);
  }
  MixedPolynomial lowest_part(std::move(low));
  if (!lowest_part.is_holomorphic()) throw DomainError("lowest part of F_t is not holomorphic");
  return {static_cast<std::int64_t>(branch_constants(lowest_part, s.p, s.q).size()), 0};
}

std::complex<double> alignment_phase(const DeformationSpec& d, std::complex<double> z) {
  const std::complex<double> phi = eval_at(d.f, z), gh = eval_at(d.g, z);
  const std::complex<double> num = phi * std::conj(gh);
  if (std::abs(num) == 0) return 1.0;
  return num / std::conj(num);
}

std::complex<double> exclusion_value(const DeformationSpec& d, std::complex<double> z, double r,
                                     std::complex<double> alpha) {
  if (d.h_case != HCase::linear_g) throw DomainError("exclusion expression needs the linear case");
  const double m = static_cast<double>(d.link.m);
  const std::complex<double> phi = eval_at(d.f, z);
  const std::complex<double> phi1 = eval_at(wirtinger(d.f, Var::z1), z);
  const std::complex<double> phi2 = eval_at(wirtinger(d.f, Var::z2), z);
  const std::complex<double> gh = eval_at(d.g, z);
  const std::complex<double> b1 = std::conj(coefficient_of(d.g, {1, 0}).to_complex());
  const std::complex<double> b2 = std::conj(coefficient_of(d.g, {0, 1}).to_complex());
  const std::complex<double> zc = std::conj(z);
  const double r2 = r * r;
  const std::complex<double> top = (alpha * b2 * phi - std::conj(phi2) * gh) *
                                   (m * z * std::pow(zc, m - 1) * r2 + (m - 1) * std::pow(zc, m - 2) -
                                    alpha * std::pow(z, m) * r2);
  const std::complex<double> bottom = (m - 1) * (alpha * b1 * phi - std::conj(phi1) * gh);
  return top / bottom;
}

GenericityPoint exclusion_margin(const DeformationSpec& d, const MixedPolynomial& ft, const Point& w) {
  GenericityPoint gp;
  gp.point = w;
  if (std::abs(w[1]) == 0) throw DomainError("fold point on the z2 = 0 axis");
  const std::complex<double> phase = std::conj(w[1]) / std::abs(w[1]);
  gp.r = std::abs(w[1]);
  gp.z = w[0] * phase / gp.r;
  gp.alpha_alignment = alignment_phase(d, gp.z);

  // Oka phase: conj(dF/dz_j) = alpha dF/dconj(z_j) at a mixed singular point.
  const Point rotated{w[0] * phase, gp.r};
  std::complex<double> num = 0;
  double den = 0;
  for (int j = 0; j < 2; ++j) {
    const Var v = j == 0 ? Var::z1 : Var::z2;
    const Var vb = j == 0 ? Var::zbar1 : Var::zbar2;
    const std::complex<double> dz = evaluate(wirtinger(ft, v), rotated[0], rotated[1]);
    const std::complex<double> dzb = evaluate(wirtinger(ft, vb), rotated[0], rotated[1]);
    num += std::conj(dz) * std::conj(dzb);
    den += std::norm(dzb);
  }
  gp.alpha_oka = den > 0 ? num / std::abs(num) : 1.0;

  const std::complex<double> gamma_bar = std::conj(d.gamma.to_complex());
  gp.excluded_value = exclusion_value(d, gp.z, gp.r, gp.alpha_alignment);
  gp.margin = std::abs(gamma_bar - gp.excluded_value);
  gp.oka_consistency = std::abs(gamma_bar - exclusion_value(d, gp.z, gp.r, gp.alpha_oka));
  return gp;
}

GenericityReport genericity_probe(const DeformationSpec& d, int samples, NumericConfig cfg) {
  GenericityReport rep;
  if (d.h_case != HCase::linear_g) {
    rep.verdict = GenericityVerdict::not_applicable;
    rep.note = "not applicable: generic_g coefficients are generic with probability one; check folds numerically";
    return rep;
  }
  if (samples < 1) throw DomainError("samples must be at least 1");
  cfg.seeds = samples;
  const MixedPolynomial ft = assemble(d);
  const FoldOrbitReport folds = find_fold_orbits(ft, cfg);
  rep.fold_verdict = folds.verdict;
  if (folds.orbits.empty()) {
    rep.verdict = GenericityVerdict::inconclusive;
    rep.note = "no fold points found";
    return rep;
  }
  rep.margin = INFINITY;
  for (const auto& o : folds.orbits) {
    if (std::abs(o.point[1]) == 0) continue;
    rep.points.push_back(exclusion_margin(d, ft, o.point));
    rep.margin = std::min(rep.margin, rep.points.back().margin);
  }
  if (rep.points.empty()) {
    rep.verdict = GenericityVerdict::inconclusive;
    rep.note = "all fold points lie on z2 = 0";
    return rep;
  }
  rep.verdict = rep.margin > kGenericityMargin ? GenericityVerdict::generic : GenericityVerdict::degenerate;
  return rep;
}

GammaChoice choose_generic_gamma(const DeformationSpec& d, int samples, const NumericConfig& cfg, int max_attempts) {
  GammaChoice choice{d, genericity_probe(d, samples, cfg), 0};
  while (choice.report.verdict == GenericityVerdict::degenerate && choice.attempts < max_attempts) {
    ++choice.attempts;
    const long k = choice.attempts;
    const GaussianRational step(mpq_class(k, 97), mpq_class(k % 2 == 0 ? k : -k, 89));
    if (d.h_case == HCase::linear_g) {
      choice.spec.gamma = d.gamma + step;
    } else {
      choice.spec.gamma1 = d.gamma1 + step;
      choice.spec.gamma2 = d.gamma2 - step;
    }
    choice.report = genericity_probe(choice.spec, samples, cfg);
  }
  return choice;
}

}  // namespace mixsing
