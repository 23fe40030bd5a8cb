#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixsing/gaussian_rational.hpp"
#include "mixsing/mixed_polynomial.hpp"
#include "mixsing/numeric.hpp"
#include "mixsing/seifert.hpp"

namespace mixsing {

enum class HCase { generic_g, linear_g };
std::string to_string(HCase c);

// F_t = f conj(g) + t h with
//   generic_g: h = gamma1 z1^{p(m-n)} + gamma2 z2^{q(m-n)}
//   linear_g:  h = z1^m conj(z1) + z1^{m-1} + gamma z2^{m-1}   (p = q = 1, n = 1)
struct DeformationSpec {
  MixedPolynomial f;
  MixedPolynomial g;
  mpq_class t{1, 20};
  HCase h_case = HCase::generic_g;
  GaussianRational gamma1{1};
  GaussianRational gamma2{1};
  GaussianRational gamma{1};
  SeifertLinkData link;
};

struct DeformationOptions {
  std::optional<mpq_class> t;
  std::optional<GaussianRational> gamma;
  std::optional<GaussianRational> gamma1;
  std::optional<GaussianRational> gamma2;
};

// Infers (p, q) from f, extracts the link data and picks the h case.
// Throws DomainError.
DeformationSpec make_deformation(const MixedPolynomial& f, const MixedPolynomial& g,
                                 const DeformationOptions& opts = {});

MixedPolynomial perturbation(const DeformationSpec& d);
// Throws DomainError if t h changes the polar weight or degree of f conj(g).
MixedPolynomial assemble(const DeformationSpec& d);

// Link of F_t read from its lowest radial-degree part, which must be
// holomorphic; (m, n) itself when t = 0.
LinkCounts deformed_link_counts(const DeformationSpec& d);

enum class GenericityVerdict { generic, degenerate, not_applicable, inconclusive };
std::string to_string(GenericityVerdict v);

struct GenericityPoint {
  Point point;
  // Rotated coordinates: point ~ (z r, r) with r > 0.
  std::complex<double> z;
  double r = 0;
  std::complex<double> alpha_alignment;
  std::complex<double> alpha_oka;
  std::complex<double> excluded_value;
  double margin = 0;
  // |conj(gamma) - E(z, r, alpha_oka)|, which vanishes at every mixed singular point.
  double oka_consistency = 0;
};

struct GenericityReport {
  GenericityVerdict verdict = GenericityVerdict::inconclusive;
  double margin = 0;
  std::vector<GenericityPoint> points;
  std::string note;
  FoldVerdict fold_verdict = FoldVerdict::inconclusive;
};

inline constexpr double kGenericityMargin = 1e-6;

// Linear-g exclusion expression
//   E = (a b2' phi - conj(phi_2) g)(m z conj(z)^{m-1} r^2 + (m-1) conj(z)^{m-2} - a z^m r^2)
//       / ((m-1)(a b1' phi - conj(phi_1) g))
// where phi = f(z, 1), phi_j = df/dz_j(z, 1), g = g(z, 1), b_j' = conj(b_j).
std::complex<double> exclusion_value(const DeformationSpec& d, std::complex<double> z, double r,
                                     std::complex<double> alpha);
// Unit alpha' with phi conj(g) = alpha' conj(phi) g.
std::complex<double> alignment_phase(const DeformationSpec& d, std::complex<double> z);
GenericityPoint exclusion_margin(const DeformationSpec& d, const MixedPolynomial& ft, const Point& w);

GenericityReport genericity_probe(const DeformationSpec& d, int samples, NumericConfig cfg = {});

// Perturbs gamma by small rationals until the probe stops reporting degenerate.
struct GammaChoice {
  DeformationSpec spec;
  GenericityReport report;
  int attempts = 0;
};
GammaChoice choose_generic_gamma(const DeformationSpec& d, int samples, const NumericConfig& cfg = {},
                                 int max_attempts = 8);

}  // namespace mixsing
