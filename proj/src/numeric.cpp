#include "mixsing/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "mixsing/error.hpp"
#include "mixsing/homogeneity.hpp"

namespace mixsing {

namespace {

using Vec4 = Eigen::Vector4d;
using Weights = std::array<std::int64_t, 2>;

Point to_point(const Vec4& x) { return {{{x[0], x[1]}, {x[2], x[3]}}}; }
Vec4 to_vec(const Point& z) { return {z[0].real(), z[0].imag(), z[1].real(), z[1].imag()}; }

// F and its four Wirtinger derivatives, with coefficients in double.
class Evaluator {
 public:
  struct Jet {
    std::complex<double> f, fz1, fz2, fzb1, fzb2;
  };

  explicit Evaluator(const MixedPolynomial& p) : max_exp_(p.max_exponent()) {
    for (const auto& t : p.terms()) {
      terms_.push_back({t.coeff.to_complex(), {t.nu[0], t.nu[1], t.mu[0], t.mu[1]}});
    }
  }

  Jet jet(const Point& z) const {
    const std::size_t n = static_cast<std::size_t>(max_exp_) + 1;
    std::complex<double> pw[4][64];
    std::vector<std::complex<double>> heap;
    std::complex<double>* tab[4];
    const std::complex<double> base[4] = {z[0], z[1], std::conj(z[0]), std::conj(z[1])};
    if (n <= 64) {
      for (int v = 0; v < 4; ++v) tab[v] = pw[v];
    } else {
      heap.resize(4 * n);
      for (int v = 0; v < 4; ++v) tab[v] = heap.data() + v * n;
    }
    for (int v = 0; v < 4; ++v) {
      tab[v][0] = 1.0;
      for (std::size_t k = 1; k < n; ++k) tab[v][k] = tab[v][k - 1] * base[v];
    }
    Jet j{};
    std::complex<double>* d[4] = {&j.fz1, &j.fz2, &j.fzb1, &j.fzb2};
    for (const auto& t : terms_) {
      std::complex<double> f[4];
      for (int v = 0; v < 4; ++v) f[v] = tab[v][t.e[v]];
      j.f += t.c * f[0] * f[1] * f[2] * f[3];
      for (int v = 0; v < 4; ++v) {
        if (t.e[v] == 0) continue;
        std::complex<double> prod = t.c * static_cast<double>(t.e[v]) * tab[v][t.e[v] - 1];
        for (int u = 0; u < 4; ++u) {
          if (u != v) prod *= f[u];
        }
        *d[v] += prod;
      }
    }
    return j;
  }

  std::complex<double> value(const Point& z) const { return jet(z).f; }

  // sum |c z^nu conj(z)^mu|, the scale against which |F| counts as zero.
  double magnitude(const Point& z) const {
    const double a[4] = {std::abs(z[0]), std::abs(z[1]), std::abs(z[0]), std::abs(z[1])};
    double sum = 0;
    for (const auto& t : terms_) {
      double v = std::abs(t.c);
      for (int k = 0; k < 4; ++k) v *= std::pow(a[k], static_cast<double>(t.e[k]));
      sum += v;
    }
    return sum;
  }

 private:
  struct Term {
    std::complex<double> c;
    std::array<Exponent, 4> e;
  };
  std::vector<Term> terms_;
  Exponent max_exp_;
};

using Minors = Eigen::Matrix<double, 6, 1>;

Minors normalized_minors(const Evaluator::Jet& j) {
  // Columns d/dx1, d/dy1, d/dx2, d/dy2 of the complex derivative.
  const std::complex<double> I(0, 1);
  std::complex<double> col[4] = {j.fz1 + j.fzb1, I * (j.fz1 - j.fzb1), j.fz2 + j.fzb2, I * (j.fz2 - j.fzb2)};
  double frob = 0;
  for (auto& c : col) frob += std::norm(c);
  Minors m = Minors::Zero();
  if (frob == 0) return m;
  int k = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) m[k++] = col[a].real() * col[b].imag() - col[b].real() * col[a].imag();
  }
  return m / frob;
}

double norm(const Point& z) { return std::sqrt(std::norm(z[0]) + std::norm(z[1])); }

// Weighted radial action lambda.z.
Point radial_scale(const Point& z, const Weights& w, double lambda) {
  return {std::pow(lambda, static_cast<double>(w[0])) * z[0], std::pow(lambda, static_cast<double>(w[1])) * z[1]};
}

// The point lambda.z with Euclidean norm `target` (weights positive).
Point scale_to_radius(const Point& z, const Weights& w, double target) {
  double lo = -60, hi = 60;
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    double mid = 0.5 * (lo + hi);
    if (norm(radial_scale(z, w, std::exp(mid))) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return radial_scale(z, w, std::exp(0.5 * (lo + hi)));
}

Point rotate(const Point& z, const Weights& w, double theta) {
  return {std::polar(1.0, theta * static_cast<double>(w[0])) * z[0],
          std::polar(1.0, theta * static_cast<double>(w[1])) * z[1]};
}

struct Solve {
  Vec4 x;
  double residual;
};

// |x| grad log|F|: vanishes exactly at critical points of |F| with F != 0,
// which are the fold points. Its basins are much wider than those of the minors.
Vec4 log_gradient(const Evaluator::Jet& j, const Vec4& x) {
  const std::complex<double> I(0, 1);
  const std::complex<double> col[4] = {j.fz1 + j.fzb1, I * (j.fz1 - j.fzb1), j.fz2 + j.fzb2, I * (j.fz2 - j.fzb2)};
  const double n2 = std::norm(j.f);
  Vec4 g;
  for (int k = 0; k < 4; ++k) g[k] = (std::conj(j.f) * col[k]).real();
  if (n2 == 0) return Vec4::Constant(INFINITY);
  return g * (x.norm() / n2);
}

class FoldSolver {
 public:
  FoldSolver(const Evaluator& ev, double lo, double hi, int max_iter) : ev_(ev), lo_(lo), hi_(hi), max_iter_(max_iter) {}

  double residual(const Vec4& x) const { return minors(x).norm(); }

  // Descent on |x| grad log|F|, then polishing on the normalized minors.
  Solve solve(const Vec4& x0) const {
    Vec4 x = levenberg_marquardt(x0, [this](const Vec4& y) { return log_gradient(ev_.jet(to_point(y)), y); });
    Vec4 y = levenberg_marquardt(x, [this](const Vec4& v) { return minors(v); });
    double r = residual(y);
    if (!(r <= 1e-10)) {
      Vec4 z = levenberg_marquardt(x0, [this](const Vec4& v) { return minors(v); });
      double rz = residual(z);
      if (rz < r || !std::isfinite(r)) return {z, rz};
    }
    return {y, r};
  }

  // Local minima of the residual along the weighted radial ray through x,
  // sampled at radii in [lo, hi], best first.
  std::vector<Vec4> ray_minima(const Vec4& x, const Weights& w, double lo, double hi, int samples = 48) const {
    const Point z = to_point(x);
    std::vector<Vec4> pts(samples);
    std::vector<double> res(samples);
    for (int k = 0; k < samples; ++k) {
      const double rad = lo * std::pow(hi / lo, static_cast<double>(k) / (samples - 1));
      pts[k] = to_vec(scale_to_radius(z, w, rad));
      res[k] = residual(pts[k]);
    }
    std::vector<int> minima;
    for (int k = 0; k < samples; ++k) {
      if ((k == 0 || res[k] <= res[k - 1]) && (k == samples - 1 || res[k] <= res[k + 1])) minima.push_back(k);
    }
    std::sort(minima.begin(), minima.end(), [&](int a, int b) { return res[a] < res[b]; });
    std::vector<Vec4> out;
    for (int k : minima) out.push_back(pts[k]);
    return out;
  }

 private:
  const Evaluator& ev_;
  double lo_, hi_;
  int max_iter_;

  Minors minors(const Vec4& x) const { return normalized_minors(ev_.jet(to_point(x))); }

  Vec4 clamp(const Vec4& y) const {
    const double n = y.norm();
    return y * (std::clamp(n, lo_, hi_) / n);
  }

  // Damped Gauss-Newton with central-difference Jacobian, steps capped at
  // |x|/4 and the norm clamped to [lo, hi].
  template <class Residual>
  Vec4 levenberg_marquardt(Vec4 x, Residual&& fn) const {
    using Vec = decltype(fn(x));
    constexpr int rows = Vec::RowsAtCompileTime;
    x = clamp(x);
    double lam = 1e-3;
    Vec g = fn(x);
    double r = g.norm();
    if (!std::isfinite(r)) return x;
    for (int it = 0; it < max_iter_ && r >= 1e-14; ++it) {
      const double nx = x.norm();
      const double h = 1e-7 * nx;
      Eigen::Matrix<double, rows, 4> jac;
      for (int k = 0; k < 4; ++k) {
        Vec4 e = Vec4::Zero();
        e[k] = h;
        jac.col(k) = (fn(Vec4(x + e)) - fn(Vec4(x - e))) / (2 * h);
      }
      const Eigen::Matrix4d a = jac.transpose() * jac;
      const Vec4 rhs = jac.transpose() * g;
      const double ridge = 1e-12 * a.trace();
      bool improved = false;
      for (int tries = 0; tries < 12; ++tries) {
        Eigen::Matrix4d damped = a;
        for (int k = 0; k < 4; ++k) damped(k, k) += lam * (a(k, k) + ridge);
        Vec4 dx = -damped.ldlt().solve(rhs);
        if (!dx.allFinite()) break;
        const double cap = 0.25 * nx;
        if (dx.norm() > cap) dx *= cap / dx.norm();
        const Vec4 xn = clamp(x + dx);
        const Vec gn = fn(xn);
        if (gn.norm() < r) {
          x = xn;
          g = gn;
          r = gn.norm();
          lam = std::max(lam / 5, 1e-10);
          improved = true;
          break;
        }
        lam *= 8;
      }
      if (!improved) break;
    }
    return x;
  }
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <class Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  for (int t = 0; t < std::min(threads, count); ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) fn(i);
    });
  }
}

// Polar weights define the S^1 action; the radial search uses their absolute
// values, or (1, 1) when one vanishes.
Weights search_weights(const Weights& polar) {
  Weights w{std::abs(polar[0]), std::abs(polar[1])};
  if (w[0] == 0 || w[1] == 0) return {1, 1};
  return w;
}

struct Candidate {
  Point z;
  double residual;
  bool from_seed;
};

}  // namespace

void validate(const NumericConfig& cfg) {
  if (cfg.epsilon && !(*cfg.epsilon > 0)) throw DomainError("epsilon must be positive");
  if (cfg.delta_t && !(*cfg.delta_t > 0)) throw DomainError("delta_t must be positive");
  if (cfg.delta && cfg.delta_t && !(*cfg.delta_t < *cfg.delta)) throw DomainError("need 0 < delta_t < delta");
  if (cfg.delta && !(*cfg.delta > 0)) throw DomainError("delta must be positive");
  if (cfg.seeds < 1) throw DomainError("seeds must be at least 1");
  if (!(cfg.accept_tol > 0) || !(cfg.cluster_tol > 0)) throw DomainError("tolerances must be positive");
  if (cfg.sweep && (cfg.sweep_grid[0] < 3 || cfg.sweep_grid[1] < 3 || cfg.sweep_grid[2] < 3)) {
    throw DomainError("sweep grid needs at least 3 points per axis");
  }
  if (cfg.max_iterations < 1) throw DomainError("max_iterations must be positive");
}

double singular_residual(const MixedPolynomial& f, const Point& z) {
  return normalized_minors(Evaluator(f).jet(z)).norm();
}

std::string to_string(MorseVerdict v) {
  switch (v) {
    case MorseVerdict::indefinite: return "indefinite";
    case MorseVerdict::definite: return "definite";
    case MorseVerdict::unresolved: return "unresolved";
  }
  return "unresolved";
}

std::string to_string(FoldVerdict v) {
  switch (v) {
    case FoldVerdict::count: return "count";
    case FoldVerdict::inconclusive: return "inconclusive";
    case FoldVerdict::degenerate: return "degenerate";
  }
  return "inconclusive";
}

namespace {

MorseProbe morse_probe(const Evaluator& ev, const Weights& polar, const Point& w) {
  const Vec4 x = to_vec(w);
  const double h = 1e-4 * x.norm();
  auto absf = [&](const Vec4& y) { return std::abs(ev.value(to_point(y))); };
  Eigen::Matrix4d hess;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      Vec4 ei = Vec4::Zero(), ej = Vec4::Zero();
      ei[i] = h;
      ej[j] = h;
      double v = (absf(x + ei + ej) - absf(x + ei - ej) - absf(x - ei + ej) + absf(x - ei - ej)) / (4 * h * h);
      hess(i, j) = hess(j, i) = v;
    }
  }
  // Orbit tangent i*(p1 z1, p2 z2) as a real vector; the slice is its complement.
  const std::complex<double> I(0, 1);
  Vec4 xi = to_vec({I * static_cast<double>(polar[0]) * w[0], I * static_cast<double>(polar[1]) * w[1]});
  Eigen::HouseholderQR<Eigen::Matrix<double, 4, 1>> qr(xi);
  Eigen::Matrix4d q = qr.householderQ();
  Eigen::Matrix<double, 4, 3> basis = q.rightCols<3>();
  Eigen::Matrix3d slice = basis.transpose() * hess * basis;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(slice);
  MorseProbe out;
  for (int k = 0; k < 3; ++k) out.eigenvalues[k] = es.eigenvalues()[k];
  double scale = 0, smallest = INFINITY;
  for (double e : out.eigenvalues) {
    scale = std::max(scale, std::abs(e));
    smallest = std::min(smallest, std::abs(e));
  }
  if (!(scale > 0) || !std::isfinite(scale) || smallest < 1e-5 * scale) return out;
  out.index = static_cast<int>(std::count_if(out.eigenvalues.begin(), out.eigenvalues.end(), [](double e) { return e < 0; }));
  out.verdict = (out.index == 0 || out.index == 3) ? MorseVerdict::definite : MorseVerdict::indefinite;
  return out;
}

Weights polar_weights_of(const MixedPolynomial& f) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  auto polar = detect_polar(f);
  if (!polar) throw DomainError("polynomial is not polar weighted homogeneous");
  return polar->weight;
}

}  // namespace

MorseProbe morse_index_probe(const MixedPolynomial& f, const Point& w) {
  const Weights polar = polar_weights_of(f);
  Evaluator ev(f);
  if (normalized_minors(ev.jet(w)).norm() > 1e-8) throw DomainError("point is not a fold point");
  return morse_probe(ev, polar, w);
}

double orbit_distance(const Point& a, const Point& b, const Weights& weights) {
  auto dist = [&](double theta) {
    Point r = rotate(a, weights, theta);
    return std::sqrt(std::norm(r[0] - b[0]) + std::norm(r[1] - b[1]));
  };
  constexpr int kPhases = 64;
  const double step = 2 * M_PI / kPhases;
  int best = 0;
  double best_d = INFINITY;
  for (int k = 0; k < kPhases; ++k) {
    double d = dist(k * step);
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  // Golden-section refinement around the best sampled phase; enough for
  // orbits whose weights are small integers.
  const double g = (std::sqrt(5.0) - 1) / 2;
  double lo = (best - 1) * step, hi = (best + 1) * step;
  double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
  double fc = dist(c), fd = dist(d);
  for (int it = 0; it < 60; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - g * (hi - lo);
      fc = dist(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + g * (hi - lo);
      fd = dist(d);
    }
  }
  return std::min({best_d, fc, fd});
}

double auto_epsilon(const MixedPolynomial& f) {
  const Weights w = search_weights(polar_weights_of(f));
  std::map<std::int64_t, double> parts;
  for (const auto& t : f.terms()) {
    parts[w[0] * (t.nu[0] + t.mu[0]) + w[1] * (t.nu[1] + t.mu[1])] += std::abs(t.coeff.to_complex());
  }
  if (parts.size() < 2) return 1.0;
  const auto& [low_deg, low_norm] = *parts.begin();
  const auto& [high_deg, high_norm] = *parts.rbegin();
  const double lambda = std::pow(low_norm / high_norm, 1.0 / static_cast<double>(high_deg - low_deg));
  return 8.0 * std::max(std::pow(lambda, static_cast<double>(w[0])), std::pow(lambda, static_cast<double>(w[1])));
}

std::vector<Point> FoldOrbitReport::representative_points() const {
  std::vector<Point> out;
  for (const auto& o : orbits) out.push_back(o.point);
  return out;
}

std::vector<double> FoldOrbitReport::radii() const {
  std::vector<double> out;
  for (const auto& c : circles) out.push_back(c.radius);
  return out;
}

FoldOrbitReport find_fold_orbits(const MixedPolynomial& f, const NumericConfig& cfg) {
  validate(cfg);
  const Weights polar = polar_weights_of(f);
  const Weights w = search_weights(polar);
  const Evaluator ev(f);

  FoldOrbitReport rep;
  rep.epsilon = cfg.epsilon ? *cfg.epsilon : auto_epsilon(f);
  const double eps = rep.epsilon;
  const FoldSolver solver(ev, 0.05 * eps, 2 * eps, cfg.max_iterations);
  const int threads = cfg.threads > 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());

  // Random seeds: log-uniform radius in [0.1 eps, eps], uniform direction.
  std::vector<Solve> seed_results(cfg.seeds);
  parallel_for(cfg.seeds, threads, [&](int i) {
    std::mt19937_64 rng(splitmix64(cfg.seed * 0x100000001b3ULL + static_cast<std::uint64_t>(i)));
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Vec4 x;
    for (int k = 0; k < 4; ++k) x[k] = normal(rng);
    const double radius = 0.1 * eps * std::pow(10.0, unit(rng));
    x *= radius / x.norm();
    Solve best{x, INFINITY};
    const auto starts = solver.ray_minima(x, w, 0.1 * eps, eps);
    for (std::size_t k = 0; k < std::min<std::size_t>(starts.size(), 2); ++k) {
      const Solve s = solver.solve(starts[k]);
      if (s.residual < best.residual) best = s;
      if (best.residual <= cfg.accept_tol) break;
    }
    seed_results[i] = best;
  });

  std::vector<Candidate> accepted;
  rep.stats.seeds = cfg.seeds;
  auto classify = [&](const Solve& s, bool from_seed) {
    if (!(s.residual <= cfg.accept_tol)) return 0;
    const double n = s.x.norm();
    if (n > eps * (1 + 1e-12)) return 1;
    if (n < 1e-3 * eps) return 2;
    accepted.push_back({to_point(s.x), s.residual, from_seed});
    return 3;
  };
  for (const auto& s : seed_results) {
    switch (classify(s, true)) {
      case 0: ++rep.stats.not_converged; break;
      case 1: ++rep.stats.outside_ball; break;
      case 2: ++rep.stats.near_origin; break;
      default: ++rep.stats.converged; break;
    }
  }

  if (cfg.sweep) {
    // Orbit representatives (cos(a/2), sin(a/2) e^{i b}) scaled to radius rho.
    const auto [na, nb, nr] = cfg.sweep_grid;
    std::vector<double> grid(static_cast<std::size_t>(na) * nb * nr);
    std::vector<Vec4> pts(grid.size());
    auto idx = [&](int a, int b, int r) { return (static_cast<std::size_t>(a) * nb + b) * nr + r; };
    parallel_for(na, threads, [&](int a) {
      const double alpha = M_PI * (a + 0.5) / na;
      for (int b = 0; b < nb; ++b) {
        const double beta = 2 * M_PI * b / nb;
        const Point dir{std::complex<double>(std::cos(alpha / 2), 0), std::polar(std::sin(alpha / 2), beta)};
        for (int r = 0; r < nr; ++r) {
          const double rho = 0.05 * eps * std::pow(20.0, static_cast<double>(r) / (nr - 1));
          Vec4 x = to_vec(scale_to_radius(dir, w, rho));
          pts[idx(a, b, r)] = x;
          grid[idx(a, b, r)] = solver.residual(x);
        }
      }
    });
    std::vector<std::pair<double, std::size_t>> minima;
    for (int a = 0; a < na; ++a) {
      for (int b = 0; b < nb; ++b) {
        for (int r = 0; r < nr; ++r) {
          const double v = grid[idx(a, b, r)];
          bool is_min = true;
          for (int da = -1; da <= 1 && is_min; ++da) {
            for (int db = -1; db <= 1 && is_min; ++db) {
              for (int dr = -1; dr <= 1 && is_min; ++dr) {
                if (da == 0 && db == 0 && dr == 0) continue;
                const int aa = a + da, rr = r + dr;
                if (aa < 0 || aa >= na || rr < 0 || rr >= nr) continue;
                const int bb = (b + db + nb) % nb;
                if (grid[idx(aa, bb, rr)] < v) is_min = false;
              }
            }
          }
          if (is_min) minima.emplace_back(v, idx(a, b, r));
        }
      }
    }
    std::sort(minima.begin(), minima.end());
    if (minima.size() > 64) minima.resize(64);
    std::vector<Solve> polished(minima.size());
    parallel_for(static_cast<int>(minima.size()), threads,
                 [&](int i) { polished[i] = solver.solve(pts[minima[i].second]); });
    rep.stats.sweep_candidates = static_cast<int>(minima.size());
    for (const auto& s : polished) {
      if (classify(s, false) == 3) ++rep.stats.sweep_converged;
    }
  }

  // Cluster into S^1-orbits.
  for (const auto& c : accepted) {
    bool merged = false;
    for (auto& o : rep.orbits) {
      if (orbit_distance(c.z, o.point, polar) < cfg.cluster_tol * std::max(norm(c.z), norm(o.point))) {
        ++o.hits;
        if (c.residual < o.residual) {
          o.point = c.z;
          o.residual = c.residual;
        }
        merged = true;
        break;
      }
    }
    if (!merged) rep.orbits.push_back({c.z, 0, c.residual, 1, {}});
  }
  for (auto& o : rep.orbits) {
    o.critical_value = std::abs(ev.value(o.point));
    o.morse = morse_probe(ev, polar, o.point);
    rep.residual = std::max(rep.residual, o.residual);
  }
  std::sort(rep.orbits.begin(), rep.orbits.end(),
            [](const FoldOrbit& a, const FoldOrbit& b) { return a.critical_value < b.critical_value; });
  rep.orbit_count = static_cast<int>(rep.orbits.size());

  for (const auto& o : rep.orbits) {
    if (!rep.circles.empty() &&
        std::abs(o.critical_value - rep.circles.back().radius) <= 1e-6 * std::max(o.critical_value, 1e-300)) {
      ++rep.circles.back().orbits;
    } else {
      rep.circles.push_back({o.critical_value, 1});
    }
  }

  bool vanishing = false, irregular = false;
  for (const auto& o : rep.orbits) {
    if (o.morse.index >= 0) rep.morse_balance += (o.morse.index % 2 == 0) ? 1 : -1;
    if (o.critical_value <= 1e-9 * ev.magnitude(o.point)) vanishing = true;
    if (o.morse.verdict != MorseVerdict::indefinite || o.morse.index != 1) irregular = true;
  }
  if (!rep.circles.empty()) {
    rep.delta_t_bound = rep.circles.front().radius;
    if (cfg.delta_t && *cfg.delta_t >= rep.circles.front().radius) rep.radii_config_ok = false;
    if (cfg.delta && *cfg.delta <= rep.circles.back().radius) rep.radii_config_ok = false;
  }

  if (rep.stats.converged == 0) {
    rep.verdict = FoldVerdict::inconclusive;
    rep.reason = "no seed converged to a fold point";
  } else if (vanishing) {
    rep.verdict = FoldVerdict::degenerate;
    rep.reason = "a critical value is zero";
  } else if (irregular) {
    rep.verdict = FoldVerdict::degenerate;
    rep.reason = "an orbit is not an indefinite fold of index 1";
  } else {
    rep.verdict = FoldVerdict::count;
  }
  return rep;
}

}  // namespace mixsing
