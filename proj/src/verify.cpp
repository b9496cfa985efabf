// Part of bcfrac, a bicomplex fractional calculus library.
// SPDX-License-Identifier: Apache-2.0

#include "bcfrac/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "bcfrac/cauchy.hpp"
#include "bcfrac/gamma.hpp"
#include "bcfrac/laplace.hpp"
#include "bcfrac/mittag_leffler.hpp"
#include "bcfrac/operators.hpp"
#include "bcfrac/version.hpp"

namespace bcfrac::verify {

namespace {

using C = std::complex<double>;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Per-check deterministic stream: the seed is folded with the check name so
/// running a single suite draws the same numbers as running everything.
std::mt19937_64 rng_for(const Options& opt, const std::string& name) {
  std::seed_seq seq{opt.seed, (std::uint64_t)std::hash<std::string>{}(name)};
  return std::mt19937_64(seq);
}

double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

/// Bicomplex draw specified directly in the idempotent basis: both component
/// real parts in [re_lo, re_hi], imaginary parts in [-im, im].
Bicomplex draw_bc(std::mt19937_64& g, double re_lo, double re_hi, double im) {
  return {C(uniform(g, re_lo, re_hi), uniform(g, -im, im)),
          C(uniform(g, re_lo, re_hi), uniform(g, -im, im))};
}

Bicomplex draw_disk(std::mt19937_64& g, double rmax) {
  const auto one = [&] { return std::polar(uniform(g, 0.0, rmax), uniform(g, 0.0, 6.283185307179586)); };
  return {one(), one()};
}

double hyper_max(const Hyperbolic& h) {
  if (std::isnan(h.d1) || std::isnan(h.d2)) return std::numeric_limits<double>::infinity();
  return std::max(h.d1, h.d2);
}

double sup_abs(const std::vector<Bicomplex>& v) {
  double s = 0;
  for (const auto& x : v) s = std::max(s, hyper_max(x.j_modulus()));
  return s;
}

/// Sup of |a - b|_j over nodes with t >= a + trim (b - a), normalized by the
/// sup of |b|_j over the same window. NaNs count as infinite error.
double sup_rel(const std::vector<Bicomplex>& a, const std::vector<Bicomplex>& b, const Grid& g,
               double trim = 0.0) {
  const double t0 = g.a + trim * (g.b - g.a);
  double sup = 0, scale = 0;
  for (int i = 0; i < g.n_points; ++i) {
    if (g.t(i) < t0) continue;
    sup = std::max(sup, hyper_max((a[i] - b[i]).j_modulus()));
    scale = std::max(scale, hyper_max(b[i].j_modulus()));
  }
  return sup / std::max(scale, 1e-30);
}

/// Per-draw error curves folded into a single check: the reported errors are
/// the worst over draws at each grid, the reported order the worst per-draw
/// refinement order of the finest pair (mixing draws would corrupt it).
void fold_draw_curves(CheckResult& r, const std::vector<std::vector<double>>& by_draw) {
  const size_t ng = by_draw.front().size();
  r.errors.assign(ng, 0.0);
  double order = std::numeric_limits<double>::infinity();
  for (const auto& curve : by_draw) {
    for (size_t i = 0; i < ng; ++i) r.errors[i] = std::max(r.errors[i], curve[i]);
    if (ng >= 2) order = std::min(order, std::log2(curve[ng - 2] / curve[ng - 1]));
  }
  if (ng >= 2) r.empirical_order = order;
}

/// Prabhakar kernel sampled on a grid; needs Re n > 1 so the t = 0 limit is 0.
SampledFn sample_kernel(const Grid& g, const MLParams& p, double tol) {
  return SampledFn::sample(g, [&](double t) {
    return t > 0 ? prabhakar_kernel(t, p, tol).first : Bicomplex::zero();
  });
}

SampledFn sample_poly(const Grid& g, const std::vector<Bicomplex>& coeff) {
  return SampledFn::sample(g, [&](double t) {
    Bicomplex acc = Bicomplex::zero();
    double tp = 1.0;
    for (const auto& c : coeff) {
      acc += c * tp;
      tp *= t;
    }
    return acc;
  });
}

void finish(CheckResult& r, Clock::time_point t0) {
  r.seconds = seconds_since(t0);
  const double e = r.errors.empty() ? 0.0 : r.errors.back();
  r.pass = std::isfinite(e) && e <= r.threshold;
  if (r.errors.size() >= 2 && !std::isfinite(r.empirical_order))
    r.empirical_order = std::log2(r.errors[r.errors.size() - 2] / r.errors.back());
  if (r.order_floor > 0 && !(r.empirical_order >= r.order_floor)) r.pass = false;
  if (r.require_decreasing)
    for (size_t i = 1; i < r.errors.size(); ++i)
      if (!(r.errors[i] < r.errors[i - 1])) r.pass = false;
}

/// Up to `count` largest grid sizes not exceeding `cap`, ascending.
std::vector<int> pick_grids(const Options& opt, int count, int cap) {
  std::vector<int> g;
  for (int n : opt.grids)
    if (n <= cap) g.push_back(n);
  std::sort(g.begin(), g.end());
  if (static_cast<int>(g.size()) > count) g.erase(g.begin(), g.end() - count);
  if (g.empty()) g.push_back(cap);
  return g;
}

// ---------------------------------------------------------------- algebra --

CheckResult check_mul_properties(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "algebra/mul-commutativity", .suite = "algebra", .threshold = 0.0};
  auto g = rng_for(opt, r.name);
  double worst = 0;
  for (int i = 0; i < 400; ++i) {
    const Bicomplex a = draw_bc(g, -2, 2, 2), b = draw_bc(g, -2, 2, 2);
    const Bicomplex ab = a * b, ba = b * a;
    if (!(ab == ba)) worst = std::max(worst, 1.0);
  }
  r.errors = {worst};
  r.note = "a*b == b*a bitwise on 400 draws";
  finish(r, t0);
  return r;
}

CheckResult check_assoc_distrib(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "algebra/associativity-distributivity",
                .suite = "algebra",
                .threshold = 4.0 * std::numeric_limits<double>::epsilon()};
  auto g = rng_for(opt, r.name);
  double worst = 0;
  for (int i = 0; i < 400; ++i) {
    const Bicomplex a = draw_bc(g, -2, 2, 2), b = draw_bc(g, -2, 2, 2), c = draw_bc(g, -2, 2, 2);
    // ulps measured against the magnitudes entering the products, not the
    // (possibly cancelling) results
    const auto ulps = [](const Bicomplex& x, const Bicomplex& y, const Hyperbolic& scale) {
      const auto d = (x - y).j_modulus();
      return std::max(d.d1 / std::max(scale.d1, 1e-30), d.d2 / std::max(scale.d2, 1e-30));
    };
    const Hyperbolic sa = a.j_modulus(), sb = b.j_modulus(), sc = c.j_modulus();
    const Hyperbolic s3{sa.d1 * sb.d1 * sc.d1, sa.d2 * sb.d2 * sc.d2};
    const Hyperbolic s2{sa.d1 * (sb.d1 + sc.d1), sa.d2 * (sb.d2 + sc.d2)};
    worst = std::max(worst, ulps((a * b) * c, a * (b * c), s3));
    worst = std::max(worst, ulps(a * (b + c), a * b + a * c, s2));
  }
  r.errors = {worst};
  r.note = "defect in units of the operand magnitudes, 4 ulp budget";
  finish(r, t0);
  return r;
}

CheckResult check_div_roundtrip(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "algebra/div-roundtrip", .suite = "algebra", .threshold = 1e-14};
  auto g = rng_for(opt, r.name);
  double worst = 0;
  for (int i = 0; i < 400; ++i) {
    const Bicomplex a = draw_bc(g, -2, 2, 2);
    Bicomplex b = draw_bc(g, -2, 2, 2);
    if (std::abs(b.c1) < 0.05 || std::abs(b.c2) < 0.05) continue;  // stay off the null cone
    const Bicomplex q = div(a * b, b);
    const auto d = (q - a).j_modulus();
    worst = std::max({worst, d.d1 / std::max(std::abs(a.c1), 1e-30),
                      d.d2 / std::max(std::abs(a.c2), 1e-30)});
  }
  r.errors = {worst};
  finish(r, t0);
  return r;
}

CheckResult check_order_properties(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "algebra/partial-order", .suite = "algebra", .threshold = 0.0};
  auto g = rng_for(opt, r.name);
  int violations = 0;
  for (int i = 0; i < 2000; ++i) {
    const Bicomplex a = draw_bc(g, -2, 2, 2), b = draw_bc(g, -2, 2, 2), c = draw_bc(g, -2, 2, 2);
    if (precedes(a, a)) ++violations;  // irreflexive
    if (precedes(a, b) && precedes(b, c) && !precedes(a, c)) ++violations;  // transitive
    // j-modulus is componentwise nonnegative
    const auto m = a.j_modulus();
    if (m.d1 < 0 || m.d2 < 0) ++violations;
  }
  r.errors = {double(violations)};
  finish(r, t0);
  return r;
}

CheckResult check_param_valid_lemma(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "algebra/param-valid-lemma", .suite = "algebra", .threshold = 0.0};
  auto g = rng_for(opt, r.name);
  int mismatches = 0;
  for (double p0 = -2.0; p0 <= 2.0; p0 += 0.05) {
    for (double p3 = -2.0; p3 <= 2.0; p3 += 0.05) {
      const Bicomplex m =
          Bicomplex::from_real_components(p0, uniform(g, -1, 1), uniform(g, -1, 1), p3);
      if (param_valid(m, 0) != (std::abs(p3) < p0)) ++mismatches;
      if (param_valid(m, 1) != (std::abs(p3) < p0 - 1)) ++mismatches;
    }
  }
  r.errors = {double(mismatches)};
  r.note = "|Im_j(m)| < Re(m) - k  <=>  Re(m_i) > k, on a (p0, p3) grid";
  finish(r, t0);
  return r;
}

CheckResult check_pow_identities(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "algebra/pow-identities", .suite = "algebra", .threshold = 1e-14};
  auto g = rng_for(opt, r.name);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    Bicomplex x = draw_bc(g, 0.1, 2.0, 1.0);
    const auto d = (pow(x, Bicomplex::one()) - x).j_modulus();
    worst = std::max({worst, d.d1, d.d2});
  }
  worst = std::max(worst, std::abs(pow(Bicomplex(4.0), Bicomplex(0.5)).c1 - 2.0));
  // j = e1 - e2, so x^j swaps into (x1, 1/x2) componentwise
  const Bicomplex xj = pow(Bicomplex(C(2, 0), C(3, 0)), Bicomplex::j());
  worst = std::max({worst, std::abs(xj.c1 - 2.0), std::abs(xj.c2 - 1.0 / 3.0)});
  r.errors = {worst};
  finish(r, t0);
  return r;
}

// --------------------------------------------------------------------- ml --

CheckResult check_exp_reduction(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "ml/exp-reduction", .suite = "ml", .threshold = 1e-12};
  auto g = rng_for(opt, r.name);
  const MLParams p;  // m = n = l = 1
  double worst = 0;
  for (int i = 0; i < 400; ++i) {
    const Bicomplex zeta = draw_disk(g, 5.0);
    const auto [v, diag] = ml3(zeta, p, 1e-14);
    worst = std::max(worst, std::abs(v.c1 - std::exp(zeta.c1)) / std::abs(std::exp(zeta.c1)));
    worst = std::max(worst, std::abs(v.c2 - std::exp(zeta.c2)) / std::abs(std::exp(zeta.c2)));
  }
  r.errors = {worst};
  finish(r, t0);
  if (r.seconds >= 1.0) {
    r.pass = false;
    r.note = "runtime budget 1 s exceeded";
  }
  return r;
}

CheckResult check_special_case_lattice(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "ml/special-case-lattice", .suite = "ml", .threshold = 1e-12};
  auto g = rng_for(opt, r.name);
  double worst = 0;
  const auto rel = [](const Bicomplex& x, const Bicomplex& y) {
    const auto d = (x - y).j_modulus();
    const double s = std::max({std::abs(y.c1), std::abs(y.c2), 1e-30});
    return std::max(d.d1, d.d2) / s;
  };
  for (int i = 0; i < 100; ++i) {
    const Bicomplex m = draw_bc(g, 0.6, 1.8, 0.15);
    const Bicomplex n = draw_bc(g, 0.6, 1.8, 0.15);
    const Bicomplex zeta = draw_disk(g, 3.0);
    const double kdef = uniform(g, 0.5, 2.5);

    MLParams p3{m, n, Bicomplex::one(), Bicomplex::zero(), 1.0};
    worst = std::max(worst, rel(ml3(zeta, p3, 1e-14).first, ml2(zeta, m, n, 1e-14).first));
    worst = std::max(worst,
                     rel(ml2(zeta, m, Bicomplex::one(), 1e-14).first, ml1(zeta, m, 1e-14).first));

    MLParams pk{m, n, Bicomplex::one(), Bicomplex::zero(), 1.0};
    worst = std::max(worst, rel(ml_k3(zeta, pk, 1e-14).first, ml3(zeta, pk, 1e-14).first));
    MLParams pk1{m, Bicomplex::one(), Bicomplex::one(), Bicomplex::zero(), kdef};
    worst = std::max(worst, rel(ml_k3(zeta, pk1, 1e-14).first, ml3(zeta, pk1, 1e-14).first));

    // independent route: plain double summation of sum zeta^u / Gamma(mu+n)
    Bicomplex direct = Bicomplex::zero();
    Bicomplex zp = Bicomplex::one();
    for (int u = 0; u < 160; ++u) {
      direct += zp * Bicomplex(crgamma(m.c1 * double(u) + n.c1), crgamma(m.c2 * double(u) + n.c2));
      zp *= zeta;
    }
    worst = std::max(worst, rel(ml3(zeta, p3, 1e-14).first, direct) * 1e-1);
    // (the direct route itself carries ~1e-13 noise; weigh it accordingly)
  }
  r.errors = {worst};
  finish(r, t0);
  return r;
}

CheckResult check_k_gamma_quadrature(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "ml/k-gamma-quadrature", .suite = "ml", .threshold = 1e-8};
  (void)opt;
  // adaptive Simpson on the substituted integrand; plain and independent
  const auto quad = [](const std::function<double(double)>& f, double lo, double hi) {
    std::function<double(double, double, double, double, double, double, int)> rec =
        [&](double a, double b, double fa, double fm, double fb, double whole, int depth) {
          const double m = 0.5 * (a + b);
          const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
          const double flm = f(lm), frm = f(rm);
          const double left = (m - a) / 6 * (fa + 4 * flm + fm);
          const double right = (b - m) / 6 * (fm + 4 * frm + fb);
          if (depth > 48 || std::abs(left + right - whole) < 1e-13 * (1 + std::abs(whole)))
            return left + right + (left + right - whole) / 15;
          return rec(a, m, fa, flm, fm, left, depth + 1) +
                 rec(m, b, fm, frm, fb, right, depth + 1);
        };
    const double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    const double whole = (hi - lo) / 6 * (fa + 4 * fm + fb);
    return rec(lo, hi, fa, fm, fb, whole, 0);
  };

  double worst = 0;
  for (double k : {0.5, 1.0, 2.0, 3.0}) {
    for (double x : {0.5, 1.0, 2.0, 3.5, 5.0, 6.5, 8.0}) {
      // substituting t = u^2 removes the integrable endpoint singularity
      // (t^(x-1) with x >= 1/2 becomes u^(2x-1))
      const double upper = std::sqrt(std::pow(45.0 * k, 1.0 / k));
      const auto integrand = [&](double u) {
        return u <= 0 ? 0.0
                      : 2.0 * std::exp(-std::pow(u, 2.0 * k) / k) * std::pow(u, 2.0 * x - 1.0);
      };
      const double numeric = quad(integrand, 0.0, upper);
      const double closed = k_gamma_scalar(C(x, 0), k).real();
      worst = std::max(worst, std::abs(numeric - closed) / std::abs(closed));
    }
  }
  r.errors = {worst};
  r.note = "contour realized as the positive real axis per component";
  finish(r, t0);
  return r;
}

CheckResult check_term_recurrence(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "ml/term-recurrence", .suite = "ml", .threshold = 1e-10};
  auto g = rng_for(opt, r.name);
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const C m(uniform(g, 0.6, 1.6), uniform(g, -0.1, 0.1));
    const C n(uniform(g, 0.6, 1.6), uniform(g, -0.1, 0.1));
    const C l(uniform(g, -1.0, 2.0), uniform(g, -0.3, 0.3));
    const C zeta = std::polar(uniform(g, 0.3, 3.0), uniform(g, 0.0, 6.28));

    C term = crgamma(n);  // u = 0
    C poch(1);
    for (int u = 0; u < 50; ++u) {
      // direct u+1 term
      poch *= (l + C(double(u), 0));
      C direct = poch;
      for (int q = 1; q <= u + 1; ++q) direct *= zeta / double(q);
      direct *= crgamma(m * double(u + 1) + n);
      // recurrence from term_u
      const C ratio = zeta * (l + C(double(u), 0)) * cgamma(m * double(u) + n) /
                      (double(u + 1) * cgamma(m * double(u + 1) + n));
      const C rec = term * ratio;
      if (std::abs(direct) > 1e-280)
        worst = std::max(worst, std::abs(rec - direct) / std::abs(direct));
      term = direct;
    }
  }
  r.errors = {worst};
  finish(r, t0);
  return r;
}

CheckResult check_tol_halving(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "ml/tolerance-halving", .suite = "ml", .threshold = 1.0};
  auto g = rng_for(opt, r.name);
  double worst = 0;  // measured in units of the larger tolerance
  for (int i = 0; i < 40; ++i) {
    const MLParams p{draw_bc(g, 0.6, 1.6, 0.1), draw_bc(g, 0.6, 1.6, 0.1),
                     draw_bc(g, -0.5, 1.5, 0.2), Bicomplex::zero(), 1.0};
    const Bicomplex zeta = draw_disk(g, 10.0);
    for (double tol : {1e-6, 1e-8, 1e-10}) {
      const Bicomplex a = ml3(zeta, p, tol).first;
      const Bicomplex b = ml3(zeta, p, tol / 2).first;
      const auto d = (a - b).j_modulus();
      const double scale = std::max({std::abs(b.c1), std::abs(b.c2), 1.0});
      worst = std::max(worst, std::max(d.d1, d.d2) / (tol * scale));
    }
  }
  r.errors = {worst};
  r.note = "halving tol moves the value by at most the larger tol";
  finish(r, t0);
  return r;
}

CheckResult check_pochhammer_ratio(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "ml/pochhammer-gamma-ratio", .suite = "ml", .threshold = 1e-11};
  auto g = rng_for(opt, r.name);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const Bicomplex l = draw_bc(g, 0.2, 3.0, 0.5);
    const unsigned u = static_cast<unsigned>(uniform(g, 0, 25));
    const Bicomplex prod = pochhammer2(l, u);
    const Bicomplex ratio = div(gamma2(l + Bicomplex(double(u))), gamma2(l));
    const auto d = (prod - ratio).j_modulus();
    worst = std::max({worst, d.d1 / std::max(std::abs(ratio.c1), 1e-30),
                      d.d2 / std::max(std::abs(ratio.c2), 1e-30)});
  }
  r.errors = {worst};
  finish(r, t0);
  return r;
}

// -------------------------------------------------------------- operators --

struct KernelRegime {
  MLParams p;       // kernel parameters with Re n in [2.0, 2.4]
  Bicomplex alpha;  // RL order in [0.35, 0.65]
  MLParams q;       // second kernel: same m and r, its own n (nu) and l (sigma)
};

KernelRegime draw_kernel_regime(std::mt19937_64& g) {
  KernelRegime k;
  k.p.m = draw_bc(g, 1.05, 1.35, 0.07);
  k.p.n = draw_bc(g, 2.0, 2.4, 0.1);
  k.p.l = draw_bc(g, -0.7, 0.7, 0.15);
  k.p.r = draw_bc(g, -0.6, -0.2, 0.12);
  k.alpha = draw_bc(g, 0.35, 0.65, 0.05);
  k.q = k.p;
  k.q.n = draw_bc(g, 2.0, 2.4, 0.1);
  k.q.l = draw_bc(g, -0.6, 0.6, 0.15);
  return k;
}

SampledFn smooth_fn(std::mt19937_64& g, const Grid& grid) {
  const Bicomplex a = draw_bc(g, -1, 1, 0.5), b = draw_bc(g, -1, 1, 0.5),
                  c = draw_bc(g, -1, 1, 0.5);
  const double w = uniform(g, 0.5, 1.5);
  return SampledFn::sample(grid, [=](double t) {
    return a + b * std::sin(w * t) + c * std::cos(0.7 * w * t) * 0.5;
  });
}

CheckResult check_kernel_shift_integral(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "operators/kernel-shift-integral",
                .suite = "operators",
                .threshold = 5e-4,
                .order_floor = 1.8};
  auto g = rng_for(opt, r.name);
  r.grids = pick_grids(opt, 3, 2049);
  std::vector<KernelRegime> draws;
  for (int i = 0; i < 3; ++i) draws.push_back(draw_kernel_regime(g));
  for (int np : r.grids) {
    const Grid grid{0.0, 2.0, np};
    double worst = 0;
    for (const auto& k : draws) {
      const auto f = sample_kernel(grid, k.p, opt.tol);
      const auto lhs = rl_integral(f, k.alpha, opt.tol);
      MLParams shifted = k.p;
      shifted.n = k.p.n + k.alpha;
      const auto ref = sample_kernel(grid, shifted, opt.tol);
      worst = std::max(worst, sup_rel(lhs.fn.values, ref.values, grid));
    }
    r.errors.push_back(worst);
  }
  finish(r, t0);
  return r;
}

CheckResult check_kernel_shift_derivative(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "operators/kernel-shift-derivative",
                .suite = "operators",
                .threshold = 5e-4,
                .order_floor = 1.0};
  auto g = rng_for(opt, r.name);
  r.grids = pick_grids(opt, 3, 2049);
  std::vector<KernelRegime> draws;
  for (int i = 0; i < 3; ++i) draws.push_back(draw_kernel_regime(g));
  for (int np : r.grids) {
    const Grid grid{0.0, 2.0, np};
    double worst = 0;
    for (const auto& k : draws) {
      const auto f = sample_kernel(grid, k.p, opt.tol);
      const auto lhs = rl_derivative(f, k.alpha, opt.tol);
      MLParams shifted = k.p;
      shifted.n = k.p.n - k.alpha;
      const auto ref = sample_kernel(grid, shifted, opt.tol);
      worst = std::max(worst, sup_rel(lhs.fn.values, ref.values, grid, 0.1));
    }
    r.errors.push_back(worst);
  }
  r.note = "sup over [a + 0.1(b-a), b]: differencing has a boundary layer at a";
  finish(r, t0);
  return r;
}

CheckResult check_convolution_identity(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "operators/convolution-identity",
                .suite = "operators",
                .threshold = 5e-4,
                .order_floor = 1.8};
  auto g = rng_for(opt, r.name);
  r.grids = pick_grids(opt, 3, 2049);
  std::vector<KernelRegime> draws;
  for (int i = 0; i < 3; ++i) draws.push_back(draw_kernel_regime(g));
  for (int np : r.grids) {
    const Grid grid{0.0, 2.0, np};
    double worst = 0;
    for (const auto& k : draws) {
      const auto f = sample_kernel(grid, k.q, opt.tol);  // t^(nu-1) E^sigma(r t^m)
      const auto lhs = prabhakar_integral(f, k.p, opt.tol);
      MLParams comb = k.p;
      comb.n = k.p.n + k.q.n;
      comb.l = k.p.l + k.q.l;
      const auto ref = sample_kernel(grid, comb, opt.tol);
      worst = std::max(worst, sup_rel(lhs.fn.values, ref.values, grid));
    }
    r.errors.push_back(worst);
  }
  finish(r, t0);
  return r;
}

CheckResult check_semigroup(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "operators/semigroup",
                .suite = "operators",
                .threshold = 5e-4,
                .order_floor = 1.8};
  auto g = rng_for(opt, r.name);
  r.grids = pick_grids(opt, 3, 2049);
  std::vector<KernelRegime> draws;
  for (int i = 0; i < 2; ++i) draws.push_back(draw_kernel_regime(g));
  std::mt19937_64 gf = rng_for(opt, r.name + "/f");
  for (int np : r.grids) {
    const Grid grid{0.0, 2.0, np};
    auto gf_copy = gf;
    double worst = 0;
    for (const auto& k : draws) {
      const auto f = smooth_fn(gf_copy, grid);
      const auto two = prabhakar_integral(prabhakar_integral(f, k.q, opt.tol).fn, k.p, opt.tol);
      MLParams comb = k.p;
      comb.n = k.p.n + k.q.n;
      comb.l = k.p.l + k.q.l;
      const auto one = prabhakar_integral(f, comb, opt.tol);
      worst = std::max(worst, sup_rel(two.fn.values, one.fn.values, grid));
    }
    r.errors.push_back(worst);
  }
  finish(r, t0);
  return r;
}

CheckResult check_semigroup_rl_reduction(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "operators/semigroup-rl-reduction",
                .suite = "operators",
                .threshold = 5e-4};
  auto g = rng_for(opt, r.name);
  r.grids = pick_grids(opt, 2, 2049);
  for (int np : r.grids) {
    const Grid grid{0.0, 2.0, np};
    auto gg = rng_for(opt, r.name + "/draws");
    double worst = 0;
    for (int i = 0; i < 2; ++i) {
      auto k = draw_kernel_regime(gg);
      k.q.l = -k.p.l;  // E^l then E^-l collapses to the RL integral of order n + nu
      const auto f = smooth_fn(gg, grid);
      const auto two = prabhakar_integral(prabhakar_integral(f, k.q, opt.tol).fn, k.p, opt.tol);
      const auto ri = rl_integral(f, k.p.n + k.q.n, opt.tol);
      worst = std::max(worst, sup_rel(two.fn.values, ri.fn.values, grid));
    }
    r.errors.push_back(worst);
  }
  (void)g;
  finish(r, t0);
  return r;
}

CheckResult check_rl_composition(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "operators/rl-composition-three-way",
                .suite = "operators",
                .threshold = 5e-4};
  r.grids = pick_grids(opt, 2, 2049);
  for (int np : r.grids) {
    const Grid grid{0.0, 2.0, np};
    auto gg = rng_for(opt, r.name + "/draws");
    double worst = 0;
    for (int i = 0; i < 2; ++i) {
      const auto k = draw_kernel_regime(gg);
      const auto f = smooth_fn(gg, grid);
      const auto a = rl_integral(prabhakar_integral(f, k.p, opt.tol).fn, k.alpha, opt.tol);
      const auto b = prabhakar_integral(rl_integral(f, k.alpha, opt.tol).fn, k.p, opt.tol);
      MLParams shifted = k.p;
      shifted.n = k.p.n + k.alpha;
      const auto c = prabhakar_integral(f, shifted, opt.tol);
      worst = std::max(worst, sup_rel(a.fn.values, c.fn.values, grid));
      worst = std::max(worst, sup_rel(b.fn.values, c.fn.values, grid));
      worst = std::max(worst, sup_rel(a.fn.values, b.fn.values, grid));
    }
    r.errors.push_back(worst);
  }
  finish(r, t0);
  return r;
}

CheckResult check_rl_derivative_composition(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "operators/rl-derivative-composition",
                .suite = "operators",
                .threshold = 5e-4};
  r.grids = pick_grids(opt, 2, 2049);
  for (int np : r.grids) {
    const Grid grid{0.0, 2.0, np};
    auto gg = rng_for(opt, r.name + "/draws");
    double worst = 0;
    for (int i = 0; i < 2; ++i) {
      const auto k = draw_kernel_regime(gg);
      const auto f = smooth_fn(gg, grid);
      // fractional: D^alpha E^l f = E^l_{m,n-alpha} f
      const auto lhs = rl_derivative(prabhakar_integral(f, k.p, opt.tol).fn, k.alpha, opt.tol);
      MLParams shifted = k.p;
      shifted.n = k.p.n - k.alpha;
      const auto ref = prabhakar_integral(f, shifted, opt.tol);
      worst = std::max(worst, sup_rel(lhs.fn.values, ref.fn.values, grid, 0.1));
      // integer corollary: (d/dx)^1 E^l f = E^l_{m,n-1} f, needs param_valid(n, 1)
      if (param_valid(k.p.n, 1)) {
        const auto d1 = rl_derivative(prabhakar_integral(f, k.p, opt.tol).fn,
                                      Bicomplex::one(), opt.tol);
        MLParams s1 = k.p;
        s1.n = k.p.n - Bicomplex::one();
        const auto ref1 = prabhakar_integral(f, s1, opt.tol);
        worst = std::max(worst, sup_rel(d1.fn.values, ref1.fn.values, grid, 0.1));
      }
    }
    r.errors.push_back(worst);
  }
  finish(r, t0);
  return r;
}

CheckResult check_left_inversion(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "operators/left-inversion",
                .suite = "operators",
                .threshold = 1e-2,
                .require_decreasing = true};
  auto g = rng_for(opt, r.name);
  r.grids = pick_grids(opt, 3, 2049);
  MLParams pn, pnu;
  pn.m = draw_bc(g, 1.05, 1.3, 0.06);
  pn.n = draw_bc(g, 2.0, 2.3, 0.08);
  pn.l = draw_bc(g, -0.6, 0.6, 0.12);
  pn.r = draw_bc(g, -0.55, -0.2, 0.1);
  pnu.m = pn.m;
  pnu.n = draw_bc(g, 0.45, 0.6, 0.04);
  pnu.l = -pn.l;
  pnu.r = pn.r;
  std::vector<Bicomplex> coeff;
  for (int q = 0; q < 5; ++q) coeff.push_back(draw_bc(g, -1, 1, 0.4) * (1.0 / (q + 1.0)));
  for (int np : r.grids) {
    const Grid grid{0.0, 2.0, np};
    const auto psi = sample_poly(grid, coeff);
    const auto step1 = prabhakar_integral(psi, pn, opt.tol);
    const auto step2 = prabhakar_integral(step1.fn, pnu, opt.tol);
    const auto rec = rl_derivative(step2.fn, pn.n + pnu.n, opt.tol);
    r.errors.push_back(sup_rel(rec.fn.values, psi.values, grid, 0.1));
  }
  r.note = "random degree-4 bicomplex polynomial; errors must strictly decrease";
  finish(r, t0);
  return r;
}

CheckResult check_boundedness(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "operators/boundedness", .suite = "operators", .threshold = 1.0};
  auto g = rng_for(opt, r.name);
  const Grid grid{0.0, 1.0, pick_grids(opt, 1, 257).back()};
  const double h = grid.h();
  const auto l1 = [&](const std::vector<Bicomplex>& v) {
    Hyperbolic acc{0, 0};
    for (int i = 0; i < grid.n_points; ++i) {
      const double w = (i == 0 || i == grid.n_points - 1) ? 0.5 : 1.0;
      const auto m = v[i].j_modulus();
      acc.d1 += w * h * m.d1;
      acc.d2 += w * h * m.d2;
    }
    return acc;
  };
  double worst_ratio = 0;
  for (int ip = 0; ip < 10; ++ip) {
    MLParams p;
    p.m = draw_bc(g, 0.6, 1.4, 0.1);
    p.n = draw_bc(g, 0.5, 1.8, 0.1);
    p.l = draw_bc(g, -0.8, 0.8, 0.2);
    p.r = draw_bc(g, -0.8, 0.8, 0.2);
    const Hyperbolic K = boundedness_constant(p, grid.a, grid.b, 1e-14);
    for (int jf = 0; jf < 20; ++jf) {
      const auto f = smooth_fn(g, grid);
      const auto Ef = prabhakar_integral(f, p, opt.tol);
      const Hyperbolic lhs = l1(Ef.fn.values);
      const Hyperbolic rhs = l1(f.values);
      worst_ratio = std::max({worst_ratio, lhs.d1 / (K.d1 * rhs.d1), lhs.d2 / (K.d2 * rhs.d2)});
    }
  }
  r.errors = {worst_ratio};
  r.note = "discrete L1 of |E^l f|_j against K |f|_j, componentwise (ratio < 1)";
  finish(r, t0);
  r.pass = worst_ratio < 1.0;
  return r;
}

CheckResult check_linearity(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "operators/linearity", .suite = "operators", .threshold = 1e-12};
  auto g = rng_for(opt, r.name);
  const Grid grid{0.0, 1.0, pick_grids(opt, 1, 513).back()};
  double worst = 0;
  for (int i = 0; i < 3; ++i) {
    MLParams p;
    p.m = draw_bc(g, 0.7, 1.2, 0.08);
    p.n = draw_bc(g, 0.55, 0.85, 0.05);
    p.l = draw_bc(g, 0.1, 0.6, 0.1);
    p.r = draw_bc(g, -0.5, -0.1, 0.1);
    const auto f = smooth_fn(g, grid), fg = smooth_fn(g, grid);
    const Bicomplex c = draw_bc(g, -1.5, 1.5, 0.8), d = draw_bc(g, -1.5, 1.5, 0.8);
    SampledFn combo{grid, {}};
    combo.values.resize(grid.n_points);
    for (int j = 0; j < grid.n_points; ++j)
      combo.values[j] = c * f.values[j] + d * fg.values[j];

    const auto apply3 = [&](const SampledFn& x) {
      return std::array<OperatorResult, 3>{prabhakar_integral(x, p, opt.tol),
                                           prabhakar_derivative(x, p, opt.tol),
                                           regularized_derivative(x, p, opt.tol)};
    };
    const auto oc = apply3(combo), of = apply3(f), og = apply3(fg);
    for (int k = 0; k < 3; ++k) {
      double sup = 0, scale = 0;
      for (int j = 0; j < grid.n_points; ++j) {
        const Bicomplex want = c * of[k].fn.values[j] + d * og[k].fn.values[j];
        sup = std::max(sup, hyper_max((oc[k].fn.values[j] - want).j_modulus()));
        scale = std::max(scale, hyper_max(want.j_modulus()));
      }
      worst = std::max(worst, sup / std::max(scale, 1e-30));
    }
  }
  r.errors = {worst};
  r.note = "prabhakar integral, derivative and regularized derivative";
  finish(r, t0);
  return r;
}

CheckResult check_regularized_dual_form(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "operators/regularized-dual-form",
                .suite = "operators",
                .threshold = 5e-4};
  auto g = rng_for(opt, r.name);
  r.grids = pick_grids(opt, 3, 2049);
  MLParams p;
  p.m = draw_bc(g, 0.7, 1.1, 0.06);
  p.n = draw_bc(g, 0.45, 0.8, 0.05);
  p.l = draw_bc(g, 0.1, 0.55, 0.1);
  p.r = draw_bc(g, -0.5, -0.15, 0.08);
  std::vector<Bicomplex> coeff;
  for (int q = 0; q < 5; ++q) coeff.push_back(draw_bc(g, -1, 1, 0.4) * (1.0 / (q + 1.0)));
  for (int np : r.grids) {
    const Grid grid{0.0, 1.0, np};
    const auto f = sample_poly(grid, coeff);
    const auto forms = regularized_derivative_forms(f, p, opt.tol);
    r.errors.push_back(
        sup_rel(forms.of_derivative.fn.values, forms.via_initial_data.fn.values, grid, 0.1));
  }
  finish(r, t0);
  return r;
}

// ---------------------------------------------------------------- laplace --

CheckResult check_kernel_transform(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "laplace/kernel-transform", .suite = "laplace", .threshold = 1e-6};
  auto g = rng_for(opt, r.name);
  double worst = 0;
  int done = 0;
  while (done < 50) {
    MLParams p;
    p.m = draw_bc(g, 0.7, 1.2, 0.08);
    p.n = draw_bc(g, 1.2, 2.2, 0.12);
    p.l = draw_bc(g, -0.8, 0.9, 0.15);
    p.r = draw_disk(g, 0.8);
    const Bicomplex xi{C(uniform(g, 2.0, 5.0), uniform(g, -0.8, 0.8)),
                       C(uniform(g, 2.0, 5.0), uniform(g, -0.8, 0.8))};
    const Bicomplex q = p.r * pow(xi, -p.m);
    if (!precedes(q, Bicomplex(0.8))) continue;  // criterion region |r xi^-m|_j < 0.8
    const double M = 0.2 + std::max(std::pow(std::abs(p.r.c1), 1.0 / p.m.c1.real()),
                                    std::pow(std::abs(p.r.c2), 1.0 / p.m.c2.real()));
    if (std::min(xi.c1.real(), xi.c2.real()) < M + 0.8) continue;
    ++done;
    const Bicomplex closed = kernel_lt_closed(p, xi);
    const Bicomplex numeric = forward_lt_numeric(
        [&](double t) { return prabhakar_kernel(t, p, 1e-13).first; }, xi, M, 1e-9);
    worst = std::max(worst, std::abs(closed.c1 - numeric.c1) / std::abs(closed.c1));
    worst = std::max(worst, std::abs(closed.c2 - numeric.c2) / std::abs(closed.c2));
  }
  r.errors = {worst};
  finish(r, t0);
  if (r.seconds >= 30.0) {
    r.pass = false;
    r.note = "runtime budget 30 s exceeded";
  }
  return r;
}

CheckResult check_convolution_theorem(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "laplace/convolution-theorem", .suite = "laplace", .threshold = 1e-5};
  auto g = rng_for(opt, r.name);
  const Grid grid{0.0, 20.0, pick_grids(opt, 1, 2049).back()};
  double worst = 0;
  for (int i = 0; i < 5; ++i) {
    const auto draw_decaying = [&] {
      const Bicomplex a = draw_bc(g, -1, 1, 0.4), b = draw_bc(g, -1, 1, 0.4);
      const double delta = uniform(g, 0.5, 1.0), w = uniform(g, 0.3, 0.9);
      return SampledFn::sample(grid, [=](double t) {
        return (a + b * std::cos(w * t)) * std::exp(-delta * t);
      });
    };
    const auto f = draw_decaying(), h = draw_decaying();
    const Bicomplex xi = Bicomplex::from_real_components(uniform(g, 1.5, 3.0),
                                                         uniform(g, -0.4, 0.4),
                                                         uniform(g, -0.4, 0.4),
                                                         uniform(g, -0.3, 0.3));
    const auto defect = convolution_lt_check(f, h, xi, 0.0);
    worst = std::max({worst, defect.d1, defect.d2});
  }
  r.errors = {worst};
  r.note = "smooth exponential-order pairs on [0, 20]";
  finish(r, t0);
  return r;
}

CheckResult check_inverse_roundtrip(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "laplace/inverse-roundtrip", .suite = "laplace", .threshold = 1e-8};
  auto g = rng_for(opt, r.name);
  double worst = 0;
  for (int i = 0; i < 6; ++i) {
    MLParams p;  // scalar-valid draws: equal real components
    p.m = Bicomplex(uniform(g, 0.55, 0.95));
    p.n = Bicomplex(uniform(g, 0.5, 1.8));
    p.l = Bicomplex(uniform(g, 0.1, 0.9));
    p.r = Bicomplex(uniform(g, -0.9, -0.1));
    for (double t = 0.1; t <= 5.0; t += 0.49) {
      const Bicomplex got = inverse_lt_kernel(p, t);
      const Bicomplex want = prabhakar_kernel(t, p, 1e-14).first;
      const double scale = std::max(1.0, std::abs(want.c1));
      worst = std::max(worst, std::abs(got.c1 - want.c1) / scale);
    }
  }
  r.errors = {worst};
  finish(r, t0);
  return r;
}

CheckResult check_operator_transform_identity(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "laplace/operator-transform-identity",
                .suite = "laplace",
                .threshold = 1e-13};
  auto g = rng_for(opt, r.name);
  double worst = 0;
  for (int i = 0; i < 60; ++i) {
    MLParams p;
    p.m = draw_bc(g, 0.7, 1.2, 0.08);
    p.n = draw_bc(g, 0.5, 0.95, 0.04);
    p.l = draw_bc(g, -0.8, 0.9, 0.15);
    const Bicomplex xi{C(uniform(g, 2.0, 5.0), uniform(g, -0.6, 0.6)),
                       C(uniform(g, 2.0, 5.0), uniform(g, -0.6, 0.6))};
    p.r = draw_disk(g, 0.7) * pow(xi, p.m);
    const Bicomplex ft = draw_bc(g, -2, 2, 1.0);
    // (i) is algebraically the closed kernel transform times f~
    const Bicomplex a = operator_lt(LTOperatorKind::integral, p, xi, ft);
    const Bicomplex b = kernel_lt_closed(p, xi) * ft;
    const auto d = (a - b).j_modulus();
    worst = std::max({worst, d.d1 / std::max(std::abs(b.c1), 1e-30),
                      d.d2 / std::max(std::abs(b.c2), 1e-30)});
    // (iii) with vanishing initial data collapses to the bare product
    const Bicomplex c3 = operator_lt(LTOperatorKind::regularized, p, xi, ft, {Bicomplex::zero()});
    const Bicomplex head = div(pow(pow(xi, p.m) - p.r, p.l), pow(xi, p.m * p.l - p.n));
    const auto d3 = (c3 - head * ft).j_modulus();
    worst = std::max({worst, d3.d1 / std::max(std::abs((head * ft).c1), 1e-30)});
    // (iii) classical Caputo reduction at l = 0, kappa = 1
    MLParams pc = p;
    pc.l = Bicomplex::zero();
    const Bicomplex tau = draw_bc(g, -1, 1, 0.5);
    const Bicomplex got = operator_lt(LTOperatorKind::regularized, pc, xi, ft, {tau});
    const Bicomplex want = pow(xi, pc.n) * ft - pow(xi, pc.n - Bicomplex::one()) * tau;
    const auto dc = (got - want).j_modulus();
    worst = std::max(worst, hyper_max(dc) / std::max(1.0, hyper_max(want.j_modulus())));
  }
  r.errors = {worst};
  finish(r, t0);
  return r;
}

CheckResult check_region_monotonicity(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "laplace/region-monotonicity", .suite = "laplace", .threshold = 0.0};
  auto g = rng_for(opt, r.name);
  int violations = 0;
  for (int i = 0; i < 2000; ++i) {
    const Bicomplex xi = Bicomplex::from_real_components(
        uniform(g, -3, 3), uniform(g, -2, 2), uniform(g, -2, 2), uniform(g, -2, 2));
    const double M = uniform(g, -1, 1);
    if (lt_point(xi, M).region_ok &&
        !lt_point(xi + Bicomplex(uniform(g, 0.0, 3.0)), M).region_ok)
      ++violations;
  }
  r.errors = {double(violations)};
  finish(r, t0);
  return r;
}

// ----------------------------------------------------------------- cauchy --

CheckResult check_homogeneous_exp(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "cauchy/homogeneous-exp", .suite = "cauchy", .threshold = 1e-10};
  auto g = rng_for(opt, r.name);
  double worst = 0;
  for (int i = 0; i < 4; ++i) {
    CauchyProblem prob;
    prob.mode = CauchyProblem::Mode::homogeneous;
    prob.p.l = Bicomplex::zero();
    prob.p.n = Bicomplex::one();
    prob.p.m = draw_bc(g, 0.5, 1.2, 0.1);  // immaterial at l = 0
    prob.p.r = draw_bc(g, -0.5, 0.5, 0.2);
    prob.A = draw_disk(g, 1.0);
    prob.taus = {draw_bc(g, -1.5, 1.5, 0.8)};
    prob.grid = {0.0, 2.0, 257};
    const auto sol = solve_homogeneous(prob, 256, 1e-13);
    double sup = 0, scale = 0;
    for (int j = 0; j < prob.grid.n_points; ++j) {
      const double t = prob.grid.t(j);
      const Bicomplex ref = prob.taus[0] * Bicomplex(std::exp(prob.A.c1 * t),
                                                     std::exp(prob.A.c2 * t));
      sup = std::max(sup, hyper_max((sol.fn.values[j] - ref).j_modulus()));
      scale = std::max(scale, hyper_max(ref.j_modulus()));
    }
    worst = std::max(worst, sup / std::max(scale, 1e-30));
  }
  r.errors = {worst};
  r.note = "pure series, no quadrature";
  finish(r, t0);
  return r;
}

CauchyProblem draw_residual_problem(std::mt19937_64& g) {
  CauchyProblem prob;
  prob.mode = CauchyProblem::Mode::homogeneous;
  prob.p.m = draw_bc(g, 0.7, 0.95, 0.04);
  prob.p.n = draw_bc(g, 0.55, 0.85, 0.04);
  prob.p.l = draw_bc(g, 0.15, 0.45, 0.05);
  prob.p.r = draw_bc(g, -0.5, -0.1, 0.06);
  prob.A = draw_bc(g, -0.8, 0.8, 0.2);
  prob.taus = {draw_bc(g, 0.5, 1.5, 0.4)};
  return prob;
}

CheckResult check_homogeneous_residual(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "cauchy/homogeneous-residual",
                .suite = "cauchy",
                .threshold = 1e-4,
                .order_floor = 1.5};
  auto g = rng_for(opt, r.name);
  r.grids = pick_grids(opt, 3, 1025);
  CauchyProblem prob = draw_residual_problem(g);
  for (int np : r.grids) {
    prob.grid = {0.0, 1.0, np};
    const auto sol = solve_homogeneous(prob, 256, 1e-12);
    r.errors.push_back(hyper_max(residual_check(sol.fn, prob)));
  }
  r.note = "residual of ^C D^l f - A f, boundary layer trimmed at 15%";
  finish(r, t0);
  return r;
}

CheckResult check_corollary_consistency(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "cauchy/corollary-consistency", .suite = "cauchy", .threshold = 1e-4};
  auto g = rng_for(opt, r.name);
  double worst = 0;
  for (int i = 0; i < 2; ++i) {
    CauchyProblem prob;
    prob.mode = CauchyProblem::Mode::nonhomogeneous;
    prob.p.m = Bicomplex(uniform(g, 0.7, 0.95), uniform(g, 0.7, 0.95));
    prob.p.n = Bicomplex(uniform(g, 0.55, 0.9), uniform(g, 0.55, 0.9));
    prob.p.l = Bicomplex(uniform(g, 0.1, 0.6), uniform(g, 0.1, 0.6));
    prob.p.r = Bicomplex(uniform(g, -0.6, -0.1), uniform(g, -0.6, -0.1));
    prob.k_const = Bicomplex::zero();
    prob.taus = {draw_bc(g, 0.4, 1.2, 0.3)};
    prob.grid = {0.0, 1.0, pick_grids(opt, 1, 513).back()};
    auto gg = g;
    prob.forcing = smooth_fn(gg, prob.grid);
    const auto a = solve_nonhomogeneous(prob, 1e-9);
    CauchyProblem pc = prob;
    pc.mode = CauchyProblem::Mode::corollary;
    const auto b = solve_corollary(pc, opt.tol);
    worst = std::max(worst, sup_rel(a.fn.values, b.fn.values, prob.grid));
  }
  r.errors = {worst};
  r.note = "transform-domain solver at k = 0 against the corollary form";
  finish(r, t0);
  return r;
}

CheckResult check_corollary_recovery(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "cauchy/corollary-recovery", .suite = "cauchy", .threshold = 5e-4};
  auto g = rng_for(opt, r.name);
  r.grids = pick_grids(opt, 3, 2049);
  CauchyProblem prob;
  prob.mode = CauchyProblem::Mode::corollary;
  prob.p.m = draw_bc(g, 0.75, 0.95, 0.04);
  prob.p.n = draw_bc(g, 0.6, 0.85, 0.04);
  prob.p.l = draw_bc(g, 0.15, 0.5, 0.06);
  prob.p.r = draw_bc(g, -0.5, -0.15, 0.06);
  prob.taus = {draw_bc(g, 0.4, 1.2, 0.3)};
  auto gg = rng_for(opt, r.name + "/forcing");
  for (int np : r.grids) {
    prob.grid = {0.0, 1.0, np};
    auto gf = gg;
    prob.forcing = smooth_fn(gf, prob.grid);
    const auto sol = solve_corollary(prob, opt.tol);
    const auto res = residual_check(sol.fn, prob, 0.1);
    // normalize by the forcing scale
    r.errors.push_back(hyper_max(res) / std::max(sup_abs(prob.forcing.values), 1e-30));
  }
  r.note = "regularized derivative of the corollary solution recovers g";
  finish(r, t0);
  return r;
}

CheckResult check_taylor_a0(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "cauchy/taylor-at-A0", .suite = "cauchy", .threshold = 1e-12};
  auto g = rng_for(opt, r.name);
  double worst = 0;
  for (int kappa : {1, 2}) {
    CauchyProblem prob;
    prob.mode = CauchyProblem::Mode::homogeneous;
    prob.p.m = draw_bc(g, 0.7, 1.1, 0.05);
    prob.p.n = kappa == 1 ? draw_bc(g, 0.5, 0.9, 0.04) : draw_bc(g, 1.4, 1.9, 0.04);
    prob.p.l = draw_bc(g, 0.1, 0.5, 0.05);
    prob.p.r = draw_bc(g, -0.4, 0.4, 0.1);
    prob.A = Bicomplex::zero();
    prob.taus = {draw_bc(g, -1, 1, 0.4)};
    if (kappa == 2) prob.taus.push_back(draw_bc(g, -1, 1, 0.4));
    prob.grid = {0.0, 1.5, 129};
    const auto sol = solve_homogeneous(prob, 64, 1e-13);
    for (int j = 0; j < prob.grid.n_points; ++j) {
      Bicomplex ref = prob.taus[0];
      if (kappa == 2) ref += prob.taus[1] * prob.grid.t(j);
      worst = std::max(worst, hyper_max((sol.fn.values[j] - ref).j_modulus()));
    }
  }
  r.errors = {worst};
  r.note = "A = 0 leaves the Taylor polynomial of the initial data";
  finish(r, t0);
  return r;
}

CheckResult check_ml1_reduction(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "cauchy/ml1-reduction", .suite = "cauchy", .threshold = 1e-10};
  auto g = rng_for(opt, r.name);
  CauchyProblem prob;
  prob.mode = CauchyProblem::Mode::homogeneous;
  prob.p.l = Bicomplex::zero();
  prob.p.n = Bicomplex(0.5);
  prob.p.m = draw_bc(g, 0.6, 1.1, 0.05);
  prob.p.r = draw_bc(g, -0.4, 0.4, 0.1);
  prob.A = draw_bc(g, -0.8, 0.8, 0.2);
  prob.taus = {Bicomplex::one()};
  prob.grid = {0.0, 2.0, 129};
  const auto sol = solve_homogeneous(prob, 256, 1e-13);
  double worst = 0;
  for (int j = 1; j < prob.grid.n_points; ++j) {
    const double t = prob.grid.t(j);
    const auto [ref, diag] = ml1(prob.A * Bicomplex(std::sqrt(t)), Bicomplex(0.5), 1e-14);
    worst = std::max(worst, hyper_max((sol.fn.values[j] - ref).j_modulus()));
  }
  r.errors = {worst};
  r.note = "l = 0, n = 1/2: solution is E_{1/2}(A sqrt(t))";
  finish(r, t0);
  return r;
}

CheckResult check_superposition(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "cauchy/superposition", .suite = "cauchy", .threshold = 1e-12};
  auto g = rng_for(opt, r.name);
  CauchyProblem prob = draw_residual_problem(g);
  prob.p.n = draw_bc(g, 1.3, 1.8, 0.05);  // kappa = 2: two initial values
  prob.grid = {0.0, 1.0, 129};
  const std::vector<Bicomplex> ta{draw_bc(g, -1, 1, 0.4), draw_bc(g, -1, 1, 0.4)};
  const std::vector<Bicomplex> tb{draw_bc(g, -1, 1, 0.4), draw_bc(g, -1, 1, 0.4)};
  prob.taus = ta;
  const auto fa = solve_homogeneous(prob, 256, 1e-13);
  prob.taus = tb;
  const auto fb = solve_homogeneous(prob, 256, 1e-13);
  prob.taus = {ta[0] + tb[0], ta[1] + tb[1]};
  const auto fab = solve_homogeneous(prob, 256, 1e-13);
  double sup = 0, scale = 0;
  for (int j = 0; j < prob.grid.n_points; ++j) {
    const Bicomplex want = fa.fn.values[j] + fb.fn.values[j];
    sup = std::max(sup, hyper_max((fab.fn.values[j] - want).j_modulus()));
    scale = std::max(scale, hyper_max(want.j_modulus()));
  }
  r.errors = {sup / std::max(scale, 1e-30)};
  finish(r, t0);
  return r;
}

CheckResult check_homogeneous_vs_transform(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "cauchy/homogeneous-vs-transform", .suite = "cauchy", .threshold = 1e-6};
  auto g = rng_for(opt, r.name);
  CauchyProblem prob;
  prob.mode = CauchyProblem::Mode::homogeneous;
  prob.p.m = Bicomplex(uniform(g, 0.75, 0.95));
  prob.p.n = Bicomplex(uniform(g, 0.6, 0.9));
  prob.p.l = Bicomplex(uniform(g, 0.15, 0.45));
  prob.p.r = Bicomplex(uniform(g, -0.5, -0.15));
  prob.A = Bicomplex(uniform(g, 0.3, 0.8));  // growing solution exercises the contour shift
  prob.taus = {Bicomplex::one()};
  prob.grid = {0.0, 1.0, 257};
  const auto series = solve_homogeneous(prob, 256, 1e-12);
  CauchyProblem tp = prob;
  tp.mode = CauchyProblem::Mode::nonhomogeneous;
  tp.k_const = -prob.A;
  const auto transform = solve_nonhomogeneous(tp, 1e-10);
  r.errors = {sup_rel(transform.fn.values, series.fn.values, prob.grid)};
  r.note = "A-homogeneous problem recast as k = -A in the transform solver";
  finish(r, t0);
  return r;
}

CheckResult check_residual_sensitivity(const Options& opt) {
  const auto t0 = Clock::now();
  CheckResult r{.name = "cauchy/residual-sensitivity", .suite = "cauchy", .threshold = 0.0};
  auto g = rng_for(opt, r.name);
  CauchyProblem prob;
  prob.mode = CauchyProblem::Mode::corollary;
  prob.p.m = draw_bc(g, 0.75, 0.95, 0.03);
  prob.p.n = draw_bc(g, 0.6, 0.85, 0.03);
  prob.p.l = draw_bc(g, 0.15, 0.45, 0.04);
  prob.p.r = draw_bc(g, -0.5, -0.15, 0.05);
  prob.taus = {Bicomplex::one()};
  prob.grid = {0.0, 1.0, 1025};
  auto gg = g;
  prob.forcing = smooth_fn(gg, prob.grid);
  const auto sol = solve_corollary(prob, opt.tol);
  const double clean = hyper_max(residual_check(sol.fn, prob));
  SampledFn bent = sol.fn;
  for (int j = 0; j < prob.grid.n_points; ++j) {
    const double t = prob.grid.t(j);
    bent.values[j] += Bicomplex(1e-3 * t * t);
  }
  const double bent_res = hyper_max(residual_check(bent, prob));
  const bool detectable = bent_res > 1e-4 && bent_res > 5.0 * clean;
  r.errors = {detectable ? 0.0 : 1.0};
  std::ostringstream os;
  os << "clean " << clean << ", perturbed " << bent_res;
  r.note = os.str();
  finish(r, t0);
  return r;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all || suite == "algebra") {
    out.push_back(check_mul_properties(opt));
    out.push_back(check_assoc_distrib(opt));
    out.push_back(check_div_roundtrip(opt));
    out.push_back(check_order_properties(opt));
    out.push_back(check_param_valid_lemma(opt));
    out.push_back(check_pow_identities(opt));
  }
  if (all || suite == "ml") {
    out.push_back(check_exp_reduction(opt));
    out.push_back(check_special_case_lattice(opt));
    out.push_back(check_k_gamma_quadrature(opt));
    out.push_back(check_term_recurrence(opt));
    out.push_back(check_tol_halving(opt));
    out.push_back(check_pochhammer_ratio(opt));
  }
  if (all || suite == "operators") {
    out.push_back(check_linearity(opt));
    out.push_back(check_kernel_shift_integral(opt));
    out.push_back(check_kernel_shift_derivative(opt));
    out.push_back(check_convolution_identity(opt));
    out.push_back(check_semigroup(opt));
    out.push_back(check_semigroup_rl_reduction(opt));
    out.push_back(check_rl_composition(opt));
    out.push_back(check_rl_derivative_composition(opt));
    out.push_back(check_left_inversion(opt));
    out.push_back(check_boundedness(opt));
    out.push_back(check_regularized_dual_form(opt));
  }
  if (all || suite == "laplace") {
    out.push_back(check_kernel_transform(opt));
    out.push_back(check_convolution_theorem(opt));
    out.push_back(check_inverse_roundtrip(opt));
    out.push_back(check_operator_transform_identity(opt));
    out.push_back(check_region_monotonicity(opt));
  }
  if (all || suite == "cauchy") {
    out.push_back(check_homogeneous_exp(opt));
    out.push_back(check_homogeneous_residual(opt));
    out.push_back(check_corollary_consistency(opt));
    out.push_back(check_corollary_recovery(opt));
    out.push_back(check_taylor_a0(opt));
    out.push_back(check_ml1_reduction(opt));
    out.push_back(check_superposition(opt));
    out.push_back(check_homogeneous_vs_transform(opt));
    out.push_back(check_residual_sensitivity(opt));
  }
  if (out.empty())
    raise(errc::invalid_argument,
          "unknown suite '" + suite + "' (use all|algebra|ml|operators|laplace|cauchy)");
  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string report_json(const std::vector<CheckResult>& checks, const std::string& suite,
                        const Options& opt) {
  nlohmann::json j;
  j["suite"] = suite;
  j["passed"] = all_passed(checks);
  {
    std::ostringstream os;
    os << "0x" << std::hex << std::uppercase << opt.seed;
    j["config"] = {{"grids", opt.grids}, {"seed", os.str()}, {"series_tol", opt.tol}};
  }
  j["environment"] = {{"project", "bcfrac"},
                      {"version", BCFRAC_VERSION},
                      {"compiler", BCFRAC_COMPILER},
                      {"build", BCFRAC_BUILD_TYPE}};
  auto& arr = j["identities"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["suite"] = c.suite;
    if (!c.grids.empty()) e["grid_sizes"] = c.grids;
    e["errors"] = c.errors;
    if (std::isfinite(c.empirical_order)) e["empirical_order"] = c.empirical_order;
    e["threshold"] = c.threshold;
    if (c.order_floor > 0) e["order_floor"] = c.order_floor;
    e["pass"] = c.pass;
    e["seconds"] = c.seconds;
    if (!c.note.empty()) e["note"] = c.note;
    arr.push_back(std::move(e));
  }
  return j.dump(2);
}

std::string report_text(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.errors.empty()) {
      os << "  err=";
      os.precision(3);
      os << std::scientific << c.errors.back() << " (<= " << c.threshold << ")";
    }
    if (std::isfinite(c.empirical_order)) {
      os.precision(2);
      os << std::fixed << "  order=" << c.empirical_order;
      if (c.order_floor > 0) os << " (>= " << c.order_floor << ")";
    }
    os.precision(2);
    os << std::fixed << "  [" << c.seconds << "s]" << '\n';
  }
  return os.str();
}

}  // namespace bcfrac::verify
