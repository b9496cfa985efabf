// Part of bcfrac, a bicomplex fractional calculus library.
// SPDX-License-Identifier: Apache-2.0

#include "bcfrac/cauchy.hpp"

#include <algorithm>
#include <cmath>

#include "bcfrac/gamma.hpp"
#include "bcfrac/laplace.hpp"

namespace bcfrac {

namespace {

using C = std::complex<double>;

void validate_problem(const CauchyProblem& prob, int expected_taus) {
  prob.grid.validate();
  if (prob.grid.a != 0.0) raise(errc::invalid_argument, "cauchy grid must start at 0");
  validate_ml_params(prob.p);
  const auto [k1, k2] = ceil_orders(prob.p.n);
  if (k1 != k2)
    raise(errc::mismatched_ceil, "cauchy problem requires equal component ceil orders");
  if (expected_taus >= 0 && static_cast<int>(prob.taus.size()) != expected_taus)
    raise(errc::arity_mismatch, "expected " + std::to_string(expected_taus) +
                                    " initial values, got " + std::to_string(prob.taus.size()));
  if (!prob.forcing.values.empty()) {
    prob.forcing.validate();
    if (!(prob.forcing.grid == prob.grid))
      raise(errc::invalid_argument, "forcing must be sampled on the problem grid");
  }
}

bool has_forcing(const CauchyProblem& prob) { return !prob.forcing.values.empty(); }

}  // namespace

OperatorResult solve_homogeneous(const CauchyProblem& prob, int j_max, double tol) {
  const int kappa = ceil_orders(prob.p.n).first;
  validate_problem(prob, kappa);
  if (prob.mode != CauchyProblem::Mode::homogeneous)
    raise(errc::invalid_argument, "problem mode is not homogeneous");

  const int n_pts = prob.grid.n_points;
  std::vector<Bicomplex> f(n_pts, Bicomplex::zero());
  f[0] = prob.taus[0];

  Bicomplex Aj = Bicomplex::one();
  double fscale = prob.taus[0].j_modulus().max();
  int quiet = 0;
  long j = 0;
  for (; j <= j_max; ++j) {
    double term_sup = 0.0;
    for (int i = 1; i < n_pts; ++i) {
      const Bicomplex tb(prob.grid.t(i));
      const Bicomplex arg = prob.p.r * pow(tb, prob.p.m);
      Bicomplex term = Bicomplex::zero();
      for (int q = 0; q < kappa; ++q) {
        const Bicomplex order = prob.p.n * double(j) + Bicomplex(double(q) + 1.0);
        auto [e, diag] = detail::ml_series<double>(arg, prob.p.m, order, prob.p.l * double(j),
                                                   prob.p.k, tol, kSeriesMaxTermsDefault);
        term += prob.taus[q] * pow(tb, order - Bicomplex::one()) * e;
      }
      term = Aj * term;
      f[i] += term;
      term_sup = std::max(term_sup, term.j_modulus().max());
    }
    if (j == 0)
      for (int i = 1; i < n_pts; ++i) fscale = std::max(fscale, f[i].j_modulus().max());
    quiet = (term_sup <= tol * std::max(1.0, fscale)) ? quiet + 1 : 0;
    if (quiet >= 2) break;
    Aj *= prob.A;
    if (prob.A.is_zero()) break;  // only the j = 0 shell survives
  }
  if (j > j_max)
    raise(errc::non_convergent, "homogeneous series did not settle within j_max shells");

  OperatorResult res;
  res.fn = {prob.grid, std::move(f)};
  res.scheme = "homogeneous double series, " + std::to_string(j + 1) + " shells";
  res.kernel_terms = j + 1;
  return res;
}

namespace {

using LD = long double;
using CL = ComplexL;

struct ScalarParams {
  CL m, n, l, r, k;
};

CL cauchy_denominator(const ScalarParams& sp, const CL& s) {
  const CL ls = std::log(s);
  return std::exp(sp.n * ls + sp.l * std::log(CL(1) - sp.r * std::exp(-sp.m * ls))) + sp.k;
}

ScalarParams component_params(const MLParams& p, const Bicomplex& k_const, int comp) {
  const auto pick = [comp](const Bicomplex& x) {
    const C c = comp == 0 ? x.c1 : x.c2;
    return CL(c.real(), c.imag());
  };
  return {pick(p.m), pick(p.n), pick(p.l), pick(p.r), pick(k_const)};
}

/// Rightmost positive real abscissa where the transform denominator loses
/// positivity, scanned coarsely; the contour is shifted one unit past it.
double contour_shift(const ScalarParams& sp1, const ScalarParams& sp2) {
  double worst = 0.0;
  for (const auto& sp : {sp1, sp2}) {
    for (int i = 0; i < 240; ++i) {
      const double x = std::pow(10.0, -2.0 + 4.0 * i / 239.0);  // 1e-2 .. 1e2
      const CL d = cauchy_denominator(sp, CL(x, 0));
      if (d.real() <= 0 || std::abs(d) < 1e-3) worst = std::max(worst, x);
    }
  }
  return worst > 0 ? worst + 1.0 : 0.0;
}

/// Product integration of int_0^t tau^(nu-1) phi(tau) g(t-tau) dtau with
/// piecewise-linear phi and g: exact moments on the singular first cell,
/// 4-point Gauss on the rest.
std::vector<C> singular_conv(const std::vector<C>& phi, const std::vector<C>& g, const C& nu,
                             double h) {
  static constexpr double gx[4] = {0.06943184420297371, 0.33000947820757187,
                                   0.66999052179242813, 0.93056815579702629};
  static constexpr double gw[4] = {0.17392742256872693, 0.32607257743127307,
                                   0.32607257743127307, 0.17392742256872693};
  const int n = static_cast<int>(phi.size());
  const C hnu = std::exp(nu * std::log(h));  // h^nu (complex exponent)

  std::vector<C> Wa(n), Wb(n), Wc(n);
  {
    // p = 1: J_j = h^nu / (nu + j)
    const C j0 = hnu / nu, j1 = hnu / (nu + 1.0), j2 = hnu / (nu + 2.0);
    Wa[1] = j0 - 2.0 * j1 + j2;
    Wb[1] = j1 - j2;
    Wc[1] = j2;
  }
  for (int p = 2; p < n; ++p) {
    C j0(0), j1(0), j2(0);
    for (int q = 0; q < 4; ++q) {
      const C w = gw[q] * std::exp((nu - 1.0) * std::log(double(p - 1) + gx[q]));
      j0 += w;
      j1 += w * gx[q];
      j2 += w * (gx[q] * gx[q]);
    }
    j0 *= hnu;
    j1 *= hnu;
    j2 *= hnu;
    Wa[p] = j0 - 2.0 * j1 + j2;
    Wb[p] = j1 - j2;
    Wc[p] = j2;
  }

  std::vector<C> out(n, C(0));
  for (int k = 1; k < n; ++k) {
    C acc(0);
    for (int p = 1; p <= k; ++p) {
      acc += Wa[p] * phi[p - 1] * g[k - p + 1] +
             Wb[p] * (phi[p - 1] * g[k - p] + phi[p] * g[k - p + 1]) +
             Wc[p] * phi[p] * g[k - p];
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace

OperatorResult solve_nonhomogeneous(const CauchyProblem& prob, double tol, int talbot_nodes) {
  validate_problem(prob, 1);
  if (prob.mode == CauchyProblem::Mode::homogeneous)
    raise(errc::invalid_argument, "problem mode is homogeneous; use solve_homogeneous");
  const auto [k1, k2] = ceil_orders(prob.p.n);
  if (k1 != 1 || k2 != 1)
    raise(errc::arity_mismatch,
          "the transform-domain solver covers a single initial value (ceil Re n = 1)");
  if (prob.p.l.c1.imag() != 0 || prob.p.l.c2.imag() != 0 || prob.p.l.c1.real() < 0 ||
      prob.p.l.c2.real() < 0 || prob.p.l.c1.real() >= 1 || prob.p.l.c2.real() >= 1)
    raise(errc::invalid_order,
          "the transform-domain solver requires hyperbolic l with components in [0, 1)");
  if (prob.p.k != 1.0)
    raise(errc::invalid_argument, "the transform-domain solver is defined for k = 1");

  const Bicomplex k_const =
      prob.mode == CauchyProblem::Mode::corollary ? Bicomplex::zero() : prob.k_const;
  const auto sp1 = component_params(prob.p, k_const, 0);
  const auto sp2 = component_params(prob.p, k_const, 1);

  TalbotOptions topt;
  topt.nodes = talbot_nodes;
  topt.tol = tol;
  topt.shift = contour_shift(sp1, sp2);

  const auto H = [&](const CL& s) -> std::pair<CL, CL> {
    return {CL(1) / cauchy_denominator(sp1, s), CL(1) / cauchy_denominator(sp2, s)};
  };
  const auto G = [&](const CL& s) -> std::pair<CL, CL> {
    const CL ls = std::log(s);
    const auto head = [&](const ScalarParams& sp) {
      return std::exp((sp.n - CL(1)) * ls + sp.l * std::log(CL(1) - sp.r * std::exp(-sp.m * ls)));
    };
    return {head(sp1) / cauchy_denominator(sp1, s), head(sp2) / cauchy_denominator(sp2, s)};
  };

  const int n_pts = prob.grid.n_points;
  std::vector<Bicomplex> f(n_pts, Bicomplex::zero());
  f[0] = prob.taus[0];
  for (int i = 1; i < n_pts; ++i) {
    const auto [g1, g2] = detail::talbot_invert(G, prob.grid.t(i), topt);
    f[i] = prob.taus[0] * Bicomplex(C((double)g1.real(), (double)g1.imag()),
                                    C((double)g2.real(), (double)g2.imag()));
  }

  if (has_forcing(prob)) {
    // h(t) = t^(n-1) phi(t); phi is regular with phi(0) = 1/Gamma(n).
    const double h_step = prob.grid.h();
    std::vector<C> phi1(n_pts), phi2(n_pts);
    phi1[0] = crgamma(C((double)sp1.n.real(), (double)sp1.n.imag()));
    phi2[0] = crgamma(C((double)sp2.n.real(), (double)sp2.n.imag()));
    for (int i = 1; i < n_pts; ++i) {
      const double t = prob.grid.t(i);
      const auto [h1, h2] = detail::talbot_invert(H, t, topt);
      const CL tf1 = std::exp((CL(1) - sp1.n) * std::log((LD)t));
      const CL tf2 = std::exp((CL(1) - sp2.n) * std::log((LD)t));
      const CL p1 = h1 * tf1, p2 = h2 * tf2;
      phi1[i] = C((double)p1.real(), (double)p1.imag());
      phi2[i] = C((double)p2.real(), (double)p2.imag());
    }
    std::vector<C> g1(n_pts), g2(n_pts);
    for (int i = 0; i < n_pts; ++i) {
      g1[i] = prob.forcing.values[i].c1;
      g2[i] = prob.forcing.values[i].c2;
    }
    const auto conv1 = singular_conv(phi1, g1, prob.p.n.c1, h_step);
    const auto conv2 = singular_conv(phi2, g2, prob.p.n.c2, h_step);
    for (int i = 0; i < n_pts; ++i) f[i] += Bicomplex(conv1[i], conv2[i]);
  }

  OperatorResult res;
  res.fn = {prob.grid, std::move(f)};
  res.scheme = "transform-domain: fixed-talbot H inversion + singular product convolution";
  res.kernel_terms = talbot_nodes;
  res.kernel_tail = topt.shift;
  return res;
}

OperatorResult solve_corollary(const CauchyProblem& prob, double series_tol) {
  validate_problem(prob, 1);
  if (prob.mode == CauchyProblem::Mode::homogeneous)
    raise(errc::invalid_argument, "problem mode is homogeneous; use solve_homogeneous");
  const auto [k1, k2] = ceil_orders(prob.p.n);
  if (k1 != 1 || k2 != 1)
    raise(errc::arity_mismatch, "the corollary form covers a single initial value");

  OperatorResult res;
  if (has_forcing(prob)) {
    res = prabhakar_integral(prob.forcing, prob.p, series_tol);
  } else {
    res.fn = {prob.grid, std::vector<Bicomplex>(prob.grid.n_points, Bicomplex::zero())};
  }
  for (auto& v : res.fn.values) v += prob.taus[0];
  res.scheme = "corollary: tau_0 + prabhakar integral of g";
  return res;
}

Hyperbolic residual_check(const SampledFn& f, const CauchyProblem& prob, double trim) {
  f.validate();
  if (!(f.grid == prob.grid))
    raise(errc::invalid_argument, "solution grid does not match the problem grid");
  const OperatorResult d = regularized_derivative(f, prob.p);

  const double t_min = prob.grid.a + trim * (prob.grid.b - prob.grid.a);
  Hyperbolic sup{0.0, 0.0};
  for (int i = 0; i < prob.grid.n_points; ++i) {
    if (prob.grid.t(i) < t_min) continue;
    Bicomplex r = d.fn.values[i];
    switch (prob.mode) {
      case CauchyProblem::Mode::homogeneous:
        r -= prob.A * f.values[i];
        break;
      case CauchyProblem::Mode::nonhomogeneous:
        r += prob.k_const * f.values[i];
        [[fallthrough]];
      case CauchyProblem::Mode::corollary:
        if (has_forcing(prob)) r -= prob.forcing.values[i];
        break;
    }
    const Hyperbolic a = r.j_modulus();
    sup.d1 = std::max(sup.d1, a.d1);
    sup.d2 = std::max(sup.d2, a.d2);
  }
  return sup;
}

}  // namespace bcfrac
