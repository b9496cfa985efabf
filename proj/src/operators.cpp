// Part of bcfrac, a bicomplex fractional calculus library.
// SPDX-License-Identifier: Apache-2.0

#include "bcfrac/operators.hpp"

#include <algorithm>
#include <cmath>

#include "bcfrac/gamma.hpp"

namespace bcfrac {
namespace detail {

using C = std::complex<double>;

namespace {

std::pair<std::vector<C>, std::vector<C>> split_components(const std::vector<Bicomplex>& v) {
  std::vector<C> a(v.size()), b(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    a[i] = v[i].c1;
    b[i] = v[i].c2;
  }
  return {std::move(a), std::move(b)};
}

std::vector<Bicomplex> join_components(const std::vector<C>& a, const std::vector<C>& b) {
  std::vector<Bicomplex> v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v[i] = Bicomplex(a[i], b[i]);
  return v;
}

}  // namespace

PowerSeries kernel_power_series(C m, C n, C l, C r, double kdef, double T, double tol) {
  PowerSeries s;
  if (!(m.real() > 0)) raise(errc::invalid_order, "kernel requires Re(m) > 0 per component");
  if (n.real() < 0) raise(errc::invalid_order, "kernel requires Re(n) >= 0 per component");
  if (n.real() == 0) {
    if (n.imag() != 0)
      raise(errc::invalid_order,
            "second parameter with zero real part and nonzero imaginary part is outside the "
            "quadrature scheme");
    s.identity = true;  // the u = 0 term degenerates to a Dirac unit
  }
  if (std::abs(r) * std::pow(T, m.real()) > kSeriesArgumentGuard)
    raise(errc::non_convergent, "kernel series argument exceeds the guard |r| T^Re(m) <= 50");

  const double logk = std::log(kdef);
  // c_u = (l)_u r^u / (u! Gamma_k(m u + n)), formed in log space.
  auto coeff = [&](long u, const C& poch_vs_fact) -> C {
    const C zk = (m * double(u) + n) / kdef;
    if (is_gamma_pole(zk)) return C(0);
    const C head = poch_vs_fact - (zk - 1.0) * logk;
    if (zk.real() >= 0.5) return std::exp(head - clgamma_right(zk));
    return std::exp(head) * crgamma(zk);
  };

  // Truncate on the interval mass |c_u| T^(Re mu_u + 1)/(Re mu_u + 1) with the
  // same three-ratio geometric tail rule as the function series.
  const C logr = (r == C(0)) ? C(0) : std::log(r);
  C poch_vs_fact(0);  // sum_i [log(l+i) - log(1+i)] + u log r
  double mass_sum = 0, prev_mass = -1, prev_ratio = 0, tail = 0;
  int window = 0;
  bool converged = false;
  long u = 0;
  for (; u < kSeriesMaxTermsDefault; ++u) {
    const C cu = coeff(u, poch_vs_fact);
    const C mu = m * double(u) + n - 1.0;
    // cu vanishes exactly at reciprocal-Gamma zeros; skip those terms before
    // forming the mass (Re mu + 1 = 0 there, and 0 * inf would poison it).
    const double mass =
        (cu == C(0)) ? 0.0 : std::abs(cu) * std::pow(T, mu.real() + 1.0) / (mu.real() + 1.0);
    if (mass != 0.0) {
      s.c.push_back(cu);
      s.mu.push_back(mu);
    }
    mass_sum += mass;

    if (prev_mass > 0 && mass > 0) {
      const double ratio = mass / prev_mass;
      window = (ratio < 1.0 && (window == 0 || ratio <= prev_ratio)) ? window + 1 : 0;
      if (window >= 3) {
        tail = mass * ratio / (1.0 - ratio);
        if (tail <= tol * std::max(mass_sum, 1e-300)) {
          converged = true;
          ++u;
          break;
        }
      }
      prev_ratio = ratio;
    }
    if (mass > 0) prev_mass = mass;

    if (r == C(0) || l + C(double(u)) == C(0)) {  // series terminates exactly
      tail = 0;
      converged = true;
      ++u;
      break;
    }
    poch_vs_fact += std::log(l + C(double(u))) - std::log(double(u + 1)) + logr;
  }
  if (!converged) raise(errc::non_convergent, "kernel series did not converge in term budget");
  s.terms = u;
  s.tail = tail;
  s.mass = mass_sum;
  return s;
}

ConvWeights build_conv_weights(const PowerSeries& s, double h, int n_points) {
  using CL = std::complex<long double>;
  ConvWeights w;
  w.identity = s.identity;
  w.has_terms = !s.c.empty();
  w.A.assign(n_points, CL(0));
  w.B.assign(n_points, CL(0));
  std::vector<CL> P(n_points);  // q^(mu+1)
  for (size_t t = 0; t < s.c.size(); ++t) {
    const CL cu(s.c[t].real(), s.c[t].imag());
    const CL mu(s.mu[t].real(), s.mu[t].imag());
    const CL e1 = mu + 1.0L, e2 = mu + 2.0L;
    const CL H1 = std::exp(e1 * std::log((long double)h)) / e1;
    const CL H2 = std::exp(e2 * std::log((long double)h)) / (e2 * (long double)h);
    P[0] = CL(0);
    for (int q = 1; q < n_points; ++q) P[q] = std::exp(e1 * std::log((long double)q));
    for (int p = 1; p < n_points; ++p) {
      const CL dP = P[p] - P[p - 1];
      const CL dQ = P[p] * (long double)p - P[p - 1] * (long double)(p - 1);
      const CL m0 = H1 * dP;
      const CL m1h = H2 * dQ;  // M1/h
      w.A[p] += cu * ((long double)p * m0 - m1h);
      w.B[p] += cu * (m1h - (long double)(p - 1) * m0);
    }
  }
  return w;
}

std::vector<std::complex<long double>> apply_conv_wide(const ConvWeights& w,
                                                       const std::vector<C>& y) {
  using CL = std::complex<long double>;
  const int n = static_cast<int>(y.size());
  std::vector<CL> yl(n);
  for (int i = 0; i < n; ++i) yl[i] = CL(y[i].real(), y[i].imag());
  std::vector<CL> out(n, CL(0));
  if (w.has_terms) {
    for (int k = 1; k < n; ++k) {
      CL acc(0);
      for (int p = 1; p <= k; ++p) acc += w.A[p] * yl[k - p + 1] + w.B[p] * yl[k - p];
      out[k] = acc;
    }
  }
  if (w.identity)
    for (int k = 0; k < n; ++k) out[k] += yl[k];
  return out;
}

std::vector<C> apply_conv(const ConvWeights& w, const std::vector<C>& y) {
  const auto wide = apply_conv_wide(w, y);
  std::vector<C> out(wide.size());
  for (size_t i = 0; i < wide.size(); ++i)
    out[i] = C((double)wide[i].real(), (double)wide[i].imag());
  return out;
}

}  // namespace detail

namespace {

using C = std::complex<double>;

std::pair<std::vector<C>, std::vector<C>> split_components(const std::vector<Bicomplex>& v) {
  std::vector<C> a(v.size()), b(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    a[i] = v[i].c1;
    b[i] = v[i].c2;
  }
  return {std::move(a), std::move(b)};
}

std::vector<Bicomplex> join_components(const std::vector<C>& a, const std::vector<C>& b) {
  std::vector<Bicomplex> v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v[i] = Bicomplex(a[i], b[i]);
  return v;
}

struct ComponentSeries {
  detail::PowerSeries s1, s2;
};

ComponentSeries kernel_series_pair(const MLParams& p, double T, double tol) {
  return {detail::kernel_power_series(p.m.c1, p.n.c1, p.l.c1, p.r.c1, p.k, T, tol),
          detail::kernel_power_series(p.m.c2, p.n.c2, p.l.c2, p.r.c2, p.k, T, tol)};
}

/// Convolution with the Prabhakar kernel of parameters p (an n component with
/// zero real part contributes the identity).
OperatorResult convolve_kernel(const SampledFn& f, const MLParams& p, double tol,
                               std::string scheme) {
  f.validate();
  const double T = f.grid.b - f.grid.a;
  const auto cs = kernel_series_pair(p, T, tol);
  const auto w1 = detail::build_conv_weights(cs.s1, f.grid.h(), f.grid.n_points);
  const auto w2 = detail::build_conv_weights(cs.s2, f.grid.h(), f.grid.n_points);
  auto [y1, y2] = split_components(f.values);

  OperatorResult res;
  res.fn.grid = f.grid;
  res.fn.values = join_components(detail::apply_conv(w1, y1), detail::apply_conv(w2, y2));
  res.scheme = std::move(scheme);
  res.kernel_terms = std::max(cs.s1.terms, cs.s2.terms);
  res.kernel_tail = std::max(cs.s1.tail, cs.s2.tail);
  return res;
}

MLParams inner_derivative_params(const MLParams& p, int k1, int k2) {
  MLParams q = p;
  q.n = Bicomplex(C(double(k1), 0) - p.n.c1, C(double(k2), 0) - p.n.c2);
  q.l = -p.l;
  return q;
}

void check_grid_for_derivative(const SampledFn& f, int kappa) {
  if (f.grid.n_points < 4 * kappa + 4)
    raise(errc::grid_too_coarse, "derivative of ceil order " + std::to_string(kappa) +
                                     " needs at least " + std::to_string(4 * kappa + 4) +
                                     " grid points");
}

/// kappa-fold differencing, allowing distinct per-component integer orders.
std::vector<Bicomplex> diff_components(const std::vector<Bicomplex>& v, double h, int k1, int k2) {
  if (k1 == k2) return detail::diff_k(v, h, k1);
  auto [y1, y2] = split_components(v);
  return join_components(detail::diff_k(std::move(y1), h, k1),
                         detail::diff_k(std::move(y2), h, k2));
}

std::pair<int, int> derivative_orders(const Bicomplex& n, bool split_ceil, errc mismatch) {
  const auto [k1, k2] = ceil_orders(n);
  if (k1 != k2 && !split_ceil)
    raise(mismatch, "ceil(Re n1) = " + std::to_string(k1) + " and ceil(Re n2) = " +
                        std::to_string(k2) + " differ; enable split_ceil to decouple components");
  if (k1 < 0 || k2 < 0) raise(errc::invalid_order, "derivative requires positive real parts");
  return {k1, k2};
}

MLParams rl_params(const Bicomplex& order) {
  return MLParams{Bicomplex::one(), order, Bicomplex::zero(), Bicomplex::zero(), 1.0};
}

}  // namespace

OperatorResult rl_integral(const SampledFn& f, const Bicomplex& alpha, double series_tol) {
  if (!param_valid(alpha))
    raise(errc::invalid_order, "rl_integral: requires Re(alpha1) > 0 and Re(alpha2) > 0");
  return convolve_kernel(f, rl_params(alpha), series_tol,
                         "rl-integral: product integration, exact singular moments");
}

OperatorResult prabhakar_integral(const SampledFn& f, const MLParams& p, double series_tol) {
  validate_ml_params(p);
  return convolve_kernel(f, p, series_tol,
                         "prabhakar-integral: kernel series x product integration");
}

namespace {

OperatorResult derivative_impl(const SampledFn& f, const MLParams& p, double series_tol,
                               bool split_ceil, errc mismatch, std::string scheme) {
  f.validate();
  const auto [k1, k2] = derivative_orders(p.n, split_ceil, mismatch);
  check_grid_for_derivative(f, std::max(k1, k2));
  const double T = f.grid.b - f.grid.a, h = f.grid.h();
  const auto cs = kernel_series_pair(inner_derivative_params(p, k1, k2), T, series_tol);
  auto [y1, y2] = split_components(f.values);
  const auto d1 = detail::diff_k(
      detail::apply_conv_wide(detail::build_conv_weights(cs.s1, h, f.grid.n_points), y1), h, k1);
  const auto d2 = detail::diff_k(
      detail::apply_conv_wide(detail::build_conv_weights(cs.s2, h, f.grid.n_points), y2), h, k2);

  OperatorResult res;
  res.fn.grid = f.grid;
  res.fn.values.resize(f.grid.n_points);
  for (int i = 0; i < f.grid.n_points; ++i)
    res.fn.values[i] = Bicomplex(C((double)d1[i].real(), (double)d1[i].imag()),
                                 C((double)d2[i].real(), (double)d2[i].imag()));
  res.scheme = std::move(scheme);
  res.kernel_terms = std::max(cs.s1.terms, cs.s2.terms);
  res.kernel_tail = std::max(cs.s1.tail, cs.s2.tail);
  return res;
}

}  // namespace

OperatorResult rl_derivative(const SampledFn& f, const Bicomplex& alpha, double series_tol,
                             bool split_ceil) {
  if (!param_valid(alpha))
    raise(errc::invalid_order, "rl_derivative: requires Re(alpha1) > 0 and Re(alpha2) > 0");
  return derivative_impl(f, rl_params(alpha), series_tol, split_ceil, errc::invalid_order,
                         "rl-derivative: product integration + central differences");
}

OperatorResult prabhakar_derivative(const SampledFn& f, const MLParams& p, double series_tol,
                                    bool split_ceil) {
  validate_ml_params(p);
  return derivative_impl(f, p, series_tol, split_ceil, errc::mismatched_ceil,
                         "prabhakar-derivative: product integration + central differences");
}

RegularizedForms regularized_derivative_forms(const SampledFn& f, const MLParams& p,
                                              double series_tol) {
  validate_ml_params(p);
  f.validate();
  const auto [k1, k2] = derivative_orders(p.n, false, errc::mismatched_ceil);
  const int kappa = k1;
  check_grid_for_derivative(f, kappa);
  if (kappa > 3)
    raise(errc::invalid_argument,
          "regularized derivative supports ceil orders up to 3 (initial data extraction)");

  RegularizedForms out;

  // Form 1: convolve the kappa-th numerical derivative of f.
  SampledFn df{f.grid, detail::diff_k(f.values, f.grid.h(), kappa)};
  out.of_derivative =
      convolve_kernel(df, inner_derivative_params(p, kappa, kappa), series_tol,
                      "regularized: kernel convolution of d^k f");

  // Form 2: unregularized derivative minus the initial-data series.
  OperatorResult d = prabhakar_derivative(f, p, series_tol);
  std::vector<Bicomplex> init(kappa);
  for (int q = 0; q < kappa; ++q) init[q] = detail::one_sided_derivative(f.values, f.grid.h(), q);
  const double a = f.grid.a;
  for (int i = 1; i < f.grid.n_points; ++i) {
    const Bicomplex tb(f.grid.t(i) - a);
    const Bicomplex arg = p.r * pow(tb, p.m);
    for (int q = 0; q < kappa; ++q) {
      const Bicomplex nq = Bicomplex(double(q) + 1.0) - p.n;
      auto [e, diag] = detail::ml_series<double>(arg, p.m, nq, -p.l, p.k, series_tol,
                                                 kSeriesMaxTermsDefault);
      (void)diag;
      d.fn.values[i] -= pow(tb, nq - Bicomplex::one()) * e * init[q];
    }
  }
  // At t = a the initial-data series is singular; both forms agree with the
  // convolution form there (an empty integral, or d^k f for the identity part).
  d.fn.values[0] = out.of_derivative.fn.values[0];
  d.scheme = "regularized: D^l f minus initial-data series";
  out.via_initial_data = std::move(d);
  return out;
}

OperatorResult regularized_derivative(const SampledFn& f, const MLParams& p, double series_tol,
                                      bool split_ceil) {
  if (split_ceil) {
    // Decoupled integer orders: only the convolution form is defined cleanly.
    validate_ml_params(p);
    f.validate();
    const auto [k1, k2] = derivative_orders(p.n, true, errc::mismatched_ceil);
    check_grid_for_derivative(f, std::max(k1, k2));
    SampledFn df{f.grid, diff_components(f.values, f.grid.h(), k1, k2)};
    return convolve_kernel(df, inner_derivative_params(p, k1, k2), series_tol,
                           "regularized (split ceil): kernel convolution of d^k f");
  }
  return regularized_derivative_forms(f, p, series_tol).via_initial_data;
}

Hyperbolic boundedness_constant(const MLParams& p, double a, double b, double tol) {
  validate_ml_params(p);
  if (!(b > a)) raise(errc::invalid_argument, "boundedness_constant requires b > a");
  const auto cs = kernel_series_pair(p, b - a, tol);
  return {cs.s1.mass, cs.s2.mass};
}

OperatorResult apply_operator(const OperatorSpec& spec, const SampledFn& f) {
  switch (spec.kind) {
    case OperatorKind::rl_integral:
      return rl_integral(f, spec.alpha, spec.series_tol);
    case OperatorKind::rl_derivative:
      return rl_derivative(f, spec.alpha, spec.series_tol, spec.split_ceil);
    case OperatorKind::prabhakar_integral:
      return prabhakar_integral(f, spec.p, spec.series_tol);
    case OperatorKind::prabhakar_derivative:
      return prabhakar_derivative(f, spec.p, spec.series_tol, spec.split_ceil);
    case OperatorKind::regularized_prabhakar:
      return regularized_derivative(f, spec.p, spec.series_tol, spec.split_ceil);
  }
  raise(errc::invalid_argument, "unknown operator kind");
}

}  // namespace bcfrac
