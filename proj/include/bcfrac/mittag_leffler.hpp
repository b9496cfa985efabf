// Part of bcfrac, a bicomplex fractional calculus library.
// SPDX-License-Identifier: Apache-2.0

#ifndef BCFRAC_MITTAG_LEFFLER_HPP
#define BCFRAC_MITTAG_LEFFLER_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>

#include "bcfrac/bicomplex.hpp"
#include "bcfrac/error.hpp"
#include "bcfrac/gamma.hpp"

namespace bcfrac {

struct SeriesDiagnostics {
  long terms_used = 0;
  double tail_estimate = 0.0;
  bool converged = false;
};

/// Parameter bundle for the Mittag-Leffler / Prabhakar family. Admissibility
/// of m and n means Re of both idempotent components positive (equivalently
/// |Im_j| < Re); l and r are unconstrained, k is the Gamma deformation.
struct MLParams {
  Bicomplex m = Bicomplex::one();
  Bicomplex n = Bicomplex::one();
  Bicomplex l = Bicomplex::one();
  Bicomplex r = Bicomplex::zero();
  double k = 1.0;
};

/// Components of r, m, ... beyond which the series is not evaluated; large
/// argument asymptotics are out of scope.
inline constexpr double kSeriesArgumentGuard = 50.0;
inline constexpr long kSeriesMaxTermsDefault = 10000;

namespace detail {

template <class Real>
struct MLSeriesResult {
  std::complex<Real> value{};
  long terms = 0;
  Real tail = 0;
  bool converged = false;
};

/// One idempotent component of the three-parameter series
///   sum_u (l)_u zeta^u / (u! Gamma_k(m u + n)).
/// Terms are formed in log space (the Pochhammer/factorial logs are
/// accumulated as a difference, so the l = 1 exponential case is exact) and
/// the sum is compensated. Truncation: geometric tail bound |t_u| rho/(1-rho)
/// once three consecutive term ratios are below one and decreasing.
template <class Real>
MLSeriesResult<Real> ml_series_component(const std::complex<Real>& zeta,
                                         const std::complex<Real>& m,
                                         const std::complex<Real>& n,
                                         const std::complex<Real>& l, Real kdef, Real tol,
                                         long max_terms) {
  using C = std::complex<Real>;
  MLSeriesResult<Real> out;
  const Real logk = std::log(kdef);

  auto denom_recip = [&](long u) -> C {
    const C zk = (m * Real(u) + n) / kdef;
    if (is_gamma_pole(zk)) return C(0);
    if (zk.real() >= Real(0.5)) return std::exp(-(zk - Real(1)) * logk - clgamma_right(zk));
    return std::exp(-(zk - Real(1)) * logk) * crgamma(zk);
  };

  if (zeta == C(0)) {
    out.value = denom_recip(0);
    out.terms = 1;
    out.converged = true;
    return out;
  }

  const C logz = std::log(zeta);
  C sum(0), comp(0);  // Kahan compensation
  auto add = [&](const C& t) {
    const C y = t - comp;
    const C s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  };

  C poch_vs_fact(0);  // sum_i [log(l+i) - log(1+i)]
  Real prev_abs = 0, prev_ratio = 0;
  int window = 0;
  bool finite_collapse = false;

  long u = 0;
  for (; u < max_terms; ++u) {
    const C term = std::exp(poch_vs_fact + Real(u) * logz) * denom_recip(u);
    add(term);
    const Real a = std::abs(term);

    if (u > 0 && prev_abs > Real(0)) {
      const Real ratio = a / prev_abs;
      window = (ratio < Real(1) && (window == 0 || ratio <= prev_ratio)) ? window + 1 : 0;
      if (window >= 3) {
        const Real tail = a * ratio / (Real(1) - ratio);
        if (tail <= tol * std::max(std::abs(sum), Real(1e-300))) {
          out.tail = tail;
          out.converged = true;
          ++u;
          break;
        }
      }
      prev_ratio = ratio;
    } else if (u > 0 && a == Real(0) && prev_abs == Real(0)) {
      out.converged = true;  // factorial underflow; the tail is numerically gone
      ++u;
      break;
    }
    prev_abs = a;

    const C factor = l + Real(u);
    if (factor == C(0)) {  // Pochhammer hits zero: the series is a polynomial
      finite_collapse = true;
      ++u;
      break;
    }
    poch_vs_fact += std::log(factor) - std::log(Real(u + 1));
  }

  out.value = sum;
  out.terms = u;
  if (finite_collapse) out.converged = true;
  return out;
}

/// Full bicomplex series, no admissibility check on n (the operator layer
/// legitimately needs shifted second parameters with nonpositive real part,
/// where the series still converges through the entire 1/Gamma).
template <class Real>
std::pair<BicomplexT<Real>, SeriesDiagnostics> ml_series(const BicomplexT<Real>& zeta,
                                                         const BicomplexT<Real>& m,
                                                         const BicomplexT<Real>& n,
                                                         const BicomplexT<Real>& l, Real kdef,
                                                         Real tol, long max_terms) {
  if (!param_valid(m))
    raise(errc::invalid_order,
          "ml series requires Re(m1) > 0 and Re(m2) > 0 (|Im_j(m)| < Re(m))");
  if (!(kdef > Real(0))) raise(errc::invalid_argument, "ml series requires k > 0");
  if (std::abs(zeta.c1) > Real(kSeriesArgumentGuard) ||
      std::abs(zeta.c2) > Real(kSeriesArgumentGuard))
    raise(errc::non_convergent, "series argument exceeds the evaluation guard |zeta_i| <= 50");

  const auto r1 = ml_series_component(zeta.c1, m.c1, n.c1, l.c1, kdef, tol, max_terms);
  const auto r2 = ml_series_component(zeta.c2, m.c2, n.c2, l.c2, kdef, tol, max_terms);
  if (!r1.converged || !r2.converged)
    raise(errc::non_convergent, "ml series did not converge within the term budget");

  SeriesDiagnostics diag;
  diag.terms_used = std::max(r1.terms, r2.terms);
  diag.tail_estimate = static_cast<double>(std::max(r1.tail, r2.tail));
  diag.converged = true;
  return {BicomplexT<Real>(r1.value, r2.value), diag};
}

}  // namespace detail

inline void validate_ml_params(const MLParams& p) {
  if (!param_valid(p.m))
    raise(errc::invalid_order, "param_valid: requires Re(m1) > 0 and Re(m2) > 0");
  if (!param_valid(p.n))
    raise(errc::invalid_order, "param_valid: requires Re(n1) > 0 and Re(n2) > 0");
  if (!(p.k > 0)) raise(errc::invalid_argument, "deformation parameter k must be positive");
}

/// Three-parameter (Prabhakar) Mittag-Leffler function, honoring the k
/// deformation in p. Evaluated internally in extended precision.
inline std::pair<Bicomplex, SeriesDiagnostics> ml3(const Bicomplex& zeta, const MLParams& p,
                                                   double tol = 1e-12,
                                                   long max_terms = kSeriesMaxTermsDefault) {
  validate_ml_params(p);
  auto [v, d] = detail::ml_series<long double>(widen(zeta), widen(p.m), widen(p.n), widen(p.l),
                                               (long double)p.k, (long double)tol, max_terms);
  return {narrow(v), d};
}

inline std::pair<Bicomplex, SeriesDiagnostics> ml_k3(const Bicomplex& zeta, const MLParams& p,
                                                     double tol = 1e-12,
                                                     long max_terms = kSeriesMaxTermsDefault) {
  return ml3(zeta, p, tol, max_terms);
}

/// Two-parameter function: l = 1 (since (1)_u = u!).
inline std::pair<Bicomplex, SeriesDiagnostics> ml2(const Bicomplex& zeta, const Bicomplex& m,
                                                   const Bicomplex& n, double tol = 1e-12,
                                                   long max_terms = kSeriesMaxTermsDefault) {
  return ml3(zeta, MLParams{m, n, Bicomplex::one(), Bicomplex::zero(), 1.0}, tol, max_terms);
}

/// One-parameter function: n = 1.
inline std::pair<Bicomplex, SeriesDiagnostics> ml1(const Bicomplex& zeta, const Bicomplex& m,
                                                   double tol = 1e-12,
                                                   long max_terms = kSeriesMaxTermsDefault) {
  return ml2(zeta, m, Bicomplex::one(), tol, max_terms);
}

/// Prabhakar kernel t^(n-1) E^l_{m,n}(r t^m) for t > 0.
inline std::pair<Bicomplex, SeriesDiagnostics> prabhakar_kernel(double t, const MLParams& p,
                                                                double tol = 1e-12,
                                                                long max_terms = kSeriesMaxTermsDefault) {
  if (!(t > 0)) raise(errc::domain_error, "prabhakar_kernel requires t > 0");
  validate_ml_params(p);
  const Bicomplex tb(t);
  auto [e, diag] = ml3(p.r * pow(tb, p.m), p, tol, max_terms);
  return {pow(tb, p.n - Bicomplex::one()) * e, diag};
}

}  // namespace bcfrac

#endif
