// Part of bcfrac, a bicomplex fractional calculus library.
// SPDX-License-Identifier: Apache-2.0

#ifndef BCFRAC_OPERATORS_HPP
#define BCFRAC_OPERATORS_HPP

#include <complex>
#include <string>
#include <vector>

#include "bcfrac/grid.hpp"
#include "bcfrac/mittag_leffler.hpp"

namespace bcfrac {

enum class OperatorKind {
  rl_integral,
  rl_derivative,
  prabhakar_integral,
  prabhakar_derivative,
  regularized_prabhakar,
};

struct OperatorSpec {
  OperatorKind kind = OperatorKind::rl_integral;
  Bicomplex alpha;  // order for the RL kinds
  MLParams p;       // parameters for the Prabhakar kinds
  double series_tol = 1e-12;
  // Escape hatch: when ceil(Re n1) != ceil(Re n2), differentiate each
  // idempotent component to its own integer order instead of failing. The
  // components then evolve as two fully decoupled complex problems.
  bool split_ceil = false;
};

struct OperatorResult {
  SampledFn fn;
  std::string scheme;
  long kernel_terms = 0;     // retained kernel-series terms (max over components)
  double kernel_tail = 0.0;  // tail bound of the truncated kernel series
};

OperatorResult rl_integral(const SampledFn& f, const Bicomplex& alpha, double series_tol = 1e-12);
OperatorResult rl_derivative(const SampledFn& f, const Bicomplex& alpha, double series_tol = 1e-12,
                             bool split_ceil = false);
OperatorResult prabhakar_integral(const SampledFn& f, const MLParams& p, double series_tol = 1e-12);
OperatorResult prabhakar_derivative(const SampledFn& f, const MLParams& p,
                                    double series_tol = 1e-12, bool split_ceil = false);

/// Regularized (Caputo-type) Prabhakar derivative. Values are produced from
/// the initial-value form (unregularized derivative minus the initial-data
/// series), which keeps differencing after the smoothing convolution; the
/// convolve-the-derivative form is available through
/// regularized_derivative_forms for cross-checking.
OperatorResult regularized_derivative(const SampledFn& f, const MLParams& p,
                                      double series_tol = 1e-12, bool split_ceil = false);

struct RegularizedForms {
  OperatorResult of_derivative;     // E^{-l}_{m,k-n} d^k f / dt^k
  OperatorResult via_initial_data;  // D^l f - sum_p t^{p-n} E^{-l}_{m,p-n+1}(r t^m) f^(p)(a+)
};
RegularizedForms regularized_derivative_forms(const SampledFn& f, const MLParams& p,
                                              double series_tol = 1e-12);

/// L1 operator-norm bound K = K1 e1 + K2 e2 of the Prabhakar integral on
/// [a, b]:
///   K_i = (b-a)^Re(n_i) sum_k |(l_i)_k| |r_i (b-a)^Re(m_i)|^k
///         / (k! |Gamma(m_i k + n_i)| [Re(m_i) k + Re(n_i)]).
Hyperbolic boundedness_constant(const MLParams& p, double a, double b, double tol = 1e-14);

OperatorResult apply_operator(const OperatorSpec& spec, const SampledFn& f);

namespace detail {

/// One idempotent component of a weakly singular power kernel
/// e(tau) = sum_u c[u] tau^mu[u], Re mu[u] > -1; `identity` marks an extra
/// Dirac unit (the operator acts as identity plus convolution), which is how
/// a second parameter with exactly zero real part is realized.
struct PowerSeries {
  std::vector<std::complex<double>> c;
  std::vector<std::complex<double>> mu;
  bool identity = false;
  long terms = 0;
  double tail = 0.0;
  double mass = 0.0;  // sum_u |c_u| T^(Re mu_u + 1)/(Re mu_u + 1); the L1 bound
};

PowerSeries kernel_power_series(std::complex<double> m, std::complex<double> n,
                                std::complex<double> l, std::complex<double> r, double kdef,
                                double T, double tol);

/// Lag weights of product integration against a piecewise-linear interpolant:
/// (e*y)(t_k) = sum_{p=1..k} A[p] y[k-p+1] + B[p] y[k-p] (+ y[k] if identity).
/// Kept in extended precision: the derivative operators difference the
/// convolved values, which amplifies weight roundoff by 1/h per order.
struct ConvWeights {
  std::vector<std::complex<long double>> A, B;
  bool identity = false;
  bool has_terms = false;
};

ConvWeights build_conv_weights(const PowerSeries& s, double h, int n_points);
std::vector<std::complex<double>> apply_conv(const ConvWeights& w,
                                             const std::vector<std::complex<double>>& y);
/// Same convolution without the final narrowing; used by the derivative
/// operators so the differencing stencils see extended-precision values.
std::vector<std::complex<long double>> apply_conv_wide(const ConvWeights& w,
                                                       const std::vector<std::complex<double>>& y);

}  // namespace detail

}  // namespace bcfrac

#endif
