// Part of bcfrac, a bicomplex fractional calculus library.
// SPDX-License-Identifier: Apache-2.0

#ifndef BCFRAC_LAPLACE_HPP
#define BCFRAC_LAPLACE_HPP

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "bcfrac/grid.hpp"
#include "bcfrac/mittag_leffler.hpp"

namespace bcfrac {

/// Transform variable together with its convergence-region flag for a
/// declared exponential order M: a0 > M + |a3| in real components,
/// equivalently Re of both idempotent components above M.
struct LTPoint {
  Bicomplex xi;
  bool region_ok = false;
};

inline LTPoint lt_point(const Bicomplex& xi, double M) {
  const auto x = xi.to_real_components();
  return {xi, x[0] > M + std::abs(x[3])};
}

/// Numerical transform of a callable of declared exponential order M:
/// adaptive Gauss-Kronrod on [0, T] with T chosen so the tail bound
/// e^((M - Re xi_i) T)/(Re xi_i - M) drops below tol.
Bicomplex forward_lt_numeric(const std::function<Bicomplex(double)>& f, const Bicomplex& xi,
                             double M, double tol = 1e-9);

/// Transform of the piecewise-linear interpolant of samples on [0, b]
/// (exact exponential moments per cell). The grid must start at 0.
Bicomplex forward_lt_sampled(const SampledFn& f, const Bicomplex& xi, double M);

/// Closed-form transform of the Prabhakar kernel, xi^(ml-n)/(xi^m - r)^l,
/// valid in the region |r xi^-m|_j < 1 componentwise (strict).
Bicomplex kernel_lt_closed(const MLParams& p, const Bicomplex& xi);

enum class LTOperatorKind { integral, derivative, regularized };

/// Closed-form transforms of the three fractional operators. For the
/// derivative kind `init` holds the inner-integral limits
/// (E^{-l}_{m,k-n-p} f)(0+), for the regularized kind the plain derivatives
/// f^(p)(0+); both of length ceil(Re n).
Bicomplex operator_lt(LTOperatorKind kind, const MLParams& p, const Bicomplex& xi,
                      const Bicomplex& f_tilde, const std::vector<Bicomplex>& init = {});

struct TalbotOptions {
  int nodes = 40;      // base node count; the self-check refines to 2x on the same contour
  double tol = 1e-8;   // doubling the nodes must not move the result by more than 10x this
  double shift = 0.0;  // contour shift for transforms with singularities right of 0
};

using ComplexL = std::complex<long double>;

namespace detail {
/// Componentwise fixed-Talbot inversion; F maps a contour point to the pair
/// of idempotent component values. Evaluated in extended precision: the
/// contour peak e^(r t) amplifies any error in F by several orders.
std::pair<ComplexL, ComplexL> talbot_invert(
    const std::function<std::pair<ComplexL, ComplexL>(const ComplexL&)>& F, double t,
    const TalbotOptions& opt);
}  // namespace detail

/// Inversion of a bicomplex transform at t > 0. The callable is evaluated in
/// double precision, which caps the attainable accuracy around 1e-8 on the
/// default contour; the built-in closed-form families below run in extended
/// precision instead.
Bicomplex inverse_lt(const std::function<Bicomplex(const Bicomplex&)>& F, double t,
                     const TalbotOptions& opt = {});

/// Inversion of the closed-form kernel transform: recovers the Prabhakar
/// kernel at t > 0. Requires k = 1.
Bicomplex inverse_lt_kernel(const MLParams& p, double t, const TalbotOptions& opt = {});

/// Defect |L(f*g) - f~ g~|_j of the convolution theorem, with the convolution
/// and both transforms computed from the sampled data (matching grids on
/// [0, b]). M is the larger declared exponential order.
Hyperbolic convolution_lt_check(const SampledFn& f, const SampledFn& g, const Bicomplex& xi,
                                double M);

namespace detail {
/// Exact-for-interpolants convolution of two sampled functions at the nodes.
std::vector<Bicomplex> pl_convolution(const SampledFn& f, const SampledFn& g);
}  // namespace detail

}  // namespace bcfrac

#endif
