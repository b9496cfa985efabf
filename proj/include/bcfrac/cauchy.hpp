// Part of bcfrac, a bicomplex fractional calculus library.
// SPDX-License-Identifier: Apache-2.0

#ifndef BCFRAC_CAUCHY_HPP
#define BCFRAC_CAUCHY_HPP

#include <vector>

#include "bcfrac/operators.hpp"

namespace bcfrac {

/// Cauchy problem for the regularized Prabhakar derivative on [0, b]:
///   homogeneous:     ^C D^l f = A f,        f^(q)(0+) = tau_q
///   nonhomogeneous:  ^C D^l f + k f = g,    f(0+) = tau_0
///   corollary:       ^C D^l f = g,          f(0+) = tau_0
struct CauchyProblem {
  enum class Mode { homogeneous, nonhomogeneous, corollary };

  Mode mode = Mode::homogeneous;
  MLParams p;
  Bicomplex A;        // homogeneous coefficient
  Bicomplex k_const;  // nonhomogeneous constant
  std::vector<Bicomplex> taus;
  Grid grid;       // must start at 0
  SampledFn forcing;  // g on the same grid; empty values mean g = 0
  double forcing_exp_order = 0.0;
};

/// Double series sum_q tau_q sum_j A^j t^(nj+q) E^(jl)_{m,nj+q+1}(r t^m),
/// truncated when the sup over the grid of a j-term drops below tol.
OperatorResult solve_homogeneous(const CauchyProblem& prob, int j_max = 256, double tol = 1e-12);

/// Transform-domain solution f = (h*g) + tau_0 L^-1{xi^(n-1)(1-r xi^-m)^l H}
/// with H = 1/(xi^n (1-r xi^-m)^l + k); h is recovered by fixed-Talbot
/// inversion and convolved with g by singular-weight product integration.
OperatorResult solve_nonhomogeneous(const CauchyProblem& prob, double tol = 1e-8,
                                    int talbot_nodes = 40);

/// k = 0 special case: f = tau_0 + Prabhakar integral of g.
OperatorResult solve_corollary(const CauchyProblem& prob, double series_tol = 1e-12);

/// Sup of |^C D^l f - rhs|_j over the grid, componentwise. Nodes with
/// t < trim * b are excluded: the numerical derivative has a boundary layer
/// there (solutions of fractional problems have weakly singular derivatives
/// at 0), and including it would only measure that layer.
Hyperbolic residual_check(const SampledFn& f, const CauchyProblem& prob, double trim = 0.15);

}  // namespace bcfrac

#endif
