// Part of bcfrac, a bicomplex fractional calculus library.
// SPDX-License-Identifier: Apache-2.0

#ifndef BCFRAC_GRID_HPP
#define BCFRAC_GRID_HPP

#include <functional>
#include <vector>

#include "bcfrac/bicomplex.hpp"
#include "bcfrac/error.hpp"

namespace bcfrac {

/// Uniform grid t_i = a + i h, h = (b-a)/(n_points-1).
struct Grid {
  double a = 0.0;
  double b = 1.0;
  int n_points = 2;

  double h() const { return (b - a) / (n_points - 1); }
  double t(int i) const { return a + i * h(); }

  void validate() const {
    if (!(b > a)) raise(errc::invalid_argument, "grid requires b > a");
    if (n_points < 2) raise(errc::invalid_argument, "grid requires n_points >= 2");
  }
  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Bicomplex-valued function sampled on a uniform grid; the substrate for
/// all operators.
struct SampledFn {
  Grid grid;
  std::vector<Bicomplex> values;

  void validate() const {
    grid.validate();
    if (static_cast<int>(values.size()) != grid.n_points)
      raise(errc::invalid_argument, "sample count does not match grid");
  }

  static SampledFn sample(const Grid& g, const std::function<Bicomplex(double)>& f) {
    g.validate();
    SampledFn s;
    s.grid = g;
    s.values.reserve(g.n_points);
    for (int i = 0; i < g.n_points; ++i) s.values.push_back(f(g.t(i)));
    return s;
  }
};

namespace detail {

/// Scalar type the differencing stencils multiply by. Bicomplex and
/// complex<double> take plain doubles; extended-precision samples need
/// long double factors for the operator overloads to resolve.
template <class V>
struct diff_scalar {
  using type = double;
};
template <>
struct diff_scalar<std::complex<long double>> {
  using type = long double;
};

/// First derivative on a uniform grid: central differences inside, 3-point
/// one-sided stencils at the ends; all second order. Works on bicomplex and
/// plain complex samples alike.
template <class V>
std::vector<V> diff_once(const std::vector<V>& v, double h) {
  using S = typename diff_scalar<V>::type;
  const int n = static_cast<int>(v.size());
  std::vector<V> d(n);
  const S inv2h = S(1) / (S(2) * S(h));
  d[0] = (S(-3) * v[0] + S(4) * v[1] - v[2]) * inv2h;
  for (int i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) * inv2h;
  d[n - 1] = (S(3) * v[n - 1] - S(4) * v[n - 2] + v[n - 3]) * inv2h;
  return d;
}

/// Direct second/third central-difference derivatives with one-sided O(h^2)
/// boundary closures. Nesting diff_once instead would compound the boundary
/// stencil error by 1/h per fold and destroy the last few nodes.
template <class V>
std::vector<V> diff_twice(const std::vector<V>& v, double h) {
  using S = typename diff_scalar<V>::type;
  const int n = static_cast<int>(v.size());
  std::vector<V> d(n);
  const S ih2 = S(1) / (S(h) * S(h));
  d[0] = (S(2) * v[0] - S(5) * v[1] + S(4) * v[2] - v[3]) * ih2;
  for (int i = 1; i + 1 < n; ++i) d[i] = (v[i - 1] - S(2) * v[i] + v[i + 1]) * ih2;
  d[n - 1] = (S(2) * v[n - 1] - S(5) * v[n - 2] + S(4) * v[n - 3] - v[n - 4]) * ih2;
  return d;
}

template <class V>
std::vector<V> diff_thrice(const std::vector<V>& v, double h) {
  using S = typename diff_scalar<V>::type;
  const int n = static_cast<int>(v.size());
  std::vector<V> d(n);
  const S ih3 = S(1) / (S(h) * S(h) * S(h));
  // 6-point O(h^3) edge closures: the interior stencil's error constant is
  // small and these keep the edge from dominating the sup norm.
  d[0] = (S(-4.25) * v[0] + S(17.75) * v[1] - S(29.5) * v[2] + S(24.5) * v[3] - S(10.25) * v[4] +
          S(1.75) * v[5]) * ih3;
  d[1] = (S(-1.75) * v[0] + S(6.25) * v[1] - S(8.5) * v[2] + S(5.5) * v[3] - S(1.75) * v[4] +
          S(0.25) * v[5]) * ih3;
  for (int i = 2; i + 2 < n; ++i)
    d[i] = (S(-0.5) * v[i - 2] + v[i - 1] - v[i + 1] + S(0.5) * v[i + 2]) * ih3;
  d[n - 2] = (S(1.75) * v[n - 1] - S(6.25) * v[n - 2] + S(8.5) * v[n - 3] - S(5.5) * v[n - 4] +
              S(1.75) * v[n - 5] - S(0.25) * v[n - 6]) * ih3;
  d[n - 1] = (S(4.25) * v[n - 1] - S(17.75) * v[n - 2] + S(29.5) * v[n - 3] - S(24.5) * v[n - 4] +
              S(10.25) * v[n - 5] - S(1.75) * v[n - 6]) * ih3;
  return d;
}

template <class V>
std::vector<V> diff_k(std::vector<V> v, double h, int k) {
  switch (k) {
    case 0:
      return v;
    case 1:
      return diff_once(v, h);
    case 2:
      return diff_twice(v, h);
    case 3:
      return diff_thrice(v, h);
    default:
      raise(errc::invalid_argument, "derivative ceil orders supported up to 3");
  }
}

/// One-sided third-order estimate of f(a+), f'(a+), ... used for the initial
/// data terms of the regularized derivative.
inline Bicomplex one_sided_derivative(const std::vector<Bicomplex>& v, double h, int order) {
  switch (order) {
    case 0:
      return v[0];
    case 1:  // 4-point forward difference, O(h^3)
      return (-11.0 * v[0] + 18.0 * v[1] - 9.0 * v[2] + 2.0 * v[3]) * (1.0 / (6.0 * h));
    case 2:  // 5-point forward difference, O(h^3)
      return (35.0 * v[0] - 104.0 * v[1] + 114.0 * v[2] - 56.0 * v[3] + 11.0 * v[4]) *
             (1.0 / (12.0 * h * h));
    default:
      raise(errc::invalid_argument, "one-sided derivatives supported up to order 2");
  }
}

}  // namespace detail

}  // namespace bcfrac

#endif
