// Part of bcfrac, a bicomplex fractional calculus library.
// SPDX-License-Identifier: Apache-2.0

#ifndef BCFRAC_BICOMPLEX_HPP
#define BCFRAC_BICOMPLEX_HPP

#include <array>
#include <cmath>
#include <complex>

#include "bcfrac/error.hpp"

namespace bcfrac {

/// Element of the real span of the idempotents e1, e2. The j-modulus of a
/// bicomplex number is hyperbolic-valued, and the partial order compares
/// componentwise.
struct Hyperbolic {
  double d1 = 0.0;
  double d2 = 0.0;

  friend bool strictly_less(const Hyperbolic& a, const Hyperbolic& b) {
    return a.d1 < b.d1 && a.d2 < b.d2;
  }
  Hyperbolic operator+(const Hyperbolic& o) const { return {d1 + o.d1, d2 + o.d2}; }
  Hyperbolic operator*(double s) const { return {d1 * s, d2 * s}; }
  double max() const { return d1 > d2 ? d1 : d2; }
};

/// 4-dimensional commutative hypercomplex number xi = x0 + i1 x1 + i2 x2 + j x3,
/// stored canonically as its idempotent pair (c1, c2) with xi = c1 e1 + c2 e2,
/// e1 = (1+j)/2, e2 = (1-j)/2. Multiplication is diagonal in this basis, so
/// every operation decomposes into two independent complex computations.
template <class Real>
struct BicomplexT {
  using C = std::complex<Real>;

  C c1{};  // component along e1
  C c2{};  // component along e2

  constexpr BicomplexT() = default;
  constexpr BicomplexT(const C& xi1, const C& xi2) : c1(xi1), c2(xi2) {}
  /// Real scalars embed diagonally.
  constexpr BicomplexT(Real x) : c1(x), c2(x) {}

  static BicomplexT from_idempotent(const C& xi1, const C& xi2) { return {xi1, xi2}; }

  /// xi = x0 + i1 x1 + i2 x2 + j x3. The idempotent pair comes out as
  /// xi1 = (x0+x3) + i(x1-x2), xi2 = (x0-x3) + i(x1+x2).
  static BicomplexT from_real_components(Real x0, Real x1, Real x2, Real x3) {
    return {C(x0 + x3, x1 - x2), C(x0 - x3, x1 + x2)};
  }

  /// xi = z1 + i2 z2 with z1, z2 in C(i1): xi1 = z1 - i z2, xi2 = z1 + i z2.
  static BicomplexT from_complex_pair(const C& z1, const C& z2) {
    const C iz2(-z2.imag(), z2.real());
    return {z1 - iz2, z1 + iz2};
  }

  std::array<Real, 4> to_real_components() const {
    return {(c1.real() + c2.real()) / 2, (c1.imag() + c2.imag()) / 2,
            (c2.imag() - c1.imag()) / 2, (c1.real() - c2.real()) / 2};
  }

  std::pair<C, C> to_complex_pair() const {
    const C z1 = (c1 + c2) / Real(2);
    const C d = (c1 - c2) / Real(2);  // z2 = i*(c1-c2)/2
    return {z1, C(-d.imag(), d.real())};
  }

  static constexpr BicomplexT zero() { return {C(0), C(0)}; }
  static constexpr BicomplexT one() { return {C(1), C(1)}; }
  static constexpr BicomplexT e1() { return {C(1), C(0)}; }
  static constexpr BicomplexT e2() { return {C(0), C(1)}; }
  static constexpr BicomplexT i1() { return {C(0, 1), C(0, 1)}; }
  static constexpr BicomplexT i2() { return {C(0, -1), C(0, 1)}; }
  static constexpr BicomplexT j() { return {C(1), C(-1)}; }

  friend BicomplexT operator+(const BicomplexT& a, const BicomplexT& b) {
    return {a.c1 + b.c1, a.c2 + b.c2};
  }
  friend BicomplexT operator-(const BicomplexT& a, const BicomplexT& b) {
    return {a.c1 - b.c1, a.c2 - b.c2};
  }
  BicomplexT operator-() const { return {-c1, -c2}; }
  friend BicomplexT operator*(const BicomplexT& a, const BicomplexT& b) {
    return {a.c1 * b.c1, a.c2 * b.c2};
  }
  friend BicomplexT operator*(Real s, const BicomplexT& a) { return {s * a.c1, s * a.c2}; }
  friend BicomplexT operator*(const BicomplexT& a, Real s) { return {a.c1 * s, a.c2 * s}; }
  BicomplexT& operator+=(const BicomplexT& o) { c1 += o.c1; c2 += o.c2; return *this; }
  BicomplexT& operator-=(const BicomplexT& o) { c1 -= o.c1; c2 -= o.c2; return *this; }
  BicomplexT& operator*=(const BicomplexT& o) { c1 *= o.c1; c2 *= o.c2; return *this; }

  friend bool operator==(const BicomplexT& a, const BicomplexT& b) {
    return a.c1 == b.c1 && a.c2 == b.c2;
  }

  bool is_zero() const { return c1 == C(0) && c2 == C(0); }

  /// Nonzero elements of the null cone: exactly one idempotent component
  /// vanishes. The zero element is just zero, not a zero divisor.
  bool is_zero_divisor() const {
    return (c1 == C(0)) != (c2 == C(0));
  }

  Hyperbolic j_modulus() const {
    return {static_cast<double>(std::abs(c1)), static_cast<double>(std::abs(c2))};
  }
};

using Bicomplex = BicomplexT<double>;

template <class Real>
BicomplexT<Real> div(const BicomplexT<Real>& a, const BicomplexT<Real>& b) {
  using C = std::complex<Real>;
  if (b.c1 == C(0) || b.c2 == C(0)) {
    raise(errc::zero_divisor_division,
          b.is_zero() ? "division by the zero element"
                      : std::string("division by a zero divisor (vanishing idempotent component ") +
                            (b.c1 == C(0) ? "1)" : "2)"));
  }
  return {a.c1 / b.c1, a.c2 / b.c2};
}

namespace detail {

template <class Real>
bool is_nonneg_integer(const std::complex<Real>& z) {
  return z.imag() == Real(0) && z.real() >= Real(0) &&
         z.real() == std::floor(z.real()) && z.real() < Real(1073741824);
}

/// Principal-branch complex power with explicit handling of a vanishing base
/// component (allowed only for nonnegative integer exponents).
template <class Real>
std::complex<Real> cpow(const std::complex<Real>& base, const std::complex<Real>& expo,
                        int component) {
  using C = std::complex<Real>;
  if (expo == C(0)) return C(1);
  if (base == C(0)) {
    if (is_nonneg_integer(expo)) return C(0);  // expo >= 1 here
    raise(errc::zero_divisor_base,
          "pow of a vanishing idempotent component " + std::to_string(component) +
              " with non-integer exponent");
  }
  return std::exp(expo * std::log(base));
}

}  // namespace detail

/// Componentwise principal-branch power exp(alpha_i Log(xi_i)); branch cuts
/// along the negative real axis of each component.
template <class Real>
BicomplexT<Real> pow(const BicomplexT<Real>& base, const BicomplexT<Real>& expo) {
  return {detail::cpow(base.c1, expo.c1, 1), detail::cpow(base.c2, expo.c2, 2)};
}

/// Strict partial order: |xi1| < |eta1| and |xi2| < |eta2|.
template <class Real>
bool precedes(const BicomplexT<Real>& xi, const BicomplexT<Real>& eta) {
  return std::abs(xi.c1) < std::abs(eta.c1) && std::abs(xi.c2) < std::abs(eta.c2);
}

/// Parameter admissibility: Re(m_i) > k for both idempotent components.
/// For k = 0 this is exactly the condition |Im_j(m)| < Re(m).
template <class Real>
bool param_valid(const BicomplexT<Real>& m, int k = 0) {
  return m.c1.real() > Real(k) && m.c2.real() > Real(k);
}

/// Ceiling orders ceil(Re n_1), ceil(Re n_2) used by the derivative operators.
template <class Real>
std::pair<int, int> ceil_orders(const BicomplexT<Real>& n) {
  return {static_cast<int>(std::ceil(n.c1.real())), static_cast<int>(std::ceil(n.c2.real()))};
}

inline BicomplexT<long double> widen(const Bicomplex& x) {
  return {std::complex<long double>(x.c1.real(), x.c1.imag()),
          std::complex<long double>(x.c2.real(), x.c2.imag())};
}

inline Bicomplex narrow(const BicomplexT<long double>& x) {
  return {std::complex<double>(static_cast<double>(x.c1.real()), static_cast<double>(x.c1.imag())),
          std::complex<double>(static_cast<double>(x.c2.real()), static_cast<double>(x.c2.imag()))};
}

}  // namespace bcfrac

#endif
