// Part of bcfrac, a bicomplex fractional calculus library.
// SPDX-License-Identifier: Apache-2.0

#ifndef BCFRAC_GAMMA_HPP
#define BCFRAC_GAMMA_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "bcfrac/bicomplex.hpp"
#include "bcfrac/error.hpp"

namespace bcfrac {
namespace detail {

// Lanczos rational approximations (Pugh-optimized coefficient sets as used
// by Boost.Math). The N=13 set is tuned for 53-bit doubles, the N=17 set
// for 64-bit extended precision. Coefficients are lowest-degree first; the
// denominator is z(z+1)...(z+N-2).
template <class Real>
struct lanczos;

template <>
struct lanczos<double> {
  static constexpr double g = 6.024680040776729583740234375;
  static constexpr int n = 13;
  static constexpr double num[13] = {
      23531376880.41075968857200767445163675473,
      42919803642.64909876895789904700198885093,
      35711959237.35566804944018545154716670596,
      17921034426.03720969991975575445893111267,
      6039542586.35202800506429164430729792107,
      1439720407.311721673663223072794912393972,
      248874557.8620541565114603864132294232163,
      31426415.58540019438061423162831820536287,
      2876370.628935372441225409051620849613599,
      186056.2653952234950402949897160456992822,
      8071.672002365816210638002902272250613822,
      210.8242777515793458725097339207133627117,
      2.506628274631000270164908177133837338626,
  };
  static constexpr double den[13] = {
      0., 39916800., 120543840., 150917976., 105258076., 45995730., 13339535.,
      2637558., 357423., 32670., 1925., 66., 1.,
  };
};

template <>
struct lanczos<long double> {
  static constexpr long double g = 12.2252227365970611572265625L;
  static constexpr int n = 17;
  static constexpr long double num[17] = {
      553681095419291969.2230556393350368550504L,
      731918863887667017.2511276782146694632234L,
      453393234285807339.4627124634539085143364L,
      174701893724452790.3546219631779712198035L,
      46866125995234723.82897281620357050883077L,
      9281280675933215.169109622777099699054272L,
      1403600894156674.551057997617468721789536L,
      165345984157572.7305349809894046783973837L,
      15333629842677.31531822808737907246817024L,
      1123152927963.956626161137169462874517318L,
      64763127437.92329018717775593533620578237L,
      2908830362.657527782848828237106640944457L,
      99764700.56999856729959383751710026787811L,
      2525791.604886139959837791244686290089331L,
      44516.94034970167828580039370201346554872L,
      488.0063567520005730476791712814838113252L,
      2.50662827463100050241576877135758834683L,
  };
  static constexpr long double den[17] = {
      0.L,
      1307674368000.L,
      4339163001600.L,
      6165817614720.L,
      5056995703824.L,
      2706813345600.L,
      1009672107080.L,
      272803210680.L,
      54631129553.L,
      8207628000.L,
      928095740.L,
      78558480.L,
      4899622.L,
      218400.L,
      6580.L,
      120.L,
      1.L,
  };
};

template <class Real>
std::complex<Real> lanczos_sum(const std::complex<Real>& z) {
  using L = lanczos<Real>;
  std::complex<Real> p(L::num[L::n - 1]), q(L::den[L::n - 1]);
  for (int i = L::n - 2; i >= 0; --i) {
    p = p * z + L::num[i];
    q = q * z + L::den[i];
  }
  return p / q;
}

}  // namespace detail

template <class Real>
bool is_gamma_pole(const std::complex<Real>& z) {
  return z.imag() == Real(0) && z.real() <= Real(0) && z.real() == std::floor(z.real());
}

/// log Gamma for Re z >= 0.5, up to an irrelevant multiple of 2*pi*i (every
/// use site feeds exp, so only ratios/differences matter).
template <class Real>
std::complex<Real> clgamma_right(const std::complex<Real>& z) {
  const std::complex<Real> t = z + (detail::lanczos<Real>::g - Real(0.5));
  return std::log(detail::lanczos_sum(z)) + (z - Real(0.5)) * std::log(t) - t;
}

/// Gamma on the whole plane, reflection formula for Re z < 0.5.
template <class Real>
std::complex<Real> cgamma(const std::complex<Real>& z) {
  if (is_gamma_pole(z))
    raise(errc::gamma_pole, "gamma pole at z = " + std::to_string((double)z.real()));
  if (z.real() >= Real(0.5)) return std::exp(clgamma_right(z));
  const Real pi = std::numbers::pi_v<Real>;
  return pi / (std::sin(pi * z) * std::exp(clgamma_right(Real(1) - z)));
}

/// Entire reciprocal 1/Gamma; zero at the poles of Gamma.
template <class Real>
std::complex<Real> crgamma(const std::complex<Real>& z) {
  if (is_gamma_pole(z)) return {};
  if (z.real() >= Real(0.5)) return std::exp(-clgamma_right(z));
  const Real pi = std::numbers::pi_v<Real>;
  return std::sin(pi * z) * std::exp(clgamma_right(Real(1) - z)) / pi;
}

/// Scalar building block of the spec: relative error well under 1e-12 for
/// |z| <= 20 (the N=13 Lanczos set is good to ~1e-13 over that range).
inline std::complex<double> complex_gamma(const std::complex<double>& z) {
  return cgamma<double>(z);
}

/// Componentwise bicomplex Gamma.
template <class Real>
BicomplexT<Real> gamma2(const BicomplexT<Real>& xi) {
  if (is_gamma_pole(xi.c1)) raise(errc::gamma_pole, "gamma pole in idempotent component 1");
  if (is_gamma_pole(xi.c2)) raise(errc::gamma_pole, "gamma pole in idempotent component 2");
  return {cgamma(xi.c1), cgamma(xi.c2)};
}

/// k-deformed Gamma via the scalar identity Gamma_k(z) = k^(z/k-1) Gamma(z/k),
/// componentwise. k = 1 reproduces gamma2 through the same arithmetic.
template <class Real>
std::complex<Real> k_gamma_scalar(const std::complex<Real>& z, Real k) {
  if (!(k > Real(0))) raise(errc::invalid_argument, "k-gamma requires k > 0");
  const std::complex<Real> zk = z / k;
  if (is_gamma_pole(zk)) raise(errc::gamma_pole, "k-gamma pole: z/k is a nonpositive integer");
  return std::exp((zk - Real(1)) * std::log(k)) * cgamma(zk);
}

template <class Real>
BicomplexT<Real> k_gamma2(const BicomplexT<Real>& xi, Real k) {
  return {k_gamma_scalar(xi.c1, k), k_gamma_scalar(xi.c2, k)};
}

/// Bicomplex Pochhammer symbol in product form l(l+1)...(l+u-1); pole-free,
/// and collapses to a finite value (eventually zero factors) at nonpositive
/// integer components.
template <class Real>
BicomplexT<Real> pochhammer2(const BicomplexT<Real>& l, unsigned u) {
  BicomplexT<Real> acc = BicomplexT<Real>::one();
  for (unsigned i = 0; i < u; ++i) acc *= l + BicomplexT<Real>(Real(i));
  return acc;
}

}  // namespace bcfrac

#endif
