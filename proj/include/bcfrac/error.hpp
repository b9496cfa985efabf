// Part of bcfrac, a bicomplex fractional calculus library.
// SPDX-License-Identifier: Apache-2.0

#ifndef BCFRAC_ERROR_HPP
#define BCFRAC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bcfrac {

/// Failure categories. Validation-type codes signal bad inputs; the
/// numerical codes signal a computation that refused to produce garbage.
enum class errc {
  invalid_argument,
  zero_divisor_division,
  zero_divisor_base,
  gamma_pole,
  domain_error,
  non_convergent,
  invalid_order,
  grid_too_coarse,
  mismatched_ceil,
  outside_region,
  region_violation,
  quadrature_failure,
  inversion_unstable,
  arity_mismatch,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument:      return "invalid_argument";
    case errc::zero_divisor_division: return "zero_divisor_division";
    case errc::zero_divisor_base:     return "zero_divisor_base";
    case errc::gamma_pole:            return "gamma_pole";
    case errc::domain_error:          return "domain_error";
    case errc::non_convergent:        return "non_convergent";
    case errc::invalid_order:         return "invalid_order";
    case errc::grid_too_coarse:       return "grid_too_coarse";
    case errc::mismatched_ceil:       return "mismatched_ceil";
    case errc::outside_region:        return "outside_region";
    case errc::region_violation:      return "region_violation";
    case errc::quadrature_failure:    return "quadrature_failure";
    case errc::inversion_unstable:    return "inversion_unstable";
    case errc::arity_mismatch:        return "arity_mismatch";
    case errc::io_error:              return "io_error";
  }
  return "unknown";
}

/// True for failures of the computation itself (as opposed to failures of
/// the input). The CLI maps these to exit code 3, everything else to 2.
inline bool errc_is_numerical(errc c) {
  return c == errc::non_convergent || c == errc::quadrature_failure ||
         c == errc::inversion_unstable;
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace bcfrac

#endif
