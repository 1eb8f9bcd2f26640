#ifndef GORDON_PARAMS_HPP_
#define GORDON_PARAMS_HPP_

#include <cmath>
#include <string>

#include "gordon/special.hpp"

namespace gordon {

/// Parameter tuple of the integral
///   J = int_0^inf x^(c+j-1) e^(-lambda x) 1F1(b; c; w x) 1F1(b'; c + sign*p; z x) dx.
struct GordonParams {
  double b = 0.0;
  double b_prime = 0.0;
  double c = 1.0;
  int j = 0;
  int p = 0;        // p >= 0
  int sign = +1;    // second denominator parameter is c + sign*p
  double lambda = 1.0;
  double w = 0.0;
  double z = 0.0;

  double cj() const { return c + static_cast<double>(j); }
  int sigma() const { return sign * p; }
  double c2() const { return c + static_cast<double>(sigma()); }

  bool strictly_convergent() const {
    return std::abs(w) + std::abs(z) < lambda;
  }
  bool b_terminating() const { return detail::is_nonpos_int(b); }
  bool bp_terminating() const { return detail::is_nonpos_int(b_prime); }

  /// c-side series has no pole before termination.
  bool c_pole_free() const {
    if (!detail::is_nonpos_int(c)) return true;
    return b_terminating() && detail::term_degree(b) <= detail::term_degree(c);
  }
  bool c2_pole_free() const {
    if (!detail::is_nonpos_int(c2())) return true;
    return bp_terminating() && detail::term_degree(b_prime) <= detail::term_degree(c2());
  }
  /// Validity relies on a terminating numerator shielding a nonpositive
  /// integer denominator.
  bool conditionally_valid() const {
    return detail::is_nonpos_int(c) || detail::is_nonpos_int(c2());
  }

  bool domain_ok() const {
    return cj() > 0.0 && lambda > 0.0 && p >= 0 && (sign == 1 || sign == -1) &&
           c_pole_free() && c2_pole_free();
  }

  std::string describe() const {
    return "b=" + std::to_string(b) + " b'=" + std::to_string(b_prime) +
           " c=" + std::to_string(c) + " j=" + std::to_string(j) +
           " p=" + std::to_string(p) + " sign=" + (sign > 0 ? std::string("+") : std::string("-")) +
           " lambda=" + std::to_string(lambda) + " w=" + std::to_string(w) +
           " z=" + std::to_string(z);
  }
};

struct StrategyApplicability {
  std::string strategy;
  bool applicable = false;
  std::string reason;  // diagnostic code: OK, DOMAIN, BOUNDARY, CONVERGENCE, PRECONDITION, NO-PATTERN
};

namespace detail {

/// Gamma(cj) / lambda^e style prefactors assembled in log space.
struct LogFactor {
  double log_abs = 0.0;
  int sign = 1;

  void mul_pow(double base, double expo) {
    if (base == 0.0)
      throw EvalError(ErrorCode::Domain, "prefactor: 0^x");
    if (base < 0.0) {
      if (expo != std::floor(expo))
        throw EvalError(ErrorCode::Domain, "prefactor: negative base, non-integer exponent");
      if (static_cast<long long>(expo) % 2 != 0) sign = -sign;
      base = -base;
    }
    log_abs += expo * std::log(base);
  }
  void mul_gamma(double x) { log_abs += ln_gamma(x); }
  double value() const { return sign * std::exp(log_abs); }
};

}  // namespace detail
}  // namespace gordon

#endif  // GORDON_PARAMS_HPP_
