#ifndef GORDON_SPECIAL_HPP_
#define GORDON_SPECIAL_HPP_

#include <array>
#include <cmath>

#include "gordon/series.hpp"

namespace gordon {

/// Rising factorial a(a+1)...(a+k-1). Computed by direct product so
/// nonpositive-integer arguments give exact zeros.
inline double pochhammer(double a, long long k) {
  double r = 1.0;
  for (long long i = 0; i < k; ++i) r *= a + static_cast<double>(i);
  return r;
}

namespace detail {

// Lanczos approximation, g = 607/128, 15 terms.
inline double lanczos_sum(double x) {
  static constexpr std::array<double, 15> c = {
      0.99999999999999709182,     57.156235665862923517,
      -59.597960355475491248,     14.136097974741747174,
      -0.49191381609762019978,    0.33994649984811888699e-4,
      0.46523628927048575665e-4,  -0.98374475304879564677e-4,
      0.15808870322491248884e-3,  -0.21026444172410488319e-3,
      0.21743961811521264320e-3,  -0.16431810653676389022e-3,
      0.84418223983852743293e-4,  -0.26190838401581408670e-4,
      0.36899182659531622704e-5};
  double s = c[0];
  for (int i = 1; i < 15; ++i) s += c[i] / (x - 1.0 + static_cast<double>(i));
  return s;
}

}  // namespace detail

/// log Gamma(x) for x > 0.
inline double ln_gamma(double x) {
  if (!(x > 0.0))
    throw EvalError(ErrorCode::Domain, "ln_gamma: requires x > 0");
  static constexpr double kG = 4.7421875;  // 607/128
  static constexpr double kHalfLog2Pi = 0.91893853320467274178;
  if (x < 0.5) {
    // reflection keeps the Lanczos argument away from the pole at 0
    return std::log(M_PI / std::sin(M_PI * x)) - ln_gamma(1.0 - x);
  }
  double t = x + kG - 0.5;
  return (x - 0.5) * std::log(t) - t + kHalfLog2Pi + std::log(detail::lanczos_sum(x));
}

inline double tgamma_pos(double x) { return std::exp(ln_gamma(x)); }

/// Kummer's confluent hypergeometric series 1F1(a; c; z).
inline EvalResult hyp1f1(double a, double c, double z, const SeriesControl& ctrl = {}) {
  if (detail::is_nonpos_int(a)) {
    const double args[1] = {a}, dens[1] = {c};
    EvalResult r = detail::pfq_series(args, 1, dens, 1, z, ctrl, "hyp1f1");
    r.strategy = "1F1";
    return r;
  }
  if (z < -1.0) {
    // Kummer reflection: the defining series at z < -1 loses digits to
    // alternating-term cancellation; the reflected series has positive terms.
    const double args[1] = {c - a}, dens[1] = {c};
    EvalResult r = detail::pfq_series(args, 1, dens, 1, -z, ctrl, "hyp1f1");
    double s = std::exp(z);
    r.value *= s;
    r.err_est *= s;
    r.strategy = "1F1";
    return r;
  }
  const double args[1] = {a}, dens[1] = {c};
  EvalResult r = detail::pfq_series(args, 1, dens, 1, z, ctrl, "hyp1f1");
  r.strategy = "1F1";
  return r;
}

/// Gauss series 2F1(a, b; c; z); terminating cases are valid for any z.
inline EvalResult hyp2f1(double a, double b, double c, double z,
                         const SeriesControl& ctrl = {}) {
  const double args[2] = {a, b}, dens[1] = {c};
  EvalResult r = detail::pfq_series(args, 2, dens, 1, z, ctrl, "hyp2f1");
  r.strategy = "2F1";
  return r;
}

/// Generalized hypergeometric pFq for (p, q) in {(3,2), (4,3)}.
inline EvalResult hyp_pfq(const std::vector<double>& numerator,
                          const std::vector<double>& denominator, double z,
                          const SeriesControl& ctrl = {}) {
  const std::size_t p = numerator.size(), q = denominator.size();
  if (!((p == 3 && q == 2) || (p == 4 && q == 3)))
    throw EvalError(ErrorCode::Precondition, "hyp_pfq: supports 3F2 and 4F3 only");
  EvalResult r = detail::pfq_series(numerator.data(), p, denominator.data(), q, z,
                                    ctrl, "hyp_pfq");
  r.strategy = (p == 3) ? "3F2" : "4F3";
  return r;
}

namespace detail {

/// 2F1(-m, a; c; 1) by the Chu-Vandermonde sum, as an exact product
/// (c-a)_m / (c)_m.
inline double chu_vandermonde(long long m, double a, double c) {
  double num = 1.0, den = 1.0;
  for (long long i = 0; i < m; ++i) {
    num *= c - a + static_cast<double>(i);
    den *= c + static_cast<double>(i);
  }
  return num / den;
}

/// Cancellation-free evaluation of the weighted terminating 3F2 product
///
///   (-J)_M * 3F2(-N, alpha, 1+J; beta, 1+J-M; x)
///
/// The weight and the 1+J-M denominator are merged per term into the ratio
///   R_k = (-J)_M / (1+J-M)_k
/// which stays finite when J approaches the integers that make the bare 3F2
/// blow up. This is the form behind every "softened" z = lambda closed form
/// and the j -> 0 limit checks.
inline double weighted_3f2(long long N, double alpha, double J, double beta,
                           long long M, double x) {
  if (is_nonpos_int(beta) && term_degree(beta) < N)
    throw EvalError(ErrorCode::Pole, "weighted_3f2: beta pole before termination");
  const double sign_m = (M % 2 == 0) ? 1.0 : -1.0;
  Accumulator acc;
  double lead = 1.0;  // (-N)_k (alpha)_k (1+J)_k / ((beta)_k k!) x^k
  for (long long k = 0; k <= N; ++k) {
    double rk;
    if (k <= M) {
      rk = sign_m;
      for (long long t = 0; t < M - k; ++t)
        rk *= J - static_cast<double>(M) + static_cast<double>(k + 1 + t);
    } else {
      double d = 1.0;
      for (long long t = 0; t < k - M; ++t) d *= J + static_cast<double>(1 + t);
      if (d == 0.0)
        throw EvalError(ErrorCode::Pole, "weighted_3f2: denominator pole");
      rk = sign_m / d;
    }
    acc.add(lead * rk);
    lead *= (static_cast<double>(-N) + k) * (alpha + k) * (1.0 + J + k) /
            ((beta + k) * static_cast<double>(k + 1)) * x;
  }
  return acc.value();
}

}  // namespace detail
}  // namespace gordon

#endif  // GORDON_SPECIAL_HPP_
