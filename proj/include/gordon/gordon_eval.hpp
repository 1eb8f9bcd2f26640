#ifndef GORDON_GORDON_EVAL_HPP_
#define GORDON_GORDON_EVAL_HPP_

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "gordon/appell.hpp"
#include "gordon/params.hpp"
#include "gordon/poly_cases.hpp"

namespace gordon {

namespace strategy {
inline constexpr const char* kF2Series = "F2-SERIES";
inline constexpr const char* kF1Sum = "F1-SUM";
inline constexpr const char* k2F1DoubleSum = "2F1-DOUBLE-SUM";
}  // namespace strategy

/// Evaluation through Gamma(c+j)/lambda^{c+j} F2(c+j; b,b'; c,c+sigma; w/l, z/l).
inline EvalResult eval_f2_series(const GordonParams& g, const SeriesControl& ctrl = {}) {
  if (!g.domain_ok())
    throw EvalError(ErrorCode::Domain, "eval_f2_series: invalid parameters");
  AppellF2Params f2{g.cj(), g.b, g.b_prime, g.c, g.c2(), g.w / g.lambda, g.z / g.lambda};
  if (!g.strictly_convergent() && !f2.terminating())
    throw EvalError(ErrorCode::Divergence,
                    "eval_f2_series: requires |w|+|z| < lambda or double termination");
  EvalResult f = appell_f2_double(f2, ctrl);
  detail::LogFactor pref;
  pref.mul_gamma(g.cj());
  pref.mul_pow(g.lambda, -g.cj());
  const double scale = pref.value();
  f.value *= scale;
  f.err_est *= std::abs(scale);
  f.strategy = strategy::kF2Series;
  return f;
}

/// Evaluation through the finite k-sum of first Appell functions
///   Gamma(c+j) / (l^{c+j-b'} (l-z)^{b'}) sum_k coef_k F1(b, c+j-b', b'+k; c; w/l, w/(l-z)).
inline EvalResult eval_f1_sum(const GordonParams& g, const SeriesControl& ctrl = {}) {
  if (!g.domain_ok())
    throw EvalError(ErrorCode::Domain, "eval_f1_sum: invalid parameters");
  const int bound = g.j - g.sigma();
  if (bound < 0)
    throw EvalError(ErrorCode::Precondition, "eval_f1_sum: requires j - sign*p >= 0");
  if (g.z == 0.0 || g.z == g.lambda)
    throw EvalError(ErrorCode::Precondition, "eval_f1_sum: requires z not in {0, lambda}");
  if (!g.strictly_convergent() && !(g.b_terminating() && std::abs(g.z) < g.lambda))
    throw EvalError(ErrorCode::Divergence, "eval_f1_sum: outside the convergence domain");

  const double cj = g.cj(), c2 = g.c2();
  const double rz = g.z / (g.z - g.lambda);  // (1 - lambda/z)^{-1}
  detail::Accumulator acc;
  double err = 0.0;
  long long terms = 0;
  EvalResult r;
  double coef = 1.0;  // (sigma-j)_k (b')_k / ((c+sigma)_k k!) rz^k
  for (int k = 0; k <= bound; ++k) {
    AppellF1Params f1{g.b, cj - g.b_prime, g.b_prime + k, g.c, g.w / g.lambda,
                      g.w / (g.lambda - g.z)};
    EvalResult inner = appell_f1(f1, ctrl);
    acc.add(coef * inner.value);
    err += std::abs(coef) * inner.err_est;
    terms += inner.terms_used;
    r.merge_warnings(inner);
    coef *= (static_cast<double>(g.sigma() - g.j) + k) * (g.b_prime + k) /
            ((c2 + k) * static_cast<double>(k + 1)) * rz;
  }
  detail::LogFactor pref;
  pref.mul_gamma(cj);
  pref.mul_pow(g.lambda, g.b_prime - cj);
  pref.mul_pow(g.lambda - g.z, -g.b_prime);
  const double scale = pref.value();
  r.value = scale * acc.value();
  r.err_est = std::abs(scale) * (err + acc.rounding_err());
  r.strategy = strategy::kF1Sum;
  r.terms_used = terms;
  detail::attach_cancellation(r, acc);
  return r;
}

/// Evaluation through the finite double sum of Gauss functions at the
/// pooled argument w z / ((lambda-z)(lambda-w)).
inline EvalResult eval_2f1_double_sum(const GordonParams& g, const SeriesControl& ctrl = {}) {
  if (!g.domain_ok())
    throw EvalError(ErrorCode::Domain, "eval_2f1_double_sum: invalid parameters");
  const int bound = g.j - g.sigma();
  if (bound < 0 || g.j < 0)
    throw EvalError(ErrorCode::Precondition, "eval_2f1_double_sum: requires j >= sign*p and j >= 0");
  if (g.w == 0.0 || g.w == g.lambda || g.z == 0.0 || g.z == g.lambda)
    throw EvalError(ErrorCode::Precondition,
                    "eval_2f1_double_sum: requires w, z not in {0, lambda}");
  if (!g.strictly_convergent())
    throw EvalError(ErrorCode::Divergence, "eval_2f1_double_sum: requires |w|+|z| < lambda");

  const double cj = g.cj(), c2 = g.c2();
  const double zeta = g.w * g.z / ((g.lambda - g.z) * (g.lambda - g.w));
  const double rz = g.z / (g.z - g.lambda);
  const double rw = g.w / (g.w - g.lambda);
  detail::Accumulator acc;
  double err = 0.0;
  long long terms = 0;
  EvalResult r;
  double ck = 1.0;
  for (int k = 0; k <= bound; ++k) {
    double cr = 1.0;
    for (int rr = 0; rr <= g.j + k; ++rr) {
      EvalResult inner = hyp2f1(g.b + rr, g.b_prime + k, g.c + rr, zeta, ctrl);
      acc.add(ck * cr * inner.value);
      err += std::abs(ck * cr) * inner.err_est;
      terms += inner.terms_used;
      r.merge_warnings(inner);
      cr *= (g.b + rr) * (static_cast<double>(-g.j - k) + rr) /
            ((g.c + rr) * static_cast<double>(rr + 1)) * rw;
    }
    ck *= (static_cast<double>(g.sigma() - g.j) + k) * (g.b_prime + k) /
          ((c2 + k) * static_cast<double>(k + 1)) * rz;
  }
  detail::LogFactor pref;
  pref.mul_gamma(cj);
  pref.mul_pow(g.lambda, g.b + g.b_prime - cj);
  pref.mul_pow(g.lambda - g.w, -g.b);
  pref.mul_pow(g.lambda - g.z, -g.b_prime);
  const double scale = pref.value();
  r.value = scale * acc.value();
  r.err_est = std::abs(scale) * (err + acc.rounding_err());
  r.strategy = strategy::k2F1DoubleSum;
  r.terms_used = terms;
  detail::attach_cancellation(r, acc);
  return r;
}

namespace detail {

inline EvalResult scaled_closed_form(double log_pref_value, const char* tag) {
  EvalResult r;
  r.value = log_pref_value;
  r.err_est = std::abs(log_pref_value) * 4.0 * kEps;
  r.strategy = tag;
  r.terms_used = 1;
  r.exact = true;
  return r;
}

/// One-trivial-factor family (tags 35-39): the surviving factor is
/// 1F1(u; cden; v x). `sigma_eff` is cden - c in units of the original c.
inline std::optional<EvalResult> special_single_factor(const GordonParams& g, double u,
                                                       double cden, double v,
                                                       const SeriesControl& ctrl) {
  const double cj = g.cj();
  if (u == 0.0 || v == 0.0) {
    LogFactor pref;
    pref.mul_gamma(cj);
    pref.mul_pow(g.lambda, -cj);
    return scaled_closed_form(pref.value(), "SPECIAL-36");
  }
  if (std::abs(v) >= g.lambda) return std::nullopt;
  const bool is_cj = (cden == cj);          // tag 37 pattern: denominator c+j
  const bool is_c = (cden == g.c) || (cden == g.c2() && g.p == 0);
  if (g.j == 0 && is_c) {
    // tag 39: lambda^{u-c} Gamma(c) / (lambda-v)^u
    LogFactor pref;
    pref.mul_gamma(g.c);
    pref.mul_pow(g.lambda, u - g.c);
    pref.mul_pow(g.lambda - v, -u);
    return scaled_closed_form(pref.value(), "SPECIAL-39");
  }
  if (is_cj) {
    // tag 37: Gamma(c+j) / (lambda^{c+j-u} (lambda-v)^u)
    LogFactor pref;
    pref.mul_gamma(cj);
    pref.mul_pow(g.lambda, u - cj);
    pref.mul_pow(g.lambda - v, -u);
    return scaled_closed_form(pref.value(), "SPECIAL-37");
  }
  if (g.j >= 1 && is_c) {
    // tag 38 (corrected (lambda-v)^u prefactor, see DEVIATIONS.md):
    // pref [1 + u v/(cden (lambda-v)) sum_{k=1}^j 2F1(-j+k, u+1; cden+1; v/(v-lambda))]
    Accumulator acc;
    acc.add(1.0);
    double err = 0.0;
    long long terms = 1;
    const double y = v / (v - g.lambda);
    const double fac = u * v / (cden * (g.lambda - v));
    for (int k = 1; k <= g.j; ++k) {
      EvalResult inner = hyp2f1(static_cast<double>(-g.j + k), u + 1.0, cden + 1.0, y, ctrl);
      acc.add(fac * inner.value);
      err += std::abs(fac) * inner.err_est;
      terms += inner.terms_used;
    }
    LogFactor pref;
    pref.mul_gamma(cj);
    pref.mul_pow(g.lambda, u - cj);
    pref.mul_pow(g.lambda - v, -u);
    EvalResult r;
    r.value = pref.value() * acc.value();
    r.err_est = std::abs(pref.value()) * (err + acc.rounding_err());
    r.strategy = "SPECIAL-38";
    r.terms_used = terms;
    r.exact = true;
    attach_cancellation(r, acc);
    return r;
  }
  // tag 36: Gamma(c+j)/lambda^{c+j} 2F1(c+j, u; cden; v/lambda)
  EvalResult inner = hyp2f1(cj, u, cden, v / g.lambda, ctrl);
  LogFactor pref;
  pref.mul_gamma(cj);
  pref.mul_pow(g.lambda, -cj);
  EvalResult r;
  r.value = pref.value() * inner.value;
  r.err_est = std::abs(pref.value()) * inner.err_est;
  r.strategy = "SPECIAL-36";
  r.terms_used = inner.terms_used;
  r.exact = inner.exact;
  r.merge_warnings(inner);
  return r;
}

/// tag 36 with the exponential factor absorbed into the rate: evaluates
/// int x^{c+j-1} e^{-rate x} 1F1(u; cden; v x) dx.
inline std::optional<EvalResult> special_rate_shifted(const GordonParams& g, double rate,
                                                      double u, double cden, double v,
                                                      const SeriesControl& ctrl) {
  if (rate <= 0.0) return std::nullopt;
  const double cj = g.cj();
  LogFactor pref;
  pref.mul_gamma(cj);
  pref.mul_pow(rate, -cj);
  if (u == 0.0 || v == 0.0) return scaled_closed_form(pref.value(), "SPECIAL-36");
  const bool term = is_nonpos_int(u);
  if (!term && std::abs(v) >= rate) return std::nullopt;
  EvalResult inner = hyp2f1(cj, u, cden, v / rate, ctrl);
  EvalResult r;
  r.value = pref.value() * inner.value;
  r.err_est = std::abs(pref.value()) * inner.err_est;
  r.strategy = "SPECIAL-36";
  r.terms_used = inner.terms_used;
  r.exact = inner.exact;
  r.merge_warnings(inner);
  return r;
}

inline std::optional<EvalResult> special_eq9(const GordonParams& g, const SeriesControl& ctrl) {
  const int bound = g.j - g.sigma();
  if (g.j < 0 || bound < 0 || !g.strictly_convergent()) return std::nullopt;
  if (g.z == 0.0 && bound > 0) return std::nullopt;
  const double cj = g.cj(), c2 = g.c2();
  const double rz = (bound > 0) ? g.z / (g.z - g.lambda) : 0.0;
  const double arg = g.w / (g.w + g.z - g.lambda);
  Accumulator acc;
  double err = 0.0;
  long long terms = 0;
  double coef = 1.0;
  for (int k = 0; k <= bound; ++k) {
    EvalResult inner = hyp2f1(g.b, static_cast<double>(-g.j - k), g.c, arg, ctrl);
    acc.add(coef * inner.value);
    err += std::abs(coef) * inner.err_est;
    terms += inner.terms_used;
    coef *= (static_cast<double>(g.sigma() - g.j) + k) * (cj + k) /
            ((c2 + k) * static_cast<double>(k + 1)) * rz;
  }
  LogFactor pref;
  pref.mul_gamma(cj);
  pref.mul_pow(g.lambda - g.z, g.b - cj);
  pref.mul_pow(g.lambda - g.z - g.w, -g.b);
  EvalResult r;
  r.value = pref.value() * acc.value();
  r.err_est = std::abs(pref.value()) * (err + acc.rounding_err());
  r.strategy = "SPECIAL-9";
  r.terms_used = terms;
  r.exact = true;
  attach_cancellation(r, acc);
  return r;
}

inline std::optional<EvalResult> special_eq11(const GordonParams& g, const SeriesControl& ctrl) {
  if (g.j < 0 || g.w == g.lambda) return std::nullopt;
  const bool inner_term = detail::is_nonpos_int(g.b_prime);
  if (!inner_term && !(std::abs(g.z) < std::abs(g.lambda - g.w))) return std::nullopt;
  if (g.w == 0.0 && g.j > 0) return std::nullopt;
  const double cj = g.cj(), c2 = g.c2();
  const double rw = (g.w != 0.0) ? g.w / (g.w - g.lambda) : 0.0;
  Accumulator acc;
  double err = 0.0;
  long long terms = 0;
  double coef = 1.0;
  for (int k = 0; k <= g.j; ++k) {
    EvalResult inner = hyp2f1(g.b_prime, cj + k, c2, g.z / (g.lambda - g.w), ctrl);
    acc.add(coef * inner.value);
    err += std::abs(coef) * inner.err_est;
    terms += inner.terms_used;
    coef *= (static_cast<double>(-g.j) + k) * (cj + k) /
            ((g.c + k) * static_cast<double>(k + 1)) * rw;
  }
  LogFactor pref;
  pref.mul_gamma(cj);
  pref.mul_pow(g.lambda - g.w, -cj);
  EvalResult r;
  r.value = pref.value() * acc.value();
  r.err_est = std::abs(pref.value()) * (err + acc.rounding_err());
  r.strategy = "SPECIAL-11";
  r.terms_used = terms;
  r.exact = false;
  attach_cancellation(r, acc);
  return r;
}

inline std::optional<EvalResult> special_eq34(const GordonParams& g, const SeriesControl& ctrl) {
  if (g.j < 0 || !g.strictly_convergent()) return std::nullopt;
  if (g.z == 0.0 && g.p > 0) return std::nullopt;
  const double cj = g.cj();
  const double rz = g.z / (g.z - g.lambda);
  const double arg = g.w / (g.w + g.z - g.lambda);
  Accumulator acc;
  double err = 0.0;
  long long terms = 0;
  double coef = 1.0;
  for (int k = 0; k <= g.p; ++k) {
    EvalResult inner = hyp2f1(static_cast<double>(-k - g.j), g.b, g.c, arg, ctrl);
    acc.add(coef * inner.value);
    err += std::abs(coef) * inner.err_est;
    terms += inner.terms_used;
    coef *= (static_cast<double>(-g.p) + k) * (cj + k) /
            ((g.c - g.p + k) * static_cast<double>(k + 1)) * rz;
  }
  LogFactor pref;
  pref.mul_gamma(cj);
  pref.mul_pow(g.lambda - g.z, g.b - cj);
  pref.mul_pow(g.lambda - g.w - g.z, -g.b);
  EvalResult r;
  r.value = pref.value() * acc.value();
  r.err_est = std::abs(pref.value()) * (err + acc.rounding_err());
  r.strategy = "SPECIAL-34";
  r.terms_used = terms;
  r.exact = true;
  attach_cancellation(r, acc);
  return r;
}

/// Opposite arguments z = -w with b' = b, p = 0 (tags 23-25).
inline std::optional<EvalResult> special_opposite(const GordonParams& g,
                                                  const SeriesControl& ctrl) {
  if (std::abs(g.w) >= g.lambda) return std::nullopt;
  const double cj = g.cj();
  const double x = (g.w / g.lambda) * (g.w / g.lambda);
  const char* tag = "SPECIAL-23";
  EvalResult inner;
  if (g.j == 1 && g.b == g.c / 2.0) {
    inner = hyp2f1(g.c / 2.0, g.c / 2.0 + 1.0, g.c, x, ctrl);
    tag = "SPECIAL-25";
  } else if (g.j == 1) {
    inner = hyp_pfq({g.b, g.c - g.b, g.c / 2.0 + 1.0}, {g.c, g.c / 2.0}, x, ctrl);
    tag = "SPECIAL-24";
  } else {
    inner = hyp_pfq({g.b, g.c - g.b, cj / 2.0, (cj + 1.0) / 2.0},
                    {g.c, g.c / 2.0, (g.c + 1.0) / 2.0}, x, ctrl);
  }
  LogFactor pref;
  pref.mul_gamma(cj);
  pref.mul_pow(g.lambda, -cj);
  EvalResult r;
  r.value = pref.value() * inner.value;
  r.err_est = std::abs(pref.value()) * inner.err_est;
  r.strategy = tag;
  r.terms_used = inner.terms_used;
  r.exact = inner.exact;
  r.merge_warnings(inner);
  return r;
}

/// Equal arguments z = w with b' = c - b, p = 0 (tags 27-29).
inline std::optional<EvalResult> special_equal(const GordonParams& g,
                                               const SeriesControl& ctrl) {
  if (!(g.z < g.lambda / 2.0)) return std::nullopt;
  const double cj = g.cj();
  const double u = g.z / (g.lambda - g.z);
  const double x = u * u;
  const char* tag = "SPECIAL-27";
  EvalResult inner;
  if (g.j == 1 && g.b == g.c / 2.0) {
    inner = hyp2f1(g.c / 2.0, g.c / 2.0 + 1.0, g.c, x, ctrl);
    tag = "SPECIAL-29";
  } else if (g.j == 1) {
    inner = hyp_pfq({g.b, g.c - g.b, g.c / 2.0 + 1.0}, {g.c, g.c / 2.0}, x, ctrl);
    tag = "SPECIAL-28";
  } else {
    inner = hyp_pfq({g.b, g.c - g.b, cj / 2.0, (cj + 1.0) / 2.0},
                    {g.c, g.c / 2.0, (g.c + 1.0) / 2.0}, x, ctrl);
  }
  LogFactor pref;
  pref.mul_gamma(cj);
  pref.mul_pow(g.lambda - g.z, -cj);
  EvalResult r;
  r.value = pref.value() * inner.value;
  r.err_est = std::abs(pref.value()) * inner.err_est;
  r.strategy = tag;
  r.terms_used = inner.terms_used;
  r.exact = inner.exact;
  r.merge_warnings(inner);
  return r;
}

}  // namespace detail

/// Pattern-matching dispatcher over the closed-form catalog. Returns
/// nullopt when no entry matches, signalling eval_auto to fall through to
/// the general strategies.
inline std::optional<EvalResult> eval_special(const GordonParams& g,
                                              const SeriesControl& ctrl = {}) {
  if (!g.domain_ok()) return std::nullopt;
  const bool first_trivial = (g.b == 0.0 || g.w == 0.0);
  const bool second_trivial = (g.b_prime == 0.0 || g.z == 0.0);

  if (first_trivial && second_trivial) {
    detail::LogFactor pref;
    pref.mul_gamma(g.cj());
    pref.mul_pow(g.lambda, -g.cj());
    return detail::scaled_closed_form(pref.value(), "SPECIAL-36");
  }

  // terminating catalog: polynomial upper parameters
  if (g.b_terminating() && g.bp_terminating()) {
    if (auto r = try_poly_gordon(PolyGordonParams::from_gordon(g), ctrl)) return r;
  }
  if (first_trivial)  // surviving factor 1F1(b'; c+sigma; z x)
    if (auto r = detail::special_single_factor(g, g.b_prime, g.c2(), g.z, ctrl)) return r;
  if (second_trivial)  // surviving factor 1F1(b; c; w x)
    if (auto r = detail::special_single_factor(g, g.b, g.c, g.w, ctrl)) return r;
  if (g.b_terminating() || g.bp_terminating()) {
    if (auto r = try_poly_gordon(PolyGordonParams::from_gordon(g), ctrl)) return r;
  }
  // exponential collapse: 1F1(a; a; t) = e^t shifts the decay rate
  if (g.b == g.c && g.w != g.lambda)
    if (auto r = detail::special_rate_shifted(g, g.lambda - g.w, g.b_prime, g.c2(), g.z, ctrl))
      return r;
  if (g.b_prime == g.c2() && g.z != g.lambda)
    if (auto r = detail::special_rate_shifted(g, g.lambda - g.z, g.b, g.c, g.w, ctrl))
      return r;
  if (g.b_prime == g.cj())
    if (auto r = detail::special_eq9(g, ctrl)) return r;
  if (g.b == g.cj())
    if (auto r = detail::special_eq11(g, ctrl)) return r;
  if (g.b_prime == g.c && g.sigma() < 0)
    if (auto r = detail::special_eq34(g, ctrl)) return r;
  if (g.z == -g.w && g.w != 0.0 && g.b_prime == g.b && g.sigma() == 0)
    if (auto r = detail::special_opposite(g, ctrl)) return r;
  if (g.z == g.w && g.w != 0.0 && g.b_prime == g.c - g.b && g.sigma() == 0)
    if (auto r = detail::special_equal(g, ctrl)) return r;
  return std::nullopt;
}

/// Per-strategy applicability report. Reports, never throws.
inline std::vector<StrategyApplicability> validate(const GordonParams& g) {
  std::vector<StrategyApplicability> out;
  const bool domain = g.domain_ok();
  const bool strict = g.strictly_convergent();
  const bool boundary = !strict && std::abs(g.w) + std::abs(g.z) == g.lambda;
  const bool dbl_term = g.b_terminating() && g.bp_terminating();

  auto add = [&out](const char* name, bool ok, const char* reason) {
    out.push_back({name, ok, ok ? "OK" : reason});
  };

  if (!domain) {
    add(strategy::kF2Series, false, "DOMAIN");
    add(strategy::kF1Sum, false, "DOMAIN");
    add(strategy::k2F1DoubleSum, false, "DOMAIN");
    add("SPECIAL", false, "DOMAIN");
    return out;
  }
  add(strategy::kF2Series, strict || dbl_term, boundary ? "BOUNDARY" : "CONVERGENCE");

  const int bound = g.j - g.sigma();
  if (bound < 0)
    add(strategy::kF1Sum, false, "PRECONDITION");
  else if (g.z == 0.0 || g.z == g.lambda)
    add(strategy::kF1Sum, false, "PRECONDITION");
  else
    add(strategy::kF1Sum, strict || (g.b_terminating() && std::abs(g.z) < g.lambda),
        "CONVERGENCE");

  if (bound < 0 || g.j < 0)
    add(strategy::k2F1DoubleSum, false, "PRECONDITION");
  else if (g.w == 0.0 || g.w == g.lambda || g.z == 0.0 || g.z == g.lambda)
    add(strategy::k2F1DoubleSum, false, "PRECONDITION");
  else
    add(strategy::k2F1DoubleSum, strict, "CONVERGENCE");

  bool special = false;
  try {
    special = eval_special(g).has_value();
  } catch (const EvalError&) {
    special = false;
  }
  add("SPECIAL", special, "NO-PATTERN");
  return out;
}

/// Strategy auto-selection: closed-form catalog first (terminating entries
/// take precedence inside eval_special), then the three general strategies
/// in the documented order. Returns the first success.
inline EvalResult eval_auto(const GordonParams& g, const SeriesControl& ctrl = {}) {
  if (!g.domain_ok())
    throw EvalError(ErrorCode::Domain, "eval_auto: invalid parameters (" + g.describe() + ")");
  std::string failures;
  try {
    if (auto r = eval_special(g, ctrl)) return *r;
    failures += "SPECIAL: no pattern; ";
  } catch (const EvalError& e) {
    failures += std::string("SPECIAL: ") + e.what() + "; ";
  }
  for (int s = 0; s < 3; ++s) {
    try {
      if (s == 0) return eval_f2_series(g, ctrl);
      if (s == 1) return eval_f1_sum(g, ctrl);
      return eval_2f1_double_sum(g, ctrl);
    } catch (const EvalError& e) {
      failures += std::string(s == 0   ? "F2-SERIES: "
                              : s == 1 ? "F1-SUM: "
                                       : "2F1-DOUBLE-SUM: ") +
                  e.what() + "; ";
    }
  }
  throw EvalError(ErrorCode::AllStrategiesFailed, "eval_auto: all strategies failed (" +
                                                      failures + "params: " + g.describe() + ")");
}

/// Whittaker function M_{kappa,mu}(z) = e^{-z/2} z^{mu+1/2} 1F1(mu-kappa+1/2; 1+2mu; z).
inline double whittaker_m(double kappa, double mu, double z, const SeriesControl& ctrl = {}) {
  if (!(z > 0.0))
    throw EvalError(ErrorCode::Domain, "whittaker_m: requires z > 0");
  if (detail::is_nonpos_int(1.0 + 2.0 * mu))
    throw EvalError(ErrorCode::Domain, "whittaker_m: 1+2mu is a nonpositive integer");
  EvalResult f = hyp1f1(mu - kappa + 0.5, 1.0 + 2.0 * mu, z, ctrl);
  return std::exp(-z / 2.0) * std::pow(z, mu + 0.5) * f.value;
}

/// Explicit rewrite entries of the catalog (5b, 5c, 13, 15, 17, 19, 21, 31,
/// 33): each expresses J at the given parameters as a finite combination of
/// F1/F2 evaluations with shifted parameters. They are verification objects
/// rather than dispatch targets; `n` is the free shift order where the entry
/// has one.
inline EvalResult eval_catalog_entry(const std::string& id, const GordonParams& g,
                                     const SeriesControl& ctrl = {}, int n = 1) {
  const double cj = g.cj(), c2 = g.c2();
  detail::Accumulator acc;
  double err = 0.0;
  long long terms = 0;
  EvalResult r;
  auto f2_at = [&](double a, double b1, double b2, double d1, double d2) {
    AppellF2Params q{a, b1, b2, d1, d2, g.w / g.lambda, g.z / g.lambda};
    return appell_f2_double(q, ctrl);
  };
  if (id == "5b" || id == "5c") {
    if (g.sigma() != g.j || g.j < 0 || g.b != cj)
      throw EvalError(ErrorCode::NotApplicable, "catalog 5b/5c: pattern mismatch");
    if (id == "5c" && g.b_prime != g.c)
      throw EvalError(ErrorCode::NotApplicable, "catalog 5c: requires b' = c");
    AppellF1Params f1{static_cast<double>(-g.j), cj - g.b_prime, g.b_prime, g.c,
                      g.w / (g.w - g.lambda), g.w / (g.w + g.z - g.lambda)};
    EvalResult inner = appell_f1(f1, ctrl);
    detail::LogFactor pref;
    pref.mul_gamma(cj);
    pref.mul_pow(g.lambda - g.w, g.b_prime - cj);
    pref.mul_pow(g.lambda - g.z - g.w, -g.b_prime);
    r.value = pref.value() * inner.value;
    r.err_est = std::abs(pref.value()) * inner.err_est;
    r.terms_used = inner.terms_used;
    r.strategy = (id == "5c") ? "SPECIAL-5c" : "SPECIAL-5b";
    return r;
  }
  if (id == "13") {
    if (g.j < 0 || g.b != g.c - g.j)
      throw EvalError(ErrorCode::NotApplicable, "catalog 13: requires b = c - j");
    double coef = 1.0;
    for (int k = 0; k <= g.j; ++k) {
      EvalResult f = f2_at(cj + k, g.c, g.b_prime, g.c + k, c2);
      acc.add(coef * f.value);
      err += std::abs(coef) * f.err_est;
      terms += f.terms_used;
      coef *= (static_cast<double>(-g.j) + k) * (cj + k) /
              ((g.c + k) * static_cast<double>(k + 1)) * (g.w / g.lambda);
    }
    detail::LogFactor pref;
    pref.mul_gamma(cj);
    pref.mul_pow(g.lambda, -cj);
    r.value = pref.value() * acc.value();
    r.err_est = std::abs(pref.value()) * (err + acc.rounding_err());
    r.strategy = "SPECIAL-13";
    r.terms_used = terms;
    return r;
  }
  if (id == "15" || id == "17" || id == "19" || id == "21" || id == "31" || id == "33") {
    if ((id == "31" && (g.sign != 1 || g.p < 1)) || (id == "33" && (g.sign != -1 || g.p < 1)))
      throw EvalError(ErrorCode::NotApplicable, "catalog 31/33: sign/p mismatch");
    detail::LogFactor pref;
    if (id == "15") {
      // base point: c0 = c-n, b0 = b-n; J expressed through F2 at c0+k
      const double c0 = g.c - n, b0 = g.b - n;
      double coef = pochhammer(c0, n) / pochhammer(b0, n);
      double lead = 1.0;
      for (int k = 0; k <= n; ++k) {
        EvalResult f = f2_at(cj, b0, g.b_prime, c0 + k, c2);
        acc.add(coef * lead * f.value);
        err += std::abs(coef * lead) * f.err_est;
        terms += f.terms_used;
        lead *= (static_cast<double>(-n) + k) * (c0 - b0 + k) /
                ((c0 + k) * static_cast<double>(k + 1));
      }
      pref.mul_gamma(cj);
      pref.mul_pow(g.lambda, -cj);
    } else if (id == "17") {
      const double c0 = g.c - n, b0 = g.b - n;
      if (g.w == 0.0) throw EvalError(ErrorCode::NotApplicable, "catalog 17: w = 0");
      double coef = pochhammer(c0 - 1.0, n) * pochhammer(c0, n) /
                    (std::pow(-g.w, static_cast<double>(n)) * pochhammer(b0, n));
      double lead = 1.0;
      for (int k = 0; k <= n; ++k) {
        EvalResult f = f2_at(cj - n, b0, g.b_prime, c0 - k, c2);
        acc.add(coef * lead * f.value);
        err += std::abs(coef * lead) * f.err_est;
        terms += f.terms_used;
        lead *= (static_cast<double>(-n) + k) * (1.0 - c0 + k) /
                ((2.0 - c0 - n + k) * static_cast<double>(k + 1));
      }
      pref.mul_gamma(cj - n);
      pref.mul_pow(g.lambda, -(cj - n));
    } else if (id == "19") {
      const double b0 = g.b - n;
      double coef = pochhammer(b0 - g.c + 1.0, n) / pochhammer(b0, n);
      double lead = 1.0;
      for (int k = 0; k <= n; ++k) {
        EvalResult f = f2_at(cj, b0, g.b_prime, g.c - k, c2);
        acc.add(coef * lead * f.value);
        err += std::abs(coef * lead) * f.err_est;
        terms += f.terms_used;
        lead *= (static_cast<double>(-n) + k) * (1.0 - g.c + k) /
                ((b0 - g.c + 1.0 + k) * static_cast<double>(k + 1));
      }
      pref.mul_gamma(cj);
      pref.mul_pow(g.lambda, -cj);
    } else if (id == "21") {
      // base point: c0 = c+n, b0 = b+n
      const double c0 = g.c + n, b0 = g.b + n;
      if (g.w == 0.0) throw EvalError(ErrorCode::NotApplicable, "catalog 21: w = 0");
      double lead = 1.0;
      for (int k = 0; k <= n; ++k) {
        EvalResult f = f2_at(cj + n - k, b0, g.b_prime, c0 - k, c2);
        acc.add(lead * f.value);
        err += std::abs(lead) * f.err_est;
        terms += f.terms_used;
        lead *= (static_cast<double>(-n) + k) * (1.0 - c0 + k) /
                ((1.0 - cj - n + k) * static_cast<double>(k + 1)) *
                (g.lambda / g.w);
      }
      pref.mul_gamma(cj + n);
      pref.mul_pow(g.lambda, -(cj + n));
      pref.mul_pow(g.w, static_cast<double>(n));
      const double pn = pochhammer(1.0 - c0, n);
      r.value = pref.value() * acc.value() / pn;
      r.err_est = std::abs(pref.value() / pn) * (err + acc.rounding_err());
      r.strategy = "SPECIAL-21";
      r.terms_used = terms;
      return r;
    } else if (id == "31") {
      double coef = pochhammer(g.c, g.p) / pochhammer(g.c - g.b_prime, g.p);
      double lead = 1.0;
      for (int k = 0; k <= g.p; ++k) {
        EvalResult f = f2_at(cj, g.b, g.b_prime + k, g.c, g.c + k);
        acc.add(coef * lead * f.value);
        err += std::abs(coef * lead) * f.err_est;
        terms += f.terms_used;
        lead *= (static_cast<double>(-g.p) + k) * (g.b_prime + k) /
                ((g.c + k) * static_cast<double>(k + 1));
      }
      pref.mul_gamma(cj);
      pref.mul_pow(g.lambda, -cj);
    } else {  // "33"
      double lead = 1.0;
      for (int k = 0; k <= g.p; ++k) {
        EvalResult f = f2_at(cj + k, g.b, g.b_prime + k, g.c, g.c + k);
        acc.add(lead * f.value);
        err += std::abs(lead) * f.err_est;
        terms += f.terms_used;
        lead *= (static_cast<double>(-g.p) + k) * (g.b_prime + k) * (cj + k) /
                ((g.c + k) * (g.c - g.p + k) * static_cast<double>(k + 1)) *
                (-g.z / g.lambda);
      }
      pref.mul_gamma(cj);
      pref.mul_pow(g.lambda, -cj);
    }
    r.value = pref.value() * acc.value();
    r.err_est = std::abs(pref.value()) * (err + acc.rounding_err());
    r.strategy = "SPECIAL-" + id;
    r.terms_used = terms;
    return r;
  }
  throw EvalError(ErrorCode::NotApplicable, "eval_catalog_entry: unknown id " + id);
}

}  // namespace gordon

#endif  // GORDON_GORDON_EVAL_HPP_
