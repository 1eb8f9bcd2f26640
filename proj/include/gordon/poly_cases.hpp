#ifndef GORDON_POLY_CASES_HPP_
#define GORDON_POLY_CASES_HPP_

#include <cmath>
#include <optional>
#include <string>

#include "gordon/params.hpp"

namespace gordon {

/// Generalized Laguerre polynomial L_n^alpha(x). Total function: the
/// Pochhammer ratio (alpha+1)_n/(alpha+1)_k is expanded to (alpha+k+1)_{n-k}
/// so nonpositive-integer alpha+1 never divides by zero.
inline double laguerre(long long n, double alpha, double x) {
  detail::Accumulator acc;
  double lead = 1.0;  // (-n)_k x^k / k!
  for (long long k = 0; k <= n; ++k) {
    double tail = 1.0;
    for (long long t = k; t < n; ++t) tail *= alpha + 1.0 + static_cast<double>(t);
    acc.add(lead * tail);
    lead *= (static_cast<double>(-n) + k) * x / static_cast<double>(k + 1);
  }
  double nfact = 1.0;
  for (long long t = 2; t <= n; ++t) nfact *= static_cast<double>(t);
  return acc.value() / nfact;
}

/// H_{2n}(sqrt(t)) = (-1)^n (2n)!/n! 1F1(-n; 1/2; t), t >= 0.
inline double hermite_even(long long n, double t) {
  if (t < 0.0) throw EvalError(ErrorCode::Domain, "hermite_even: t < 0");
  double pref = (n % 2 == 0) ? 1.0 : -1.0;
  for (long long i = n + 1; i <= 2 * n; ++i) pref *= static_cast<double>(i);
  return pref * hyp1f1(static_cast<double>(-n), 0.5, t).value;
}

/// H_{2n+1}(sqrt(t)) = (-1)^n 2 sqrt(t) (2n+1)!/n! 1F1(-n; 3/2; t), t >= 0.
inline double hermite_odd(long long n, double t) {
  if (t < 0.0) throw EvalError(ErrorCode::Domain, "hermite_odd: t < 0");
  double pref = (n % 2 == 0) ? 2.0 : -2.0;
  for (long long i = n + 1; i <= 2 * n + 1; ++i) pref *= static_cast<double>(i);
  return pref * std::sqrt(t) * hyp1f1(static_cast<double>(-n), 1.5, t).value;
}

/// Jacobi polynomial via its terminating 2F1 representation,
/// P_n^{(alpha,beta)}(x) = ((alpha+1)_n / n!) 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2).
inline double jacobi_p(long long n, double alpha, double beta, double x) {
  double pref = pochhammer(alpha + 1.0, n);
  for (long long t = 2; t <= n; ++t) pref /= static_cast<double>(t);
  return pref * hyp2f1(static_cast<double>(-n), static_cast<double>(n) + alpha + beta + 1.0,
                       alpha + 1.0, (1.0 - x) / 2.0)
                    .value;
}

/// Parameters for the terminating (polynomial) Gordon catalog. A factor is
/// polynomial when its flag is set; otherwise the corresponding real upper
/// parameter is used. Derivative-order conventions for the ladder entries:
/// `mu` is always the z-side order (bounded by n), `l` the w-side order for
/// the plain polynomial pair (bounded by m), and `s` the w-side order for
/// the Laguerre-pair ladders (bounded by m).
struct PolyGordonParams {
  int m = 0;               // w-side degree, first factor 1F1(-m; c; w x)
  int n = 0;               // z-side degree, second factor 1F1(-n; c+sigma; z x)
  bool b_poly = true;
  bool bp_poly = true;
  double b = 0.0;          // first-factor upper parameter when !b_poly
  double b_prime = 0.0;    // second-factor upper parameter when !bp_poly
  double c = 1.0;
  int j = 0;
  int p = 0;
  int sign = +1;
  double lambda = 1.0;
  double w = 0.0;
  double z = 0.0;
  int s = 0, mu = 0, l = 0;

  int sigma() const { return sign * p; }
  double cj() const { return c + static_cast<double>(j); }
  double c2() const { return c + static_cast<double>(sigma()); }

  GordonParams to_gordon() const {
    GordonParams g;
    g.b = b_poly ? static_cast<double>(-m) : b;
    g.b_prime = bp_poly ? static_cast<double>(-n) : b_prime;
    g.c = c;
    g.j = j;
    g.p = p;
    g.sign = sign;
    g.lambda = lambda;
    g.w = w;
    g.z = z;
    return g;
  }

  static PolyGordonParams from_gordon(const GordonParams& g) {
    PolyGordonParams q;
    q.b_poly = g.b_terminating();
    q.bp_poly = g.bp_terminating();
    q.m = q.b_poly ? static_cast<int>(detail::term_degree(g.b)) : 0;
    q.n = q.bp_poly ? static_cast<int>(detail::term_degree(g.b_prime)) : 0;
    q.b = g.b;
    q.b_prime = g.b_prime;
    q.c = g.c;
    q.j = g.j;
    q.p = g.p;
    q.sign = g.sign;
    q.lambda = g.lambda;
    q.w = g.w;
    q.z = g.z;
    return q;
  }
};

struct SpecialPolyValue {
  double value = 0.0;
  bool exact = false;
};

namespace detail {

inline void require(bool cond, ErrorCode code, const char* msg) {
  if (!cond) throw EvalError(code, msg);
}

inline EvalResult make_exact(double v, const char* tag, long long terms, double err = 0.0) {
  EvalResult r;
  r.value = v;
  r.err_est = err;
  r.strategy = tag;
  r.terms_used = terms;
  r.exact = true;
  return r;
}

/// Both factors polynomial, w = z = lambda. The inner 2F1(1) values are
/// collapsed by Chu-Vandermonde into exact products, which realizes the
/// orthogonality deltas by exact integer cancellation instead of floating
/// cancellation:
///   J = Gamma(c+j) / (lambda^{c+j} (c)_m) *
///       sum_k (c+j)_k (-n)_k (-j-k)_m / ((c+sigma)_k k!).
inline EvalResult poly_both_at_lambda(const PolyGordonParams& q) {
  Accumulator acc;
  double lead = 1.0;  // (c+j)_k (-n)_k / ((c+sigma)_k k!)
  const double cj = q.cj(), c2 = q.c2();
  for (long long k = 0; k <= q.n; ++k) {
    acc.add(lead * pochhammer(static_cast<double>(-q.j - k), q.m));
    lead *= (cj + k) * (static_cast<double>(-q.n) + k) / ((c2 + k) * static_cast<double>(k + 1));
  }
  LogFactor pref;
  pref.mul_gamma(cj);
  pref.mul_pow(q.lambda, -cj);
  const double cm = pochhammer(q.c, q.m);
  const char* tag = "SPECIAL-47";
  if (q.j == 0 && q.sigma() == 0) tag = "SPECIAL-64";
  else if (q.j == 0) tag = "SPECIAL-49";
  else if (q.sigma() == 0 && q.m == q.n) tag = (q.j == 1) ? "SPECIAL-53" : "SPECIAL-52";
  else if (q.sigma() == 0) tag = "SPECIAL-48";
  EvalResult r = make_exact(pref.value() * acc.value() / cm, tag, acc.count);
  r.err_est = std::abs(pref.value() / cm) * acc.rounding_err();
  return r;
}

/// Both factors polynomial, generic arguments: the finite double sum in
/// either of its two orderings (outer index against the w side or the z
/// side). At w = lambda or z = lambda the matching ordering is used so the
/// unit power leaves an exact finite sum.
enum class Eq42Ordering { OuterW, OuterZ };

inline EvalResult poly_both_generic(const PolyGordonParams& q, Eq42Ordering ord,
                                    const SeriesControl& ctrl,
                                    const char* tag_override = nullptr) {
  Accumulator acc;
  double err = 0.0;
  long long terms = 0;
  const double cj = q.cj(), c2 = q.c2();
  if (ord == Eq42Ordering::OuterW) {
    const double x = q.w / q.lambda;
    double lead = 1.0;  // (c+j)_k (-m)_k / ((c)_k k!) x^k
    for (long long k = 0; k <= q.m; ++k) {
      EvalResult inner =
          hyp2f1(static_cast<double>(-q.n), cj + k, c2, q.z / q.lambda, ctrl);
      acc.add(lead * inner.value);
      err += std::abs(lead) * inner.err_est;
      terms += inner.terms_used;
      lead *= (cj + k) * (static_cast<double>(-q.m) + k) /
              ((q.c + k) * static_cast<double>(k + 1)) * x;
    }
  } else {
    const double x = q.z / q.lambda;
    double lead = 1.0;
    for (long long k = 0; k <= q.n; ++k) {
      EvalResult inner =
          hyp2f1(static_cast<double>(-q.m), cj + k, q.c, q.w / q.lambda, ctrl);
      acc.add(lead * inner.value);
      err += std::abs(lead) * inner.err_est;
      terms += inner.terms_used;
      lead *= (cj + k) * (static_cast<double>(-q.n) + k) /
              ((c2 + k) * static_cast<double>(k + 1)) * x;
    }
  }
  LogFactor pref;
  pref.mul_gamma(cj);
  pref.mul_pow(q.lambda, -cj);
  const char* tag = (q.j == 0 && q.sigma() == 0) ? "SPECIAL-63" : "SPECIAL-42";
  if (tag_override) tag = tag_override;
  EvalResult r = make_exact(pref.value() * acc.value(), tag, acc.count + terms);
  r.err_est = std::abs(pref.value()) * (err + acc.rounding_err());
  attach_cancellation(r, acc);
  return r;
}

/// Second factor polynomial (degree n), first factor 1F1(b; c; w x) with
/// real b: finite sum of terminating 2F1 values at w/(w-lambda).
inline EvalResult poly_second_only(const PolyGordonParams& q, const SeriesControl& ctrl) {
  require(q.j >= 0, ErrorCode::Precondition, "poly catalog: requires j >= 0");
  require(std::abs(q.w) < q.lambda, ErrorCode::Divergence, "poly catalog: requires |w| < lambda");
  const double cj = q.cj(), c2 = q.c2();
  const double u = q.w / (q.w - q.lambda);
  Accumulator acc;
  double err = 0.0;
  long long terms = 0;
  double lead = 1.0;  // (-n)_k (c+j)_k / ((c+sigma)_k k!) (z/lambda)^k
  for (long long k = 0; k <= q.n; ++k) {
    EvalResult inner = hyp2f1(static_cast<double>(-q.j - k), q.b, q.c, u, ctrl);
    acc.add(lead * inner.value);
    err += std::abs(lead) * inner.err_est;
    terms += inner.terms_used;
    lead *= (static_cast<double>(-q.n) + k) * (cj + k) /
            ((c2 + k) * static_cast<double>(k + 1)) * (q.z / q.lambda);
  }
  LogFactor pref;
  pref.mul_gamma(cj);
  pref.mul_pow(q.lambda, q.b - cj);
  pref.mul_pow(q.lambda - q.w, -q.b);
  EvalResult r = make_exact(pref.value() * acc.value(), "SPECIAL-40", acc.count + terms);
  r.err_est = std::abs(pref.value()) * (err + acc.rounding_err());
  attach_cancellation(r, acc);
  return r;
}

/// Mirror of the previous case: first factor polynomial (degree m), second
/// 1F1(b'; c+sigma; z x) with real b'.
inline EvalResult poly_first_only(const PolyGordonParams& q, const SeriesControl& ctrl) {
  require(q.j - q.sigma() >= 0, ErrorCode::Precondition, "poly catalog: requires j - sigma >= 0");
  require(std::abs(q.z) < q.lambda, ErrorCode::Divergence, "poly catalog: requires |z| < lambda");
  const double cj = q.cj(), c2 = q.c2();
  const double u = q.z / (q.z - q.lambda);
  Accumulator acc;
  double err = 0.0;
  long long terms = 0;
  double lead = 1.0;
  for (long long k = 0; k <= q.m; ++k) {
    EvalResult inner =
        hyp2f1(static_cast<double>(q.sigma() - q.j - k), q.b_prime, c2, u, ctrl);
    acc.add(lead * inner.value);
    err += std::abs(lead) * inner.err_est;
    terms += inner.terms_used;
    lead *= (static_cast<double>(-q.m) + k) * (cj + k) /
            ((q.c + k) * static_cast<double>(k + 1)) * (q.w / q.lambda);
  }
  LogFactor pref;
  pref.mul_gamma(cj);
  pref.mul_pow(q.lambda, q.b_prime - cj);
  pref.mul_pow(q.lambda - q.z, -q.b_prime);
  EvalResult r = make_exact(pref.value() * acc.value(), "SPECIAL-40", acc.count + terms);
  r.err_est = std::abs(pref.value()) * (err + acc.rounding_err());
  attach_cancellation(r, acc);
  return r;
}

/// Trivial first factor and polynomial second factor: the single-1F1
/// moment family (tags 69-72).
inline EvalResult poly_single_moment(const PolyGordonParams& q, const SeriesControl& ctrl) {
  const double cj = q.cj(), c2 = q.c2();
  LogFactor pref;
  pref.mul_gamma(cj);
  pref.mul_pow(q.lambda, -cj);
  if (q.z == q.lambda) {
    // exact product (sigma - j)_n / (c+sigma)_n; vanishes identically for
    // 0 <= j - sigma < n
    double num = pochhammer(static_cast<double>(q.sigma() - q.j), q.n);
    double den = pochhammer(c2, q.n);
    const char* tag = (q.p == 0 && q.j == q.n) ? "SPECIAL-72" : "SPECIAL-70";
    return make_exact(pref.value() * num / den, tag, q.n + 1);
  }
  if (q.sigma() == q.j) {
    const double base = 1.0 - q.z / q.lambda;
    return make_exact(pref.value() * std::pow(base, static_cast<double>(q.n)),
                      "SPECIAL-71", q.n + 1);
  }
  EvalResult inner = hyp2f1(static_cast<double>(-q.n), cj, c2, q.z / q.lambda, ctrl);
  EvalResult r = make_exact(pref.value() * inner.value, "SPECIAL-69", inner.terms_used);
  r.err_est = std::abs(pref.value()) * inner.err_est;
  r.merge_warnings(inner);
  return r;
}

}  // namespace detail

/// Terminating-case dispatcher (catalog entries 40, 42, 45-50, 52-54,
/// 63-64, 69-72). The computation always uses exact finite sums; the
/// strategy tag names the most specific catalog entry matched.
inline EvalResult poly_gordon(const PolyGordonParams& q, const SeriesControl& ctrl = {}) {
  detail::require(q.cj() > 0.0 && q.lambda > 0.0 && q.p >= 0, ErrorCode::Domain,
                  "poly_gordon: requires c+j > 0, lambda > 0, p >= 0");
  const bool first_trivial = q.b_poly ? (q.m == 0 || q.w == 0.0) : (q.b == 0.0 || q.w == 0.0);
  if (q.b_poly && q.bp_poly) {
    if (first_trivial)
      return detail::poly_single_moment(q, ctrl);
    if (q.w == q.lambda && q.z == q.lambda) return detail::poly_both_at_lambda(q);
    if (q.z == q.lambda)
      return detail::poly_both_generic(q, detail::Eq42Ordering::OuterZ, ctrl, "SPECIAL-45");
    if (q.w == q.lambda)
      return detail::poly_both_generic(q, detail::Eq42Ordering::OuterW, ctrl, "SPECIAL-46");
    return detail::poly_both_generic(q,
                                     q.m <= q.n ? detail::Eq42Ordering::OuterW
                                                : detail::Eq42Ordering::OuterZ,
                                     ctrl);
  }
  if (q.bp_poly && !q.b_poly) {
    if (q.b == 0.0 || q.w == 0.0) return detail::poly_single_moment(q, ctrl);
    return detail::poly_second_only(q, ctrl);
  }
  if (q.b_poly && !q.bp_poly) {
    return detail::poly_first_only(q, ctrl);
  }
  throw EvalError(ErrorCode::NotApplicable, "poly_gordon: no polynomial factor");
}

inline std::optional<EvalResult> try_poly_gordon(const PolyGordonParams& q,
                                                 const SeriesControl& ctrl = {}) {
  try {
    return poly_gordon(q, ctrl);
  } catch (const EvalError&) {
    return std::nullopt;
  }
}

/// Differentiation-ladder entries (tags 41, 43, 44). The result is the
/// shifted-degree integral named by the matched entry:
///   mu-only, real b : int x^{c+j+mu-1} e^{-lx} 1F1(b;c;wx) 1F1(mu-n;c+sigma+mu;zx)
///   l (and mu) poly : int x^{c+j+l+mu-1} e^{-lx} 1F1(l-m;c+l;wx) 1F1(mu-n;c+sigma+mu;zx)
inline EvalResult poly_gordon_derivative_ladder(const PolyGordonParams& q,
                                                const SeriesControl& ctrl = {}) {
  using detail::require;
  const double cj = q.cj(), c2 = q.c2();
  if (!q.b_poly && q.bp_poly) {
    // tag 41: z-side ladder of the one-polynomial entry
    const int mu = q.mu;
    require(mu >= 0 && mu <= q.n, ErrorCode::Precondition, "ladder: requires mu <= n");
    if (mu == 0) return poly_gordon(q, ctrl);
    require(q.z != 0.0, ErrorCode::Precondition, "ladder: z = 0 divides the prefactor");
    require(q.j >= 0, ErrorCode::Precondition, "ladder: requires j >= 0");
    require(std::abs(q.w) < q.lambda, ErrorCode::Divergence, "ladder: requires |w| < lambda");
    const double u = q.w / (q.w - q.lambda);
    detail::Accumulator acc;
    double err = 0.0;
    long long terms = 0;
    for (long long k = mu; k <= q.n; ++k) {
      double coef = pochhammer(static_cast<double>(-k), mu) *
                    pochhammer(static_cast<double>(-q.n), k) * pochhammer(cj, k) /
                    (pochhammer(c2, k) * std::tgamma(static_cast<double>(k + 1))) *
                    std::pow(q.z / q.lambda, static_cast<double>(k));
      EvalResult inner = hyp2f1(static_cast<double>(-q.j - k), q.b, q.c, u, ctrl);
      acc.add(coef * inner.value);
      err += std::abs(coef) * inner.err_est;
      terms += inner.terms_used;
    }
    detail::LogFactor pref;
    pref.mul_gamma(cj);
    pref.mul_pow(q.lambda, q.b - cj);
    pref.mul_pow(q.lambda - q.w, -q.b);
    double head = ((mu % 2 == 0) ? 1.0 : -1.0) * pochhammer(c2, mu) /
                  (pochhammer(static_cast<double>(-q.n), mu) *
                   std::pow(q.z, static_cast<double>(mu)));
    EvalResult r = detail::make_exact(head * pref.value() * acc.value(), "SPECIAL-41",
                                      acc.count + terms);
    r.err_est = std::abs(head * pref.value()) * (err + acc.rounding_err());
    detail::attach_cancellation(r, acc);
    return r;
  }
  if (q.b_poly && q.bp_poly) {
    const int l = q.l, mu = q.mu;
    require(l >= 0 && l <= q.m, ErrorCode::Precondition, "ladder: requires l <= m");
    require(mu >= 0 && mu <= q.n, ErrorCode::Precondition, "ladder: requires mu <= n");
    if (l == 0 && mu == 0) return poly_gordon(q, ctrl);
    require(l == 0 || q.w != 0.0, ErrorCode::Precondition, "ladder: w = 0 divides the prefactor");
    detail::Accumulator acc;
    double err = 0.0;
    long long terms = 0;
    for (long long k = l; k <= q.m; ++k) {
      double coef = pochhammer(cj + k, mu) * pochhammer(cj, k) *
                    pochhammer(static_cast<double>(-q.m), k) *
                    pochhammer(static_cast<double>(-k), l) /
                    (pochhammer(q.c, k) * std::tgamma(static_cast<double>(k + 1))) *
                    std::pow(q.w / q.lambda, static_cast<double>(k));
      EvalResult inner = hyp2f1(static_cast<double>(mu - q.n), cj + k + mu, c2 + mu,
                                q.z / q.lambda, ctrl);
      acc.add(coef * inner.value);
      err += std::abs(coef) * inner.err_est;
      terms += inner.terms_used;
    }
    detail::LogFactor pref;
    pref.mul_gamma(cj);
    pref.mul_pow(q.lambda, -(cj + mu));
    double head = ((l % 2 == 0) ? 1.0 : -1.0) * pochhammer(q.c, l);
    if (l > 0) head /= pochhammer(static_cast<double>(-q.m), l) *
                       std::pow(q.w, static_cast<double>(l));
    const char* tag = (mu == 0) ? "SPECIAL-43" : "SPECIAL-44";
    EvalResult r =
        detail::make_exact(head * pref.value() * acc.value(), tag, acc.count + terms);
    r.err_est = std::abs(head * pref.value()) * (err + acc.rounding_err());
    detail::attach_cancellation(r, acc);
    return r;
  }
  throw EvalError(ErrorCode::NotApplicable, "ladder: unsupported factor pattern");
}

/// Laguerre-weighted catalog (tags 74-85):
///   int x^{c+j-1} e^{-lambda x} L_n^{c+sigma-1}(z x) K(w x) dx
/// with K either 1F1(b; c; .) (b real, tags 74/75/77/78) or L_m^{c-1}
/// (tags 79-85). Ladder orders: mu on the z side, s on the w side.
inline EvalResult laguerre_gordon(const PolyGordonParams& q, const SeriesControl& ctrl = {}) {
  using detail::require;
  const double cj = q.cj(), c2 = q.c2();
  require(cj > 0.0 && q.lambda > 0.0, ErrorCode::Domain, "laguerre_gordon: domain");
  const int mu = q.mu, s = q.s;
  require(mu >= 0 && mu <= q.n, ErrorCode::Precondition, "laguerre_gordon: mu <= n");
  require(mu == 0 || q.z != 0.0, ErrorCode::Precondition, "laguerre_gordon: z = 0");

  double pre_n = pochhammer(c2, q.n) / std::tgamma(static_cast<double>(q.n + 1));
  detail::Accumulator acc;
  double err = 0.0;
  long long terms = 0;
  const char* tag = nullptr;
  bool exact = true;

  if (!q.b_poly) {
    // tags 74 (generic), 75 (b = 0), 77/78 (ladders)
    require(s >= 0, ErrorCode::Precondition, "laguerre_gordon: s >= 0");
    if (q.b == 0.0 || q.w == 0.0) {
      require(s == 0, ErrorCode::Precondition, "laguerre_gordon: w ladder needs a w factor");
      if (q.z == q.lambda && mu == 0) {
        double v = pochhammer(static_cast<double>(q.sigma() - q.j), q.n) /
                   std::tgamma(static_cast<double>(q.n + 1));
        detail::LogFactor pref;
        pref.mul_gamma(cj);
        pref.mul_pow(q.lambda, -cj);
        return detail::make_exact(pref.value() * v, "SPECIAL-75", q.n + 1);
      }
    }
    require(std::abs(q.w) < q.lambda || q.b == 0.0 || q.w == 0.0, ErrorCode::Divergence,
            "laguerre_gordon: requires |w| < lambda");
    for (long long k = mu; k <= q.n; ++k) {
      double coef = pochhammer(static_cast<double>(-k), mu) * pochhammer(cj + k, s) *
                    pochhammer(static_cast<double>(-q.n), k) * pochhammer(cj, k) /
                    (pochhammer(c2, k) * std::tgamma(static_cast<double>(k + 1))) *
                    std::pow(q.z / q.lambda, static_cast<double>(k));
      EvalResult inner = hyp2f1(cj + k + s, q.b + s, q.c + s, q.w / q.lambda, ctrl);
      acc.add(coef * inner.value);
      err += std::abs(coef) * inner.err_est;
      terms += inner.terms_used;
      exact = exact && inner.exact;
    }
    tag = (mu > 0 || s > 0) ? (s > 0 ? "SPECIAL-78" : "SPECIAL-77")
                            : (q.b == 0.0 || q.w == 0.0 ? "SPECIAL-75" : "SPECIAL-74");
  } else {
    // tags 79-85: second polynomial is L_m^{c-1}(w x), ladder order s on w
    require(s >= 0 && s <= q.m, ErrorCode::Precondition, "laguerre_gordon: s <= m");
    require(s == 0 || q.w != 0.0, ErrorCode::Precondition, "laguerre_gordon: w = 0");
    const bool w_at_lambda = (q.w == q.lambda) && s == 0;
    for (long long k = mu; k <= q.n; ++k) {
      double coef = pochhammer(static_cast<double>(-k), mu) * pochhammer(cj + k, s) *
                    pochhammer(static_cast<double>(-q.n), k) * pochhammer(cj, k) /
                    (pochhammer(c2, k) * std::tgamma(static_cast<double>(k + 1))) *
                    std::pow(q.z / q.lambda, static_cast<double>(k));
      if (w_at_lambda) {
        // Chu-Vandermonde: 2F1(c+j+k, -m; c; 1) = (-j-k)_m / (c)_m
        acc.add(coef * pochhammer(static_cast<double>(-q.j - k), q.m));
      } else {
        EvalResult inner = hyp2f1(cj + k + s, static_cast<double>(s - q.m), q.c + s,
                                  q.w / q.lambda, ctrl);
        acc.add(coef * inner.value);
        err += std::abs(coef) * inner.err_est;
        terms += inner.terms_used;
      }
    }
    double pre_m = pochhammer(q.c, q.m) / std::tgamma(static_cast<double>(q.m + 1));
    if (w_at_lambda) pre_m = 1.0 / std::tgamma(static_cast<double>(q.m + 1));
    pre_n *= pre_m;
    if (w_at_lambda) {
      if (q.j == 0 && q.p == 0) tag = (q.z == q.lambda) ? "SPECIAL-85" : "SPECIAL-84";
      else tag = (q.sigma() == q.j) ? "SPECIAL-83" : "SPECIAL-82";
    } else {
      tag = (mu > 0 || s > 0) ? (mu > 0 ? "SPECIAL-81" : "SPECIAL-80") : "SPECIAL-79";
    }
  }

  detail::LogFactor pref;
  pref.mul_gamma(cj);
  pref.mul_pow(q.lambda, -(cj + s));
  // The Laguerre z-ladder d^mu/dz^mu L = (-x)^mu L' contributes (-1)^mu on
  // both sides, so only 1/z^mu survives; the w-ladder keeps its (-1)^s.
  double head = pre_n;
  if (mu > 0) {
    head *= 1.0 / std::pow(q.z, static_cast<double>(mu));
  }
  if (q.b_poly) {
    head *= pochhammer(static_cast<double>(-q.m), s) / pochhammer(q.c, s);
    if (s % 2 != 0) head = -head;
  }
  EvalResult r;
  r.value = head * pref.value() * acc.value();
  r.err_est = std::abs(head * pref.value()) * (err + acc.rounding_err());
  r.strategy = tag;
  r.terms_used = acc.count + terms;
  r.exact = exact;
  detail::attach_cancellation(r, acc);
  return r;
}

enum class HermiteKind {
  LaguerreHermite,  // int x^{j-1/2} e^{-lx} L_n^{sigma-1/2}(z x) H_{2m}(sqrt(w x)) dx
  EvenOdd,          // int x^{j-1}   e^{-lx} H_{2m}(sqrt(w x)) H_{2n+1}(sqrt(z x)) dx
  EvenEven,         // int x^{j-1/2} e^{-lx} H_{2m}(sqrt(w x)) H_{2n}(sqrt(z x)) dx
};

struct HermiteGordonParams {
  HermiteKind kind = HermiteKind::EvenEven;
  int m = 0;  // even-Hermite half-degree (w side)
  int n = 0;  // other degree: Laguerre degree or second Hermite half-degree (z side)
  int j = 0;
  int p = 0;          // LaguerreHermite only; the Laguerre superscript is sign*p - 1/2
  int sign = +1;
  double lambda = 1.0;
  double w = 0.0;
  double z = 0.0;
};

/// Hermite-weighted catalog (tags 86-92).
inline EvalResult hermite_gordon(const HermiteGordonParams& h, const SeriesControl& ctrl = {}) {
  using detail::require;
  require(h.lambda > 0.0, ErrorCode::Domain, "hermite_gordon: lambda > 0");
  require(h.m >= 0 && h.n >= 0, ErrorCode::Domain, "hermite_gordon: degrees >= 0");
  const double half = 0.5;
  const double jj = static_cast<double>(h.j);
  detail::Accumulator acc;
  double err = 0.0;
  long long terms = 0;
  const char* tag = nullptr;

  auto fact = [](long long a) { return std::tgamma(static_cast<double>(a + 1)); };

  if (h.kind == HermiteKind::LaguerreHermite) {
    require(h.j >= 0, ErrorCode::Domain, "hermite_gordon: j >= 0");
    const double sp = static_cast<double>(h.sign * h.p);
    const bool w_at_lambda = (h.w == h.lambda);
    for (long long k = 0; k <= h.n; ++k) {
      double coef = pochhammer(static_cast<double>(-h.n), k) * pochhammer(jj + half, k) /
                    (pochhammer(sp + half, k) * fact(k)) *
                    std::pow(h.z / h.lambda, static_cast<double>(k));
      if (w_at_lambda) {
        acc.add(coef * pochhammer(-jj - k, h.m));  // CV against denominator 1/2
      } else {
        EvalResult inner =
            hyp2f1(jj + k + half, static_cast<double>(-h.m), half, h.w / h.lambda, ctrl);
        acc.add(coef * inner.value);
        err += std::abs(coef) * inner.err_est;
        terms += inner.terms_used;
      }
    }
    double head = ((h.m % 2 == 0) ? 1.0 : -1.0) * fact(2 * h.m) / (fact(h.m) * fact(h.n)) *
                  pochhammer(sp + half, h.n) * tgamma_pos(jj + half) /
                  std::pow(h.lambda, jj + half);
    if (w_at_lambda) head /= pochhammer(half, h.m);
    tag = w_at_lambda ? ((h.j == 0 && h.z == h.lambda) ? "SPECIAL-89" : "SPECIAL-87")
                      : "SPECIAL-86";
    EvalResult r;
    r.value = head * acc.value();
    r.err_est = std::abs(head) * (err + acc.rounding_err());
    r.strategy = tag;
    r.terms_used = acc.count + terms;
    r.exact = true;
    detail::attach_cancellation(r, acc);
    return r;
  }

  const bool odd = (h.kind == HermiteKind::EvenOdd);
  require(!odd || h.z >= 0.0, ErrorCode::Domain, "hermite_gordon: sqrt(z) requires z >= 0");
  require(h.j >= (odd ? 0 : 0), ErrorCode::Domain, "hermite_gordon: j >= 0");
  const double inner_den = odd ? 1.5 : half;
  const bool z_at_lambda = (h.z == h.lambda);
  for (long long k = 0; k <= h.m; ++k) {
    double coef = pochhammer(jj + half, k) * pochhammer(static_cast<double>(-h.m), k) /
                  (pochhammer(half, k) * fact(k)) *
                  std::pow(h.w / h.lambda, static_cast<double>(k));
    if (z_at_lambda) {
      acc.add(coef * pochhammer(inner_den - half - jj - k, h.n) / pochhammer(inner_den, h.n));
    } else {
      EvalResult inner =
          hyp2f1(static_cast<double>(-h.n), jj + half + k, inner_den, h.z / h.lambda, ctrl);
      acc.add(coef * inner.value);
      err += std::abs(coef) * inner.err_est;
      terms += inner.terms_used;
    }
  }
  double head = (((h.m + h.n) % 2 == 0) ? 1.0 : -1.0) * fact(2 * h.m) / fact(h.m) *
                tgamma_pos(jj + half) / std::pow(h.lambda, jj + half);
  if (odd) {
    head *= 2.0 * std::sqrt(h.z) * fact(2 * h.n + 1) / fact(h.n);
    tag = z_at_lambda ? "SPECIAL-91" : "SPECIAL-90";
  } else {
    head *= fact(2 * h.n) / fact(h.n);
    tag = "SPECIAL-92";
  }
  EvalResult r;
  r.value = head * acc.value();
  r.err_est = std::abs(head) * (err + acc.rounding_err());
  r.strategy = tag;
  r.terms_used = acc.count + terms;
  r.exact = true;
  detail::attach_cancellation(r, acc);
  return r;
}

enum class LimitIdentity { Eq51, Eq57, Eq88, Eq64Limit };

struct IdentityReport {
  std::string id;
  std::string point;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  bool pass = false;
  bool applicable = true;
  bool corrected = false;
  std::string notes;

  void finish(double tol, double abs_floor = 1e-300) {
    abs_residual = std::abs(lhs - rhs);
    rel_residual = abs_residual / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    pass = rel_residual <= tol || abs_residual <= abs_floor;
  }
};

namespace detail {

/// Polynomial (Neville) extrapolation of (h_i, f_i) to h = 0.
inline double extrapolate_to_zero(const std::vector<double>& h, std::vector<double> f) {
  const std::size_t n = h.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = 0; i + level < n; ++i)
      f[i] = (h[i + level] * f[i] - h[i] * f[i + level]) / (h[i + level] - h[i]);
  return f[0];
}

}  // namespace detail

struct LimitCheckParams {
  int n = 1;
  int m = 1;       // Eq57 / Eq64Limit second index
  double c = 1.0;
  int j = 1;
  int p = 0;
  int sign = +1;
  double x = 1.0;  // argument w/lambda where the identity carries one
};

/// Two-sided evaluation of the softened/limit identities. Limit entries are
/// probed at j in {1e-2, 1e-3, 1e-4} and Richardson-extrapolated to j = 0.
inline IdentityReport check_limit_identities(LimitIdentity which, const LimitCheckParams& q,
                                             const SeriesControl& ctrl = {},
                                             double tol = 1e-9) {
  IdentityReport rep;
  const double sp = static_cast<double>(q.sign * q.p);
  switch (which) {
    case LimitIdentity::Eq51: {
      rep.id = "identity-51";
      const double cj = q.c + q.j;
      rep.lhs = detail::weighted_3f2(q.n, cj, static_cast<double>(q.j), q.c, q.n, 1.0);
      rep.rhs = std::tgamma(static_cast<double>(q.n + 1)) *
                hyp_pfq({static_cast<double>(-q.n), static_cast<double>(-q.j),
                         static_cast<double>(q.j + 1)},
                        {q.c, 1.0}, 1.0, ctrl)
                    .value;
      break;
    }
    case LimitIdentity::Eq57: {
      rep.id = "identity-57";
      const double cj = q.c + q.j;
      const double c2 = q.c + sp;
      detail::Accumulator acc;
      double lead = 1.0;
      for (long long k = 0; k <= q.n; ++k) {
        acc.add(lead * hyp2f1(static_cast<double>(-q.m), cj + k, q.c, q.x, ctrl).value);
        lead *= (static_cast<double>(-q.n) + k) * (cj + k) /
                ((c2 + k) * static_cast<double>(k + 1));
      }
      rep.lhs = acc.value();
      rep.rhs = detail::weighted_3f2(q.m, cj, static_cast<double>(q.j) - sp, q.c, q.n, q.x) /
                pochhammer(c2, q.n);
      break;
    }
    case LimitIdentity::Eq88: {
      rep.id = "identity-88";
      const std::vector<double> probes = {1e-2, 1e-3, 1e-4};
      std::vector<double> f;
      for (double jj : probes)
        f.push_back(detail::weighted_3f2(q.n, 0.5 + jj, jj, sp + 0.5, q.n, 1.0));
      rep.lhs = detail::extrapolate_to_zero(probes, f);
      double num = 1.0;
      for (long long i = q.n + 1; i <= 2 * q.n; ++i) num *= static_cast<double>(i);
      rep.rhs = num / std::pow(4.0, static_cast<double>(q.n)) *
                std::tgamma(static_cast<double>(q.n + 1)) / pochhammer(sp + 0.5, q.n);
      rep.notes = "Richardson extrapolation over j in {1e-2,1e-3,1e-4}";
      break;
    }
    case LimitIdentity::Eq64Limit: {
      rep.id = "identity-64-limit";
      const std::vector<double> probes = {1e-2, 1e-3, 1e-4};
      std::vector<double> f;
      for (double jj : probes)
        f.push_back(detail::weighted_3f2(q.n, q.c + jj, jj, q.c, q.m, 1.0));
      rep.lhs = detail::extrapolate_to_zero(probes, f);
      rep.rhs = (q.n == q.m) ? std::tgamma(static_cast<double>(q.n + 1)) : 0.0;
      rep.notes = "Richardson extrapolation over j in {1e-2,1e-3,1e-4}";
      break;
    }
  }
  rep.finish(tol, which == LimitIdentity::Eq88 || which == LimitIdentity::Eq64Limit ? 1e-6
                                                                                    : 1e-300);
  return rep;
}

}  // namespace gordon

#endif  // GORDON_POLY_CASES_HPP_
