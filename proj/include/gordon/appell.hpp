#ifndef GORDON_APPELL_HPP_
#define GORDON_APPELL_HPP_

#include <cmath>
#include <vector>

#include "gordon/special.hpp"

namespace gordon {

/// Parameters of the second Appell function
///   F2(a; b, b'; c, c'; w, z) = sum_{m,p} (a)_{m+p}(b)_m(b')_p /
///                               ((c)_m (c')_p) w^m z^p / (m! p!)
struct AppellF2Params {
  double a, b, b_prime, c, c_prime;
  double w, z;

  bool terminating() const {
    return detail::is_nonpos_int(b) && detail::is_nonpos_int(b_prime);
  }
  bool convergent() const { return std::abs(w) + std::abs(z) < 1.0 || terminating(); }
};

/// Parameters of the first Appell function
///   F1(a; b, b'; c; w, z) = sum_{m,n} (a)_{m+n}(b)_m(b')_n / (c)_{m+n}
///                           w^m z^n / (m! n!)
struct AppellF1Params {
  double a, b, b_prime, c;
  double w, z;

  bool terminating() const {
    return detail::is_nonpos_int(a) ||
           (detail::is_nonpos_int(b) && detail::is_nonpos_int(b_prime));
  }
  bool convergent() const {
    return std::max(std::abs(w), std::abs(z)) < 1.0 || terminating();
  }
};

namespace detail {

inline void check_f2_poles(const AppellF2Params& p) {
  if (is_nonpos_int(p.c) &&
      !(is_nonpos_int(p.b) && term_degree(p.b) <= term_degree(p.c)))
    throw EvalError(ErrorCode::Pole, "F2: c hits a pole before termination");
  if (is_nonpos_int(p.c_prime) &&
      !(is_nonpos_int(p.b_prime) && term_degree(p.b_prime) <= term_degree(p.c_prime)))
    throw EvalError(ErrorCode::Pole, "F2: c' hits a pole before termination");
}

inline SeriesControl boundary_adjusted(const AppellF2Params& p, const SeriesControl& ctrl,
                                       bool* near_boundary) {
  *near_boundary = false;
  SeriesControl c2 = ctrl;
  if (!p.terminating() && 1.0 - (std::abs(p.w) + std::abs(p.z)) < 1e-3) {
    *near_boundary = true;
    c2.max_terms = ctrl.max_terms * 10;
  }
  return c2;
}

}  // namespace detail

/// F2 by its double series, summed along anti-diagonals m + p = s with the
/// stopping rule applied to whole-diagonal block magnitudes.
inline EvalResult appell_f2_double(const AppellF2Params& p, const SeriesControl& ctrl = {}) {
  if (!p.convergent())
    throw EvalError(ErrorCode::Divergence, "appell_f2_double: |w|+|z| >= 1 and non-terminating");
  detail::check_f2_poles(p);
  bool near_boundary = false;
  const SeriesControl cc = detail::boundary_adjusted(p, ctrl, &near_boundary);

  const bool b_term = detail::is_nonpos_int(p.b);
  const bool bp_term = detail::is_nonpos_int(p.b_prime);
  const long long mb = b_term ? detail::term_degree(p.b) : -1;
  const long long nb = bp_term ? detail::term_degree(p.b_prime) : -1;
  const long long s_max = (mb >= 0 && nb >= 0) ? mb + nb : -1;

  detail::Accumulator acc;
  long long terms = 0;
  // diag[m] = T(m, s-m) for the current diagonal s
  std::vector<double> diag(1, 1.0), prev;
  int small_run = 0;
  double last_block = 0.0;
  for (long long s = 0;; ++s) {
    double block = 0.0;
    for (long long m = 0; m < static_cast<long long>(diag.size()); ++m) {
      const long long pz = s - m;
      if ((mb >= 0 && m > mb) || (nb >= 0 && pz > nb)) continue;
      if (diag[m] == 0.0) continue;
      acc.add(diag[m]);
      block += std::abs(diag[m]);
      ++terms;
    }
    last_block = block;
    if (s_max >= 0 && s == s_max) break;
    if (s_max < 0) {
      if (block <= cc.rel_tol * std::abs(acc.value()) + cc.abs_floor) {
        if (++small_run >= cc.consecutive_small) break;
      } else {
        small_run = 0;
      }
      if (terms >= cc.max_terms)
        throw EvalError(ErrorCode::NonConvergence, "appell_f2_double: max_terms exceeded");
    }
    // build diagonal s+1 from diagonal s
    prev = diag;
    diag.assign(static_cast<std::size_t>(s + 2), 0.0);
    const double a_s = p.a + static_cast<double>(s);
    for (long long m = 0; m <= s; ++m) {
      const long long pz = s - m;
      if (prev[m] == 0.0) continue;
      // step p -> p+1
      diag[m] += prev[m] * a_s * (p.b_prime + pz) * p.z /
                 ((p.c_prime + pz) * static_cast<double>(pz + 1));
      // step m -> m+1 (only needed from the diagonal head to seed column m+1)
      if (m == s)
        diag[m + 1] += prev[m] * a_s * (p.b + m) * p.w /
                       ((p.c + m) * static_cast<double>(m + 1));
    }
  }
  EvalResult r;
  r.value = acc.value();
  r.terms_used = terms;
  r.strategy = "F2-DOUBLE";
  r.exact = (s_max >= 0);
  r.err_est = r.exact ? acc.rounding_err() : std::max(last_block, acc.rounding_err());
  detail::attach_cancellation(r, acc);
  if (near_boundary) r.add_warning(warn::kNearBoundary);
  return r;
}

/// F2 by the single sum  sum_m (a)_m (b)_m / ((c)_m m!) w^m 2F1(a+m, b'; c'; z).
inline EvalResult appell_f2_single_sum(const AppellF2Params& p,
                                       const SeriesControl& ctrl = {}) {
  if (!p.convergent())
    throw EvalError(ErrorCode::Divergence, "appell_f2_single_sum: non-convergent");
  detail::check_f2_poles(p);
  const bool bp_term = detail::is_nonpos_int(p.b_prime);
  if (!bp_term && std::abs(p.z) >= 1.0)
    throw EvalError(ErrorCode::Divergence, "appell_f2_single_sum: inner 2F1 diverges");
  bool near_boundary = false;
  const SeriesControl cc = detail::boundary_adjusted(p, ctrl, &near_boundary);

  const bool b_term = detail::is_nonpos_int(p.b);
  const long long mb = b_term ? detail::term_degree(p.b) : -1;

  detail::Accumulator acc;
  EvalResult r;
  r.strategy = "F2-SINGLE";
  double outer = 1.0;  // (a)_m (b)_m / ((c)_m m!) w^m
  double err = 0.0;
  long long terms = 0;
  int small_run = 0;
  bool all_exact = true;
  for (long long m = 0;; ++m) {
    EvalResult inner = hyp2f1(p.a + static_cast<double>(m), p.b_prime, p.c_prime, p.z, cc);
    const double t = outer * inner.value;
    acc.add(t);
    err += std::abs(outer) * inner.err_est;
    terms += inner.terms_used;
    all_exact = all_exact && inner.exact;
    r.merge_warnings(inner);
    if (mb >= 0 && m == mb) break;
    if (mb < 0) {
      if (std::abs(t) <= cc.rel_tol * std::abs(acc.value()) + cc.abs_floor) {
        if (++small_run >= cc.consecutive_small) break;
      } else {
        small_run = 0;
      }
      if (terms >= cc.max_terms)
        throw EvalError(ErrorCode::NonConvergence, "appell_f2_single_sum: max_terms exceeded");
    }
    outer *= (p.a + m) * (p.b + m) / ((p.c + m) * static_cast<double>(m + 1)) * p.w;
  }
  r.value = acc.value();
  r.terms_used = terms;
  r.exact = (mb >= 0) && all_exact;
  r.err_est = std::max(err + acc.rounding_err(),
                       r.exact ? 0.0 : std::abs(acc.value()) * detail::kEps);
  detail::attach_cancellation(r, acc);
  if (near_boundary) r.add_warning(warn::kNearBoundary);
  return r;
}

/// F1 by the single-sum reduction
///   sum_k (a)_k (b')_k / ((c)_k k!) z^k 2F1(a+k, b; c+k; w).
inline EvalResult appell_f1(const AppellF1Params& p, const SeriesControl& ctrl = {}) {
  if (!p.convergent())
    throw EvalError(ErrorCode::Divergence, "appell_f1: max(|w|,|z|) >= 1 and non-terminating");
  if (detail::is_nonpos_int(p.c) &&
      !(detail::is_nonpos_int(p.a) && detail::term_degree(p.a) <= detail::term_degree(p.c)))
    throw EvalError(ErrorCode::Pole, "appell_f1: c hits a pole before termination");

  const bool a_term = detail::is_nonpos_int(p.a);
  const bool bp_term = detail::is_nonpos_int(p.b_prime);
  long long kmax = -1;
  if (a_term) kmax = detail::term_degree(p.a);
  if (bp_term && (kmax < 0 || detail::term_degree(p.b_prime) < kmax))
    kmax = detail::term_degree(p.b_prime);
  if (kmax < 0 && std::abs(p.w) >= 1.0 && !detail::is_nonpos_int(p.b))
    throw EvalError(ErrorCode::Divergence, "appell_f1: inner 2F1 diverges");

  detail::Accumulator acc;
  EvalResult r;
  r.strategy = "F1";
  double outer = 1.0;  // (a)_k (b')_k / ((c)_k k!) z^k
  double err = 0.0;
  long long terms = 0;
  int small_run = 0;
  bool all_exact = true;
  for (long long k = 0;; ++k) {
    EvalResult inner = hyp2f1(p.a + static_cast<double>(k), p.b,
                              p.c + static_cast<double>(k), p.w, ctrl);
    const double t = outer * inner.value;
    acc.add(t);
    err += std::abs(outer) * inner.err_est;
    terms += inner.terms_used;
    all_exact = all_exact && inner.exact;
    r.merge_warnings(inner);
    if (kmax >= 0 && k == kmax) break;
    if (kmax < 0) {
      if (std::abs(t) <= ctrl.rel_tol * std::abs(acc.value()) + ctrl.abs_floor) {
        if (++small_run >= ctrl.consecutive_small) break;
      } else {
        small_run = 0;
      }
      if (terms >= ctrl.max_terms)
        throw EvalError(ErrorCode::NonConvergence, "appell_f1: max_terms exceeded");
    }
    outer *= (p.a + k) * (p.b_prime + k) / ((p.c + k) * static_cast<double>(k + 1)) * p.z;
  }
  r.value = acc.value();
  r.terms_used = terms;
  r.exact = (kmax >= 0) && all_exact;
  r.err_est = std::max(err + acc.rounding_err(),
                       r.exact ? 0.0 : std::abs(acc.value()) * detail::kEps);
  detail::attach_cancellation(r, acc);
  return r;
}

/// F1 through the transformation
///   F1(a; b, b'; c; w, z) = (1-w)^{-a} F1(a, c-b-b', b'; c; w/(w-1), (z-w)/(1-w)).
inline EvalResult appell_f1_pfaff(const AppellF1Params& p, const SeriesControl& ctrl = {}) {
  if (p.w == 1.0)
    throw EvalError(ErrorCode::TransformDomain, "appell_f1_pfaff: w = 1");
  AppellF1Params q{p.a, p.c - p.b - p.b_prime, p.b_prime, p.c,
                   p.w / (p.w - 1.0), (p.z - p.w) / (1.0 - p.w)};
  if (!q.convergent())
    throw EvalError(ErrorCode::TransformDomain,
                    "appell_f1_pfaff: transformed arguments outside the F1 domain");
  EvalResult r = appell_f1(q, ctrl);
  const double scale = std::pow(1.0 - p.w, -p.a);
  r.value *= scale;
  r.err_est *= std::abs(scale);
  r.strategy = "F1-PFAFF";
  return r;
}

/// F2(a; b, b; c, c; z, -z) as the 4F3 reduction
///   4F3(a/2, (a+1)/2, b, c-b; c/2, (c+1)/2, c; z^2).
/// The (c+1)/2 denominator is the oracle-validated form (catalogued with
/// (c+2)/2, which fails; see DEVIATIONS.md entry 22).
inline EvalResult f2_reduce_opposite_args(double a, double b, double c, double z,
                                          const SeriesControl& ctrl = {}) {
  EvalResult r = hyp_pfq({a / 2.0, (a + 1.0) / 2.0, b, c - b},
                         {c / 2.0, (c + 1.0) / 2.0, c}, z * z, ctrl);
  r.strategy = "F2-REDUCE-22";
  return r;
}

/// F2(a; b, c-b; c, c; z, z) as (1-z)^{-a} 4F3(...; z^2/(1-z)^2); same
/// denominator correction as above (DEVIATIONS.md entry 26).
inline EvalResult f2_reduce_equal_args(double a, double b, double c, double z,
                                       const SeriesControl& ctrl = {}) {
  if (z == 1.0)
    throw EvalError(ErrorCode::Precondition, "f2_reduce_equal_args: z = 1");
  const double u = z / (1.0 - z);
  EvalResult r = hyp_pfq({a / 2.0, (a + 1.0) / 2.0, b, c - b},
                         {c / 2.0, (c + 1.0) / 2.0, c}, u * u, ctrl);
  const double scale = std::pow(1.0 - z, -a);
  r.value *= scale;
  r.err_est *= std::abs(scale);
  r.strategy = "F2-REDUCE-26";
  return r;
}

enum class ShiftDirection { RaiseCPrime, LowerCPrime };

/// F2 with c' shifted by +-n, expressed as a finite combination of
/// unshifted-side F2 values. `params` names the base point; the result
/// equals appell_f2_double at c' +- n.
inline EvalResult f2_contiguous_shift(ShiftDirection direction, long long n,
                                      const AppellF2Params& p,
                                      const SeriesControl& ctrl = {}) {
  if (n < 0) throw EvalError(ErrorCode::Precondition, "f2_contiguous_shift: n < 0");
  EvalResult r;
  detail::Accumulator acc;
  double err = 0.0;
  long long terms = 0;
  if (direction == ShiftDirection::RaiseCPrime) {
    if (!(p.c_prime > p.b_prime))
      throw EvalError(ErrorCode::Precondition, "f2_contiguous_shift: requires c' > b'");
    const double pref = pochhammer(p.c_prime, n) / pochhammer(p.c_prime - p.b_prime, n);
    double binom = 1.0;
    for (long long k = 0; k <= n; ++k) {
      AppellF2Params q = p;
      q.b_prime += static_cast<double>(k);
      q.c_prime += static_cast<double>(k);
      EvalResult f = appell_f2_double(q, ctrl);
      const double coef = pref * ((k % 2 == 0) ? 1.0 : -1.0) * binom *
                          pochhammer(p.b_prime, k) / pochhammer(p.c_prime, k);
      acc.add(coef * f.value);
      err += std::abs(coef) * f.err_est;
      terms += f.terms_used;
      r.merge_warnings(f);
      binom *= static_cast<double>(n - k) / static_cast<double>(k + 1);
    }
    r.strategy = "F2-SHIFT-RAISE";
  } else {
    for (long long i = 0; i <= n; ++i)
      if (p.c_prime == static_cast<double>(i))
        throw EvalError(ErrorCode::Precondition, "f2_contiguous_shift: c' in {0..n}");
    double denom = 1.0;
    for (long long i = 0; i <= n; ++i) denom *= p.c_prime - static_cast<double>(i);
    double binom = 1.0;
    for (long long k = 0; k <= n; ++k) {
      AppellF2Params q = p;
      q.a += static_cast<double>(k);
      q.b_prime += static_cast<double>(k);
      q.c_prime += static_cast<double>(k);
      EvalResult f = appell_f2_double(q, ctrl);
      double head = 1.0;
      for (long long jx = 0; jx <= n - k; ++jx) head *= p.c_prime - static_cast<double>(jx);
      const double coef = binom * head * pochhammer(p.a, k) *
                          pochhammer(p.b_prime, k) / pochhammer(p.c_prime, k) *
                          std::pow(p.z, static_cast<double>(k)) / denom;
      acc.add(coef * f.value);
      err += std::abs(coef) * f.err_est;
      terms += f.terms_used;
      r.merge_warnings(f);
      binom *= static_cast<double>(n - k) / static_cast<double>(k + 1);
    }
    r.strategy = "F2-SHIFT-LOWER";
  }
  r.value = acc.value();
  r.err_est = err + acc.rounding_err();
  r.terms_used = terms;
  detail::attach_cancellation(r, acc);
  return r;
}

}  // namespace gordon

#endif  // GORDON_APPELL_HPP_
