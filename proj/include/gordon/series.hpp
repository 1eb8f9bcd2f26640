#ifndef GORDON_SERIES_HPP_
#define GORDON_SERIES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gordon {

/// Truncation policy shared by every infinite series in the library.
struct SeriesControl {
  double rel_tol = 1e-15;          // relative term-size threshold
  double abs_floor = 1e-300;       // absolute underflow floor
  long long max_terms = 100000;    // hard cap on summed terms
  int consecutive_small = 3;       // successive below-threshold terms required to stop

  bool valid() const {
    return rel_tol > 0 && max_terms >= 1 && consecutive_small >= 1;
  }
};

enum class ErrorCode {
  Domain,
  Pole,
  Divergence,
  NonConvergence,
  Precondition,
  TransformDomain,
  NotApplicable,
  ShiftedDomain,
  AllStrategiesFailed,
};

class EvalError : public std::runtime_error {
 public:
  EvalError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

namespace warn {
inline constexpr const char* kCancellation = "CANCELLATION";
inline constexpr const char* kSlowConvergence = "SLOW_CONVERGENCE";
inline constexpr const char* kNearBoundary = "NEAR_BOUNDARY";
inline constexpr const char* kToleranceNotMet = "TOLERANCE_NOT_MET";
}  // namespace warn

/// Result of one evaluation: value, an upper-bound error estimate, the
/// strategy that produced it and coded diagnostics.
struct EvalResult {
  double value = 0.0;
  double err_est = 0.0;
  std::string strategy;
  long long terms_used = 0;
  std::vector<std::string> warnings;
  bool exact = false;  // true only for finite rational-weighted sums

  void add_warning(const char* w) {
    for (const auto& s : warnings)
      if (s == w) return;
    warnings.emplace_back(w);
  }
  void merge_warnings(const EvalResult& other) {
    for (const auto& s : other.warnings)
      if (std::find(warnings.begin(), warnings.end(), s) == warnings.end())
        warnings.push_back(s);
  }
};

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Neumaier-compensated accumulator that also tracks the largest partial
/// sum and the sum of absolute terms, both needed for cancellation
/// diagnostics and rounding-level error estimates.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;
  double abs_sum = 0.0;
  double max_abs_partial = 0.0;
  long long count = 0;

  void add(double t) {
    double s = sum + t;
    if (std::abs(sum) >= std::abs(t))
      comp += (sum - s) + t;
    else
      comp += (t - s) + sum;
    sum = s;
    abs_sum += std::abs(t);
    max_abs_partial = std::max(max_abs_partial, std::abs(value()));
    ++count;
  }
  double value() const { return sum + comp; }
  double cancellation_ratio() const {
    double v = std::abs(value());
    if (max_abs_partial == 0.0) return 1.0;
    return max_abs_partial / std::max(v, 1e-300);
  }
  // rounding-level bound for the accumulated sum
  double rounding_err() const { return kEps * (abs_sum + std::abs(value())); }
};

inline bool is_nonpos_int(double x) {
  return x <= 0.0 && x == std::floor(x);
}

/// Degree n such that a == -n for exactly integral nonpositive a.
inline long long term_degree(double a) { return static_cast<long long>(-a); }

inline void attach_cancellation(EvalResult& r, const Accumulator& acc) {
  if (acc.cancellation_ratio() > 1e6) r.add_warning(warn::kCancellation);
}

/// Generalized hypergeometric series sum_k prod(a_i)_k / prod(b_j)_k z^k/k!.
/// Forward summation with multiplicative term updates; terminating series
/// (some a_i a nonpositive integer) are summed with exactly n+1 terms.
inline EvalResult pfq_series(const double* a, std::size_t p, const double* b,
                             std::size_t q, double z, const SeriesControl& ctrl,
                             const char* name) {
  if (!ctrl.valid())
    throw EvalError(ErrorCode::Precondition, std::string(name) + ": invalid SeriesControl");

  long long n_term = -1;  // terminating index, if any
  for (std::size_t i = 0; i < p; ++i)
    if (is_nonpos_int(a[i])) {
      long long n = term_degree(a[i]);
      if (n_term < 0 || n < n_term) n_term = n;
    }

  for (std::size_t jx = 0; jx < q; ++jx)
    if (is_nonpos_int(b[jx])) {
      long long pole_at = term_degree(b[jx]);  // (b)_k = 0 first at k = pole_at + 1
      if (n_term < 0 || n_term > pole_at)
        throw EvalError(ErrorCode::Pole, std::string(name) +
                                             ": denominator parameter hits a pole before termination");
    }

  if (p == q + 1 && n_term < 0 && std::abs(z) >= 1.0)
    throw EvalError(ErrorCode::Divergence,
                    std::string(name) + ": |z| >= 1 and the series does not terminate");

  Accumulator acc;
  double t = 1.0;
  int small_run = 0;
  long long k = 0;
  EvalResult r;
  for (;;) {
    acc.add(t);
    if (n_term >= 0 && k == n_term) break;  // exact finite polynomial
    // next term
    double num = 1.0, den = 1.0;
    for (std::size_t i = 0; i < p; ++i) num *= a[i] + static_cast<double>(k);
    for (std::size_t jx = 0; jx < q; ++jx) den *= b[jx] + static_cast<double>(k);
    t *= num / den * z / static_cast<double>(k + 1);
    ++k;
    if (n_term < 0) {
      if (std::abs(t) <= ctrl.rel_tol * std::abs(acc.value()) + ctrl.abs_floor) {
        if (++small_run >= ctrl.consecutive_small) break;
      } else {
        small_run = 0;
      }
      if (k >= ctrl.max_terms)
        throw EvalError(ErrorCode::NonConvergence,
                        std::string(name) + ": max_terms exceeded");
    }
  }
  r.value = acc.value();
  r.terms_used = acc.count;
  r.exact = (n_term >= 0);
  r.err_est = r.exact ? acc.rounding_err() : std::max(2.0 * std::abs(t), acc.rounding_err());
  attach_cancellation(r, acc);
  return r;
}

}  // namespace detail
}  // namespace gordon

#endif  // GORDON_SERIES_HPP_
