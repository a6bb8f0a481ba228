#pragma once

#include <cmath>
#include <string>

#include "bicx/bicomplex.hpp"
#include "bicx/error.hpp"

namespace bicx {

/// |z| without hypot's scaling unless the squares could over- or underflow.
inline double modulus(Complex z) noexcept {
  const double a = std::abs(z.real());
  const double b = std::abs(z.imag());
  const double m = std::max(a, b);
  if (m < 1e150 && m > 1e-150) return std::sqrt(a * a + b * b);
  return std::hypot(a, b);
}

struct TruncationPolicy {
  double rel_tol = 1e-14;
  double abs_tol = 1e-300;
  int max_terms = 10000;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol >= 0.0) || max_terms < 8) {
      throw Error(ErrorKind::PreconditionViolation, "truncation policy needs rel_tol > 0, abs_tol >= 0, max_terms >= 8");
    }
  }
};

/// A summed bicomplex series. tail_bound bounds the truncation error per
/// idempotent component; magnitude is the sum of term moduli, which sets the
/// rounding-error scale of `value`.
struct SeriesValue {
  Bicomplex value;
  int terms_used = 0;
  HyperbolicNorm tail_bound;
  HyperbolicNorm magnitude;
};

/// Residual of an identity: abs is |LHS - RHS| per component, scale is the
/// size of the largest quantity that entered it, so abs/scale is the
/// residual relative to the dominant side.
struct Residual {
  HyperbolicNorm abs;
  HyperbolicNorm scale;
  // False when the inputs lie outside the hypothesis under which the
  // identity is stated; the residual is still computed.
  bool in_hypothesis = true;

  double relative() const noexcept {
    const auto rel = [](double a, double s) { return s > 0.0 ? a / s : a; };
    return std::max(rel(abs.n1, scale.n1), rel(abs.n2, scale.n2));
  }
};

/// Running sum of a complex power series with the ratio-majorant stopping
/// rule: stop after three consecutive terms below max(rel_tol*|sum|, abs_tol)
/// once the caller-supplied majorant q (sup of |t_{s+1}/t_s| for s >= r) is
/// below 1/2. The tail is then bounded by |t_r| q/(1-q). Terms are summed
/// with Neumaier compensation.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(const TruncationPolicy& policy) : policy_(policy) {}

  /// Adds term r. `q < 0` means no valid majorant is known yet. Returns true
  /// when the series may be truncated after this term.
  bool add(Complex term, double q) {
    if (!std::isfinite(term.real()) || !std::isfinite(term.imag())) {
      throw Error(ErrorKind::SeriesDivergence, "non-finite term at index " + std::to_string(terms_));
    }
    if (terms_ >= policy_.max_terms) {
      throw Error(ErrorKind::MaxTermsExceeded, "series did not settle within " + std::to_string(policy_.max_terms) +
                                                   " terms");
    }
    ++terms_;
    const Complex next = sum_ + term;
    compensation_ += Complex(neumaier(sum_.real(), term.real(), next.real()),
                             neumaier(sum_.imag(), term.imag(), next.imag()));
    sum_ = next;
    const double size = modulus(term);
    magnitude_ += size;
    if (size <= std::max(policy_.rel_tol * modulus(sum()), policy_.abs_tol)) {
      ++small_run_;
    } else {
      small_run_ = 0;
    }
    if (small_run_ >= 3 && q >= 0.0 && q < 0.5) {
      tail_ = size * q / (1.0 - q);
      return true;
    }
    return false;
  }

  Complex sum() const noexcept { return sum_ + compensation_; }
  int terms() const noexcept { return terms_; }
  double tail() const noexcept { return tail_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  // The rounding error of a + b = s.
  static double neumaier(double a, double b, double s) noexcept {
    return std::abs(a) >= std::abs(b) ? (a - s) + b : (b - s) + a;
  }

  TruncationPolicy policy_;
  Complex sum_{};
  Complex compensation_{};
  int terms_ = 0;
  int small_run_ = 0;
  double tail_ = 0.0;
  double magnitude_ = 0.0;
};

/// Summed complex series with its certificate.
struct ScalarSeries {
  Complex value{};
  int terms = 0;
  double tail = 0.0;
  double magnitude = 0.0;
};

inline SeriesValue combine(const ScalarSeries& s1, const ScalarSeries& s2) {
  return {Bicomplex::idempotent(s1.value, s2.value), std::max(s1.terms, s2.terms), {s1.tail, s2.tail},
          {s1.magnitude, s2.magnitude}};
}

}  // namespace bicx
