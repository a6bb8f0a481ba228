#pragma once

#include "bicx/bicomplex.hpp"
#include "bicx/series.hpp"

namespace bicx {

/// True when z is 0, -1, -2, ... exactly.
bool is_nonpositive_integer(Complex z) noexcept;

/// Distance from z to the nearest nonpositive integer.
double pole_distance(Complex z) noexcept;

/// Gamma function via Lanczos with reflection for Re z < 1/2. Throws
/// GammaPole at nonpositive integers.
Complex complex_gamma(Complex z);

/// 1/Gamma(z); entire, exactly 0 at nonpositive integers.
Complex reciprocal_gamma(Complex z);

/// A logarithm of Gamma(z) (principal log of the Lanczos form for
/// Re z >= 1/2; the reflected form otherwise). Throws GammaPole at poles.
Complex log_gamma(Complex z);

/// Gamma(a)/Gamma(b). Exactly 0 when b is a pole and a is not; throws
/// GammaPole when a is a pole. Stays finite when both gammas overflow.
Complex gamma_ratio(Complex a, Complex b);

/// Gamma(a) Gamma(b) / Gamma(a+b).
Complex beta_complex(Complex a, Complex b);

/// Gamma(y1) e1 + Gamma(y2) e2.
Bicomplex bicomplex_gamma(const Bicomplex& y);
Bicomplex reciprocal_gamma(const Bicomplex& y);
/// Componentwise gamma_ratio.
Bicomplex gamma_ratio(const Bicomplex& a, const Bicomplex& b);

/// Admissibility of an order X = alpha + j beta. In idempotent terms
/// Re(alpha) + shift > |Im(beta)| is min(Re x1, Re x2) + shift > 0.
class GammaDomainGuard {
 public:
  explicit GammaDomainGuard(const Bicomplex& order) : alpha_(order.w1()), beta_(order.w2()), order_(order) {}

  Complex alpha() const noexcept { return alpha_; }
  Complex beta() const noexcept { return beta_; }

  /// Re(alpha) + shift > |Im(beta)|.
  bool dominates(double shift = 0.0) const noexcept;
  /// Neither idempotent component of `order + offset` is a pole.
  bool pole_free(double offset = 0.0) const noexcept;
  /// Throws GammaPole naming the component when pole_free(offset) fails.
  void require_pole_free(double offset = 0.0) const;
  /// Throws PreconditionViolation when dominates(shift) fails.
  void require_dominates(double shift, const char* what) const;

 private:
  Complex alpha_;
  Complex beta_;
  Bicomplex order_;
};

/// Kummer 1F1(a; b; Y) summed per component under the policy.
SeriesValue kummer_1f1(const Bicomplex& a, const Bicomplex& b, const Bicomplex& y, const TruncationPolicy& policy = {});

/// Y W'' + (b - Y) W' - a W for W = 1F1(a; b; Y), with W' and W'' from the
/// termwise-differentiated series.
Residual kummer_ode_residual(const Bicomplex& a, const Bicomplex& b, const Bicomplex& y,
                             const TruncationPolicy& policy = {});

/// The same operator applied to caller-supplied W, W', W''.
Residual confluent_operator_residual(const Bicomplex& a, const Bicomplex& b, const Bicomplex& y, const Bicomplex& w,
                                     const Bicomplex& dw, const Bicomplex& d2w);

}  // namespace bicx
