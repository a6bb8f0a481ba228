#pragma once

#include "bicx/bicomplex.hpp"
#include "bicx/series.hpp"

namespace bicx {

/// Order V and multiplier C of E_{V,C}(Z) = Z^V sum_r (CZ)^r / Gamma(V+r+1).
struct MRParams {
  Bicomplex order;
  Bicomplex multiplier;
};

/// True when z is a (possibly negative) integer exactly.
bool is_integer(Complex z) noexcept;

/// Z^E per component on the principal branch. Integer exponents use repeated
/// multiplication, so a zero component is allowed for a nonnegative integer
/// exponent. Throws ZeroDivisorPower for a zero component otherwise.
Bicomplex principal_power(const Bicomplex& z, const Bicomplex& e);
Complex principal_power(Complex z, Complex e);

/// sum_r (c z)^r / Gamma(nu + r + 1) for complex scalars; `cz` is the product.
ScalarSeries miller_ross_kernel(Complex nu, Complex cz, const TruncationPolicy& policy = {});

/// Gamma(nu + 1) times miller_ross_kernel: the same series started from 1, so
/// it stays of moderate size when 1/Gamma(nu + 1) alone would underflow.
/// Throws GammaPole when nu + 1 is a nonpositive integer.
ScalarSeries miller_ross_kernel_normalized(Complex nu, Complex cz, const TruncationPolicy& policy = {});

/// The complex Miller-Ross function E_{nu,c}(z). Negative integer orders
/// -l use the pole-free form c^l sum_s (cz)^s / s!, which also admits z = 0.
ScalarSeries miller_ross_scalar(Complex nu, Complex c, Complex z, const TruncationPolicy& policy = {});

/// E_{V,C}(Z), evaluated per idempotent component.
SeriesValue eval(const MRParams& params, const Bicomplex& z, const TruncationPolicy& policy = {});

/// A = sum_r (CZ)^r / Gamma(V+r+1), so that E_{V,C}(Z) = Z^V A.
SeriesValue kernel_series(const MRParams& params, const Bicomplex& z, const TruncationPolicy& policy = {});

/// C^{-V} E_{0,C}(Z) for V with nonpositive integer components. Throws
/// PreconditionViolation for other orders and ZeroDivisorPower for C in O2.
SeriesValue eval_negative_integer_order(const MRParams& params, const Bicomplex& z,
                                        const TruncationPolicy& policy = {});

enum class Recurrence {
  // Z^3 E_V = C Z^3 E_{V+1} + (V+1)(V+2)(V+3) [E_{V+3} - C E_{V+4}]
  cubic_shift,
  // Z^2 E_V = Z^{V+2}/Gamma(V+1) + C^2 Z^2 E_{V+2} + C (V+2)(V+3) [E_{V+3} - C E_{V+4}]
  quadratic_shift,
  // Z^2 E_V = Z^{V+2}/Gamma(V+1) + C Z^{V+3}/Gamma(V+2) + C^3 Z^2 E_{V+3}
  //           + C^2 (V+3)(V+4) [E_{V+4} - C E_{V+5}]
  quadratic_shift_extended,
};

/// LHS - RHS of the selected shift identity.
Residual recurrence_residual(Recurrence id, const MRParams& params, const Bicomplex& z,
                             const TruncationPolicy& policy = {});

/// d^k/dZ^k E_{V,C}(Z) = sum_{p=1}^k C^{k-p} Z^{V-p} / Gamma(V-p+1) + C^k E_{V,C}(Z).
Bicomplex derivative_k(const MRParams& params, const Bicomplex& z, int k, const TruncationPolicy& policy = {});

/// d^k/dZ^k E_{V+M,C}(Z) for M with positive integer components: E_{V+M-k,C}(Z)
/// when k <= min(m1, m2), the closed form of derivative_k otherwise.
Bicomplex derivative_shifted(const MRParams& params, const Bicomplex& shift, const Bicomplex& z, int k,
                             const TruncationPolicy& policy = {});

/// Z U'' + (1 - V - CZ) U' + (V - 1) C U for U = E_{V,C}(Z). `flip_sign`
/// negates the CZ term, a deliberately wrong operator used as a control.
/// in_hypothesis records Re(alpha) + 1 > |Im(beta)|; it is not enforced.
Residual ode_residual(const MRParams& params, const Bicomplex& z, const TruncationPolicy& policy = {},
                      bool flip_sign = false);

/// A * sum_{k<K} (V log Z0)^k / k! with A = kernel_series(params, Z0).
Bicomplex taylor_in_order(const MRParams& params, const Bicomplex& z0, int terms, const TruncationPolicy& policy = {});

}  // namespace bicx
