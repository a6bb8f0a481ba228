#include "bicx/miller_ross.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "bicx/error.hpp"
#include "bicx/special.hpp"

namespace bicx {

namespace {

Complex ipow(Complex z, int n) {
  Complex result{1.0, 0.0};
  Complex base = z;
  for (unsigned m = static_cast<unsigned>(n); m != 0; m >>= 1U) {
    if (m & 1U) result *= base;
    if (m > 1U) base *= base;
  }
  return result;
}

ScalarSeries scaled(ScalarSeries s, Complex factor) {
  const double f = std::abs(factor);
  s.value *= factor;
  s.tail *= f;
  s.magnitude *= f;
  return s;
}

SeriesValue scaled(SeriesValue s, const Bicomplex& factor) {
  const HyperbolicNorm f = hyperbolic_norm(factor);
  s.value *= factor;
  s.tail_bound = s.tail_bound * f;
  s.magnitude = s.magnitude * f;
  return s;
}

}  // namespace

bool is_integer(Complex z) noexcept { return z.imag() == 0.0 && z.real() == std::nearbyint(z.real()); }

Complex principal_power(Complex z, Complex e) {
  if (is_integer(e) && std::abs(e.real()) <= 1024.0) {
    const int n = static_cast<int>(e.real());
    if (n >= 0) return ipow(z, n);
    if (z == Complex{}) throw Error(ErrorKind::ZeroDivisorPower, "negative integer power of zero");
    return 1.0 / ipow(z, -n);
  }
  if (z == Complex{}) throw Error(ErrorKind::ZeroDivisorPower, "non-integer power of zero");
  return std::exp(e * std::log(z));
}

Bicomplex principal_power(const Bicomplex& z, const Bicomplex& e) {
  for (int i = 0; i < 2; ++i) {
    if (z.component(i) == Complex{} && !(is_integer(e.component(i)) && e.component(i).real() >= 0.0)) {
      throw Error(ErrorKind::ZeroDivisorPower,
                  "Z^V needs idempotent component z" + std::to_string(i + 1) + " nonzero for this order");
    }
  }
  return Bicomplex::idempotent(principal_power(z.z1(), e.z1()), principal_power(z.z2(), e.z2()));
}

namespace {

// sum_{r >= r0} t_r with t_{r0} = first and t_{r+1} = t_r cz / (nu + r + 1).
ScalarSeries sum_kernel(Complex nu, Complex cz, int r0, Complex first, const TruncationPolicy& policy) {
  policy.validate();
  const double size = std::abs(cz);
  SeriesAccumulator acc(policy);
  Complex term{};
  for (int r = 0;; ++r) {
    if (r == r0) {
      term = first;
    } else if (r > r0) {
      // Plain division: the denominator is a finite nonzero shifted order.
      const Complex d = nu + static_cast<double>(r);
      const double inv = 1.0 / (d.real() * d.real() + d.imag() * d.imag());
      term *= Complex(cz.real() * d.real() + cz.imag() * d.imag(), cz.imag() * d.real() - cz.real() * d.imag()) * inv;
    }
    const double denom = nu.real() + r + 1.0;
    const double q = r >= r0 && denom > 0.0 ? size / denom : -1.0;
    if (acc.add(term, q)) break;
  }
  return {acc.sum(), acc.terms(), acc.tail(), acc.magnitude()};
}

}  // namespace

ScalarSeries miller_ross_kernel(Complex nu, Complex cz, const TruncationPolicy& policy) {
  // Terms below r0 vanish because 1/Gamma(nu + r + 1) has a zero there.
  int r0 = 0;
  if (is_nonpositive_integer(nu + 1.0)) r0 = static_cast<int>(-nu.real());
  return sum_kernel(nu, cz, r0, ipow(cz, r0) * reciprocal_gamma(nu + static_cast<double>(r0 + 1)), policy);
}

ScalarSeries miller_ross_kernel_normalized(Complex nu, Complex cz, const TruncationPolicy& policy) {
  if (is_nonpositive_integer(nu + 1.0)) {
    throw Error(ErrorKind::GammaPole, "normalized kernel needs nu + 1 away from the poles of Gamma");
  }
  return sum_kernel(nu, cz, 0, 1.0, policy);
}

ScalarSeries miller_ross_scalar(Complex nu, Complex c, Complex z, const TruncationPolicy& policy) {
  if (is_integer(nu) && nu.real() < 0.0) {
    const int l = static_cast<int>(-nu.real());
    return scaled(miller_ross_kernel(0.0, c * z, policy), ipow(c, l));
  }
  const Complex prefactor = principal_power(z, nu);
  return scaled(miller_ross_kernel(nu, c * z, policy), prefactor);
}

SeriesValue eval(const MRParams& params, const Bicomplex& z, const TruncationPolicy& policy) {
  const ScalarSeries s1 = miller_ross_scalar(params.order.z1(), params.multiplier.z1(), z.z1(), policy);
  const ScalarSeries s2 = miller_ross_scalar(params.order.z2(), params.multiplier.z2(), z.z2(), policy);
  return combine(s1, s2);
}

SeriesValue kernel_series(const MRParams& params, const Bicomplex& z, const TruncationPolicy& policy) {
  const Bicomplex cz = params.multiplier * z;
  return combine(miller_ross_kernel(params.order.z1(), cz.z1(), policy),
                 miller_ross_kernel(params.order.z2(), cz.z2(), policy));
}

SeriesValue eval_negative_integer_order(const MRParams& params, const Bicomplex& z, const TruncationPolicy& policy) {
  if (!is_nonpositive_integer(params.order.z1()) || !is_nonpositive_integer(params.order.z2())) {
    throw Error(ErrorKind::PreconditionViolation, "order components must be nonpositive integers");
  }
  if (!is_invertible(params.multiplier)) {
    throw Error(ErrorKind::ZeroDivisorPower, "C^{-V} needs C outside O2");
  }
  const Bicomplex factor = pow(params.multiplier, -params.order);
  return scaled(eval({Bicomplex(0.0), params.multiplier}, z, policy), factor);
}

namespace {

// Accumulates LHS - RHS together with the largest rounding scale seen.
class IdentityBalance {
 public:
  void add(const Bicomplex& coef, const SeriesValue& e) {
    diff_ += coef * e.value;
    scale_ = max(scale_, hyperbolic_norm(coef) * e.magnitude);
  }
  void add(const Bicomplex& value) {
    diff_ += value;
    scale_ = max(scale_, hyperbolic_norm(value));
  }
  Residual result() const { return {hyperbolic_norm(diff_), scale_}; }

 private:
  Bicomplex diff_;
  HyperbolicNorm scale_;
};

}  // namespace

Residual recurrence_residual(Recurrence id, const MRParams& params, const Bicomplex& z,
                             const TruncationPolicy& policy) {
  const Bicomplex& v = params.order;
  const Bicomplex& c = params.multiplier;
  const auto e = [&](double shift) { return eval({v + shift, c}, z, policy); };
  const auto power_over_gamma = [&](double shift) {
    return principal_power(z, v + shift) * reciprocal_gamma(v + (shift - 1.0));
  };
  const Bicomplex z2 = z * z;
  IdentityBalance b;
  switch (id) {
    case Recurrence::cubic_shift: {
      const Bicomplex z3 = z2 * z;
      const Bicomplex poch = (v + 1.0) * (v + 2.0) * (v + 3.0);
      b.add(z3, e(0));
      b.add(-(c * z3), e(1));
      b.add(-poch, e(3));
      b.add(poch * c, e(4));
      break;
    }
    case Recurrence::quadratic_shift: {
      const Bicomplex poch = c * (v + 2.0) * (v + 3.0);
      b.add(z2, e(0));
      b.add(-power_over_gamma(2.0));
      b.add(-(c * c * z2), e(2));
      b.add(-poch, e(3));
      b.add(poch * c, e(4));
      break;
    }
    case Recurrence::quadratic_shift_extended: {
      const Bicomplex poch = c * c * (v + 3.0) * (v + 4.0);
      b.add(z2, e(0));
      b.add(-power_over_gamma(2.0));
      // C Z^{V+3} / Gamma(V+2)
      b.add(-(c * principal_power(z, v + 3.0) * reciprocal_gamma(v + 2.0)));
      b.add(-(c * c * c * z2), e(3));
      b.add(-poch, e(4));
      b.add(poch * c, e(5));
      break;
    }
  }
  return b.result();
}

namespace {

struct DerivativeValue {
  Bicomplex value;
  HyperbolicNorm magnitude;
};

DerivativeValue derivative_with_magnitude(const MRParams& params, const Bicomplex& z, int k,
                                          const TruncationPolicy& policy) {
  if (k < 1) throw Error(ErrorKind::PreconditionViolation, "derivative order k must be positive");
  const Bicomplex& v = params.order;
  const Bicomplex& c = params.multiplier;
  DerivativeValue out;
  for (int p = 1; p <= k; ++p) {
    const Bicomplex term =
        pow(c, k - p) * principal_power(z, v - static_cast<double>(p)) * reciprocal_gamma(v - (p - 1.0));
    out.value += term;
    out.magnitude += hyperbolic_norm(term);
  }
  const SeriesValue e = eval(params, z, policy);
  const Bicomplex ck = pow(c, k);
  out.value += ck * e.value;
  out.magnitude += hyperbolic_norm(ck) * e.magnitude;
  return out;
}

}  // namespace

Bicomplex derivative_k(const MRParams& params, const Bicomplex& z, int k, const TruncationPolicy& policy) {
  return derivative_with_magnitude(params, z, k, policy).value;
}

Bicomplex derivative_shifted(const MRParams& params, const Bicomplex& shift, const Bicomplex& z, int k,
                             const TruncationPolicy& policy) {
  for (int i = 0; i < 2; ++i) {
    const Complex m = shift.component(i);
    if (!is_integer(m) || m.real() < 1.0) {
      throw Error(ErrorKind::PreconditionViolation, "shift M must have positive integer components");
    }
  }
  const MRParams shifted{params.order + shift, params.multiplier};
  const double smallest = std::min(shift.z1().real(), shift.z2().real());
  if (k <= smallest) return eval({shifted.order - static_cast<double>(k), params.multiplier}, z, policy).value;
  return derivative_k(shifted, z, k, policy);
}

Residual ode_residual(const MRParams& params, const Bicomplex& z, const TruncationPolicy& policy, bool flip_sign) {
  const Bicomplex& v = params.order;
  const Bicomplex& c = params.multiplier;
  const SeriesValue u = eval(params, z, policy);
  const DerivativeValue d1 = derivative_with_magnitude(params, z, 1, policy);
  const DerivativeValue d2 = derivative_with_magnitude(params, z, 2, policy);
  const Bicomplex cz = c * z;
  const Bicomplex middle = Bicomplex(1.0) - v + (flip_sign ? cz : -cz);
  const Bicomplex last = (v - 1.0) * c;
  const Bicomplex total = z * d2.value + middle * d1.value + last * u.value;
  Residual out;
  out.abs = hyperbolic_norm(total);
  out.scale = max(max(hyperbolic_norm(z) * d2.magnitude, hyperbolic_norm(middle) * d1.magnitude),
                  hyperbolic_norm(last) * u.magnitude);
  out.in_hypothesis = GammaDomainGuard(v).dominates(1.0) && is_invertible(z);
  return out;
}

Bicomplex taylor_in_order(const MRParams& params, const Bicomplex& z0, int terms, const TruncationPolicy& policy) {
  if (terms < 1) throw Error(ErrorKind::PreconditionViolation, "Taylor partial sum needs at least one term");
  const Bicomplex x = params.order * log(z0);
  Bicomplex term(1.0);
  Bicomplex sum(1.0);
  for (int k = 1; k < terms; ++k) {
    term *= x * (1.0 / k);
    sum += term;
  }
  return kernel_series(params, z0, policy).value * sum;
}

}  // namespace bicx
