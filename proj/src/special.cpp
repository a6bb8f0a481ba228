#include "bicx/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>

#include "bicx/error.hpp"

namespace bicx {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos approximation with g = 607/128 and 15 coefficients (Godfrey).
constexpr double kLanczosShift = 5.24218750000000000;
constexpr double kLanczosLead = 0.999999999999997092;
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,     -0.491913816097620199,
    .339946499848118887e-4,  .465236289270485756e-4,  -.983744753048795646e-4, .158088703224912494e-3,
    -.210264441724104883e-3, .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};
constexpr double kSqrtTwoPi = 2.5066282746310005;

// log Gamma(z) for Re z >= 1/2.
Complex lanczos_log_gamma(Complex z) {
  Complex tmp = z + kLanczosShift;
  tmp = (z + 0.5) * std::log(tmp) - tmp;
  Complex ser = kLanczosLead;
  for (std::size_t j = 0; j < kLanczos.size(); ++j) ser += kLanczos[j] / (z + static_cast<double>(j + 1));
  return tmp + std::log(kSqrtTwoPi * ser / z);
}

// sin(pi z) with the real part reduced first, so integer zeros are exact.
Complex sin_pi(Complex z) {
  const double n = std::nearbyint(z.real());
  const Complex f{z.real() - n, z.imag()};
  const Complex s = std::sin(kPi * f);
  return std::fmod(std::abs(n), 2.0) == 1.0 ? -s : s;
}

// Gamma on the real axis from the C library, which is correctly rounded at
// small integers; empty when the value leaves the normal double range.
std::optional<double> real_gamma(Complex z) {
  if (z.imag() != 0.0 || std::abs(z.real()) > 170.0) return std::nullopt;
  const double g = std::tgamma(z.real());
  if (!std::isnormal(g)) return std::nullopt;
  return g;
}

std::string describe(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace

bool is_nonpositive_integer(Complex z) noexcept {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real());
}

double pole_distance(Complex z) noexcept {
  const double n = std::min(0.0, std::nearbyint(z.real()));
  return std::abs(z - Complex{n, 0.0});
}

Complex complex_gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw Error(ErrorKind::GammaPole, "gamma pole at " + describe(z));
  if (const auto g = real_gamma(z)) return *g;
  if (z.real() >= 0.5) return std::exp(lanczos_log_gamma(z));
  return kPi / (sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)));
}

Complex reciprocal_gamma(Complex z) {
  if (is_nonpositive_integer(z)) return {0.0, 0.0};
  if (const auto g = real_gamma(z)) return 1.0 / *g;
  if (z.real() >= 0.5) return std::exp(-lanczos_log_gamma(z));
  return sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)) / kPi;
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw Error(ErrorKind::GammaPole, "log-gamma pole at " + describe(z));
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  return std::log(kPi) - std::log(sin_pi(z)) - lanczos_log_gamma(1.0 - z);
}

Complex gamma_ratio(Complex a, Complex b) {
  if (is_nonpositive_integer(a)) throw Error(ErrorKind::GammaPole, "gamma pole at " + describe(a));
  if (is_nonpositive_integer(b)) return {0.0, 0.0};
  if (a.real() >= 0.5 && b.real() >= 0.5 && (std::abs(a) > 50.0 || std::abs(b) > 50.0)) {
    return std::exp(lanczos_log_gamma(a) - lanczos_log_gamma(b));
  }
  return complex_gamma(a) * reciprocal_gamma(b);
}

Complex beta_complex(Complex a, Complex b) {
  if (is_nonpositive_integer(b)) throw Error(ErrorKind::GammaPole, "gamma pole at " + describe(b));
  return gamma_ratio(a, a + b) * complex_gamma(b);
}

Bicomplex bicomplex_gamma(const Bicomplex& y) {
  for (int i = 0; i < 2; ++i) {
    if (is_nonpositive_integer(y.component(i))) {
      throw Error(ErrorKind::GammaPole,
                  "gamma pole in idempotent component z" + std::to_string(i + 1) + " = " + describe(y.component(i)));
    }
  }
  return componentwise(y, complex_gamma);
}

Bicomplex reciprocal_gamma(const Bicomplex& y) {
  return componentwise(y, [](Complex z) { return reciprocal_gamma(z); });
}

Bicomplex gamma_ratio(const Bicomplex& a, const Bicomplex& b) {
  return Bicomplex::idempotent(gamma_ratio(a.z1(), b.z1()), gamma_ratio(a.z2(), b.z2()));
}

bool GammaDomainGuard::dominates(double shift) const noexcept {
  return alpha_.real() + shift > std::abs(beta_.imag());
}

bool GammaDomainGuard::pole_free(double offset) const noexcept {
  return !is_nonpositive_integer(order_.z1() + offset) && !is_nonpositive_integer(order_.z2() + offset);
}

void GammaDomainGuard::require_pole_free(double offset) const {
  for (int i = 0; i < 2; ++i) {
    const Complex x = order_.component(i) + offset;
    if (is_nonpositive_integer(x)) {
      throw Error(ErrorKind::GammaPole, "gamma pole in idempotent component z" + std::to_string(i + 1) + " = " +
                                            describe(x));
    }
  }
}

void GammaDomainGuard::require_dominates(double shift, const char* what) const {
  if (!dominates(shift)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: need Re(alpha) + %g > |Im(beta)|, got %.6g vs %.6g", what, shift,
                  alpha_.real(), std::abs(beta_.imag()));
    throw Error(ErrorKind::PreconditionViolation, buf);
  }
}

namespace {

struct KummerSums {
  ScalarSeries w;    // sum t_r
  ScalarSeries yd1;  // sum r t_r      = Y W'
  ScalarSeries yd2;  // sum r(r-1) t_r = Y^2 W''
};

KummerSums kummer_component(Complex a, Complex b, Complex y, const TruncationPolicy& policy, bool derivatives) {
  if (is_nonpositive_integer(b)) throw Error(ErrorKind::GammaPole, "1F1 lower parameter is a pole: " + describe(b));
  policy.validate();
  SeriesAccumulator w(policy);
  SeriesAccumulator d1(policy);
  SeriesAccumulator d2(policy);
  const double excess = std::max(0.0, std::abs(a) - b.real());
  Complex term{1.0, 0.0};
  for (int r = 0;; ++r) {
    const double denom = b.real() + r;
    const double q = denom > 0.0 ? (1.0 + excess / denom) * std::abs(y) / (r + 1.0) : -1.0;
    const bool done0 = w.add(term, q);
    bool done = done0;
    if (derivatives) {
      // Ratios of the differentiated series exceed the plain ones by (s+1)/s and (s+1)/(s-1).
      const double q1 = r >= 1 && q >= 0.0 ? q * (r + 1.0) / r : -1.0;
      const double q2 = r >= 2 && q >= 0.0 ? q * (r + 1.0) / (r - 1.0) : -1.0;
      const bool done1 = d1.add(static_cast<double>(r) * term, q1);
      const bool done2 = d2.add(static_cast<double>(r) * (r - 1.0) * term, q2);
      done = done0 && done1 && done2;
    }
    if (done) break;
    term *= (a + static_cast<double>(r)) * y / ((b + static_cast<double>(r)) * (r + 1.0));
  }
  return {{w.sum(), w.terms(), w.tail(), w.magnitude()},
          {d1.sum(), d1.terms(), d1.tail(), d1.magnitude()},
          {d2.sum(), d2.terms(), d2.tail(), d2.magnitude()}};
}

}  // namespace

SeriesValue kummer_1f1(const Bicomplex& a, const Bicomplex& b, const Bicomplex& y, const TruncationPolicy& policy) {
  const KummerSums s1 = kummer_component(a.z1(), b.z1(), y.z1(), policy, false);
  const KummerSums s2 = kummer_component(a.z2(), b.z2(), y.z2(), policy, false);
  return combine(s1.w, s2.w);
}

Residual kummer_ode_residual(const Bicomplex& a, const Bicomplex& b, const Bicomplex& y,
                             const TruncationPolicy& policy) {
  if (!is_invertible(y)) throw Error(ErrorKind::ZeroDivisorDivision, "Kummer residual needs Y outside O2");
  Residual out;
  for (int i = 0; i < 2; ++i) {
    const Complex ai = a.component(i);
    const Complex bi = b.component(i);
    const Complex yi = y.component(i);
    const KummerSums s = kummer_component(ai, bi, yi, policy, true);
    // Y W'' + (b - Y) W' - a W = [Y^2 W'' + (b - Y) Y W'] / Y - a W
    const Complex lhs = (s.yd2.value + (bi - yi) * s.yd1.value) / yi;
    const Complex rhs = ai * s.w.value;
    const double scale = std::max({s.yd2.magnitude / std::abs(yi), std::abs(bi - yi) * s.yd1.magnitude / std::abs(yi),
                                   std::abs(ai) * s.w.magnitude});
    (i == 0 ? out.abs.n1 : out.abs.n2) = std::abs(lhs - rhs);
    (i == 0 ? out.scale.n1 : out.scale.n2) = scale;
  }
  return out;
}

Residual confluent_operator_residual(const Bicomplex& a, const Bicomplex& b, const Bicomplex& y, const Bicomplex& w,
                                     const Bicomplex& dw, const Bicomplex& d2w) {
  const Bicomplex t1 = y * d2w;
  const Bicomplex t2 = (b - y) * dw;
  const Bicomplex t3 = a * w;
  return {hyperbolic_norm(t1 + t2 - t3), max(max(hyperbolic_norm(t1), hyperbolic_norm(t2)), hyperbolic_norm(t3))};
}

}  // namespace bicx
