#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>

#include "bicx/bicomplex.hpp"

namespace testing {

using bicx::Bicomplex;
using bicx::Complex;

// Hand-rolled generator for property tests: every test draws from its own
// seeded engine, so failures replay exactly.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double real(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Modulus in [lo, hi], argument uniform in (-pi, pi).
  Complex complex(double lo, double hi) { return std::polar(real(lo, hi), real(-M_PI, M_PI)); }

  Bicomplex bicomplex(double lo, double hi) { return Bicomplex::idempotent(complex(lo, hi), complex(lo, hi)); }

  // An order whose idempotent components have real part in [re_lo, re_hi]
  // and imaginary part in [-im, im].
  Bicomplex order(double re_lo, double re_hi, double im) {
    const auto one = [&] { return Complex(real(re_lo, re_hi), real(-im, im)); };
    const Complex z1 = one();
    return Bicomplex::idempotent(z1, one());
  }

 private:
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
};

inline double rel_diff(Complex a, Complex b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

// Largest componentwise relative distance between two bicomplex numbers.
inline double rel_diff(const Bicomplex& a, const Bicomplex& b) {
  return std::max(rel_diff(a.z1(), b.z1()), rel_diff(a.z2(), b.z2()));
}

inline double abs_diff(const Bicomplex& a, const Bicomplex& b) {
  return std::max(std::abs(a.z1() - b.z1()), std::abs(a.z2() - b.z2()));
}

// k-th derivative of a complex function along the real direction by central
// differences, Richardson-extrapolated over h, h/2, h/4.
inline Complex richardson_derivative(const std::function<Complex(Complex)>& f, Complex z, int k, double h) {
  const auto central = [&](double step) {
    // Binomial stencil for the k-th central difference.
    Complex sum{};
    double binom = 1.0;
    for (int i = 0; i <= k; ++i) {
      const double sign = (i % 2 == 0) ? 1.0 : -1.0;
      sum += sign * binom * f(z + (0.5 * k - i) * step);
      binom = binom * (k - i) / (i + 1);
    }
    return sum / std::pow(step, k);
  };
  const Complex d0 = central(h);
  const Complex d1 = central(h / 2);
  const Complex d2 = central(h / 4);
  const Complex r1 = (4.0 * d1 - d0) / 3.0;
  const Complex r2 = (4.0 * d2 - d1) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

// Mittag-Leffler E_a(x) = sum_k x^k / Gamma(a k + 1) in long double, for
// moderate |x|.
inline long double mittag_leffler(long double a, long double x) {
  long double sum = 0.0L;
  for (int k = 0; k < 400; ++k) {
    const long double term = std::pow(x, static_cast<long double>(k)) / std::tgamma(a * k + 1.0L);
    sum += term;
    if (k > 8 && std::fabs(term) < 1e-22L * std::fabs(sum)) break;
  }
  return sum;
}

}  // namespace testing
