#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <utility>

namespace bicx {

using Complex = std::complex<double>;

/// Multiplication by the imaginary unit i without rounding.
constexpr Complex times_i(Complex z) noexcept { return {-z.imag(), z.real()}; }

/// A bicomplex number Z = w1 + j w2 = z1 e1 + z2 e2.
///
/// Storage is the idempotent pair (z1, z2) with e1 = (1+k)/2, e2 = (1-k)/2, so
/// every ring operation acts componentwise. The j-form (w1, w2) is a view:
/// w1 = (z1+z2)/2, w2 = i(z1-z2)/2, and conversely z1 = w1 - i w2, z2 = w1 + i w2.
/// Real and complex (C(i)) scalars embed as z1 = z2.
class Bicomplex {
 public:
  constexpr Bicomplex() noexcept = default;
  constexpr Bicomplex(double x) noexcept : z1_(x), z2_(x) {}
  constexpr Bicomplex(Complex z) noexcept : z1_(z), z2_(z) {}

  static constexpr Bicomplex idempotent(Complex z1, Complex z2) noexcept {
    Bicomplex out;
    out.z1_ = z1;
    out.z2_ = z2;
    return out;
  }

  /// From the j-form w1 + j w2.
  static constexpr Bicomplex jform(Complex w1, Complex w2) noexcept {
    return idempotent(w1 - times_i(w2), w1 + times_i(w2));
  }

  /// From the four real coordinates a + b i + c j + d k.
  static constexpr Bicomplex from_parts(double a, double b, double c, double d) noexcept {
    return jform({a, b}, {c, d});
  }

  constexpr Complex z1() const noexcept { return z1_; }
  constexpr Complex z2() const noexcept { return z2_; }
  constexpr Complex component(int index) const noexcept { return index == 0 ? z1_ : z2_; }

  Complex w1() const noexcept { return 0.5 * (z1_ + z2_); }
  Complex w2() const noexcept { return 0.5 * times_i(z1_ - z2_); }

  /// (a, b, c, d) with Z = a + b i + c j + d k.
  std::array<double, 4> parts() const noexcept {
    const Complex a = w1();
    const Complex b = w2();
    return {a.real(), a.imag(), b.real(), b.imag()};
  }

  constexpr bool is_zero() const noexcept { return z1_ == Complex{} && z2_ == Complex{}; }

  Bicomplex& operator+=(const Bicomplex& o) noexcept {
    z1_ += o.z1_;
    z2_ += o.z2_;
    return *this;
  }
  Bicomplex& operator-=(const Bicomplex& o) noexcept {
    z1_ -= o.z1_;
    z2_ -= o.z2_;
    return *this;
  }
  Bicomplex& operator*=(const Bicomplex& o) noexcept {
    z1_ *= o.z1_;
    z2_ *= o.z2_;
    return *this;
  }
  Bicomplex& operator/=(const Bicomplex& o);

  friend Bicomplex operator+(Bicomplex a, const Bicomplex& b) noexcept { return a += b; }
  friend Bicomplex operator-(Bicomplex a, const Bicomplex& b) noexcept { return a -= b; }
  friend Bicomplex operator*(Bicomplex a, const Bicomplex& b) noexcept { return a *= b; }
  friend Bicomplex operator/(Bicomplex a, const Bicomplex& b) { return a /= b; }
  friend Bicomplex operator-(const Bicomplex& a) noexcept { return idempotent(-a.z1_, -a.z2_); }

  friend constexpr bool operator==(const Bicomplex& a, const Bicomplex& b) noexcept {
    return a.z1_ == b.z1_ && a.z2_ == b.z2_;
  }

 private:
  Complex z1_{};
  Complex z2_{};
};

namespace units {
inline constexpr Bicomplex one = Bicomplex(1.0);
inline constexpr Bicomplex i = Bicomplex::idempotent({0, 1}, {0, 1});
inline constexpr Bicomplex j = Bicomplex::idempotent({0, -1}, {0, 1});
inline constexpr Bicomplex k = Bicomplex::idempotent({1, 0}, {-1, 0});
inline constexpr Bicomplex e1 = Bicomplex::idempotent({1, 0}, {0, 0});
inline constexpr Bicomplex e2 = Bicomplex::idempotent({0, 0}, {1, 0});
}  // namespace units

/// j-form constructor: make(w1, w2) = w1 + j w2.
inline Bicomplex make(Complex w1, Complex w2) noexcept { return Bicomplex::jform(w1, w2); }

/// The idempotent pair (z1, z2).
inline std::pair<Complex, Complex> idempotent(const Bicomplex& z) noexcept { return {z.z1(), z.z2()}; }

/// Applies a complex function to each idempotent component.
template <class F>
Bicomplex componentwise(const Bicomplex& z, F&& f) {
  return Bicomplex::idempotent(f(z.z1()), f(z.z2()));
}

/// The hyperbolic norm |Z|_h = |z1| e1 + |z2| e2, kept as its two components.
struct HyperbolicNorm {
  double n1 = 0.0;
  double n2 = 0.0;

  double component(int index) const noexcept { return index == 0 ? n1 : n2; }
  double max() const noexcept { return std::max(n1, n2); }

  HyperbolicNorm& operator+=(const HyperbolicNorm& o) noexcept {
    n1 += o.n1;
    n2 += o.n2;
    return *this;
  }
  friend HyperbolicNorm operator+(HyperbolicNorm a, const HyperbolicNorm& b) noexcept { return a += b; }
  friend HyperbolicNorm operator*(const HyperbolicNorm& a, const HyperbolicNorm& b) noexcept {
    return {a.n1 * b.n1, a.n2 * b.n2};
  }
  friend HyperbolicNorm operator*(double s, const HyperbolicNorm& a) noexcept { return {s * a.n1, s * a.n2}; }
  friend bool operator==(const HyperbolicNorm&, const HyperbolicNorm&) = default;
};

inline HyperbolicNorm hyperbolic_norm(const Bicomplex& z) noexcept { return {std::abs(z.z1()), std::abs(z.z2())}; }

/// Componentwise maximum.
inline HyperbolicNorm max(const HyperbolicNorm& a, const HyperbolicNorm& b) noexcept {
  return {std::max(a.n1, b.n1), std::max(a.n2, b.n2)};
}

/// True iff Z is nonzero with a vanishing idempotent component (Z in O2).
inline bool is_zero_divisor(const Bicomplex& z) noexcept {
  const bool zero1 = z.z1() == Complex{};
  const bool zero2 = z.z2() == Complex{};
  return zero1 != zero2;
}

/// True iff both idempotent components are nonzero (Z is invertible).
inline bool is_invertible(const Bicomplex& z) noexcept { return z.z1() != Complex{} && z.z2() != Complex{}; }

bool is_finite(const Bicomplex& z) noexcept;

Bicomplex exp(const Bicomplex& z);
Bicomplex sin(const Bicomplex& z);
Bicomplex cos(const Bicomplex& z);

/// Logarithm applied per component; `branch` adds 2*pi*i*branch to both.
/// Throws ZeroDivisorLog when either component is zero.
Bicomplex log(const Bicomplex& z, int branch = 0);

/// exp(e * log z) with the branch of log selected as in log().
Bicomplex pow(const Bicomplex& z, const Bicomplex& e, int branch = 0);

/// Integer power by repeated multiplication; negative n requires z invertible.
Bicomplex pow(const Bicomplex& z, int n);

}  // namespace bicx
