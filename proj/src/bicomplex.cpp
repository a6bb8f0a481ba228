#include "bicx/bicomplex.hpp"

#include <numbers>
#include <string>

#include "bicx/error.hpp"

namespace bicx {

Bicomplex& Bicomplex::operator/=(const Bicomplex& o) {
  if (!is_invertible(o)) {
    throw Error(ErrorKind::ZeroDivisorDivision, "divisor has a zero idempotent component");
  }
  z1_ /= o.z1_;
  z2_ /= o.z2_;
  return *this;
}

bool is_finite(const Bicomplex& z) noexcept {
  const auto finite = [](Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); };
  return finite(z.z1()) && finite(z.z2());
}

Bicomplex exp(const Bicomplex& z) {
  return componentwise(z, [](Complex c) { return std::exp(c); });
}

Bicomplex sin(const Bicomplex& z) {
  return componentwise(z, [](Complex c) { return std::sin(c); });
}

Bicomplex cos(const Bicomplex& z) {
  return componentwise(z, [](Complex c) { return std::cos(c); });
}

Bicomplex log(const Bicomplex& z, int branch) {
  if (!is_invertible(z)) {
    throw Error(ErrorKind::ZeroDivisorLog, "logarithm undefined on a zero idempotent component");
  }
  const Complex shift{0.0, 2.0 * std::numbers::pi * branch};
  return componentwise(z, [&](Complex c) { return std::log(c) + shift; });
}

Bicomplex pow(const Bicomplex& z, const Bicomplex& e, int branch) { return exp(e * log(z, branch)); }

Bicomplex pow(const Bicomplex& z, int n) {
  if (n < 0) {
    if (!is_invertible(z)) {
      throw Error(ErrorKind::ZeroDivisorDivision, "negative power of a non-invertible value");
    }
    return Bicomplex(1.0) / pow(z, -n);
  }
  Bicomplex result(1.0);
  Bicomplex base = z;
  unsigned m = static_cast<unsigned>(n);
  while (m != 0) {
    if (m & 1U) result *= base;
    m >>= 1U;
    if (m != 0) base *= base;
  }
  return result;
}

}  // namespace bicx
