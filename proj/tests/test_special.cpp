#include <doctest.h>

#include <cmath>

#include "bicx/error.hpp"
#include "bicx/miller_ross.hpp"
#include "bicx/special.hpp"
#include "oracles/frozen.hpp"
#include "support.hpp"

using bicx::Bicomplex;
using bicx::Complex;
using testing::Gen;

TEST_CASE("complex gamma against the high-precision oracle") {
  CHECK(bicx::complex_gamma(1.0) == Complex(1.0));
  for (const auto& c : oracle::gamma_cases) {
    CAPTURE(c.arg);
    CHECK(testing::rel_diff(bicx::complex_gamma(c.arg), c.value) <= 1e-13);
    CHECK(testing::rel_diff(bicx::reciprocal_gamma(c.arg), 1.0 / c.value) <= 1e-13);
  }
  CHECK(std::abs(bicx::complex_gamma(0.5) - oracle::sqrt_pi) <= 1e-15 * oracle::sqrt_pi);
}

TEST_CASE("log gamma agrees with the oracle up to a multiple of 2 pi i") {
  for (const auto& c : oracle::log_gamma_cases) {
    const Complex got = bicx::log_gamma(c.arg);
    CHECK(std::abs(got.real() - c.value.real()) <= 1e-13 * std::abs(c.value.real()));
    const double turns = (got.imag() - c.value.imag()) / (2 * M_PI);
    CHECK(std::abs(turns - std::round(turns)) <= 1e-12);
  }
}

TEST_CASE("reciprocal gamma vanishes exactly at the poles") {
  for (int n = 0; n <= 20; ++n) CHECK(bicx::reciprocal_gamma(Complex(-n)) == Complex(0.0));
  try {
    (void)bicx::complex_gamma(-3.0);
    FAIL("expected GammaPole");
  } catch (const bicx::Error& e) {
    CHECK(e.kind() == bicx::ErrorKind::GammaPole);
  }
}

TEST_CASE("property: recursion and reflection") {
  Gen gen(5);
  for (int n = 0; n < 300; ++n) {
    const Complex z = gen.complex(0.05, 30.0);
    if (bicx::pole_distance(z) < 1e-3 || bicx::pole_distance(1.0 - z) < 1e-3) continue;
    const Complex g = bicx::complex_gamma(z);
    if (!std::isfinite(std::abs(g)) || std::abs(g) > 1e250 || std::abs(g) < 1e-250) continue;
    CHECK(testing::rel_diff(bicx::complex_gamma(z + 1.0), z * g) <= 1e-12);
    const Complex product = g * bicx::complex_gamma(1.0 - z) * std::sin(M_PI * z);
    if (std::abs(z.imag()) < 20) CHECK(testing::rel_diff(product, Complex(M_PI)) <= 1e-11);
  }
}

TEST_CASE("bicomplex gamma acts per idempotent component") {
  CHECK(bicx::bicomplex_gamma(Bicomplex(1.0)) == Bicomplex(1.0));
  const Bicomplex g = bicx::bicomplex_gamma(Bicomplex::idempotent(2.0, 3.0));
  CHECK(testing::abs_diff(g, Bicomplex::idempotent(1.0, 2.0)) <= 4e-15);
  const Bicomplex half = bicx::bicomplex_gamma(bicx::make(2.5, 0.0));
  CHECK(testing::rel_diff(half, Bicomplex(oracle::gamma_5_2)) <= 1e-15);
  try {
    (void)bicx::bicomplex_gamma(Bicomplex::idempotent(0.0, 1.0));
    FAIL("expected GammaPole");
  } catch (const bicx::Error& e) {
    CHECK(e.kind() == bicx::ErrorKind::GammaPole);
  }
}

TEST_CASE("beta function") {
  CHECK(std::abs(bicx::beta_complex(1.0, 1.0) - 1.0) <= 1e-15);
  CHECK(std::abs(bicx::beta_complex(0.5, 0.5) - M_PI) <= 2e-15 * M_PI);
  Gen gen(3);
  for (int n = 0; n < 100; ++n) {
    const Complex a = gen.complex(0.1, 20.0);
    if (bicx::pole_distance(a) < 1e-3) continue;
    CHECK(testing::rel_diff(bicx::beta_complex(a, 1.0), 1.0 / a) <= 1e-12);
  }
}

TEST_CASE("gamma domain guard") {
  const bicx::GammaDomainGuard inside(bicx::make(1.0, Complex(0, 0.5)));
  CHECK(inside.dominates());
  const bicx::GammaDomainGuard outside(bicx::make(0.2, Complex(0, 0.5)));
  CHECK_FALSE(outside.dominates());
  CHECK(outside.dominates(1.0));
  CHECK_FALSE(bicx::GammaDomainGuard(Bicomplex(-2.0)).pole_free(1.0));
  CHECK(bicx::GammaDomainGuard(Bicomplex(-2.0)).pole_free(0.5));
}

TEST_CASE("Kummer 1F1 special values") {
  Gen gen(17);
  for (int n = 0; n < 50; ++n) {
    const Bicomplex y = gen.bicomplex(0.0, 8.0);
    // Rounding scales with the sum of term moduli, e^{|y|}, not with |e^y|.
    const bicx::SeriesValue w = bicx::kummer_1f1(1.0, 1.0, y);
    CHECK(std::abs(w.value.z1() - bicx::exp(y).z1()) <= 1e-14 * w.magnitude.n1);
    CHECK(std::abs(w.value.z2() - bicx::exp(y).z2()) <= 1e-14 * w.magnitude.n2);
  }
  for (const auto& c : oracle::kummer_1_2_cases) {
    const Bicomplex got = bicx::kummer_1f1(1.0, 2.0, Bicomplex(c.arg)).value;
    CHECK(testing::rel_diff(got, Bicomplex(c.value)) <= 1e-14);
  }
}

TEST_CASE("property: Kummer series reproduces Miller-Ross") {
  Gen gen(19);
  for (int n = 0; n < 100; ++n) {
    const Bicomplex v = gen.order(0.1, 3.0, 1.0);
    const Bicomplex c = gen.bicomplex(0.2, 2.0);
    const Bicomplex z = gen.bicomplex(0.2, 2.0);
    const Bicomplex via_kummer = bicx::kummer_1f1(1.0, v + 1.0, c * z).value * bicx::principal_power(z, v) *
                                 bicx::reciprocal_gamma(v + 1.0);
    CHECK(testing::rel_diff(via_kummer, bicx::eval({v, c}, z).value) <= 1e-12);
    CHECK(bicx::kummer_ode_residual(1.0, v + 1.0, c * z).relative() <= 1e-9);
  }
}

TEST_CASE("confluent operator controls") {
  const Bicomplex y(0.7);
  const Bicomplex w = bicx::exp(y);
  CHECK(bicx::confluent_operator_residual(1.0, 1.0, y, w, w, w).relative() <= 1e-9);
  const Bicomplex one(1.0);
  const Bicomplex wrong = bicx::exp(2.0 * one);
  const bicx::Residual r = bicx::confluent_operator_residual(1.0, 1.0, one, wrong, 2.0 * wrong, 4.0 * wrong);
  CHECK(r.abs.max() > 0.1);
}
