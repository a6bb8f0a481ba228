#include <doctest.h>

#include <cmath>

#include "bicx/calculus.hpp"
#include "bicx/error.hpp"
#include "bicx/integral_reps.hpp"
#include "bicx/miller_ross.hpp"
#include "bicx/quadrature.hpp"
#include "bicx/special.hpp"
#include "oracles/frozen.hpp"
#include "support.hpp"

using bicx::Bicomplex;
using bicx::Complex;
using bicx::MRParams;
using testing::Gen;
namespace u = bicx::units;

TEST_CASE("adaptive quadrature") {
  const auto poly = bicx::integrate<double>([](double x) { return x * x; }, 0.0, 3.0);
  CHECK(std::abs(poly.value - 9.0) <= 1e-13);
  const auto sqrt_end = bicx::integrate_endpoints<double>([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                                         {-0.5, 0.0});
  CHECK(std::abs(sqrt_end.value - 2.0) <= 1e-10);
  for (auto map : {bicx::InfiniteMap::exp, bicx::InfiniteMap::rational}) {
    bicx::QuadratureConfig cfg;
    cfg.infinite_domain_map = map;
    const auto g = bicx::integrate_semi_infinite<double>(
        [](double x) { return std::exp(-x) * std::sqrt(x); }, 0.0, 1.0, 0.5, cfg);
    CHECK(std::abs(g.value - oracle::sqrt_pi / 2) <= 1e-10);
  }
  bicx::QuadratureConfig starved;
  starved.max_subdivisions = 2;
  try {
    (void)bicx::integrate<double>([](double x) { return std::sin(200 * x); }, 0.0, 10.0, starved);
    FAIL("expected QuadratureNonConvergence");
  } catch (const bicx::Error& e) {
    CHECK(e.kind() == bicx::ErrorKind::QuadratureNonConvergence);
  }
}

TEST_CASE("bicomplex path integrals") {
  const auto one = bicx::path_integral([](const Bicomplex&) { return Bicomplex(1.0); },
                                       bicx::CurvePair::segment(0.0, 1.0));
  CHECK(testing::abs_diff(one.value, Bicomplex(1.0)) <= 1e-14);
  Gen gen(53);
  for (int n = 0; n < 20; ++n) {
    const Bicomplex z = gen.bicomplex(0.1, 3.0);
    const auto sq = bicx::path_integral([](const Bicomplex& x) { return x; }, bicx::CurvePair::segment(0.0, z));
    CHECK(testing::rel_diff(sq.value, 0.5 * z * z) <= 1e-13);
  }
  const auto ray = bicx::ComplexPath::ray(0.0, 1.0);
  const auto g = bicx::path_integral(
      [](const Bicomplex& x) { return bicx::exp(-x) * bicx::principal_power(x, Bicomplex(0.5)); },
      bicx::CurvePair::diagonal(ray), {}, {0.5, 0.0});
  CHECK(testing::rel_diff(g.value, Bicomplex(oracle::sqrt_pi / 2)) <= 1e-9);
}

TEST_CASE("bicomplex Cauchy-Riemann check") {
  Gen gen(59);
  for (int n = 0; n < 20; ++n) {
    const Bicomplex z = gen.bicomplex(0.1, 3.0);
    CHECK(bicx::cr_check([](const Bicomplex& x) { return x * x; }, z).max() < 1e-8);
  }
  const auto conj = [](const Bicomplex& x) { return bicx::make(std::conj(x.w1()), x.w2()); };
  CHECK(bicx::cr_check(conj, 1.0).max() > 0.5);
  const Bicomplex z0 = bicx::make(Complex(1.2, 0.3), 0.2);
  const auto in_order = [&](const Bicomplex& v) { return bicx::eval({v, 0.8}, z0).value; };
  CHECK(bicx::cr_check(in_order, bicx::make(0.6, Complex(0, 0.2))).max() < 1e-6);
}

TEST_CASE("beta-type representation") {
  CHECK(testing::rel_diff(bicx::ir_beta({0.0, 1.0}, 1.0, 30), Bicomplex(std::exp(1.0))) <= 1e-8);
  const Bicomplex z = bicx::make(Complex(0.4, 0.3), 0.5);
  const Bicomplex trig = bicx::ir_beta({0.0, u::j}, z, 40);
  CHECK(testing::rel_diff(trig, bicx::cos(z) + u::j * bicx::sin(z)) <= 1e-8);
  const Bicomplex v = bicx::make(0.7, Complex(0, 0.3));
  CHECK(testing::rel_diff(bicx::ir_beta({v, 0.0}, z, 10), bicx::principal_power(z, v) * bicx::reciprocal_gamma(v + 1.0)) <=
        1e-13);
  Gen gen(61);
  for (int n = 0; n < 10; ++n) {
    const MRParams p{gen.order(-0.5, 2.0, 0.3), gen.bicomplex(0.2, 1.5)};
    const Bicomplex x = gen.bicomplex(0.2, 1.5);
    const int terms = bicx::default_series_terms(p, x);
    CHECK(testing::rel_diff(bicx::ir_beta(p, x, terms), bicx::eval(p, x).value) <= 1e-7);
  }
}

TEST_CASE("double-integral representation") {
  const Bicomplex z(0.8);
  const Bicomplex c(1.3);
  // V = M = 1 is the exponential expansion exp(CZ) = 1 + CZ + C^2 E_{2,C}(Z).
  const Bicomplex e2 = bicx::ir_double({1.0, c}, 1.0, z, 40);
  CHECK(testing::rel_diff(1.0 + c * z + c * c * e2, bicx::exp(c * z)) <= 1e-8);
  CHECK(testing::rel_diff(bicx::ir_double({1.0, 0.0}, 1.0, z, 5), 0.5 * z * z) <= 1e-12);
  Gen gen(67);
  for (int n = 0; n < 10; ++n) {
    const Bicomplex x = gen.bicomplex(0.2, 1.5);
    const MRParams p{1.5, gen.bicomplex(0.2, 1.5)};
    const MRParams shifted{2.5, p.multiplier};
    const int terms = bicx::default_series_terms(shifted, x);
    CHECK(testing::rel_diff(bicx::ir_double(p, 1.0, x, terms), bicx::eval(shifted, x).value) <= 1e-6);
  }
}

TEST_CASE("gamma-denominator representation") {
  CHECK(testing::rel_diff(bicx::gamma_by_quadrature(2.5), Bicomplex(oracle::gamma_5_2)) <= 1e-10);
  CHECK(std::abs(bicx::ir_gamma_denominator({0.0, 1.0}, 1.0, 30).z1() - std::exp(1.0)) <= 1e-8);
  for (int k = 1; k <= 20; k += 4) {
    const double z = 0.1 * k;
    const Bicomplex got = bicx::ir_gamma_denominator({0.5, 1.0}, z, 40);
    CHECK(testing::rel_diff(got, Bicomplex(oracle::erf_form_on_grid[k - 1])) <= 1e-8);
  }
}

TEST_CASE("Barnes line integral") {
  const auto exp_case = bicx::barnes_eval({0.0, 1.0}, -2.0);
  CHECK(testing::abs_diff(exp_case.value, Bicomplex(std::exp(-2.0))) <= 1e-5);
  const auto first = bicx::barnes_eval({1.0, 1.0}, -1.0);
  CHECK(testing::abs_diff(first.value, Bicomplex(std::exp(-1.0) - 1.0)) <= 1e-5);
  CHECK(first.tail_estimate.max() <= 1e-5 * first.magnitude.max());

  // Halving T loses accuracy; the error at T = 40 is well below T = 20.
  bicx::BarnesPath shorter;
  shorter.height = 20.0;
  shorter.tail_tol = 1.0;
  const double err20 = testing::abs_diff(bicx::barnes_eval({0.0, 1.0}, -2.0, shorter).value, Bicomplex(std::exp(-2.0)));
  const double err40 = testing::abs_diff(exp_case.value, Bicomplex(std::exp(-2.0)));
  CHECK(err20 >= 1.5 * err40);

  try {
    (void)bicx::barnes_eval({0.0, 1.0}, 2.0);
    FAIL("expected PathTruncationError");
  } catch (const bicx::Error& e) {
    CHECK(e.kind() == bicx::ErrorKind::PathTruncationError);
  }
}
