#include <doctest.h>

#include <cmath>
#include <vector>

#include "bicx/error.hpp"
#include "bicx/fractional.hpp"
#include "bicx/miller_ross.hpp"
#include "bicx/special.hpp"
#include "oracles/frozen.hpp"
#include "support.hpp"

using bicx::Bicomplex;
using bicx::Complex;
using bicx::FractionalMode;
using bicx::FractionalOrder;
using bicx::KineticKind;
using bicx::KineticProblem;
using testing::Gen;

TEST_CASE("RL power rules") {
  const FractionalOrder i1(1.0, FractionalMode::integral);
  const FractionalOrder ihalf(0.5, FractionalMode::integral);
  const FractionalOrder d1(1.0, FractionalMode::derivative);
  const FractionalOrder dhalf(0.5, FractionalMode::derivative);
  for (double t : {0.1, 0.7, 2.0}) {
    CHECK(testing::rel_diff(bicx::rl_integral_power(i1, 0.0, t), Bicomplex(t)) <= 1e-15);
    CHECK(testing::rel_diff(bicx::rl_integral_power(ihalf, 0.0, t), Bicomplex(2.0 / oracle::sqrt_pi * std::sqrt(t))) <=
          1e-15);
    CHECK(testing::rel_diff(bicx::rl_derivative_power(d1, 2.0, t), Bicomplex(2.0 * t)) <= 1e-15);
    CHECK(bicx::rl_derivative_power(d1, 0.0, t).is_zero());
  }
  CHECK(testing::rel_diff(bicx::rl_derivative_power(dhalf, 0.5, 1.0), Bicomplex(oracle::sqrt_pi / 2)) <= 1e-15);
  const FractionalOrder mixed(Bicomplex::idempotent(0.5, 1.0 / 3.0), FractionalMode::integral);
  const double t = 1.3;
  const Bicomplex want = Bicomplex::idempotent(std::pow(t, 1.5) / std::tgamma(2.5),
                                               std::pow(t, 1.0 + 1.0 / 3.0) / std::tgamma(2.0 + 1.0 / 3.0));
  CHECK(testing::rel_diff(bicx::rl_integral_power(mixed, 1.0, t), want) <= 1e-14);
}

TEST_CASE("fractional order admissibility") {
  CHECK_NOTHROW(FractionalOrder(0.0, FractionalMode::integral));
  CHECK_NOTHROW(FractionalOrder(bicx::make(1.0, Complex(0, 0.5)), FractionalMode::integral));
  CHECK_THROWS_AS(FractionalOrder(bicx::make(0.3, Complex(0, 0.5)), FractionalMode::integral), bicx::Error);
}

TEST_CASE("property: semigroup and inverse of the power rule") {
  Gen gen(71);
  // Per component: D^{-m1} D^{-m2} t^u applies the power rule at u, then at u + m2.
  const auto compose = [](const FractionalOrder& outer, const Bicomplex& shift, double u, double t, auto rule) {
    const Bicomplex first = bicx::principal_power(Bicomplex(t), -(u + shift));
    const Bicomplex second =
        Bicomplex::idempotent(rule(outer, u + shift.z1().real(), t).z1(), rule(outer, u + shift.z2().real(), t).z2());
    return first * second;
  };
  for (int n = 0; n < 100; ++n) {
    const Bicomplex m1 = Bicomplex::idempotent(gen.real(0.1, 2.0), gen.real(0.1, 2.0));
    const Bicomplex m2 = Bicomplex::idempotent(gen.real(0.1, 2.0), gen.real(0.1, 2.0));
    const double u = gen.real(-0.5, 2.0);
    const double t = gen.real(0.1, 2.0);
    const FractionalOrder a(m1, FractionalMode::integral);
    const FractionalOrder b(m2, FractionalMode::integral);
    const FractionalOrder ab(m1 + m2, FractionalMode::integral);
    const Bicomplex twice = bicx::rl_integral_power(b, u, t) * compose(a, m2, u, t, bicx::rl_integral_power);
    CHECK(testing::rel_diff(twice, bicx::rl_integral_power(ab, u, t)) <= 1e-12);
    const FractionalOrder da(m1, FractionalMode::derivative);
    const Bicomplex back = bicx::rl_integral_power(a, u, t) * compose(da, m1, u, t, bicx::rl_derivative_power);
    CHECK(testing::rel_diff(back, Bicomplex(std::pow(t, u))) <= 1e-12);
  }
}

TEST_CASE("operators applied to Miller-Ross functions") {
  Gen gen(73);
  for (int n = 0; n < 30; ++n) {
    const bicx::MRParams p{gen.order(-0.5, 2.0, 0.3), gen.bicomplex(0.2, 1.5)};
    const Bicomplex z0 = gen.bicomplex(0.2, 1.5);
    const double t = gen.real(0.1, 2.0);
    CHECK(testing::rel_diff(bicx::rl_apply_mr(FractionalOrder(0.0, FractionalMode::integral), p, z0, t),
                            bicx::eval(p, z0 * t).value) <= 1e-13);
    // Derivative of order V of E_{V,C}: Z0^V E_{0,C}(Z0 t) = Z0^V exp(C Z0 t).
    if (bicx::GammaDomainGuard(p.order).dominates()) {
      const Bicomplex got = bicx::rl_apply_mr(FractionalOrder(p.order, FractionalMode::derivative), p, z0, t);
      const Bicomplex want = bicx::principal_power(z0, p.order) * bicx::exp(p.multiplier * z0 * t);
      CHECK(testing::rel_diff(got, want) <= 1e-10);
    }
  }
  // Half integral of exp(t) is E_{1/2,1}(t).
  const Bicomplex half = bicx::rl_apply_mr(FractionalOrder(0.5, FractionalMode::integral), {0.0, 1.0}, 1.0, 1.0);
  CHECK(testing::rel_diff(half, Bicomplex(oracle::erf_form_on_grid[9])) <= 1e-10);
}

TEST_CASE("fractional ODE residuals") {
  CHECK(bicx::yq_residual(1, 2, 2.0, 1.0, 1.0, 1.0).relative() <= 1e-8);
  Gen gen(79);
  for (const auto& [p, q] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}, std::pair{1, 5}}) {
    for (int n = 0; n < 20; ++n) {
      const double lo = p - static_cast<double>(p) / q - 1.0 + 0.2;
      const Bicomplex v = Bicomplex::idempotent(gen.real(lo, p + 1.5), gen.real(lo, p + 1.5));
      if (bicx::pole_distance(v.z1() + 1.0 - static_cast<double>(p)) < 1e-3 ||
          bicx::pole_distance(v.z2() + 1.0 - static_cast<double>(p)) < 1e-3) {
        continue;
      }
      const Bicomplex c(gen.real(0.2, 2.0));
      const Bicomplex z0 = Bicomplex::idempotent(gen.complex(0.2, 2.0), gen.complex(0.2, 2.0));
      if (std::abs(std::arg(z0.z1())) >= M_PI - 1e-9 || std::abs(std::arg(z0.z2())) >= M_PI - 1e-9) continue;
      CHECK(bicx::yq_residual(p, q, v, c, z0, gen.real(0.1, 2.0)).relative() <= 1e-8);
    }
  }
}

namespace {

KineticProblem basic(double nu, double rate, double n0 = 1.0) {
  KineticProblem p;
  p.order = nu;
  p.rate = rate;
  p.n0 = n0;
  return p;
}

}  // namespace

TEST_CASE("kinetic: first order is exponential decay") {
  const auto sol = bicx::kinetic_solve(basic(1.0, 2.0, 1.5));
  for (int k = 1; k <= 20; ++k) {
    const double t = 0.1 * k;
    CHECK(testing::abs_diff(sol(t).value, Bicomplex(1.5 * std::exp(-2.0 * t))) <= 1e-12);
  }
  std::vector<double> grid{0.1, 0.5, 1.0, 2.0};
  for (const auto& r : bicx::kinetic_verify(sol, grid)) CHECK(r.max() <= 1e-10);
}

TEST_CASE("kinetic: real orders match Mittag-Leffler") {
  const auto half = bicx::kinetic_solve(basic(0.5, 1.0));
  const auto three_halves = bicx::kinetic_solve(basic(1.5, 1.0));
  for (int k = 1; k <= 20; ++k) {
    const double t = 0.1 * k;
    CHECK(std::abs(half(t).value.z1().real() - oracle::ml_half[k - 1]) <= 1e-10);
    CHECK(std::abs(three_halves(t).value.z1().real() - oracle::ml_three_halves[k - 1]) <= 1e-10);
    const double long_double_oracle = static_cast<double>(testing::mittag_leffler(0.5L, -std::sqrt(t)));
    CHECK(std::abs(long_double_oracle - oracle::ml_half[k - 1]) <= 1e-13);
  }
}

TEST_CASE("kinetic: forcing kinds and problem validation") {
  KineticProblem exp_forced = basic(1.0, 1.0);
  exp_forced.kind = KineticKind::exp_forced;
  exp_forced.multiplier = 0.0;
  // With C = 0 the forcing is the constant N0, which is the basic kind.
  const auto forced = bicx::kinetic_solve(exp_forced);
  const auto plain = bicx::kinetic_solve(basic(1.0, 1.0));
  for (double t : {0.2, 1.0, 1.8}) CHECK(testing::abs_diff(forced(t).value, plain(t).value) <= 1e-14);

  KineticProblem complex_order = basic(0.0, 1.0);
  complex_order.order = bicx::make(0.5, Complex(0, 0.1));
  const auto sol = bicx::kinetic_solve(complex_order);
  std::vector<double> grid{0.1, 1.0, 2.0};
  for (const auto& r : bicx::kinetic_verify(sol, grid)) CHECK(r.max() <= 1e-5);
  const auto serial = bicx::kinetic_verify_serial(sol, grid);
  const auto parallel = bicx::kinetic_verify(sol, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(serial[i] == parallel[i]);

  KineticProblem bad = basic(1.0, -1.0);
  CHECK_THROWS_AS(bicx::kinetic_solve(bad), bicx::Error);
  bad = basic(0.0, 1.0);
  bad.order = bicx::make(0.2, Complex(0, 0.5));
  CHECK_THROWS_AS(bicx::kinetic_solve(bad), bicx::Error);
}

TEST_CASE("kinetic: Miller-Ross forcing needs the fixed forcing index") {
  KineticProblem p = basic(0.5, 1.0);
  p.kind = KineticKind::mr_forced;
  p.multiplier = 1.0;
  p.forcing_order = 0.5;
  p.scale = 1.0;
  p.forcing_index = 2;
  const bicx::KineticSolution fixed(p, {});
  const bicx::KineticSolution coupled(p, {}, bicx::MrForcedForm::coupled_index);
  std::vector<double> grid{0.5, 1.0, 1.5};
  double fixed_worst = 0.0;
  for (const auto& r : bicx::kinetic_verify(fixed, grid)) fixed_worst = std::max(fixed_worst, r.max());
  CHECK(fixed_worst <= 1e-5);
  double coupled_worst = 0.0;
  try {
    for (const auto& r : bicx::kinetic_verify(coupled, grid)) coupled_worst = std::max(coupled_worst, r.max());
  } catch (const bicx::Error&) {
    coupled_worst = INFINITY;
  }
  CHECK(coupled_worst > 1e-2);
}

TEST_CASE("kinetic: a short term budget reports divergence and a radius") {
  bicx::TruncationPolicy short_budget;
  short_budget.max_terms = 16;
  const auto sol = bicx::kinetic_solve(basic(1.0, 2.0), short_budget);
  CHECK_NOTHROW((void)sol(0.5));
  try {
    (void)sol(50.0);
    FAIL("expected SeriesDivergence");
  } catch (const bicx::Error& e) {
    CHECK(e.kind() == bicx::ErrorKind::SeriesDivergence);
  }
  const double radius = bicx::kinetic_empirical_radius(sol, 50.0);
  CHECK(radius > 0.5);
  CHECK(radius < 50.0);
  CHECK_NOTHROW((void)sol(radius));
}
