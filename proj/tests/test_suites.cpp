#include <doctest.h>

#include <set>
#include <string>

#include "bicx/error.hpp"
#include "bicx/suites.hpp"

TEST_CASE("cloud generator") {
  bicx::CloudRng a(42);
  bicx::CloudRng b(42);
  for (int n = 0; n < 1000; ++n) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    const int k = a.integer(-3, 3);
    CHECK(k == b.integer(-3, 3));
    CHECK(k >= -3);
    CHECK(k <= 3);
  }
  bicx::CloudRng c(43);
  CHECK(c.uniform() != bicx::CloudRng(42).uniform());
}

TEST_CASE("suite names are unique and unknown names are refused") {
  std::set<std::string> names;
  for (const auto name : bicx::suite_names()) names.emplace(name);
  CHECK(names.size() == bicx::suite_names().size());
  CHECK(names.count("recurrences") == 1);
  CHECK(names.count("kinetic") == 1);
  CHECK_THROWS_AS(bicx::run_suites("no-such-suite", {}), bicx::Error);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  bicx::SuiteOptions o;
  o.seed = 9;
  o.n = 30;
  const auto first = bicx::run_suites("recurrences", o);
  const auto second = bicx::run_suites("recurrences", o);
  REQUIRE(first.size() == 1);
  REQUIRE(first[0].checks.size() == second[0].checks.size());
  for (std::size_t i = 0; i < first[0].checks.size(); ++i) {
    CHECK(first[0].checks[i].identity == second[0].checks[i].identity);
    CHECK(first[0].checks[i].value == second[0].checks[i].value);
  }
  CHECK(first[0].pass());
}

TEST_CASE("check verdicts") {
  bicx::CheckResult bound{"b", bicx::CheckKind::bound, 1, 0.5, 1.0};
  CHECK(bound.pass());
  bound.value = 2.0;
  CHECK_FALSE(bound.pass());
  const bicx::CheckResult control{"c", bicx::CheckKind::control, 1, 0.05, 0.1};
  CHECK_FALSE(control.pass());
  const bicx::CheckResult recorded{"r", bicx::CheckKind::recorded, 1, 1e9, 1e-9};
  CHECK(recorded.pass());
}

TEST_CASE("the injected sign flip fails the ODE suite") {
  bicx::SuiteOptions o;
  o.n = 20;
  CHECK(bicx::run_suites("ode", o)[0].pass());
  o.inject_bug = true;
  CHECK_FALSE(bicx::run_suites("ode", o)[0].pass());
}
