#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bicx {

/// How a check's measured value is judged against its budget.
enum class CheckKind {
  bound,     // pass iff the largest residual is <= budget
  control,   // a deliberately failing identity: pass iff the smallest residual exceeds budget
  recorded,  // reported for the record, never fails
};

struct CheckResult {
  std::string identity;
  CheckKind kind = CheckKind::bound;
  int points = 0;
  double value = 0.0;  // max residual (bound, recorded) or min residual (control)
  double budget = 0.0;

  bool pass() const noexcept;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const noexcept;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  int n = 0;                    // cloud size; 0 picks the suite's default
  bool inject_bug = false;      // flips a sign in the ODE suite's operator
  double barnes_height = 40.0;  // truncation height of the Barnes line
};

/// Suite names accepted by run_suites, excluding "all".
std::span<const std::string_view> suite_names() noexcept;

/// Runs one suite, or every suite in suite_names() order for "all". Results
/// depend only on the options. Throws PreconditionViolation for an unknown
/// name; library errors raised while setting up a check propagate.
std::vector<SuiteReport> run_suites(std::string_view selector, const SuiteOptions& options);

/// Uniform doubles in [0, 1) from mt19937_64 as (x >> 11) * 2^-53. The engine
/// is fully specified by the standard and the mapping avoids the
/// implementation-defined distributions, so clouds match across platforms.
class CloudRng {
 public:
  explicit CloudRng(std::uint64_t seed);
  double uniform();
  double uniform(double lo, double hi);
  int integer(int lo, int hi);  // inclusive

 private:
  std::mt19937_64 engine_;
};

}  // namespace bicx
