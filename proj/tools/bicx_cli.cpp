// bicx: point evaluation, identity suites, kinetic solutions and tables.
//
// Exit codes: 0 success, 1 identity failure, 2 parse error, 3 domain error,
// 4 series divergence.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicx/bicomplex.hpp"
#include "bicx/error.hpp"
#include "bicx/fractional.hpp"
#include "bicx/literal.hpp"
#include "bicx/miller_ross.hpp"
#include "bicx/special.hpp"
#include "bicx/suites.hpp"

namespace {

using json = nlohmann::ordered_json;
using bicx::Bicomplex;

enum Exit { kPass = 0, kIdentityFailure = 1, kParse = 2, kDomain = 3, kDivergence = 4 };

// Shortest text that reads back to the same double.
std::string num(double x) {
  if (x == 0.0) x = 0.0;
  char buf[32];
  const auto end = std::to_chars(buf, buf + sizeof buf, x).ptr;
  return std::string(buf, end);
}

// RFC 4180: quote a field holding a comma, quote or line break; double quotes.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Rows of named columns written as CSV (CRLF line ends), JSON or aligned text.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> numeric;

  void print(const std::string& format) const {
    if (format == "csv") {
      const auto line = [](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i]);
        std::cout << out << "\r\n";
      };
      line(columns);
      for (const auto& r : rows) line(r);
    } else if (format == "json") {
      json out = json::array();
      for (const auto& r : rows) {
        json row = json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) {
          if (numeric[i]) {
            row[columns[i]] = std::stod(r[i]);
          } else {
            row[columns[i]] = r[i];
          }
        }
        out.push_back(std::move(row));
      }
      std::cout << out.dump(2) << "\n";
    } else {
      std::vector<std::size_t> width(columns.size());
      for (std::size_t i = 0; i < columns.size(); ++i) {
        width[i] = columns[i].size();
        for (const auto& r : rows) width[i] = std::max(width[i], r[i].size());
      }
      const auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          out += cells[i];
          if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        std::cout << out << "\n";
      };
      line(columns);
      for (const auto& r : rows) line(r);
    }
  }
};

std::vector<std::string> parts_of(const Bicomplex& z) {
  const auto p = z.parts();
  return {num(p[0]), num(p[1]), num(p[2]), num(p[3])};
}

// start:stop:step, inclusive of stop up to rounding; points are start + i*step.
std::vector<double> parse_grid(const std::string& text) {
  double v[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = text.find(':', pos);
    if ((i < 2) == (end == std::string::npos)) {
      throw bicx::Error(bicx::ErrorKind::ParseError, "grid must be start:stop:step, got \"" + text + "\"");
    }
    const std::string field = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    std::size_t used = 0;
    try {
      v[i] = std::stod(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != field.size() || field.empty()) {
      throw bicx::Error(bicx::ErrorKind::ParseError, "bad number \"" + field + "\" in grid");
    }
    pos = end + 1;
  }
  if (!(v[2] > 0.0) || !(v[1] >= v[0])) {
    throw bicx::Error(bicx::ErrorKind::PreconditionViolation, "grid needs step > 0 and stop >= start");
  }
  std::vector<double> out;
  const double limit = v[1] + 1e-9 * v[2];
  for (int i = 0;; ++i) {
    const double x = v[0] + i * v[2];
    if (x > limit) break;
    // Snap to 15 significant digits so 0.1 + 2 * 0.1 prints as 0.3.
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    out.push_back(std::strtod(buf, nullptr));
  }
  return out;
}

struct Tolerances {
  double rel_tol = 1e-14;
  double abs_tol = 1e-300;
  int max_terms = 10000;

  void add_to(CLI::App* app) {
    app->add_option("--rel-tol", rel_tol, "Series relative tolerance");
    app->add_option("--abs-tol", abs_tol, "Series absolute tolerance");
    app->add_option("--max-terms", max_terms, "Series term limit");
  }
  bicx::TruncationPolicy policy() const {
    bicx::TruncationPolicy p{rel_tol, abs_tol, max_terms};
    p.validate();
    return p;
  }
};

int exit_for(const bicx::Error& e) {
  switch (e.kind()) {
    case bicx::ErrorKind::ParseError:
      return kParse;
    case bicx::ErrorKind::SeriesDivergence:
    case bicx::ErrorKind::MaxTermsExceeded:
      return kDivergence;
    default:
      return kDomain;
  }
}

// ------------------------------------------------------------------- eval

struct EvalArgs {
  std::string function;
  std::string v, c, z, y;
  std::string format = "plain";
  Tolerances tol;
};

int cmd_eval(const EvalArgs& a) {
  const auto need = [&](const std::string& value, const char* flag) {
    if (value.empty()) {
      throw bicx::Error(bicx::ErrorKind::ParseError, "eval " + a.function + " needs " + flag);
    }
    return bicx::parse_bicomplex(value);
  };
  Bicomplex value;
  std::optional<bicx::SeriesValue> series;
  json input = json::object();
  if (a.function == "mr") {
    const Bicomplex v = need(a.v, "--v");
    const Bicomplex c = need(a.c, "--c");
    const Bicomplex z = need(a.z, "--z");
    input["v"] = bicx::format_bicomplex(v);
    input["c"] = bicx::format_bicomplex(c);
    input["z"] = bicx::format_bicomplex(z);
    series = bicx::eval({v, c}, z, a.tol.policy());
    value = series->value;
  } else if (a.function == "gamma") {
    const Bicomplex y = need(a.y, "--y");
    input["y"] = bicx::format_bicomplex(y);
    value = bicx::bicomplex_gamma(y);
  } else {
    const Bicomplex z = need(a.z, "--z");
    input["z"] = bicx::format_bicomplex(z);
    value = a.function == "exp" ? bicx::exp(z) : bicx::log(z);
  }

  const std::string canonical = bicx::format_bicomplex(value);
  if (a.format == "json") {
    json out;
    out["function"] = a.function;
    out["input"] = input;
    out["value"] = canonical;
    const auto p = value.parts();
    out["parts"] = {p[0] + 0.0, p[1] + 0.0, p[2] + 0.0, p[3] + 0.0};
    if (series) {
      out["terms_used"] = series->terms_used;
      out["tail_bound"] = {series->tail_bound.n1, series->tail_bound.n2};
    }
    std::cout << out.dump(2) << "\n";
  } else if (a.format == "csv") {
    Table t;
    t.columns = {"function", "value", "a", "b", "c", "d"};
    std::vector<std::string> row{a.function, canonical};
    for (const auto& p : parts_of(value)) row.push_back(p);
    if (series) {
      t.columns.insert(t.columns.end(), {"terms_used", "tail_1", "tail_2"});
      row.insert(row.end(), {std::to_string(series->terms_used), num(series->tail_bound.n1),
                             num(series->tail_bound.n2)});
    }
    t.rows.push_back(row);
    t.numeric.assign(t.columns.size(), true);
    t.print("csv");
  } else {
    std::cout << "value       " << canonical << "\n";
    if (series) {
      std::cout << "terms_used  " << series->terms_used << "\n";
      std::cout << "tail_bound  " << num(series->tail_bound.n1) << "|" << num(series->tail_bound.n2) << "\n";
    }
  }
  return kPass;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 42;
  int n = 0;
  bool inject_bug = false;
  double height = 40.0;
  std::string format = "json";
};

const char* kind_name(bicx::CheckKind k) {
  switch (k) {
    case bicx::CheckKind::bound:
      return "bound";
    case bicx::CheckKind::control:
      return "control";
    case bicx::CheckKind::recorded:
      return "recorded";
  }
  return "";
}

int cmd_verify(const VerifyArgs& a) {
  bicx::SuiteOptions options;
  options.seed = a.seed;
  options.n = a.n;
  options.inject_bug = a.inject_bug;
  options.barnes_height = a.height;
  const auto reports = bicx::run_suites(a.suite, options);
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();

  if (a.format == "json") {
    json out;
    out["seed"] = a.seed;
    out["n"] = a.n;
    out["pass"] = pass;
    json suites = json::array();
    for (const auto& r : reports) {
      json s;
      s["suite"] = r.suite;
      s["pass"] = r.pass();
      json checks = json::array();
      for (const auto& c : r.checks) {
        json item;
        item["identity"] = c.identity;
        item["kind"] = kind_name(c.kind);
        item["points"] = c.points;
        item[c.kind == bicx::CheckKind::control ? "min_residual" : "max_residual"] = c.value;
        item["budget"] = c.budget;
        item["pass"] = c.pass();
        checks.push_back(std::move(item));
      }
      s["checks"] = std::move(checks);
      suites.push_back(std::move(s));
    }
    out["suites"] = std::move(suites);
    std::cout << out.dump(2) << "\n";
  } else {
    Table t;
    t.columns = {"suite", "identity", "kind", "points", "value", "budget", "pass"};
    t.numeric = {false, false, false, true, true, true, false};
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        t.rows.push_back({r.suite, c.identity, kind_name(c.kind), std::to_string(c.points), num(c.value),
                          num(c.budget), c.pass() ? "PASS" : "FAIL"});
      }
    }
    t.print(a.format);
  }
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      if (!c.pass()) std::cerr << "FAIL " << r.suite << ": " << c.identity << "\n";
    }
  }
  return pass ? kPass : kIdentityFailure;
}

// ---------------------------------------------------------------- kinetic

struct KineticArgs {
  std::string kind = "basic";
  std::string v = "1";
  double rate = 1.0;
  double n0 = 1.0;
  std::string c, mu, z0;
  std::optional<int> kf;
  double tmin = 0.1;
  double tmax = 2.0;
  double dt = 0.1;
  bool residual = true;
  std::string format = "csv";
  Tolerances tol;
};

int cmd_kinetic(const KineticArgs& a) {
  bicx::KineticProblem p;
  if (a.kind == "basic") {
    p.kind = bicx::KineticKind::basic;
  } else if (a.kind == "exp") {
    p.kind = bicx::KineticKind::exp_forced;
  } else {
    p.kind = bicx::KineticKind::mr_forced;
  }
  const auto reject = [&](bool given, const char* flag) {
    if (given) {
      throw bicx::Error(bicx::ErrorKind::PreconditionViolation,
                        std::string(flag) + " does not apply to kind " + a.kind);
    }
  };
  const auto require = [&](const std::string& value, const char* flag) {
    if (value.empty()) {
      throw bicx::Error(bicx::ErrorKind::PreconditionViolation, "kind " + a.kind + " needs " + flag);
    }
    return bicx::parse_bicomplex(value);
  };
  p.n0 = a.n0;
  p.rate = a.rate;
  p.order = bicx::parse_bicomplex(a.v);
  if (p.kind == bicx::KineticKind::basic) reject(!a.c.empty(), "--c");
  if (p.kind != bicx::KineticKind::mr_forced) {
    reject(!a.mu.empty(), "--mu");
    reject(!a.z0.empty(), "--z0");
    reject(a.kf.has_value(), "--kf");
  }
  if (p.kind != bicx::KineticKind::basic) p.multiplier = require(a.c, "--c");
  if (p.kind == bicx::KineticKind::mr_forced) {
    p.forcing_order = require(a.mu, "--mu");
    p.scale = require(a.z0, "--z0");
    p.forcing_index = a.kf.value_or(1);
  }
  const bicx::KineticSolution solution = bicx::kinetic_solve(p, a.tol.policy());
  const std::vector<double> grid = parse_grid(num(a.tmin) + ":" + num(a.tmax) + ":" + num(a.dt));

  Table t;
  t.columns = {"t", "a", "b", "c", "d"};
  if (a.residual) t.columns.insert(t.columns.end(), {"residual_1", "residual_2"});
  t.numeric.assign(t.columns.size(), true);
  for (const double x : grid) {
    bicx::SeriesValue n;
    try {
      n = solution(x);
    } catch (const bicx::Error& e) {
      if (e.kind() != bicx::ErrorKind::SeriesDivergence) throw;
      std::cerr << e.what() << "\n";
      std::cerr << "empirical radius: the series settles for t <= " << num(bicx::kinetic_empirical_radius(solution, x))
                << "\n";
      return kDivergence;
    }
    std::vector<std::string> row{num(x)};
    for (const auto& s : parts_of(n.value)) row.push_back(s);
    if (a.residual) {
      const bicx::HyperbolicNorm r = bicx::kinetic_residual(solution, x);
      row.push_back(num(r.n1));
      row.push_back(num(r.n2));
    }
    t.rows.push_back(std::move(row));
  }
  t.print(a.format);
  return kPass;
}

// ------------------------------------------------------------------ table

struct TableArgs {
  std::string function = "mr";
  std::string v, c;
  std::string z_grid = "0.1:2:0.1";
  std::string format = "csv";
  Tolerances tol;
};

int cmd_table(const TableArgs& a) {
  if (a.v.empty() || a.c.empty()) throw bicx::Error(bicx::ErrorKind::ParseError, "table mr needs --v and --c");
  const bicx::MRParams params{bicx::parse_bicomplex(a.v), bicx::parse_bicomplex(a.c)};
  const std::vector<double> grid = parse_grid(a.z_grid);
  const bicx::TruncationPolicy policy = a.tol.policy();
  Table t;
  t.columns = {"z", "a", "b", "c", "d", "terms_used", "tail_1", "tail_2"};
  t.numeric.assign(t.columns.size(), true);
  for (const double z : grid) {
    const bicx::SeriesValue e = bicx::eval(params, Bicomplex(z), policy);
    std::vector<std::string> row{num(z)};
    for (const auto& s : parts_of(e.value)) row.push_back(s);
    row.insert(row.end(), {std::to_string(e.terms_used), num(e.tail_bound.n1), num(e.tail_bound.n2)});
    t.rows.push_back(std::move(row));
  }
  t.print(a.format);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bicomplex Miller-Ross functions, identity checks and fractional kinetics"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv", "plain"};

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate one function at a point");
  eval->add_option("function", ea.function, "mr | gamma | exp | log")
      ->required()
      ->check(CLI::IsMember({"mr", "gamma", "exp", "log"}));
  eval->add_option("--v", ea.v, "Order V");
  eval->add_option("--c", ea.c, "Multiplier C");
  eval->add_option("--z", ea.z, "Argument Z");
  eval->add_option("--y", ea.y, "Gamma argument");
  eval->add_option("--format", ea.format, "Output format")->check(CLI::IsMember(formats));
  ea.tol.add_to(eval);

  VerifyArgs va;
  std::vector<std::string> suites{"all"};
  for (const auto name : bicx::suite_names()) suites.emplace_back(name);
  auto* verify = app.add_subcommand("verify", "Run identity suites on seeded random clouds");
  verify->add_option("suite", va.suite, "Suite name or all")->required()->check(CLI::IsMember(suites));
  verify->add_option("--seed", va.seed, "Cloud seed (BICX_SEED overrides)");
  verify->add_option("--n", va.n, "Cloud size (0: suite default)")->check(CLI::NonNegativeNumber);
  verify->add_flag("--inject-bug", va.inject_bug, "Flip a sign in the ODE operator (control)");
  verify->add_option("--t", va.height, "Barnes truncation height")->check(CLI::PositiveNumber);
  verify->add_option("--format", va.format, "Output format")->check(CLI::IsMember(formats));

  KineticArgs ka;
  auto* kinetic = app.add_subcommand("kinetic", "Solve a fractional kinetic equation on a t grid");
  kinetic->add_option("--kind", ka.kind, "basic | exp | mr")->check(CLI::IsMember({"basic", "exp", "mr"}));
  kinetic->add_option("--v", ka.v, "Order V");
  kinetic->add_option("--cc", ka.rate, "Rate c > 0");
  kinetic->add_option("--n0", ka.n0, "Initial amount N0");
  kinetic->add_option("--c", ka.c, "Forcing multiplier C (exp, mr)");
  kinetic->add_option("--mu", ka.mu, "Forcing order mu (mr)");
  kinetic->add_option("--z0", ka.z0, "Forcing scale Z0 (mr)");
  kinetic->add_option("--kf", ka.kf, "Forcing index k_f (mr, default 1)");
  kinetic->add_option("--tmin", ka.tmin, "First grid point");
  kinetic->add_option("--tmax", ka.tmax, "Last grid point");
  kinetic->add_option("--dt", ka.dt, "Grid spacing");
  kinetic->add_flag("!--no-residual", ka.residual, "Skip the RL quadrature residual columns");
  kinetic->add_option("--format", ka.format, "Output format")->check(CLI::IsMember(formats));
  ka.tol.add_to(kinetic);

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Tabulate E_{V,C}(z) on a real grid");
  table->add_option("function", ta.function, "mr")->required()->check(CLI::IsMember({"mr"}));
  table->add_option("--v", ta.v, "Order V");
  table->add_option("--c", ta.c, "Multiplier C");
  table->add_option("--z-grid", ta.z_grid, "start:stop:step");
  table->add_option("--format", ta.format, "Output format")->check(CLI::IsMember(formats));
  ta.tol.add_to(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  if (const char* env = std::getenv("BICX_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long seed = std::strtoull(env, &end, 10);
    if (*end != '\0') {
      std::cerr << "ParseError: BICX_SEED must be a nonnegative integer\n";
      return kParse;
    }
    va.seed = seed;
  }

  try {
    if (*eval) return cmd_eval(ea);
    if (*verify) return cmd_verify(va);
    if (*kinetic) return cmd_kinetic(ka);
    return cmd_table(ta);
  } catch (const bicx::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_for(e);
  }
}
