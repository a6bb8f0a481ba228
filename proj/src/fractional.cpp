#include "bicx/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "bicx/batch.hpp"
#include "bicx/error.hpp"
#include "bicx/special.hpp"

namespace bicx {

namespace {

double min_real(const Bicomplex& x) { return std::min(x.z1().real(), x.z2().real()); }

// t^E for real t > 0, per component.
Bicomplex real_power(double t, const Bicomplex& e) { return exp(e * std::log(t)); }

void require_positive_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorKind::PreconditionViolation, "t must be positive and finite");
}

void require_power_domain(double u) {
  if (!(u > -1.0)) throw Error(ErrorKind::PreconditionViolation, "power rule needs u > -1");
}

}  // namespace

FractionalOrder::FractionalOrder(const Bicomplex& m, FractionalMode mode) : m_(m), mode_(mode) {
  if (m.is_zero()) return;
  if (mode == FractionalMode::integral) {
    if (!(min_real(m) > 0.0)) {
      throw Error(ErrorKind::PreconditionViolation, "fractional integral order needs Re(m1) > |Im(m2)|");
    }
  } else if (!(m.w1().real() > 0.0)) {
    throw Error(ErrorKind::PreconditionViolation, "fractional derivative order needs Re(m1) > 0");
  }
}

Bicomplex rl_integral_power(const FractionalOrder& m, double u, double t) {
  require_power_domain(u);
  require_positive_time(t);
  if (m.mode() != FractionalMode::integral) {
    throw Error(ErrorKind::PreconditionViolation, "fractional integral needs an integral-mode order");
  }
  const Bicomplex shift = m.value();
  return gamma_ratio(Bicomplex(u + 1.0), shift + (u + 1.0)) * real_power(t, shift + u);
}

Bicomplex rl_derivative_power(const FractionalOrder& m, double u, double t) {
  require_power_domain(u);
  require_positive_time(t);
  if (m.mode() != FractionalMode::derivative) {
    throw Error(ErrorKind::PreconditionViolation, "fractional derivative needs a derivative-mode order");
  }
  const Bicomplex shift = -m.value();
  return gamma_ratio(Bicomplex(u + 1.0), shift + (u + 1.0)) * real_power(t, shift + u);
}

Bicomplex rl_apply_mr(const FractionalOrder& m, const MRParams& params, const Bicomplex& z0, double t,
                      const TruncationPolicy& policy) {
  require_positive_time(t);
  if (!is_invertible(z0)) throw Error(ErrorKind::ZeroDivisorPower, "Z0 must lie outside O2");
  policy.validate();
  const Bicomplex shift = m.shift();
  std::array<Complex, 2> out{};
  for (int i = 0; i < 2; ++i) {
    const Complex nu = params.order.component(i);
    const Complex s = shift.component(i);
    if (!(nu.real() > -1.0)) {
      throw Error(ErrorKind::PreconditionViolation, "termwise power rule needs Re nu_i > -1");
    }
    const Complex x = params.multiplier.component(i) * z0.component(i) * t;
    const double size = std::abs(x);
    SeriesAccumulator acc(policy);
    // coef = x^r / Gamma(nu + r + 1), the series coefficient of t^{nu + r}
    // before the operator; the power rule multiplies it by
    // Gamma(nu + r + 1) / Gamma(nu + s + r + 1).
    Complex coef = reciprocal_gamma(nu + 1.0);
    for (int r = 0;; ++r) {
      if (r > 0) coef *= x / (nu + static_cast<double>(r));
      const Complex base = nu + static_cast<double>(r + 1);
      const Complex term = coef * gamma_ratio(base, base + s);
      const double denom = (nu + s).real() + r + 1.0;
      if (acc.add(term, denom > 0.0 ? size / denom : -1.0)) break;
    }
    const Complex prefactor = principal_power(z0.component(i), nu) * std::exp((nu + s) * std::log(t));
    out[static_cast<std::size_t>(i)] = prefactor * acc.sum();
  }
  return Bicomplex::idempotent(out[0], out[1]);
}

void KineticProblem::validate() const {
  if (!(n0 > 0.0) || !(rate > 0.0)) throw Error(ErrorKind::PreconditionViolation, "kinetic problem needs N0 > 0, c > 0");
  if (!(min_real(order) > 0.0)) {
    throw Error(ErrorKind::PreconditionViolation, "kinetic order needs Re(alpha) > |Im(beta)|");
  }
  if (kind == KineticKind::mr_forced) {
    GammaDomainGuard(forcing_order).require_dominates(1.0, "forcing order");
    if (!is_invertible(scale)) throw Error(ErrorKind::ZeroDivisorPower, "Z0 must lie outside O2");
    if (forcing_index < 0) throw Error(ErrorKind::PreconditionViolation, "forcing index must be >= 0");
    if (!(min_real(forcing_order) * forcing_index > -1.0)) {
      throw Error(ErrorKind::PreconditionViolation, "forcing behaves like t^{mu k_f} and needs Re(mu_i k_f) > -1");
    }
  }
}

Bicomplex KineticProblem::forcing(double t, const TruncationPolicy& policy) const {
  switch (kind) {
    case KineticKind::basic:
      return Bicomplex(n0);
    case KineticKind::exp_forced:
      return n0 * exp(multiplier * t);
    case KineticKind::mr_forced:
      return n0 * eval({forcing_order * static_cast<double>(forcing_index), multiplier}, scale * t, policy).value;
  }
  return {};
}

KineticSolution::KineticSolution(KineticProblem problem, TruncationPolicy policy, MrForcedForm form)
    : problem_(std::move(problem)), policy_(policy), form_(form) {
  problem_.validate();
  policy_.validate();
  // Most evaluations settle within a few dozen outer terms.
  constexpr int kTabulated = 64;
  table_.reserve(kTabulated);
  for (int k = 0; k < kTabulated; ++k) table_.push_back(outer_term(k));
}

KineticSolution::OuterTerm KineticSolution::outer_term(int k) const {
  const KineticProblem& p = problem_;
  const bool mr = p.kind == KineticKind::mr_forced;
  const double kk = k;
  OuterTerm out;
  out.vk = p.order * kk;
  if (!mr) {
    out.inner_order = out.vk;
  } else if (form_ == MrForcedForm::coupled_index) {
    out.inner_order = p.forcing_order * kk + out.vk;
  } else {
    out.inner_order = p.forcing_order * static_cast<double>(p.forcing_index) + out.vk;
  }
  out.pole_free = GammaDomainGuard(out.inner_order).pole_free(1.0);
  if (out.pole_free) {
    out.log_gamma =
        Bicomplex::idempotent(log_gamma(out.inner_order.z1() + 1.0), log_gamma(out.inner_order.z2() + 1.0));
  }
  return out;
}

SeriesValue KineticSolution::operator()(double t) const {
  require_positive_time(t);
  const KineticProblem& p = problem_;
  const bool mr = p.kind == KineticKind::mr_forced;
  const Bicomplex x = mr ? p.scale : Bicomplex(1.0);
  const Bicomplex c = p.kind == KineticKind::basic ? Bicomplex(0.0) : p.multiplier;
  const Bicomplex xt = x * t;
  // Term k is (-1)^k N0 c^{Vk} X^{-Vk} (Xt)^{a_k} A_k with a_k the inner order
  // and A_k its kernel series. The powers are merged into one exponent,
  // (a_k - Vk) Log(Xt) + Vk log(ct), so X^{-Vk} and X^{Vk} never form
  // separately (they over- and underflow together for small |X|).
  const Bicomplex log_xt = log(xt);
  const double log_ct = std::log(p.rate * t);

  TruncationPolicy outer = policy_;
  outer.max_terms = 2 * policy_.max_terms;
  SeriesAccumulator acc1(outer);
  SeriesAccumulator acc2(outer);
  HyperbolicNorm inner_tail;
  HyperbolicNorm magnitude;
  Bicomplex previous;
  for (int k = 0;; ++k) {
    const OuterTerm computed = k < static_cast<int>(table_.size()) ? OuterTerm{} : outer_term(k);
    const OuterTerm& ot = k < static_cast<int>(table_.size()) ? table_[static_cast<std::size_t>(k)] : computed;
    const Bicomplex& vk = ot.vk;
    const Bicomplex& inner_order = ot.inner_order;
    const Bicomplex exponent = (inner_order - vk) * log_xt + vk * log_ct;
    const double sign = k % 2 == 0 ? p.n0 : -p.n0;
    SeriesValue kernel;
    Bicomplex prefactor;
    if (ot.pole_free) {
      // 1/Gamma(a_k + 1) is folded into the exponent; for large k it
      // underflows exactly where (ct)^{Vk} overflows.
      kernel = combine(miller_ross_kernel_normalized(inner_order.z1(), c.z1() * xt.z1(), policy_),
                       miller_ross_kernel_normalized(inner_order.z2(), c.z2() * xt.z2(), policy_));
      prefactor = sign * exp(exponent - ot.log_gamma);
    } else {
      kernel = kernel_series({inner_order, c}, xt, policy_);
      prefactor = sign * exp(exponent);
    }
    const Bicomplex term = prefactor * kernel.value;
    const HyperbolicNorm prefactor_size = hyperbolic_norm(prefactor);
    inner_tail += prefactor_size * kernel.tail_bound;
    magnitude += prefactor_size * kernel.magnitude;
    // Observed ratio of successive terms; two zero terms in a row (underflow)
    // count as ratio 0.
    const auto ratio = [&](int i) {
      if (k == 0) return -1.0;
      const double prev = std::abs(previous.component(i));
      const double size = std::abs(term.component(i));
      if (prev > 0.0) return size / prev;
      return size == 0.0 ? 0.0 : -1.0;
    };
    bool done1 = false;
    bool done2 = false;
    try {
      done1 = acc1.add(term.z1(), ratio(0));
      done2 = acc2.add(term.z2(), ratio(1));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::MaxTermsExceeded) throw;
      char buf[160];
      std::snprintf(buf, sizeof buf, "outer series at t = %.17g did not settle within %d terms (last term ratio %.3g)",
                    t, outer.max_terms, std::max(ratio(0), ratio(1)));
      throw Error(ErrorKind::SeriesDivergence, buf);
    }
    previous = term;
    if (done1 && done2) break;
  }
  SeriesValue out;
  out.value = Bicomplex::idempotent(acc1.sum(), acc2.sum());
  out.terms_used = acc1.terms();
  out.tail_bound = HyperbolicNorm{acc1.tail(), acc2.tail()} + inner_tail;
  out.magnitude = magnitude;
  return out;
}

KineticSolution kinetic_solve(const KineticProblem& problem, const TruncationPolicy& policy) {
  return KineticSolution(problem, policy);
}

HyperbolicNorm kinetic_residual(const KineticSolution& solution, double t, const QuadratureConfig& quad) {
  require_positive_time(t);
  const KineticProblem& p = solution.problem();
  const Bicomplex& v = p.order;
  const Bicomplex n_t = solution(t).value;
  const Bicomplex forcing = p.forcing(t, solution.policy());

  // (t - tau)^{V-1} N(tau), split at t/2. Each half is parametrised by its
  // exact distance to the singular end so neither tau nor t - tau rounds to 0.
  const Bicomplex vm1 = v - 1.0;
  const auto kernel = [&](double tau, double dist) -> Bicomplex {
    return exp(vm1 * std::log(dist)) * solution(tau).value;
  };
  const auto power_for = [](double exponent) { return exponent < 1.0 ? 2.0 / (1.0 + exponent) : 1.0; };
  const double left_exp = p.kind == KineticKind::mr_forced
                              ? std::min(0.0, min_real(p.forcing_order) * p.forcing_index)
                              : 0.0;
  const double pl = power_for(left_exp);
  const double pr = power_for(min_real(v) - 1.0);
  const double half = 0.5 * t;
  QuadratureConfig sub = quad;
  sub.tol = 0.5 * quad.tol;
  const auto left = integrate<Bicomplex>(
      [&](double u) {
        const double tau = half * std::pow(u, pl);
        return kernel(tau, t - tau) * (half * pl * std::pow(u, pl - 1.0));
      },
      0.0, 1.0, sub);
  const auto right = integrate<Bicomplex>(
      [&](double u) {
        const double dist = half * std::pow(u, pr);
        return kernel(t - dist, dist) * (half * pr * std::pow(u, pr - 1.0));
      },
      0.0, 1.0, sub);
  const Bicomplex rl = reciprocal_gamma(v) * (left.value + right.value);
  const Bicomplex c_pow = exp(v * std::log(p.rate));
  return hyperbolic_norm(n_t - forcing + c_pow * rl);
}

double kinetic_empirical_radius(const KineticSolution& solution, double t_fail, int steps) {
  require_positive_time(t_fail);
  const auto settles = [&](double t) {
    try {
      solution(t);
      return true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SeriesDivergence) throw;
      return false;
    }
  };
  if (settles(t_fail)) return t_fail;
  double lo = 0.0;
  double hi = t_fail;
  for (int i = 0; i < steps; ++i) {
    const double mid = 0.5 * (lo + hi);
    (settles(mid) ? lo : hi) = mid;
  }
  return lo;
}

std::vector<HyperbolicNorm> kinetic_verify(const KineticSolution& solution, std::span<const double> t_grid,
                                           const QuadratureConfig& quad) {
  std::vector<HyperbolicNorm> out(t_grid.size());
  parallel_for(t_grid.size(), [&](std::size_t i) { out[i] = kinetic_residual(solution, t_grid[i], quad); });
  return out;
}

std::vector<HyperbolicNorm> kinetic_verify_serial(const KineticSolution& solution, std::span<const double> t_grid,
                                                  const QuadratureConfig& quad) {
  std::vector<HyperbolicNorm> out;
  out.reserve(t_grid.size());
  for (const double t : t_grid) out.push_back(kinetic_residual(solution, t, quad));
  return out;
}

Residual yq_residual(int p, int q, const Bicomplex& v, const Bicomplex& c, const Bicomplex& z0, double t,
                     const TruncationPolicy& policy) {
  if (p < 1 || q < 1) throw Error(ErrorKind::PreconditionViolation, "p and q must be positive integers");
  for (int i = 0; i < 2; ++i) {
    const Complex nu = v.component(i);
    if (nu.imag() != 0.0 || !(nu.real() > -1.0)) {
      throw Error(ErrorKind::PreconditionViolation, "order needs alpha real, beta purely imaginary, alpha + 1 > |beta|");
    }
    const double args = std::arg(z0.component(i)) + std::arg(c.component(i));
    if (!(std::abs(args) < std::numbers::pi)) {
      throw Error(ErrorKind::PreconditionViolation,
                  "(Z0 C)^{p/q} = Z0^{p/q} C^{p/q} needs |arg z0_i + arg c_i| < pi in component " +
                      std::to_string(i + 1));
    }
  }
  if (!is_invertible(c)) throw Error(ErrorKind::ZeroDivisorPower, "C must lie outside O2");
  const double frac = static_cast<double>(p) / q;
  const FractionalOrder d(Bicomplex(frac), FractionalMode::derivative);
  const Bicomplex z0t = z0 * t;

  // The scale is built from series magnitudes (sums of term moduli), the
  // size that rounding errors are proportional to when the terms cancel.
  const Bicomplex factor = principal_power(z0 * c, Bicomplex(frac));
  const HyperbolicNorm z0_frac = hyperbolic_norm(principal_power(z0, Bicomplex(frac)));
  Bicomplex y;
  Bicomplex dy;
  HyperbolicNorm scale;
  for (int k = 1; k <= q; ++k) {
    const MRParams params{v - static_cast<double>(p) + k * frac, c};
    const Bicomplex coef = principal_power(c, Bicomplex((k - 1) * frac));
    const HyperbolicNorm coef_size = hyperbolic_norm(coef);
    const SeriesValue e = eval(params, z0t, policy);
    y += coef * e.value;
    dy += coef * rl_apply_mr(d, params, z0, t, policy);
    const SeriesValue lowered = eval({params.order - frac, c}, z0t, policy);
    scale = max(scale, coef_size * z0_frac * lowered.magnitude);
    scale = max(scale, hyperbolic_norm(factor) * coef_size * e.magnitude);
  }
  const Bicomplex lhs = dy - factor * y;

  Bicomplex rhs;
  for (int r = 0; r < p; ++r) {
    const Bicomplex shifted = v + static_cast<double>(r - p);
    const Bicomplex term = pow(c, r) * principal_power(z0, shifted + frac) * real_power(t, shifted) *
                           reciprocal_gamma(shifted + 1.0);
    rhs += term;
    scale = max(scale, hyperbolic_norm(term));
  }
  return {hyperbolic_norm(lhs - rhs), scale};
}

}  // namespace bicx
