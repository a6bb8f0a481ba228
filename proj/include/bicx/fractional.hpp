#pragma once

#include <span>
#include <vector>

#include "bicx/bicomplex.hpp"
#include "bicx/miller_ross.hpp"
#include "bicx/quadrature.hpp"
#include "bicx/series.hpp"

namespace bicx {

enum class FractionalMode { integral, derivative };

/// A Riemann-Liouville order M = m1 + j m2. Integral mode needs
/// Re(m1) > |Im(m2)| (both idempotent components with positive real part);
/// derivative mode needs Re(m1) > 0. M = 0 is accepted in both modes and acts
/// as the identity.
class FractionalOrder {
 public:
  FractionalOrder(const Bicomplex& m, FractionalMode mode);

  const Bicomplex& value() const noexcept { return m_; }
  FractionalMode mode() const noexcept { return mode_; }
  /// +M for integral mode, -M for derivative mode: the shift applied to powers.
  Bicomplex shift() const { return mode_ == FractionalMode::integral ? m_ : -m_; }

 private:
  Bicomplex m_;
  FractionalMode mode_;
};

/// D^{-M} t^u = Gamma(u+1)/Gamma(u+M+1) t^{u+M}; u > -1, t > 0.
Bicomplex rl_integral_power(const FractionalOrder& m, double u, double t);

/// D^{M} t^u = Gamma(u+1)/Gamma(u-M+1) t^{u-M}; exactly 0 where the
/// denominator gamma has a pole.
Bicomplex rl_derivative_power(const FractionalOrder& m, double u, double t);

/// The operator of `m` applied term by term to E_{V,C}(Z0 t) as a power
/// series in t. Needs Z0 outside O2 and Re nu_i > -1 so every power t^{nu_i+r}
/// is in the domain of the power rule.
Bicomplex rl_apply_mr(const FractionalOrder& m, const MRParams& params, const Bicomplex& z0, double t,
                      const TruncationPolicy& policy = {});

enum class KineticKind { basic, exp_forced, mr_forced };

/// N(t) - forcing(t) = -c^V D^{-V} N(t) with forcing N0, N0 exp(Ct) or
/// N0 E_{mu k_f, C}(Z0 t) by kind.
struct KineticProblem {
  KineticKind kind = KineticKind::basic;
  double n0 = 1.0;
  double rate = 1.0;                  // c > 0
  Bicomplex order = Bicomplex(1.0);   // V, Re(alpha) > |Im(beta)|
  Bicomplex multiplier;               // C (exp_forced, mr_forced)
  Bicomplex forcing_order;            // mu (mr_forced), Re(gamma) + 1 > |Im(delta)|
  Bicomplex scale = Bicomplex(1.0);   // Z0 (mr_forced), outside O2
  int forcing_index = 1;              // k_f (mr_forced), >= 0

  void validate() const;
  Bicomplex forcing(double t, const TruncationPolicy& policy = {}) const;
};

/// Which index the mr_forced solution carries in the inner order. The fixed
/// form E_{mu k_f + V k, C} solves the equation; the coupled form
/// E_{(mu+V) k, C} ties the forcing index to the summation index and is kept
/// only to show that it does not.
enum class MrForcedForm { fixed_forcing_index, coupled_index };

/// N(t) = sum_k N0 (-c^V)^k X^{-Vk} E_{a + Vk, C}(X t) with (a, X, C) set by
/// the kind. The outer sum stops under the policy's rule using the observed
/// term ratio; it may take up to twice policy.max_terms terms and reports
/// SeriesDivergence when it has not settled by then.
class KineticSolution {
 public:
  KineticSolution(KineticProblem problem, TruncationPolicy policy,
                  MrForcedForm form = MrForcedForm::fixed_forcing_index);

  SeriesValue operator()(double t) const;
  const KineticProblem& problem() const noexcept { return problem_; }
  const TruncationPolicy& policy() const noexcept { return policy_; }

 private:
  // Per-index data that does not depend on t.
  struct OuterTerm {
    Bicomplex vk;           // V k
    Bicomplex inner_order;  // a_k
    bool pole_free = true;  // a_k + 1 avoids the gamma poles
    Bicomplex log_gamma;    // log Gamma(a_k + 1) when pole_free
  };
  OuterTerm outer_term(int k) const;

  KineticProblem problem_;
  TruncationPolicy policy_;
  MrForcedForm form_;
  std::vector<OuterTerm> table_;
};

KineticSolution kinetic_solve(const KineticProblem& problem, const TruncationPolicy& policy = {});

/// Largest t in (0, t_fail] at which the outer series still settles under
/// the solution's policy, by bisection; the series is entire, so this is the
/// radius the truncation budget can reach rather than a true singularity.
double kinetic_empirical_radius(const KineticSolution& solution, double t_fail, int steps = 40);

/// |N(t) - forcing(t) + c^V D^{-V} N(t)|_h at one t, with the RL integral
/// (1/Gamma(nu_i)) int_0^t (t-tau)^{nu_i-1} N_i(tau) dtau taken by quadrature.
HyperbolicNorm kinetic_residual(const KineticSolution& solution, double t, const QuadratureConfig& quad = {});

/// kinetic_residual over a grid, one OpenMP task per grid point.
std::vector<HyperbolicNorm> kinetic_verify(const KineticSolution& solution, std::span<const double> t_grid,
                                           const QuadratureConfig& quad = {});
/// Serial reference for kinetic_verify.
std::vector<HyperbolicNorm> kinetic_verify_serial(const KineticSolution& solution, std::span<const double> t_grid,
                                                  const QuadratureConfig& quad = {});

/// [D^{p/q} - (Z0 C)^{p/q}] y_q - sum_{r<p} C^r Z0^{V+r-p+p/q} t^{V+r-p}/Gamma(V+r-p+1)
/// with y_q = sum_{k=1}^q C^{(k-1)p/q} E_{V-p+kp/q, C}(Z0 t). V must have real
/// components nu_i > -1; the split (Z0 C)^{p/q} = Z0^{p/q} C^{p/q} needs
/// |arg z0_i + arg c_i| < pi.
Residual yq_residual(int p, int q, const Bicomplex& v, const Bicomplex& c, const Bicomplex& z0, double t,
                     const TruncationPolicy& policy = {});

}  // namespace bicx
