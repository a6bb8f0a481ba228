#pragma once

#include "bicx/bicomplex.hpp"
#include "bicx/miller_ross.hpp"
#include "bicx/quadrature.hpp"
#include "bicx/series.hpp"

namespace bicx {

/// Number of series terms used by the integral representations when the
/// caller does not fix one: the count eval needs plus 8 guard terms.
int default_series_terms(const MRParams& params, const Bicomplex& z, const TruncationPolicy& policy = {});

/// Z^V/Gamma(V+1) [1 + sum_{r=1}^{R} (1/Gamma(r)) int_0^1 (CZt)^r (1-t)^V / t dt],
/// each integral taken along the unit segment by path quadrature.
/// Requires Re(alpha) + 1 > |Im(beta)|.
Bicomplex ir_beta(const MRParams& params, const Bicomplex& z, int series_terms, const QuadratureConfig& quad = {});

/// E_{V+M,C}(Z) as Z^{V+M}/(Gamma(V) Gamma(M)) sum_r (CZ)^r/r! times the
/// double integral of s^{V-1} (1-s)^{M+r} t^{M-1} (1-t)^r over the unit
/// square. The integrand factorizes, so the double integral is the product of
/// two path integrals. Both orders need positive real parts per component.
Bicomplex ir_double(const MRParams& first, const Bicomplex& second_order, const Bicomplex& z, int series_terms,
                    const QuadratureConfig& quad = {});

/// int_0^inf e^{-t} t^{X-1} dt per component by quadrature on a ray; Re x_i > 0.
Bicomplex gamma_by_quadrature(const Bicomplex& x, const QuadratureConfig& quad = {});

/// Z^V sum_{r<R} (CZ)^r / int_0^inf e^{-t} t^{V+r} dt.
/// Requires Re(alpha) + 1 > |Im(beta)|.
Bicomplex ir_gamma_denominator(const MRParams& params, const Bicomplex& z, int series_terms,
                               const QuadratureConfig& quad = {});

/// Vertical line s = sigma + i tau, |tau| <= height, sampled by the
/// trapezoidal rule. nodes = 0 picks a spacing of 0.05.
struct BarnesPath {
  double sigma = -0.5;
  double height = 40.0;
  int nodes = 0;
  // Largest accepted estimate of the neglected |tau| > height part, relative
  // to the magnitude |Z^V| (1/2 pi) int |integrand| dtau of the kept part.
  double tail_tol = 1e-5;

  void validate() const;
};

struct BarnesResult {
  Bicomplex value;
  HyperbolicNorm tail_estimate;
  HyperbolicNorm magnitude;
  int nodes = 0;
};

/// E_{V,C}(Z) = Z^V (1/2 pi i) int (-CZ)^s Gamma(-s) Gamma(1+s) / Gamma(V+1+s) ds
/// along the truncated line. Needs Re(c_i z_i) < 0 so the integrand decays
/// like exp(-(pi/2 - |arg(-c_i z_i)|) |tau|); throws PathTruncationError when
/// that rate is not positive or the tail estimate exceeds path.tail_tol.
BarnesResult barnes_eval(const MRParams& params, const Bicomplex& z, const BarnesPath& path = {});

}  // namespace bicx
