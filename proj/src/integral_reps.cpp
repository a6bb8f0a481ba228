#include "bicx/integral_reps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "bicx/calculus.hpp"
#include "bicx/error.hpp"
#include "bicx/special.hpp"

namespace bicx {

namespace {

constexpr double kPi = std::numbers::pi;

double min_real(const Bicomplex& x) { return std::min(x.z1().real(), x.z2().real()); }

void require_shifted_dominance(const Bicomplex& order, const char* what) {
  GammaDomainGuard(order).require_dominates(1.0, what);
}

const CurvePair& unit_segment() {
  static const CurvePair path = CurvePair::diagonal(ComplexPath::segment(0.0, 1.0));
  return path;
}

// base^e per component, 0 where a component of the base is exactly 0. The
// endpoint substitutions can place a node within rounding of an end of the
// unit interval; the integrand there is integrable and its weight vanishes.
Bicomplex endpoint_power(const Bicomplex& base, const Bicomplex& e) {
  const auto one = [](Complex b, Complex x) { return b == Complex{} ? Complex{} : principal_power(b, x); };
  return Bicomplex::idempotent(one(base.z1(), e.z1()), one(base.z2(), e.z2()));
}

}  // namespace

int default_series_terms(const MRParams& params, const Bicomplex& z, const TruncationPolicy& policy) {
  return eval(params, z, policy).terms_used + 8;
}

Bicomplex ir_beta(const MRParams& params, const Bicomplex& z, int series_terms, const QuadratureConfig& quad) {
  const Bicomplex& v = params.order;
  require_shifted_dominance(v, "beta-type representation");
  const Bicomplex czt = params.multiplier * z;
  const EndpointBehavior base{0.0, min_real(v)};
  Bicomplex bracket(1.0);
  for (int r = 1; r <= series_terms; ++r) {
    const auto integrand = [&](const Bicomplex& t) {
      return pow(czt, r) * pow(t, r - 1) * endpoint_power(Bicomplex(1.0) - t, v);
    };
    const PathIntegral integral =
        path_integral(integrand, unit_segment(), quad, {static_cast<double>(r - 1), base.right});
    bracket += integral.value * reciprocal_gamma(Complex(r, 0.0));
  }
  return principal_power(z, v) * reciprocal_gamma(v + 1.0) * bracket;
}

Bicomplex ir_double(const MRParams& first, const Bicomplex& second_order, const Bicomplex& z, int series_terms,
                    const QuadratureConfig& quad) {
  const Bicomplex& v = first.order;
  const Bicomplex& m = second_order;
  GammaDomainGuard(v).require_dominates(0.0, "double-integral representation, first order");
  GammaDomainGuard(m).require_dominates(0.0, "double-integral representation, second order");
  const Bicomplex cz = first.multiplier * z;
  Bicomplex sum;
  Bicomplex power(1.0);  // (CZ)^r / r!
  for (int r = 0; r < series_terms; ++r) {
    if (r > 0) power *= cz * (1.0 / r);
    const double rr = r;
    const auto s_part = [&](const Bicomplex& s) {
      return endpoint_power(s, v - 1.0) * endpoint_power(Bicomplex(1.0) - s, m + rr);
    };
    const auto t_part = [&](const Bicomplex& t) {
      return endpoint_power(t, m - 1.0) * pow(Bicomplex(1.0) - t, r);
    };
    const PathIntegral is = path_integral(s_part, unit_segment(), quad, {min_real(v) - 1.0, min_real(m) + rr});
    const PathIntegral it = path_integral(t_part, unit_segment(), quad, {min_real(m) - 1.0, rr});
    sum += power * is.value * it.value;
  }
  return principal_power(z, v + m) * reciprocal_gamma(v) * reciprocal_gamma(m) * sum;
}

Bicomplex gamma_by_quadrature(const Bicomplex& x, const QuadratureConfig& quad) {
  if (!(min_real(x) > 0.0)) {
    throw Error(ErrorKind::PreconditionViolation, "gamma integral needs Re x > 0 in both components");
  }
  // Stretch the ray so the bulk of e^{-t} t^{x-1} (near t = Re x) sits at
  // unit parameter scale.
  const double stretch = std::max(1.0, std::max(x.z1().real(), x.z2().real()));
  const CurvePair ray = CurvePair::diagonal(ComplexPath::ray(0.0, stretch));
  const auto integrand = [&](const Bicomplex& t) { return exp(-t) * principal_power(t, x - 1.0); };
  return path_integral(integrand, ray, quad, {min_real(x) - 1.0, 0.0}).value;
}

Bicomplex ir_gamma_denominator(const MRParams& params, const Bicomplex& z, int series_terms,
                               const QuadratureConfig& quad) {
  const Bicomplex& v = params.order;
  require_shifted_dominance(v, "gamma-denominator representation");
  const Bicomplex cz = params.multiplier * z;
  Bicomplex sum;
  Bicomplex power(1.0);
  for (int r = 0; r < series_terms; ++r) {
    if (r > 0) power *= cz;
    sum += power / gamma_by_quadrature(v + static_cast<double>(r + 1), quad);
  }
  return principal_power(z, v) * sum;
}

void BarnesPath::validate() const {
  if (!(sigma > -1.0 && sigma < 0.0)) {
    throw Error(ErrorKind::PreconditionViolation, "Barnes abscissa must lie in (-1, 0)");
  }
  if (!(height > 0.0) || nodes < 0 || (nodes > 0 && nodes < 3) || !(tail_tol > 0.0)) {
    throw Error(ErrorKind::PreconditionViolation, "Barnes path needs height > 0, nodes 0 or >= 3, tail_tol > 0");
  }
}

namespace {

// (-cz)^s Gamma(-s) Gamma(1+s) / Gamma(nu+1+s), with Gamma(-s) Gamma(1+s) = -pi / sin(pi s).
Complex barnes_integrand(Complex log_mcz, Complex nu, Complex s) {
  return std::exp(s * log_mcz) * (-kPi / std::sin(kPi * s)) * reciprocal_gamma(nu + 1.0 + s);
}

}  // namespace

BarnesResult barnes_eval(const MRParams& params, const Bicomplex& z, const BarnesPath& path) {
  path.validate();
  const int nodes = path.nodes > 0 ? path.nodes : static_cast<int>(std::ceil(2.0 * path.height / 0.05)) + 1;
  const double step = 2.0 * path.height / (nodes - 1);
  const Bicomplex prefactor = principal_power(z, params.order);
  const Bicomplex cz = params.multiplier * z;

  BarnesResult out;
  out.nodes = nodes;
  std::array<Complex, 2> value{};
  for (int i = 0; i < 2; ++i) {
    const Complex mcz = -cz.component(i);
    if (mcz == Complex{}) {
      throw Error(ErrorKind::PathTruncationError, "Barnes integral needs c_i z_i != 0");
    }
    const double rate = kPi / 2.0 - std::abs(std::arg(mcz));
    if (!(rate > 0.0)) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "component %d: Re(c z) = %.6g >= 0, integrand does not decay", i + 1,
                    -mcz.real());
      throw Error(ErrorKind::PathTruncationError, buf);
    }
    const Complex log_mcz = std::log(mcz);
    const Complex nu = params.order.component(i);
    std::vector<Complex> samples(static_cast<std::size_t>(nodes));
#pragma omp parallel for schedule(static)
    for (int n = 0; n < nodes; ++n) {
      const double tau = -path.height + step * n;
      samples[static_cast<std::size_t>(n)] = barnes_integrand(log_mcz, nu, {path.sigma, tau});
    }
    Complex sum{};
    for (int n = 0; n < nodes; ++n) {
      const double weight = (n == 0 || n == nodes - 1) ? 0.5 : 1.0;
      sum += weight * samples[static_cast<std::size_t>(n)];
    }
    // (1/2 pi i) int g(s) ds with ds = i dtau.
    const Complex p = prefactor.component(i);
    value[static_cast<std::size_t>(i)] = p * sum * step / (2.0 * kPi);
    const double edge = std::abs(samples.front()) + std::abs(samples.back());
    const double tail = std::abs(p) * edge / (2.0 * kPi * rate);
    double mass = 0.0;
    for (const Complex& g : samples) mass += std::abs(g);
    (i == 0 ? out.tail_estimate.n1 : out.tail_estimate.n2) = tail;
    (i == 0 ? out.magnitude.n1 : out.magnitude.n2) = std::abs(p) * mass * step / (2.0 * kPi);
  }
  out.value = Bicomplex::idempotent(value[0], value[1]);
  for (int i = 0; i < 2; ++i) {
    const double tail = out.tail_estimate.component(i);
    const double relative = tail / out.magnitude.component(i);
    if (!(relative <= path.tail_tol)) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "component %d: tail estimate %.3g is %.3g of the integral at height %g (limit %.3g)",
                    i + 1, tail, relative, path.height, path.tail_tol);
      throw Error(ErrorKind::PathTruncationError, buf);
    }
  }
  return out;
}

}  // namespace bicx
