#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "bicx/bicomplex.hpp"
#include "bicx/error.hpp"

namespace bicx {

enum class InfiniteMap {
  exp,       // x = a - s*log(1-u)
  rational,  // x = a + s*u/(1-u)
};

struct QuadratureConfig {
  double tol = 1e-10;
  int max_subdivisions = 2000;
  InfiniteMap infinite_domain_map = InfiniteMap::exp;

  void validate() const {
    if (!(tol > 0.0) || max_subdivisions < 1) {
      throw Error(ErrorKind::PreconditionViolation, "quadrature tol must be > 0 and max_subdivisions >= 1");
    }
  }
};

/// Real parts of the algebraic exponents of an integrand at the two ends of
/// its interval: f(x) ~ (x-a)^left near a and ~ (b-x)^right near b. Both must
/// exceed -1. Used to pick a smoothing substitution; the value of the
/// integral does not depend on it.
struct EndpointBehavior {
  double left = 0.0;
  double right = 0.0;
};

namespace quad_detail {

template <class T>
struct Traits;

template <>
struct Traits<double> {
  static constexpr int dims = 1;
  static double magnitude(double v, int) { return std::abs(v); }
};

template <>
struct Traits<Complex> {
  static constexpr int dims = 1;
  static double magnitude(const Complex& v, int) { return std::abs(v); }
};

template <>
struct Traits<Bicomplex> {
  static constexpr int dims = 2;
  static double magnitude(const Bicomplex& v, int i) { return std::abs(v.component(i)); }
};

// Kronrod 15-point nodes (descending, last is the center) and weights, with the
// embedded 7-point Gauss weights on the odd-indexed nodes.
inline constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Segment {
  double a = 0.0;
  double b = 0.0;
  T value{};
  std::array<double, 2> error{};
  double priority = 0.0;
};

template <class T, class F>
Segment<T> gauss_kronrod(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(center);
  T kronrod = fc * kKronrod[7];
  T gauss = fc * kGauss[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const T sum = f(center - dx) + f(center + dx);
    kronrod += sum * kKronrod[i];
    if (i % 2 == 1) gauss += sum * kGauss[i / 2];
  }
  Segment<T> seg;
  seg.a = a;
  seg.b = b;
  seg.value = kronrod * half;
  const T diff = (kronrod - gauss) * half;
  for (int d = 0; d < Traits<T>::dims; ++d) seg.error[d] = Traits<T>::magnitude(diff, d);
  return seg;
}

}  // namespace quad_detail

template <class T>
struct QuadratureResult {
  T value{};
  std::array<double, 2> error{};  // per component; second entry unused for scalars
  int subdivisions = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on a finite [a, b].
///
/// Bisects the segment with the largest scaled error until every component
/// satisfies error <= tol * max(1, |integral|). Summation runs in segment
/// order, so the result is deterministic.
template <class T, class F>
QuadratureResult<T> integrate(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
  using quad_detail::Segment;
  using quad_detail::Traits;
  constexpr int dims = Traits<T>::dims;
  cfg.validate();

  std::vector<Segment<T>> segments;
  segments.push_back(quad_detail::gauss_kronrod<T>(f, a, b));

  const auto scaled_error = [&](const Segment<T>& s, const std::array<double, 2>& bound) {
    double worst = 0.0;
    for (int d = 0; d < dims; ++d) worst = std::max(worst, s.error[d] / bound[d]);
    return worst;
  };

  for (int iter = 0;; ++iter) {
    T total{};
    std::array<double, 2> err{};
    for (const auto& s : segments) {
      total += s.value;
      for (int d = 0; d < dims; ++d) err[d] += s.error[d];
    }
    std::array<double, 2> bound{1.0, 1.0};
    bool converged = true;
    for (int d = 0; d < dims; ++d) {
      bound[d] = cfg.tol * std::max(1.0, Traits<T>::magnitude(total, d));
      if (!(err[d] <= bound[d])) converged = false;
    }
    if (converged) return {total, err, iter};

    // Pick the worst segment that can still be split in floating point.
    int worst = -1;
    double worst_score = -1.0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      const auto& s = segments[i];
      const double mid = 0.5 * (s.a + s.b);
      if (!(mid > s.a && mid < s.b)) continue;
      const double score = scaled_error(s, bound);
      if (score > worst_score) {
        worst_score = score;
        worst = static_cast<int>(i);
      }
    }
    if (worst < 0 || iter >= cfg.max_subdivisions) {
      throw Error(ErrorKind::QuadratureNonConvergence,
                  "error estimate " + std::to_string(std::max(err[0], err[1])) + " exceeds tolerance after " +
                      std::to_string(iter) + " subdivisions");
    }
    const Segment<T> s = segments[static_cast<std::size_t>(worst)];
    const double mid = 0.5 * (s.a + s.b);
    segments[static_cast<std::size_t>(worst)] = quad_detail::gauss_kronrod<T>(f, s.a, mid);
    segments.insert(segments.begin() + worst + 1, quad_detail::gauss_kronrod<T>(f, mid, s.b));
  }
}

/// Integrates on [a, b] when the integrand has algebraic endpoint behaviour.
///
/// The interval is split at its midpoint and each half is mapped by
/// x = a + h u^p (resp. x = b - h u^q) with the power chosen so the mapped
/// integrand vanishes linearly at the endpoint.
template <class T, class F>
QuadratureResult<T> integrate_endpoints(F&& f, double a, double b, EndpointBehavior ends,
                                        const QuadratureConfig& cfg = {}) {
  if (!(ends.left > -1.0) || !(ends.right > -1.0)) {
    throw Error(ErrorKind::PreconditionViolation, "endpoint exponents must exceed -1");
  }
  const auto power_for = [](double exponent) { return exponent < 1.0 ? 2.0 / (1.0 + exponent) : 1.0; };
  const double mid = 0.5 * (a + b);
  const double half = mid - a;
  const double p = power_for(ends.left);
  const double q = power_for(ends.right);

  // Each half gets its own relative budget; both are measured against the
  // same scale so the sum still meets tol.
  QuadratureConfig sub = cfg;
  sub.tol = 0.5 * cfg.tol;

  auto left = [&](double u) -> T {
    const double x = a + half * std::pow(u, p);
    return f(x) * (half * p * std::pow(u, p - 1.0));
  };
  auto right = [&](double u) -> T {
    const double x = b - half * std::pow(u, q);
    return f(x) * (half * q * std::pow(u, q - 1.0));
  };
  const auto l = integrate<T>(left, 0.0, 1.0, sub);
  const auto r = integrate<T>(right, 0.0, 1.0, sub);
  QuadratureResult<T> out;
  out.value = l.value + r.value;
  out.error = {l.error[0] + r.error[0], l.error[1] + r.error[1]};
  out.subdivisions = l.subdivisions + r.subdivisions;
  return out;
}

/// Integrates on [a, inf) by mapping onto u in [0, 1); `scale` sets where the
/// bulk of the integrand lives. The left endpoint exponent is honoured as in
/// integrate_endpoints.
template <class T, class F>
QuadratureResult<T> integrate_semi_infinite(F&& f, double a, double scale, double left_exponent,
                                            const QuadratureConfig& cfg = {}) {
  if (!(scale > 0.0)) throw Error(ErrorKind::PreconditionViolation, "semi-infinite scale must be > 0");
  const InfiniteMap map = cfg.infinite_domain_map;
  auto mapped = [&](double u) -> T {
    if (map == InfiniteMap::exp) {
      const double x = a - scale * std::log1p(-u);
      return f(x) * (scale / (1.0 - u));
    }
    const double w = 1.0 - u;
    const double x = a + scale * u / w;
    return f(x) * (scale / (w * w));
  };
  return integrate_endpoints<T>(mapped, 0.0, 1.0, {left_exponent, 0.0}, cfg);
}

}  // namespace bicx
