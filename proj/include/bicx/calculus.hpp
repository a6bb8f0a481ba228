#pragma once

#include <functional>
#include <limits>

#include "bicx/bicomplex.hpp"
#include "bicx/quadrature.hpp"

namespace bicx {

using BicomplexFunction = std::function<Bicomplex(const Bicomplex&)>;

/// A parametric path t in [a, b] -> C(i) with its derivative. `b` may be +inf.
struct ComplexPath {
  std::function<Complex(double)> point;
  std::function<Complex(double)> derivative;
  double a = 0.0;
  double b = 1.0;

  /// Straight segment from -> to over t in [0, 1].
  static ComplexPath segment(Complex from, Complex to);
  /// Ray from + direction * t over t in [0, inf).
  static ComplexPath ray(Complex from, Complex direction);
};

/// A bicomplex path D = (D1, D2) given by its two idempotent component paths
/// on a shared parameter interval.
class CurvePair {
 public:
  CurvePair(ComplexPath d1, ComplexPath d2);

  /// The same complex path in both components.
  static CurvePair diagonal(const ComplexPath& d) { return CurvePair(d, d); }
  /// Straight bicomplex segment from -> to.
  static CurvePair segment(const Bicomplex& from, const Bicomplex& to);

  const ComplexPath& d1() const noexcept { return d1_; }
  const ComplexPath& d2() const noexcept { return d2_; }
  double a() const noexcept { return d1_.a; }
  double b() const noexcept { return d1_.b; }

  Bicomplex point(double t) const { return Bicomplex::idempotent(d1_.point(t), d2_.point(t)); }
  Bicomplex derivative(double t) const { return Bicomplex::idempotent(d1_.derivative(t), d2_.derivative(t)); }

 private:
  ComplexPath d1_;
  ComplexPath d2_;
};

struct PathIntegral {
  Bicomplex value;
  HyperbolicNorm error;
};

/// (int_{D1} f1 dxi1) e1 + (int_{D2} f2 dxi2) e2, computed as
/// int_a^b f(xi(t)) xi'(t) dt. For an infinite parameter interval the ray is
/// mapped per quad.infinite_domain_map. `ends` describes endpoint
/// singularities of the parametrized integrand (left end only when b = inf).
PathIntegral path_integral(const BicomplexFunction& f, const CurvePair& path, const QuadratureConfig& quad = {},
                           EndpointBehavior ends = {});

/// The two bicomplex Cauchy-Riemann residuals
///   r1 = |df1/dw1 - df2/dw2|,  r2 = |df1/dw2 + df2/dw1|
/// for f = f1 + j f2 as a function of (w1, w2). Partial derivatives are
/// Wirtinger derivatives d/dw = (d/dx - i d/dy)/2 estimated by central
/// differences with Richardson extrapolation over steps h and h/2, so an f
/// that is not complex-holomorphic in w1 or w2 also shows up as a residual.
struct CrResidual {
  double r1 = 0.0;
  double r2 = 0.0;
  double max() const noexcept { return r1 > r2 ? r1 : r2; }
};

CrResidual cr_check(const BicomplexFunction& f, const Bicomplex& z, double h = 1e-5);

}  // namespace bicx
