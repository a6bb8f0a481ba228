#include "bicx/calculus.hpp"

#include <cmath>

#include "bicx/error.hpp"

namespace bicx {

ComplexPath ComplexPath::segment(Complex from, Complex to) {
  const Complex delta = to - from;
  return {[from, delta](double t) { return from + delta * t; }, [delta](double) { return delta; }, 0.0, 1.0};
}

ComplexPath ComplexPath::ray(Complex from, Complex direction) {
  return {[from, direction](double t) { return from + direction * t; }, [direction](double) { return direction; },
          0.0, std::numeric_limits<double>::infinity()};
}

CurvePair::CurvePair(ComplexPath d1, ComplexPath d2) : d1_(std::move(d1)), d2_(std::move(d2)) {
  if (d1_.a != d2_.a || d1_.b != d2_.b) {
    throw Error(ErrorKind::PreconditionViolation, "component paths must share a parameter interval");
  }
  if (!(d1_.a < d1_.b) || !std::isfinite(d1_.a)) {
    throw Error(ErrorKind::PreconditionViolation, "path parameter interval must be [a, b) with finite a < b");
  }
}

CurvePair CurvePair::segment(const Bicomplex& from, const Bicomplex& to) {
  return CurvePair(ComplexPath::segment(from.z1(), to.z1()), ComplexPath::segment(from.z2(), to.z2()));
}

PathIntegral path_integral(const BicomplexFunction& f, const CurvePair& path, const QuadratureConfig& quad,
                           EndpointBehavior ends) {
  auto integrand = [&](double t) -> Bicomplex { return f(path.point(t)) * path.derivative(t); };
  QuadratureResult<Bicomplex> r;
  if (std::isinf(path.b())) {
    r = integrate_semi_infinite<Bicomplex>(integrand, path.a(), 1.0, ends.left, quad);
  } else if (ends.left == 0.0 && ends.right == 0.0) {
    r = integrate<Bicomplex>(integrand, path.a(), path.b(), quad);
  } else {
    r = integrate_endpoints<Bicomplex>(integrand, path.a(), path.b(), ends, quad);
  }
  return {r.value, {r.error[0], r.error[1]}};
}

namespace {

// j-form parts of f(z): f = f1 + j f2.
struct JParts {
  Complex f1;
  Complex f2;
};

JParts split(const Bicomplex& v) { return {v.w1(), v.w2()}; }

// Wirtinger derivative of f along the complex coordinate spanned by the real
// direction `re_dir` and the imaginary direction `im_dir` (= i * re_dir).
JParts wirtinger(const BicomplexFunction& f, const Bicomplex& z, const Bicomplex& re_dir, const Bicomplex& im_dir,
                 double h) {
  const auto central = [&](const Bicomplex& dir, double step) {
    const JParts plus = split(f(z + dir * step));
    const JParts minus = split(f(z - dir * step));
    return JParts{(plus.f1 - minus.f1) / (2.0 * step), (plus.f2 - minus.f2) / (2.0 * step)};
  };
  const auto richardson = [&](const Bicomplex& dir) {
    const JParts coarse = central(dir, h);
    const JParts fine = central(dir, 0.5 * h);
    return JParts{(4.0 * fine.f1 - coarse.f1) / 3.0, (4.0 * fine.f2 - coarse.f2) / 3.0};
  };
  const JParts dx = richardson(re_dir);
  const JParts dy = richardson(im_dir);
  // (d/dx - i d/dy) / 2
  return {0.5 * (dx.f1 - times_i(dy.f1)), 0.5 * (dx.f2 - times_i(dy.f2))};
}

}  // namespace

CrResidual cr_check(const BicomplexFunction& f, const Bicomplex& z, double h) {
  if (!(h >= 1e-7 && h <= 1e-3)) {
    throw Error(ErrorKind::PreconditionViolation, "cr_check step must lie in [1e-7, 1e-3]");
  }
  const JParts d_w1 = wirtinger(f, z, units::one, units::i, h);
  const JParts d_w2 = wirtinger(f, z, units::j, units::k, h);
  return {std::abs(d_w1.f1 - d_w2.f2), std::abs(d_w2.f1 + d_w1.f2)};
}

}  // namespace bicx
