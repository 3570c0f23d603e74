#include "convexdom/integral_op.hpp"

namespace convexdom {

QEvaluator::QEvaluator(AnalyticTarget target, int n, double tol)
    : target_(std::move(target)), n_(n), tol_(tol) {
  if (n_ < 1) throw ValidationError("averaging operator needs n >= 1");
  if (!(tol_ > 0.0)) throw ValidationError("quadrature tolerance must be positive");
}

void QEvaluator::require_inside(Complex z) const {
  if (!(std::abs(z) < 1.0)) throw DomainError("averaging operator evaluated outside |z| < 1");
}

Complex QEvaluator::value(Complex z) const {
  require_inside(z);
  if (z == Complex{0.0, 0.0}) return target_.eval(z);
  const auto& h = target_.eval;
  return quad_unit([&](double u) { return h(std::pow(u, n_) * z); }, tol_);
}

Complex QEvaluator::d1(Complex z) const {
  require_inside(z);
  const auto& h1 = target_.d1;
  return quad_unit(
      [&](double u) {
        const double un = std::pow(u, n_);
        return h1(un * z) * un;
      },
      tol_);
}

Complex QEvaluator::d2(Complex z) const {
  require_inside(z);
  const auto& h2 = target_.d2;
  return quad_unit(
      [&](double u) {
        const double un = std::pow(u, n_);
        return h2(un * z) * (un * un);
      },
      tol_);
}

}  // namespace convexdom
