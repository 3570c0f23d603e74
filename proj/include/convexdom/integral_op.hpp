#pragma once

// The averaging operator
//   Q(z) = (1/(n z^{1/n})) * integral_0^z h(t) t^{1/n - 1} dt
// evaluated after the substitution t = u^n z, which turns it into the mean
// integral_0^1 h(u^n z) du with no endpoint singularity and no z^{1/n} branch.

#include "convexdom/complex_core.hpp"
#include "convexdom/targets.hpp"

namespace convexdom {

inline constexpr double kDefaultQuadTol = 1e-12;

class QEvaluator {
 public:
  QEvaluator(AnalyticTarget target, int n, double tol = kDefaultQuadTol);

  const AnalyticTarget& target() const noexcept { return target_; }
  int n() const noexcept { return n_; }
  double tol() const noexcept { return tol_; }

  /// Q(z); Q(0) = h(0).
  Complex value(Complex z) const;
  /// Q'(z) = integral_0^1 h'(u^n z) u^n du.
  Complex d1(Complex z) const;
  /// Q''(z) = integral_0^1 h''(u^n z) u^{2n} du.
  Complex d2(Complex z) const;

 private:
  void require_inside(Complex z) const;

  AnalyticTarget target_;
  int n_;
  double tol_;
};

inline Complex q_value(const QEvaluator& e, Complex z) { return e.value(z); }
inline Complex q_d1(const QEvaluator& e, Complex z) { return e.d1(z); }
inline Complex q_d2(const QEvaluator& e, Complex z) { return e.d2(z); }

}  // namespace convexdom
