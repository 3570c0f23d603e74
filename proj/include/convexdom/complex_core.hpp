#pragma once

// Branch-aware complex kernels shared by every other module: principal and
// ray-continued powers, arctan, finite-difference derivatives, adaptive
// Gauss-Legendre quadrature and winding numbers.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "convexdom/errors.hpp"

namespace convexdom {

using Complex = std::complex<double>;
using ComplexMap = std::function<Complex(Complex)>;

inline constexpr double kPi = 3.14159265358979323846;

inline bool is_finite(Complex w) noexcept {
  return std::isfinite(w.real()) && std::isfinite(w.imag());
}

/// Radial x angular lattice on |z| <= r_max < 1. Points are stored ray by ray,
/// each ray ordered by increasing modulus.
class DiskGrid {
 public:
  /// Rings at r_max * k / rings for k = 1..rings, rays at 2*pi*j / thetas.
  static DiskGrid uniform(double r_max, std::size_t rings, std::size_t thetas);
  /// Arbitrary strictly ascending radii in (0, 1).
  static DiskGrid from_levels(std::vector<double> levels, std::size_t thetas);

  double r_max() const noexcept { return levels_.back(); }
  std::span<const double> levels() const noexcept { return levels_; }
  std::size_t rings() const noexcept { return levels_.size(); }
  std::size_t thetas() const noexcept { return thetas_; }
  std::size_t size() const noexcept { return points_.size(); }

  double theta(std::size_t ray) const noexcept {
    return 2.0 * kPi * static_cast<double>(ray) / static_cast<double>(thetas_);
  }
  std::size_t index(std::size_t ray, std::size_t ring) const noexcept {
    return ray * levels_.size() + ring;
  }
  Complex point(std::size_t ray, std::size_t ring) const noexcept {
    return points_[index(ray, ring)];
  }
  std::span<const Complex> ray(std::size_t r) const noexcept {
    return std::span<const Complex>(points_).subspan(r * levels_.size(), levels_.size());
  }
  std::span<const Complex> points() const noexcept { return points_; }

 private:
  DiskGrid(std::vector<double> levels, std::size_t thetas);

  std::vector<double> levels_;
  std::size_t thetas_;
  std::vector<Complex> points_;
};

/// Closed sampled curve; first and last samples coincide.
class BoundaryCurve {
 public:
  static constexpr std::size_t kMinSamples = 256;

  explicit BoundaryCurve(std::vector<Complex> samples);
  /// Appends the first sample to close an open sample list.
  static BoundaryCurve close(std::vector<Complex> open_samples);
  /// Image of |z| = r under f with n distinct samples.
  static BoundaryCurve image_of_circle(const ComplexMap& f, double r, std::size_t n);

  std::span<const Complex> samples() const noexcept { return samples_; }
  /// Diagonal of the bounding box; within a factor sqrt(2) of the true diameter.
  double diameter() const noexcept { return diameter_; }

 private:
  std::vector<Complex> samples_;
  double diameter_ = 0.0;
};

/// Principal logarithm with Im Log in (-pi, pi].
Complex principal_log(Complex w);

/// exp(s Log w). w = 0 returns 0 for s > 0 and throws DomainError otherwise.
Complex principal_pow(Complex w, double s);

struct TrackedPowers {
  std::vector<Complex> values;
  /// True when some output differs from the pointwise principal power.
  bool off_principal = false;
};

/// w_i^s with arg w_i unwrapped along the sequence. The first output equals
/// `anchor`, which must be one of the s-th powers of values[0].
TrackedPowers continuous_pow_along_ray(std::span<const Complex> values, double s,
                                       Complex anchor, std::size_t ray_id = 0);

/// (1/(2i)) Log((1 + iw)/(1 - iw)); PoleError at w = +-i.
Complex arctan_c(Complex w);

/// Derivative of order 1 or 2 by central differences, Ridders-extrapolated
/// from an initial step of 1e-3 * max(1, |z|). The stencil stays within that
/// distance of z.
Complex num_deriv(const ComplexMap& f, Complex z, int order);

namespace detail {

struct GaussLegendre15 {
  std::array<double, 15> nodes;    // on [-1, 1]
  std::array<double, 15> weights;
};

const GaussLegendre15& gauss_legendre_15();

template <typename F>
Complex gl15_panel(F& f, double a, double b) {
  const auto& rule = gauss_legendre_15();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return acc * half;
}

}  // namespace detail

struct QuadResult {
  Complex value;
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

inline constexpr int kQuadMaxDepth = 40;

/// Adaptive composite 15-point Gauss-Legendre on [a, b]. A panel is accepted
/// when it agrees with its two halves to within its share of `tol`, floored at
/// a few ulps of the panel value so large integrands cannot stall the
/// bisection on roundoff, and at tol/1000 so integrable endpoint singularities
/// terminate.
template <typename F>
QuadResult quad_adaptive(F&& f, double a, double b, double tol) {
  struct Panel {
    double a, b;
    Complex coarse;
    int depth;
  };
  const double width = b - a;
  QuadResult out;
  if (width == 0.0) return out;
  std::vector<Panel> stack;
  stack.push_back({a, b, detail::gl15_panel(f, a, b), 0});
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    const double m = 0.5 * (p.a + p.b);
    const Complex left = detail::gl15_panel(f, p.a, m);
    const Complex right = detail::gl15_panel(f, m, p.b);
    const Complex fine = left + right;
    const double err = std::abs(fine - p.coarse);
    const double share = tol * (p.b - p.a) / width;
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(fine);
    if (!is_finite(fine)) {
      throw NonConvergenceError("quadrature produced a non-finite panel value",
                                std::numeric_limits<double>::infinity());
    }
    // Panels hugging an endpoint singularity cannot meet their width share;
    // at most about kQuadMaxDepth of them take the absolute floor.
    if (err <= share || err <= floor || err <= 1e-3 * tol) {
      out.value += fine;
      out.error_estimate += err;
      ++out.panels;
      continue;
    }
    if (p.depth + 1 >= kQuadMaxDepth) {
      throw NonConvergenceError("quadrature subdivision limit reached",
                                out.error_estimate + err);
    }
    stack.push_back({m, p.b, right, p.depth + 1});
    stack.push_back({p.a, m, left, p.depth + 1});
  }
  return out;
}

/// Integral of f over [0, 1] with absolute error about `tol`.
template <typename F>
Complex quad_unit(F&& f, double tol) {
  return quad_adaptive(std::forward<F>(f), 0.0, 1.0, tol).value;
}

/// Signed number of turns of the curve around w.
/// IndeterminateError when w lies within 1e-6 * diameter of a sample.
int winding_number(const BoundaryCurve& curve, Complex w);

}  // namespace convexdom
