#include "convexdom/complex_core.hpp"

#include <algorithm>
#include <string>

namespace convexdom {

DiskGrid::DiskGrid(std::vector<double> levels, std::size_t thetas)
    : levels_(std::move(levels)), thetas_(thetas) {
  if (levels_.empty()) throw ValidationError("grid needs at least one ring");
  if (thetas_ < 1) throw ValidationError("grid needs at least one ray");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (!(levels_[i] > 0.0) || !(levels_[i] < 1.0)) {
      throw ValidationError("grid radii must lie in (0, 1)");
    }
    if (i > 0 && !(levels_[i] > levels_[i - 1])) {
      throw ValidationError("grid radii must be strictly ascending");
    }
  }
  points_.reserve(levels_.size() * thetas_);
  for (std::size_t j = 0; j < thetas_; ++j) {
    const Complex dir = std::polar(1.0, theta(j));
    for (double r : levels_) points_.push_back(r * dir);
  }
}

DiskGrid DiskGrid::uniform(double r_max, std::size_t rings, std::size_t thetas) {
  if (!(r_max > 0.0) || !(r_max < 1.0)) throw ValidationError("r_max must lie in (0, 1)");
  if (rings < 1) throw ValidationError("grid needs at least one ring");
  std::vector<double> levels(rings);
  for (std::size_t k = 0; k < rings; ++k) {
    levels[k] = r_max * static_cast<double>(k + 1) / static_cast<double>(rings);
  }
  return DiskGrid(std::move(levels), thetas);
}

DiskGrid DiskGrid::from_levels(std::vector<double> levels, std::size_t thetas) {
  return DiskGrid(std::move(levels), thetas);
}

BoundaryCurve::BoundaryCurve(std::vector<Complex> samples) : samples_(std::move(samples)) {
  if (samples_.size() < kMinSamples) {
    throw ValidationError("boundary curve needs at least " + std::to_string(kMinSamples) +
                          " samples");
  }
  double lo_re = samples_[0].real(), hi_re = lo_re;
  double lo_im = samples_[0].imag(), hi_im = lo_im;
  for (const Complex& w : samples_) {
    if (!is_finite(w)) throw ValidationError("boundary curve has a non-finite sample");
    lo_re = std::min(lo_re, w.real());
    hi_re = std::max(hi_re, w.real());
    lo_im = std::min(lo_im, w.imag());
    hi_im = std::max(hi_im, w.imag());
  }
  diameter_ = std::hypot(hi_re - lo_re, hi_im - lo_im);
  const double gap = std::abs(samples_.front() - samples_.back());
  if (gap > 1e-9 * std::max(1.0, diameter_)) {
    throw ValidationError("boundary curve is not closed");
  }
}

BoundaryCurve BoundaryCurve::close(std::vector<Complex> open_samples) {
  if (!open_samples.empty()) open_samples.push_back(open_samples.front());
  return BoundaryCurve(std::move(open_samples));
}

BoundaryCurve BoundaryCurve::image_of_circle(const ComplexMap& f, double r, std::size_t n) {
  std::vector<Complex> pts(n);
  for (std::size_t k = 0; k < n; ++k) {
    pts[k] = f(std::polar(r, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n)));
  }
  return close(std::move(pts));
}

Complex principal_log(Complex w) {
  double arg = std::atan2(w.imag(), w.real());
  if (arg <= -kPi) arg = kPi;
  return {std::log(std::abs(w)), arg};
}

Complex principal_pow(Complex w, double s) {
  if (w == Complex{0.0, 0.0}) {
    if (s > 0.0) return {0.0, 0.0};
    throw DomainError("zero raised to a non-positive power");
  }
  if (s == 0.0) return {1.0, 0.0};
  if (s == 1.0) return w;
  return std::exp(s * principal_log(w));
}

TrackedPowers continuous_pow_along_ray(std::span<const Complex> values, double s,
                                       Complex anchor, std::size_t ray_id) {
  TrackedPowers out;
  if (values.empty()) return out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == Complex{0.0, 0.0} || !is_finite(values[i])) {
      throw BranchCollapseError(ray_id, i, "fractional power base vanished along the ray");
    }
  }

  // Pick the sheet k with exp(s (Log w0 + 2 pi i k)) == anchor.
  const Complex log0 = principal_log(values[0]);
  const double scale = std::max(1.0, std::abs(anchor));
  double arg = log0.imag();
  bool found = false;
  for (int k = 0; k <= 16 && !found; ++k) {
    for (int sign : {1, -1}) {
      const double cand = log0.imag() + 2.0 * kPi * sign * k;
      if (std::abs(std::exp(s * Complex(log0.real(), cand)) - anchor) <= 1e-8 * scale) {
        arg = cand;
        found = true;
        break;
      }
      if (k == 0) break;
    }
  }
  if (!found) throw DomainError("anchor is not a power of the first ray value");

  out.values.reserve(values.size());
  out.values.push_back(anchor);
  for (std::size_t i = 1; i < values.size(); ++i) {
    arg += std::arg(values[i] / values[i - 1]);
    const Complex w = std::exp(s * Complex(std::log(std::abs(values[i])), arg));
    out.values.push_back(w);
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Complex pv = principal_pow(values[i], s);
    if (std::abs(pv - out.values[i]) > 1e-10 * std::max(1.0, std::abs(pv))) {
      out.off_principal = true;
      break;
    }
  }
  return out;
}

Complex arctan_c(Complex w) {
  const Complex iw = Complex(0.0, 1.0) * w;
  const Complex num = 1.0 + iw;
  const Complex den = 1.0 - iw;
  if (std::abs(num) < 1e-14 || std::abs(den) < 1e-14) {
    throw PoleError("arctan evaluated at a pole (w = +-i)");
  }
  return principal_log(num / den) / Complex(0.0, 2.0);
}

Complex num_deriv(const ComplexMap& f, Complex z, int order) {
  if (order != 1 && order != 2) throw ValidationError("num_deriv supports order 1 or 2");
  // Ridders: central differences at shrinking steps, extrapolated to h -> 0;
  // keeps the tableau entry with the smallest error estimate.
  constexpr int kLevels = 10;
  constexpr double kShrink = 1.4;
  constexpr double kShrink2 = kShrink * kShrink;
  const Complex f0 = order == 2 ? f(z) : Complex{};
  auto central = [&](double h) {
    if (order == 1) return (f(z + h) - f(z - h)) / (2.0 * h);
    return (f(z + h) - 2.0 * f0 + f(z - h)) / (h * h);
  };
  double h = 1e-3 * std::max(1.0, std::abs(z));
  std::array<std::array<Complex, kLevels>, kLevels> a{};
  a[0][0] = central(h);
  Complex best = a[0][0];
  double err = std::numeric_limits<double>::infinity();
  for (int i = 1; i < kLevels; ++i) {
    h /= kShrink;
    a[0][i] = central(h);
    double fac = kShrink2;
    for (int j = 1; j <= i; ++j) {
      a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
      fac *= kShrink2;
      const double e =
          std::max(std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]));
      if (e <= err) {
        err = e;
        best = a[j][i];
      }
    }
    if (std::abs(a[i][i] - a[i - 1][i - 1]) >= 2.0 * err) break;
  }
  return best;
}

namespace detail {

namespace {

GaussLegendre15 make_rule() {
  constexpr int n = 15;
  GaussLegendre15 rule{};
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussLegendre15& gauss_legendre_15() {
  static const GaussLegendre15 rule = make_rule();
  return rule;
}

}  // namespace detail

int winding_number(const BoundaryCurve& curve, Complex w) {
  const auto s = curve.samples();
  const double tol = 1e-6 * curve.diameter();
  int winding = 0;
  // Signed crossings of the rightward horizontal ray from w; equals the
  // summed-argument count for a closed polygon and needs no atan2.
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const Complex a = s[i] - w;
    const Complex b = s[i + 1] - w;
    if (std::abs(a) <= tol) {
      throw IndeterminateError("point lies on the boundary curve within tolerance");
    }
    const double cross = a.real() * b.imag() - a.imag() * b.real();
    if (a.imag() <= 0.0) {
      if (b.imag() > 0.0 && cross > 0.0) ++winding;
    } else if (b.imag() <= 0.0 && cross < 0.0) {
      --winding;
    }
  }
  return winding;
}

}  // namespace convexdom
