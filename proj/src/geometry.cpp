#include "convexdom/geometry.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "convexdom/parallel.hpp"

namespace convexdom {

SchwarzMap::SchwarzMap(double theta, Complex c) : theta_(theta), c_(c) {
  if (!(std::abs(c) < 1.0)) throw ValidationError("Schwarz map needs |c| < 1");
  if (!std::isfinite(theta)) throw ValidationError("Schwarz map angle must be finite");
}

Complex SchwarzMap::operator()(Complex z) const {
  return std::polar(1.0, theta_) * z * (z + c_) / (1.0 + std::conj(c_) * z);
}

ComplexMap SchwarzMap::as_map() const {
  return [m = *this](Complex z) { return m(z); };
}

SchwarzMap random_schwarz_map(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double theta = 2.0 * kPi * unit(rng);
  const double r = 0.7 * std::sqrt(unit(rng));
  const double phi = 2.0 * kPi * unit(rng);
  return SchwarzMap(theta, std::polar(r, phi));
}

NonUnivalentError::NonUnivalentError(Complex z, const std::string& what)
    : NumericError(what + " at z = (" + std::to_string(z.real()) + ", " +
                   std::to_string(z.imag()) + ")"),
      z_(z) {}

namespace {

double margin_at(Complex z, Complex d1, Complex d2) {
  if (d1 == Complex{0.0, 0.0} || !is_finite(d1)) {
    throw NonUnivalentError(z, "derivative vanishes; map may not be univalent");
  }
  return (1.0 + z * d2 / d1).real();
}

}  // namespace

double convexity_margin(const DominantField& field) {
  if (!field.has_derivatives()) throw ValidationError("convexity margin needs q' and q''");
  const auto pts = field.grid.points();
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    m = std::min(m, margin_at(pts[i], field.d1[i], field.d2[i]));
  }
  return m;
}

double convexity_margin(const ComplexMap& d1, const ComplexMap& d2, const DiskGrid& grid) {
  double m = std::numeric_limits<double>::infinity();
  for (const Complex& z : grid.points()) m = std::min(m, margin_at(z, d1(z), d2(z)));
  return m;
}

bool univalence_margin(double margin, double alpha_thresh) {
  if (!(alpha_thresh >= -0.5 && alpha_thresh <= 0.0)) {
    throw ValidationError("univalence threshold must lie in [-1/2, 0]");
  }
  return margin > alpha_thresh;
}

bool univalence_margin(const DominantField& field, double alpha_thresh) {
  return univalence_margin(convexity_margin(field), alpha_thresh);
}

std::string to_string(ContainmentStatus s) {
  switch (s) {
    case ContainmentStatus::inside:
      return "inside";
    case ContainmentStatus::outside:
      return "outside";
    case ContainmentStatus::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

ContainmentResult containment(std::span<const Complex> inner_values,
                              std::span<const Complex> inner_points, Complex inner_center,
                              const BoundaryCurve& outer, Complex outer_center) {
  if (inner_values.size() != inner_points.size()) {
    throw ValidationError("containment needs one point per inner value");
  }
  if (std::abs(inner_center - outer_center) > 1e-8) {
    throw ValidationError("subordination needs equal centers (|f(0) - g(0)| <= 1e-8)");
  }
  ContainmentResult r;
  bool undecided = false;
  for (std::size_t i = 0; i < inner_values.size(); ++i) {
    ++r.checked;
    int w = 0;
    try {
      w = winding_number(outer, inner_values[i]);
    } catch (const IndeterminateError&) {
      if (!undecided && r.outside_count == 0) r.witness = inner_points[i];
      undecided = true;
      continue;
    }
    if (w != 1) {
      if (r.outside_count == 0) r.witness = inner_points[i];
      ++r.outside_count;
    }
  }
  if (r.outside_count > 0) {
    r.status = ContainmentStatus::outside;
  } else if (undecided) {
    r.status = ContainmentStatus::inconclusive;
  }
  return r;
}

ContainmentResult containment(const DominantField& inner, const DominantField& outer,
                              double r_inner, double r_outer, std::size_t samples) {
  const BoundaryCurve curve =
      dominant_boundary(outer.params, outer.target, outer.kind, r_outer, samples);
  std::vector<Complex> values, points;
  const auto pts = inner.grid.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (std::abs(pts[i]) <= r_inner * (1.0 + 1e-12)) {
      values.push_back(inner.values[i]);
      points.push_back(pts[i]);
    }
  }
  return containment(values, points, inner.a0, curve, outer.a0);
}

std::vector<SharpnessRow> sharpness_scan(const DominantField& field, std::span<const double> radii,
                                         std::size_t thetas) {
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] < 1.0) || (i > 0 && !(radii[i] > radii[i - 1]))) {
      throw ValidationError("sharpness radii must be ascending in (0, 1)");
    }
  }
  if (radii.empty()) return {};
  // A ladder of intermediate rings keeps the branch tracking steps short.
  std::vector<double> levels(radii.begin(), radii.end());
  for (int k = 1; k < 16; ++k) levels.push_back(radii.back() * k / 16.0);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               levels.end());
  const DiskGrid grid = DiskGrid::from_levels(levels, thetas);
  const DominantField f = build_dominant(field.params, field.target, grid, field.kind,
                                         {kDefaultQuadTol, false, false});
  std::vector<SharpnessRow> rows;
  for (double r : radii) {
    const auto it = std::lower_bound(levels.begin(), levels.end(), r - 1e-12);
    const std::size_t ring = static_cast<std::size_t>(it - levels.begin());
    SharpnessRow row{r, std::numeric_limits<double>::infinity(), 0.0};
    for (std::size_t j = 0; j < thetas; ++j) {
      const double v = f.values[grid.index(j, ring)].real();
      if (v < row.min_real) {
        row.min_real = v;
        row.argmin_theta = grid.theta(j);
      }
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

// z p' as a function of p and w = h(omega(z)), from psi(p, z p') = w.
class Slope {
 public:
  explicit Slope(const ParamSet& params) : params_(params) {
    if (params.op == Operator::psi2) roots_ = psi2_roots(params);
  }

  Complex operator()(Complex p, Complex w) const {
    const double a = params_.alpha;
    if (params_.op == Operator::psi1) {
      const Complex b = params_.beta * p + params_.gamma;
      if (std::abs(b) < 1e-300) throw SingularInputError("beta p + gamma reached 0");
      return principal_pow(b, a) * (w - principal_pow(b, 1.0 - a) / (params_.beta * (1.0 - a)));
    }
    if (std::abs(p) < 1e-300) throw SingularInputError("p reached 0");
    const Complex pw = principal_pow(p, 1.0 - a);
    const Complex m = arctan_c(roots_.bg_ratio * pw) / roots_.s;
    return (w - m) * principal_pow(p, a) * (params_.beta * pw * pw + params_.gamma) / (1.0 - a);
  }

 private:
  ParamSet params_;
  Psi2Roots roots_{};
};

struct State {
  Complex p;
  Complex g;  // integral_0^r p(rho e^{i theta}) d rho
};

class RayOde {
 public:
  RayOde(const Slope& slope, const AnalyticTarget& target, const ComplexMap& omega, double theta)
      : slope_(slope), target_(target), omega_(omega), dir_(std::polar(1.0, theta)) {}

  Complex forcing(double r) const { return target_.eval(omega_(r * dir_)); }

  State rhs(double r, const State& y) const {
    return {slope_(y.p, forcing(r)) / r, y.p};
  }

  State rk4(double r, const State& y, double h) const {
    const State k1 = rhs(r, y);
    const State k2 = rhs(r + h / 2, {y.p + h / 2 * k1.p, y.g + h / 2 * k1.g});
    const State k3 = rhs(r + h / 2, {y.p + h / 2 * k2.p, y.g + h / 2 * k2.g});
    const State k4 = rhs(r + h, {y.p + h * k3.p, y.g + h * k3.g});
    return {y.p + h / 6 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p),
            y.g + h / 6 * (k1.g + 2.0 * k2.g + 2.0 * k3.g + k4.g)};
  }

  // Fixed RK4 from r by total signed distance d in `sub` steps.
  Complex probe(double r, const State& y, double d, int sub) const {
    State s = y;
    const double h = d / sub;
    for (int i = 0; i < sub; ++i) s = rk4(r + i * h, s, h);
    return s.p;
  }

 private:
  const Slope& slope_;
  const AnalyticTarget& target_;
  const ComplexMap& omega_;
  Complex dir_;
};

constexpr double kOdeTol = 1e-11;

}  // namespace

PSolution ode_solve_p(const ParamSet& params, const AnalyticTarget& target,
                      const ComplexMap& omega, const DiskGrid& grid) {
  if (omega(Complex{0.0, 0.0}) != Complex{0.0, 0.0}) {
    throw ValidationError("omega must fix the origin");
  }
  if (grid.levels().front() <= kOdeStart) {
    throw ValidationError("ODE grid radii must exceed the 1e-4 start radius");
  }
  const Complex a0 = a0_of(params, target);
  const Slope slope(params);
  PSolution out{grid, {}, {}, {}, 0.0, 0};
  out.p.resize(grid.size());
  out.zp.resize(grid.size());
  out.f_over_z.resize(grid.size());
  std::vector<double> residuals(grid.thetas(), 0.0);
  std::vector<std::size_t> rejected(grid.thetas(), 0);

  parallel_for(grid.thetas(), [&](std::size_t ray) {
    const RayOde ode(slope, target, omega, grid.theta(ray));
    double r = kOdeStart;
    State y{a0, a0 * kOdeStart};
    double h = 0.1 * kOdeStart;
    for (std::size_t ring = 0; ring < grid.rings(); ++ring) {
      const double level = grid.levels()[ring];
      while (r < level) {
        const double cap = std::min(kOdeMaxStep, 0.1 * r);
        h = std::min(h, cap);
        const bool landing = level - r <= h;
        const double step = landing ? level - r : h;
        const State full = ode.rk4(r, y, step);
        const State half = ode.rk4(r + step / 2, ode.rk4(r, y, step / 2), step / 2);
        const double err = std::abs(half.p - full.p) / 15.0;
        if (!(err <= kOdeTol * std::max(1.0, std::abs(half.p))) || !is_finite(half.p)) {
          ++rejected[ray];
          h = step / 2;
          if (h < kOdeMinStep) {
            throw StiffnessError(ray, r, "ODE step fell below the 1e-7 floor");
          }
          continue;
        }
        y = {half.p + (half.p - full.p) / 15.0, half.g + (half.g - full.g) / 15.0};
        r = landing ? level : r + step;
        if (!landing && err < 0.1 * kOdeTol) h = std::min(2.0 * h, cap);
      }
      const std::size_t idx = grid.index(ray, ring);
      const Complex w = ode.forcing(level);
      out.p[idx] = y.p;
      out.zp[idx] = slope(y.p, w);
      out.f_over_z[idx] = y.g / level;

      // Measured z p' by a five-point difference of the integrated solution;
      // the spacing shrinks with the distance to the unit circle.
      const double d = std::min({1e-3, level / 4.0, (1.0 - level) / 200.0});
      const Complex pp1 = ode.probe(level, y, d, 2);
      const Complex pp2 = ode.probe(level, y, 2.0 * d, 4);
      const Complex pm1 = ode.probe(level, y, -d, 2);
      const Complex pm2 = ode.probe(level, y, -2.0 * d, 4);
      const Complex dpdr = (-pp2 + 8.0 * pp1 - 8.0 * pm1 + pm2) / (12.0 * d);
      const Complex lhs = eval_psi(y.p, level * dpdr, params).value;
      residuals[ray] = std::max(residuals[ray], std::abs(lhs - w));
    }
  });
  out.self_residual = *std::max_element(residuals.begin(), residuals.end());
  for (std::size_t n : rejected) out.rejected_steps += n;
  return out;
}

}  // namespace convexdom
