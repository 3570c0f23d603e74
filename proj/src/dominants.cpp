#include "convexdom/dominants.hpp"

#include <algorithm>
#include <optional>

#include "convexdom/parallel.hpp"

namespace convexdom {

namespace {

struct Jet {
  Complex v, d1, d2;
};

double exponent(const ParamSet& params) { return 1.0 / (1.0 - params.alpha); }

void require_tan_regular(Complex w) {
  const double m = std::round((w.real() - kPi / 2) / kPi);
  const Complex pole{kPi / 2 + m * kPi, 0.0};
  if (std::abs(w - pole) < 1e-6) throw PoleError("tan evaluated within 1e-6 of a pole");
}

// Jet of the inner function G(F) for the operator.
Jet inner_jet(const ParamSet& params, const Jet& f, bool derivatives) {
  if (params.op == Operator::psi1) {
    const Complex c = params.beta * (1.0 - params.alpha);
    return {c * f.v, c * f.d1, c * f.d2};
  }
  const Psi2Roots roots = psi2_roots(params);
  const Complex arg = roots.s * f.v;
  require_tan_regular(arg);
  const Complex t = std::tan(arg);
  Jet g{roots.gb_ratio * t, {}, {}};
  if (derivatives) {
    const Complex sec2 = 1.0 + t * t;
    const Complex ks = roots.gb_ratio * roots.s;
    g.d1 = ks * sec2 * f.d1;
    g.d2 = ks * sec2 * (2.0 * roots.s * t * f.d1 * f.d1 + f.d2);
  }
  return g;
}

// q from the continued power P = G^e and the jet of G.
Jet outer_jet(const ParamSet& params, Complex power, const Jet& g, bool derivatives) {
  const double e = exponent(params);
  Jet p{power, {}, {}};
  if (derivatives) {
    const Complex lg = g.d1 / g.v;
    p.d1 = e * power * lg;
    p.d2 = e * power * (g.d2 / g.v + (e - 1.0) * lg * lg);
  }
  if (params.op == Operator::psi1) {
    return {(p.v - params.gamma) / params.beta, p.d1 / params.beta, p.d2 / params.beta};
  }
  return p;
}

class Source {
 public:
  Source(const AnalyticTarget& target, int n, DominantKind kind, double tol)
      : target_(target), kind_(kind) {
    if (kind == DominantKind::best_dominant) q_.emplace(target, n, tol);
  }

  Jet at(Complex z, bool derivatives) const {
    if (kind_ == DominantKind::majorant) {
      if (!derivatives) return {target_.eval(z), {}, {}};
      return {target_.eval(z), target_.d1(z), target_.d2(z)};
    }
    if (!derivatives) return {q_->value(z), {}, {}};
    return {q_->value(z), q_->d1(z), q_->d2(z)};
  }

 private:
  const AnalyticTarget& target_;
  DominantKind kind_;
  std::optional<QEvaluator> q_;
};

Complex inner_at_center(const ParamSet& params, const AnalyticTarget& target) {
  const Jet g = inner_jet(params, {target.center, {}, {}}, false);
  if (g.v == Complex{0.0, 0.0}) {
    throw DomainError("inner function vanishes at z = 0; fractional power has no branch");
  }
  return g.v;
}

// Values of q (and optionally jets) along one ordered ray of points.
std::vector<Jet> ray_values(const ParamSet& params, const Source& source, Complex g0,
                            std::span<const Complex> points, bool derivatives,
                            std::size_t ray_id, bool* off_principal) {
  const double e = exponent(params);
  std::vector<Jet> g(points.size());
  std::vector<Complex> bases(points.size() + 1);
  bases[0] = g0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    g[i] = inner_jet(params, source.at(points[i], derivatives), derivatives);
    bases[i + 1] = g[i].v;
  }
  const TrackedPowers tracked =
      continuous_pow_along_ray(bases, e, principal_pow(g0, e), ray_id);
  if (off_principal) *off_principal = tracked.off_principal;
  std::vector<Jet> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i] = outer_jet(params, tracked.values[i + 1], g[i], derivatives);
  }
  return out;
}

std::vector<Complex> segment_points(Complex z, std::size_t m) {
  std::vector<Complex> pts(m);
  for (std::size_t k = 0; k < m; ++k) {
    pts[k] = z * (static_cast<double>(k + 1) / static_cast<double>(m));
  }
  return pts;
}

}  // namespace

std::size_t DominantField::rays_off_principal() const noexcept {
  return static_cast<std::size_t>(std::count(off_principal.begin(), off_principal.end(), true));
}

Complex a0_of(const ParamSet& params, const AnalyticTarget& target) {
  const Complex g0 = inner_at_center(params, target);
  const Jet q = outer_jet(params, principal_pow(g0, exponent(params)), {g0, {}, {}}, false);
  return q.v;
}

Complex dominant_value(const ParamSet& params, const AnalyticTarget& target, DominantKind kind,
                       Complex z, double quad_tol) {
  if (z == Complex{0.0, 0.0}) return a0_of(params, target);
  const Source source(target, params.n, kind, quad_tol);
  const Complex g0 = inner_at_center(params, target);
  const auto pts = segment_points(z, 16);
  return ray_values(params, source, g0, pts, false, 0, nullptr).back().v;
}

DominantField build_dominant(const ParamSet& params, const AnalyticTarget& target,
                             const DiskGrid& grid, DominantKind kind,
                             const BuildOptions& options) {
  if (params.n < 1) throw ValidationError("n must be a positive integer");
  if (params.beta == Complex{0.0, 0.0}) throw ValidationError("beta must be non-zero");
  DominantField field{params, target, grid, kind, {}, {}, {}, {}, {}, 0.0};
  field.a0 = a0_of(params, target);
  const Complex g0 = inner_at_center(params, target);
  const Source source(field.target, params.n, kind, options.quad_tol);

  field.values.resize(grid.size());
  if (options.derivatives) {
    field.d1.resize(grid.size());
    field.d2.resize(grid.size());
  }
  std::vector<char> off(grid.thetas(), 0);
  parallel_for(grid.thetas(), [&](std::size_t ray) {
    bool flag = false;
    const auto jets =
        ray_values(params, source, g0, grid.ray(ray), options.derivatives, ray, &flag);
    off[ray] = flag ? 1 : 0;
    for (std::size_t ring = 0; ring < jets.size(); ++ring) {
      const std::size_t idx = grid.index(ray, ring);
      field.values[idx] = jets[ring].v;
      if (options.derivatives) {
        field.d1[idx] = jets[ring].d1;
        field.d2[idx] = jets[ring].d2;
      }
    }
  });
  field.off_principal.assign(off.begin(), off.end());

  if (options.check_center) {
    // Quadratic extrapolation from r = 1e-3, 2e-3, 3e-3 on the positive axis.
    const auto near = ray_values(params, source, g0,
                                 std::vector<Complex>{{1e-3, 0.0}, {2e-3, 0.0}, {3e-3, 0.0}},
                                 false, 0, nullptr);
    const Complex at_zero = 3.0 * near[0].v - 3.0 * near[1].v + near[2].v;
    field.center_gap = std::abs(at_zero - field.a0);
  } else {
    field.center_gap = std::numeric_limits<double>::quiet_NaN();
  }
  return field;
}

namespace {

void require_op(const ParamSet& params, Operator op) {
  if (params.op != op) {
    throw ValidationError("builder requires operator " + to_string(op) + ", got " +
                          to_string(params.op));
  }
}

}  // namespace

DominantField build_q1(const ParamSet& params, const AnalyticTarget& target,
                       const DiskGrid& grid, const BuildOptions& options) {
  require_op(params, Operator::psi1);
  return build_dominant(params, target, grid, DominantKind::best_dominant, options);
}

DominantField build_H1(const ParamSet& params, const AnalyticTarget& target,
                       const DiskGrid& grid, const BuildOptions& options) {
  require_op(params, Operator::psi1);
  return build_dominant(params, target, grid, DominantKind::majorant, options);
}

DominantField build_q2(const ParamSet& params, const AnalyticTarget& target,
                       const DiskGrid& grid, const BuildOptions& options) {
  require_op(params, Operator::psi2);
  return build_dominant(params, target, grid, DominantKind::best_dominant, options);
}

DominantField build_H2(const ParamSet& params, const AnalyticTarget& target,
                       const DiskGrid& grid, const BuildOptions& options) {
  require_op(params, Operator::psi2);
  return build_dominant(params, target, grid, DominantKind::majorant, options);
}

BoundaryCurve dominant_boundary(const ParamSet& params, const AnalyticTarget& target,
                                DominantKind kind, double r, std::size_t samples,
                                double quad_tol) {
  constexpr std::size_t kRings = 12;
  std::vector<double> levels(kRings);
  for (std::size_t k = 0; k < kRings; ++k) {
    levels[k] = r * static_cast<double>(k + 1) / static_cast<double>(kRings);
  }
  const DiskGrid grid = DiskGrid::from_levels(std::move(levels), samples);
  const DominantField f =
      build_dominant(params, target, grid, kind, {quad_tol, false, false});
  std::vector<Complex> pts(samples);
  for (std::size_t j = 0; j < samples; ++j) pts[j] = f.values[grid.index(j, kRings - 1)];
  return BoundaryCurve::close(std::move(pts));
}

PsiValue eval_psi1(Complex p, Complex zp, const ParamSet& params) {
  const Complex b = params.beta * p + params.gamma;
  if (b == Complex{0.0, 0.0}) throw SingularInputError("psi1: beta p + gamma = 0");
  const double a = params.alpha;
  const Complex v = principal_pow(b, 1.0 - a) / (params.beta * (1.0 - a)) +
                    zp * principal_pow(b, -a);
  return {v, Operator::psi1};
}

PsiValue eval_psi2(Complex p, Complex zp, const ParamSet& params) {
  if (p == Complex{0.0, 0.0}) throw SingularInputError("psi2: p = 0");
  const Psi2Roots roots = psi2_roots(params);
  const double a = params.alpha;
  const Complex pw = principal_pow(p, 1.0 - a);
  const Complex den = params.beta * pw * pw + params.gamma;
  if (den == Complex{0.0, 0.0}) {
    throw SingularInputError("psi2: beta p^{2(1-alpha)} + gamma = 0");
  }
  const Complex v =
      arctan_c(roots.bg_ratio * pw) / roots.s + (1.0 - a) * zp / (principal_pow(p, a) * den);
  return {v, Operator::psi2};
}

PsiValue eval_psi(Complex p, Complex zp, const ParamSet& params) {
  return params.op == Operator::psi1 ? eval_psi1(p, zp, params) : eval_psi2(p, zp, params);
}

Complex solve_psi_for_zp(Complex p, Complex w, const ParamSet& params) {
  const Complex base = eval_psi(p, {0.0, 0.0}, params).value;
  const Complex slope = eval_psi(p, {1.0, 0.0}, params).value - base;
  return (w - base) / slope;
}

namespace {

// Largest stencil radius num_deriv uses around x.
double stencil_radius(Complex x) { return 1.1e-3 * std::max(1.0, std::abs(x)); }

// True when a principal power of w is analytic on the disc |w' - w| <= radius.
bool clear_of_cut(Complex w, double radius) {
  if (std::abs(w) <= 2.0 * radius) return false;
  return !(w.real() < 0.0 && std::abs(w.imag()) <= radius);
}

}  // namespace

ExactnessResult exactness_residual(Operator op, const ParamSet& params_in,
                                   std::span<const ExactnessSample> samples, double n_scale) {
  ParamSet params = params_in;
  params.op = op;
  const double a = params.alpha;
  ExactnessResult out;
  for (const auto& s : samples) {
    const double hp = stencil_radius(s.p);
    ComplexMap m_of_p;
    ComplexMap n_of_z;
    if (op == Operator::psi1) {
      const Complex b = params.beta * s.p + params.gamma;
      if (!clear_of_cut(b, std::abs(params.beta) * hp)) {
        ++out.skipped;
        continue;
      }
      m_of_p = [&](Complex p) {
        return principal_pow(params.beta * p + params.gamma, 1.0 - a) /
               (params.beta * (1.0 - a));
      };
      n_of_z = [&](Complex z) {
        return n_scale * z * principal_pow(params.beta * s.p + params.gamma, -a);
      };
    } else {
      const Psi2Roots roots = psi2_roots(params);
      if (!clear_of_cut(s.p, hp)) {
        ++out.skipped;
        continue;
      }
      // arctan's Log cut: k' p^{1-alpha} on the imaginary axis beyond +-i.
      const Complex w = roots.bg_ratio * principal_pow(s.p, 1.0 - a);
      const double dw = 4.0 * std::abs(roots.bg_ratio) * hp *
                        std::max(1.0, std::abs(principal_pow(s.p, -a)));
      if (std::abs(w.real()) <= dw && std::abs(w.imag()) >= 1.0 - dw) {
        ++out.skipped;
        continue;
      }
      m_of_p = [&, roots](Complex p) {
        return arctan_c(roots.bg_ratio * principal_pow(p, 1.0 - a)) / roots.s;
      };
      n_of_z = [&](Complex z) {
        const Complex pw = principal_pow(s.p, 1.0 - a);
        return n_scale * (1.0 - a) * z /
               (principal_pow(s.p, a) * (params.beta * pw * pw + params.gamma));
      };
    }
    const Complex dm = num_deriv(m_of_p, s.p, 1);
    const Complex dn = num_deriv(n_of_z, s.z, 1);
    out.residual = std::max(out.residual, std::abs(dm - dn));
    ++out.used;
  }
  if (out.used == 0) throw DomainError("every exactness sample was skipped");
  return out;
}

std::vector<ExactnessSample> random_exactness_samples(const ParamSet& params, std::size_t count,
                                                      std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<ExactnessSample> out;
  out.reserve(count);
  while (out.size() < count) {
    const Complex z = std::polar(0.9 * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
    const double rho = 0.2 + 1.3 * unit(rng);
    if (params.op == Operator::psi1) {
      const double phi = (2.0 * unit(rng) - 1.0) * 0.8 * kPi;
      const Complex b = std::polar(rho, phi);
      out.push_back({z, (b - params.gamma) / params.beta});
    } else {
      const double phi = (2.0 * unit(rng) - 1.0) * 0.4 * kPi;
      out.push_back({z, std::polar(rho, phi)});
    }
  }
  return out;
}

double ode_residual(const DominantField& field, const AnalyticTarget& target) {
  if (!field.has_derivatives()) throw ValidationError("ode_residual needs a field with q'");
  const auto pts = field.grid.points();
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Complex zp = static_cast<double>(field.params.n) * pts[i] * field.d1[i];
    const Complex lhs = eval_psi(field.values[i], zp, field.params).value;
    worst = std::max(worst, std::abs(lhs - target.eval(pts[i])));
  }
  return worst;
}

}  // namespace convexdom
