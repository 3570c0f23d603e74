#include "convexdom/targets.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace convexdom {

int case_id(const BoundCase& c) noexcept { return static_cast<int>(c.index()) + 1; }

namespace {

// w(z)^s continued along the segment [0, z] from w(0)^s = 1 (w(0) = 1).
// Refines the segment until consecutive arguments move by less than pi/4.
Complex segment_pow(const ComplexMap& w, Complex z, double s) {
  for (std::size_t m = 8; m <= 4096; m *= 2) {
    std::vector<Complex> vals(m + 1);
    bool smooth = true;
    for (std::size_t k = 0; k <= m; ++k) {
      vals[k] = w(z * (static_cast<double>(k) / static_cast<double>(m)));
      if (k > 0 && std::abs(std::arg(vals[k] / vals[k - 1])) > kPi / 4) smooth = false;
    }
    if (!smooth) continue;
    return continuous_pow_along_ray(vals, s, principal_pow(vals[0], s)).values.back();
  }
  throw BranchCollapseError(0, 0, "sector base winds too fast to track");
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

AnalyticTarget make_janowski(double A, double B) {
  if (!(-1.0 <= B && B < A && A <= 1.0)) {
    throw ValidationError("janowski target requires -1 <= B < A <= 1 (got A = " + fmt(A) +
                          ", B = " + fmt(B) + ")");
  }
  AnalyticTarget t;
  t.label = "janowski";
  t.constraint_note = "-1 <= B < A <= 1";
  t.eval = [A, B](Complex z) { return (1.0 + A * z) / (1.0 + B * z); };
  t.d1 = [A, B](Complex z) {
    const Complex d = 1.0 + B * z;
    return (A - B) / (d * d);
  };
  t.d2 = [A, B](Complex z) {
    const Complex d = 1.0 + B * z;
    return -2.0 * B * (A - B) / (d * d * d);
  };
  t.center = {1.0, 0.0};
  t.parameters = {{"A", A}, {"B", B}};
  t.bound_case = JanowskiCase{A, B};
  return t;
}

AnalyticTarget make_exp(Complex mu) {
  if (!(std::abs(mu) <= 1.0)) {
    throw ValidationError("exponential target requires |mu| <= 1 (got |mu| = " +
                          fmt(std::abs(mu)) + ")");
  }
  AnalyticTarget t;
  t.label = "exp";
  t.constraint_note = "|mu| <= 1";
  t.eval = [mu](Complex z) { return std::exp(mu * z); };
  t.d1 = [mu](Complex z) { return mu * std::exp(mu * z); };
  t.d2 = [mu](Complex z) { return mu * mu * std::exp(mu * z); };
  t.center = {1.0, 0.0};
  t.parameters = {{"mu_re", mu.real()}, {"mu_im", mu.imag()}};
  t.bound_case = ExpCase{mu};
  return t;
}

AnalyticTarget make_sqrt(double kappa) {
  if (!(0.0 <= kappa && kappa <= 1.0)) {
    throw ValidationError("square-root target requires kappa in [0, 1] (got " + fmt(kappa) +
                          ")");
  }
  AnalyticTarget t;
  t.label = "sqrt";
  t.constraint_note = "0 <= kappa <= 1";
  t.eval = [kappa](Complex z) { return std::sqrt(1.0 + kappa * z); };
  t.d1 = [kappa](Complex z) { return kappa / (2.0 * std::sqrt(1.0 + kappa * z)); };
  t.d2 = [kappa](Complex z) {
    const Complex w = 1.0 + kappa * z;
    return -kappa * kappa / (4.0 * w * std::sqrt(w));
  };
  t.center = {1.0, 0.0};
  t.parameters = {{"kappa", kappa}};
  t.bound_case = SqrtCase{kappa};
  return t;
}

AnalyticTarget make_sector(double rho1, double rho2) {
  if (!(0.0 < rho1 && rho1 <= 1.0 && 0.0 < rho2 && rho2 <= 1.0)) {
    throw ValidationError("sector target requires 0 < rho1, rho2 <= 1 (got rho1 = " +
                          fmt(rho1) + ", rho2 = " + fmt(rho2) + ")");
  }
  const double rho = (rho1 - rho2) / (rho1 + rho2);
  const double rho_p = 0.5 * (rho1 + rho2);
  const Complex c = std::polar(1.0, kPi * rho);
  const ComplexMap base = [c](Complex z) { return (1.0 + c * z) / (1.0 - z); };
  // log-derivative of the base and its derivative
  auto L = [c](Complex z) { return c / (1.0 + c * z) + 1.0 / (1.0 - z); };
  auto dL = [c](Complex z) {
    const Complex a = 1.0 + c * z;
    const Complex b = 1.0 - z;
    return -c * c / (a * a) + 1.0 / (b * b);
  };

  AnalyticTarget t;
  t.label = "sector";
  t.constraint_note = "0 < rho1, rho2 <= 1";
  t.eval = [base, rho_p](Complex z) { return segment_pow(base, z, rho_p); };
  t.d1 = [base, rho_p, L](Complex z) { return rho_p * segment_pow(base, z, rho_p) * L(z); };
  t.d2 = [base, rho_p, L, dL](Complex z) {
    const Complex l = L(z);
    return rho_p * segment_pow(base, z, rho_p) * (rho_p * l * l + dL(z));
  };
  t.center = {1.0, 0.0};
  t.parameters = {{"rho1", rho1}, {"rho2", rho2}};
  t.bound_case = SectorCase{rho1, rho2};
  return t;
}

AnalyticTarget make_shifted_halfplane(double x0, double r0) {
  if (!(x0 > 1.0)) {
    throw ValidationError("shifted half-plane target requires x0 > 1 (got " + fmt(x0) + ")");
  }
  AnalyticTarget t;
  t.label = "halfplane";
  t.constraint_note = "x0 > 1";
  t.eval = [x0](Complex z) { return (x0 + z) / (x0 - z); };
  t.d1 = [x0](Complex z) {
    const Complex d = x0 - z;
    return 2.0 * x0 / (d * d);
  };
  t.d2 = [x0](Complex z) {
    const Complex d = x0 - z;
    return 4.0 * x0 / (d * d * d);
  };
  t.center = {1.0, 0.0};
  t.parameters = {{"x0", x0}, {"r0", r0}};
  // (x0 + z)/(x0 - z) = (1 + z/x0)/(1 - z/x0)
  t.bound_case = JanowskiCase{1.0 / x0, -1.0 / x0};
  return t;
}

TargetSelfTest self_test(const AnalyticTarget& target, const DiskGrid& grid,
                         std::size_t probes, unsigned long long seed) {
  TargetSelfTest r;
  r.center_error = std::abs(target.center - target.eval(Complex{0.0, 0.0}));
  r.convexity_margin = std::numeric_limits<double>::infinity();
  r.min_modulus = std::numeric_limits<double>::infinity();
  for (const Complex& z : grid.points()) {
    const Complex h = target.eval(z);
    const Complex h1 = target.d1(z);
    r.min_modulus = std::min(r.min_modulus, std::abs(h));
    if (std::abs(h1) == 0.0) {
      r.convexity_margin = -std::numeric_limits<double>::infinity();
      continue;
    }
    r.convexity_margin = std::min(r.convexity_margin, (1.0 + z * target.d2(z) / h1).real());
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  for (std::size_t i = 0; i < probes; ++i) {
    const Complex z = grid.points()[pick(rng)];
    const double e1 = std::abs(target.d1(z) - num_deriv(target.eval, z, 1));
    const double e2 = std::abs(target.d2(z) - num_deriv(target.eval, z, 2));
    const double scale = std::max(1.0, std::abs(target.d2(z)));
    r.max_derivative_error = std::max({r.max_derivative_error, e1, e2 / scale});
  }
  r.passed = r.center_error == 0.0 && r.min_modulus > 0.0 && r.convexity_margin > 0.0 &&
             r.max_derivative_error < 1e-7;
  return r;
}

AnalyticTarget make_custom(std::string label, ComplexMap eval, ComplexMap d1, ComplexMap d2) {
  AnalyticTarget t;
  t.label = std::move(label);
  t.constraint_note = "custom target: convex, non-vanishing, consistent derivatives";
  t.eval = std::move(eval);
  t.d1 = std::move(d1);
  t.d2 = std::move(d2);
  t.center = t.eval(Complex{0.0, 0.0});
  const TargetSelfTest st = self_test(t, DiskGrid::uniform(0.95, 16, 64));
  std::vector<std::string> failures;
  if (!(st.min_modulus > 0.0)) failures.push_back("target vanishes on the grid");
  if (!(st.convexity_margin > 0.0)) failures.push_back("target is not convex on the grid");
  if (!(st.max_derivative_error < 1e-7)) {
    failures.push_back("supplied derivatives disagree with finite differences");
  }
  if (!failures.empty()) throw ValidationError(failures);
  return t;
}

std::string to_string(Operator op) { return op == Operator::psi1 ? "psi1" : "psi2"; }

Operator operator_from_string(const std::string& name) {
  if (name == "psi1") return Operator::psi1;
  if (name == "psi2") return Operator::psi2;
  throw ValidationError("unknown operator '" + name + "' (expected psi1 or psi2)");
}

Psi2Roots psi2_roots(const ParamSet& params) {
  const Complex s = std::sqrt(params.gamma * params.beta);
  if (s == Complex{0.0, 0.0}) throw DomainError("psi2 requires gamma * beta != 0");
  return {s, params.gamma / s, s / params.gamma};
}

std::vector<std::string> hypothesis_violations(const ParamSet& params,
                                               const AnalyticTarget& target,
                                               const DiskGrid& grid) {
  std::vector<std::string> v;
  if (!(params.alpha >= -1.0 && params.alpha <= 0.0)) {
    v.push_back("alpha must satisfy -1 <= alpha <= 0");
  }
  if (params.beta == Complex{0.0, 0.0}) v.push_back("beta must be non-zero");
  if (params.n < 1) v.push_back("n must be a positive integer");
  if (params.op == Operator::psi2 && params.gamma == Complex{0.0, 0.0}) {
    v.push_back("gamma must be non-zero for psi2");
  }
  double min_mod = std::numeric_limits<double>::infinity();
  double max_mod = 0.0;
  for (const Complex& z : grid.points()) {
    const double m = std::abs(target.eval(z));
    min_mod = std::min(min_mod, m);
    max_mod = std::max(max_mod, m);
  }
  min_mod = std::min(min_mod, std::abs(target.center));
  max_mod = std::max(max_mod, std::abs(target.center));
  if (!(min_mod > 0.0)) v.push_back("target h must be non-vanishing on the grid");
  if (params.op == Operator::psi1 && params.beta != Complex{0.0, 0.0} &&
      std::abs(params.beta * (1.0 - params.alpha) * target.center) == 0.0) {
    v.push_back("beta (1 - alpha) h(0) must be non-zero");
  }
  if (params.op == Operator::psi2 && params.gamma != Complex{0.0, 0.0} &&
      params.beta != Complex{0.0, 0.0}) {
    const double s = std::abs(std::sqrt(params.gamma * params.beta));
    if (!(s * max_mod < kPi / 2)) {
      v.push_back("|sqrt(gamma beta) h(z)| < pi/2 fails on the grid (max " + fmt(s * max_mod) +
                  ")");
    }
  }
  return v;
}

void validate(const ParamSet& params, const AnalyticTarget& target, const DiskGrid& grid) {
  auto v = hypothesis_violations(params, target, grid);
  if (!v.empty()) throw ValidationError(std::move(v));
}

}  // namespace convexdom
