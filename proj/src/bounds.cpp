#include "convexdom/bounds.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <variant>

#include "convexdom/integral_op.hpp"

namespace convexdom {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr std::size_t kSeriesCap = 1000000;
constexpr double kSeriesRel = 1e-15;
constexpr double kSeriesSwitch = 0.9;

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

double lanczos_log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("lanczos_log_gamma needs x > 0");
  if (x < 0.5) {
    // reflection keeps the Lanczos sum in its accurate range
    return std::log(kPi / std::abs(std::sin(kPi * x))) - lanczos_log_gamma(1.0 - x);
  }
  const double xm = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (xm + static_cast<double>(i));
  const double t = xm + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (xm + 0.5) * std::log(t) - t + std::log(sum);
}

double lanczos_gamma(double x) {
  if (nonpositive_integer(x)) throw DomainError("Gamma has a pole at non-positive integers");
  if (x < 0.5) return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
  return std::exp(lanczos_log_gamma(x));
}

double hyp2f1_series(double a, double b, double c, double x) {
  if (nonpositive_integer(c)) throw DomainError("2F1: c is a non-positive integer");
  if (!(std::abs(x) < 1.0)) throw DomainError("2F1 series needs |x| < 1");
  double term = 1.0;
  double sum = 1.0;
  for (std::size_t k = 0; k < kSeriesCap; ++k) {
    const double kd = static_cast<double>(k);
    term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * x;
    sum += term;
    if (term == 0.0 || std::abs(term) < kSeriesRel * std::abs(sum)) return sum;
  }
  throw NonConvergenceError("2F1 series did not converge", sum);
}

double hyp2f1_euler(double a, double b, double c, double x) {
  if (!(c > b && b > 0.0)) throw UnsupportedParametersError("2F1 Euler integral needs c > b > 0");
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("2F1 Euler integral needs x in [-1, 1]");
  const double m = c - b - 1.0;
  // Exponent of (1 - t) at t = 1, folding in (1 - x t)^{-a} when x = 1.
  const double mu = x == 1.0 ? m - a : m;
  if (!(mu > -1.0)) throw DomainError("2F1 diverges at x = 1 unless c - a - b > 0");
  constexpr double tol = 1e-15;

  // [0, 1/2]: t = u^{1/b} absorbs t^{b-1}.
  const double u_end = std::pow(0.5, b);
  const auto left = quad_adaptive(
      [&](double u) {
        const double t = std::pow(u, 1.0 / b);
        return Complex(std::pow(1.0 - t, m) * std::pow(1.0 - x * t, -a) / b);
      },
      0.0, u_end, tol);

  // [1/2, 1]: 1 - t = v^{1/(mu+1)} absorbs the endpoint power.
  const double v_end = std::pow(0.5, mu + 1.0);
  const auto right = quad_adaptive(
      [&](double v) {
        const double s = std::pow(v, 1.0 / (mu + 1.0));
        const double t = 1.0 - s;
        double f = std::pow(t, b - 1.0);
        if (x != 1.0) f *= std::pow(1.0 - x * t, -a);
        return Complex(f / (mu + 1.0));
      },
      0.0, v_end, tol);

  const double pref =
      std::exp(lanczos_log_gamma(c) - lanczos_log_gamma(b) - lanczos_log_gamma(c - b));
  return pref * (left.value + right.value).real();
}

double hyp2f1(double a, double b, double c, double x) {
  if (nonpositive_integer(c)) throw DomainError("2F1: c is a non-positive integer");
  if (x == 0.0) return 1.0;
  if (std::abs(x) > 1.0) throw DomainError("2F1 is only supported for x in [-1, 1]");
  if (x == 1.0 && !(c - a - b > 0.0)) throw DomainError("2F1 diverges at x = 1");
  if (x == -1.0 && !(c - a - b > -1.0)) throw DomainError("2F1 diverges at x = -1");
  const bool terminating = nonpositive_integer(a) || nonpositive_integer(b);
  if (std::abs(x) < kSeriesSwitch || (terminating && std::abs(x) < 1.0)) {
    return hyp2f1_series(a, b, c, x);
  }
  if (c > b && b > 0.0) return hyp2f1_euler(a, b, c, x);
  if (c > a && a > 0.0) return hyp2f1_euler(b, a, c, x);
  throw UnsupportedParametersError("2F1: no method covers these parameters near |x| = 1");
}

namespace {

template <typename T>
T confluent_series(double a, double b, T x) {
  T term = 1.0;
  T sum = 1.0;
  for (std::size_t k = 0; k < kSeriesCap; ++k) {
    const double kd = static_cast<double>(k);
    term *= (a + kd) / ((b + kd) * (kd + 1.0)) * x;
    sum += term;
    if (std::abs(term) == 0.0 || std::abs(term) < kSeriesRel * std::abs(sum)) return sum;
  }
  throw NonConvergenceError("1F1 series did not converge", std::abs(sum));
}

}  // namespace

double hyp1f1(double a, double b, double x) {
  if (nonpositive_integer(b)) throw DomainError("1F1: b is a non-positive integer");
  if (std::abs(x) > 700.0) throw RangeError("1F1: |x| > 700 overflows");
  if (x < 0.0) return std::exp(x) * confluent_series(b - a, b, -x);
  return confluent_series(a, b, x);
}

Complex hyp1f1(double a, double b, Complex x) {
  if (nonpositive_integer(b)) throw DomainError("1F1: b is a non-positive integer");
  if (std::abs(x) > 700.0) throw RangeError("1F1: |x| > 700 overflows");
  if (x.real() < 0.0) return std::exp(x) * confluent_series(b - a, b, -x);
  return confluent_series(a, b, x);
}

namespace {

constexpr double kSectorTermTol = 1e-12;
constexpr std::size_t kSectorCap = 500;
constexpr double kLevinAccept = 1e-10;
constexpr std::size_t kLevinMax = 40;

struct Accelerated {
  Complex value;
  double error;
  std::size_t order;
};

// Levin u-transform of the partial sums (beta = 1), best order by the
// difference of consecutive transforms.
std::optional<Accelerated> levin_u(const std::vector<Complex>& terms) {
  const std::size_t count = std::min(terms.size(), kLevinMax + 1);
  std::vector<Complex> partial(count);
  Complex s{0.0, 0.0};
  for (std::size_t j = 0; j < count; ++j) {
    if (terms[j] == Complex{0.0, 0.0}) return std::nullopt;
    s += terms[j];
    partial[j] = s;
  }
  std::optional<Accelerated> best;
  Complex prev{};
  for (std::size_t k = 1; k < count; ++k) {
    Complex num{0.0, 0.0}, den{0.0, 0.0};
    double binom = 1.0;
    for (std::size_t j = 0; j <= k; ++j) {
      const double kd = static_cast<double>(k), jd = static_cast<double>(j);
      const double w = ((j % 2) ? -1.0 : 1.0) * binom * std::pow((1.0 + jd) / (1.0 + kd), kd - 1.0);
      const Complex omega = (1.0 + jd) * terms[j];
      num += w * partial[j] / omega;
      den += w / omega;
      binom *= (kd - jd) / (jd + 1.0);
    }
    const Complex lk = num / den;
    if (k >= 2 && is_finite(lk)) {
      const double err = std::abs(lk - prev);
      if (!best || err < best->error) best = Accelerated{lk, err, k};
    }
    prev = lk;
  }
  return best;
}

LambdaResult sector_lambda(double rho1, double rho2, int n) {
  const double rho = (rho1 - rho2) / (rho1 + rho2);
  const double rp = 0.5 * (rho1 + rho2);
  const Complex c = std::polar(1.0, kPi * rho);
  const double nd = static_cast<double>(n);

  LambdaResult out;
  std::vector<Complex> terms;
  Complex sum{0.0, 0.0};
  Complex coeff{1.0, 0.0};  // (rho' choose k) (-c)^k
  bool converged = false;
  for (std::size_t k = 0; k <= kSectorCap; ++k) {
    const double kd = static_cast<double>(k);
    if (k > 0) coeff *= (rp - kd + 1.0) / kd * (-c);
    Complex term{0.0, 0.0};
    if (coeff != Complex{0.0, 0.0}) {
      term = coeff * hyp2f1(rp, 1.0 / nd + kd, 1.0 + 1.0 / nd + kd, -1.0) / (1.0 + nd * kd);
    }
    terms.push_back(term);
    sum += term;
    if (std::abs(term) <= kSectorTermTol) {
      out.terms = k + 1;
      out.error_estimate = std::abs(term);
      converged = true;
      break;
    }
  }
  if (converged) {
    out.value = sum;
    out.method = "binomial series";
  } else {
    const auto acc = levin_u(terms);
    if (!acc || !(acc->error < kLevinAccept)) {
      throw NonConvergenceError("sector lambda series did not converge within 500 terms",
                                sum.real());
    }
    out.value = acc->value;
    out.terms = acc->order + 1;
    out.error_estimate = acc->error;
    out.method = "binomial series, Levin u-transform";
  }
  if (rho1 != rho2) {
    out.tags.push_back("complex-lambda");
  } else if (std::abs(out.value.imag()) >= 1e-9) {
    throw NumericError("sector lambda has an imaginary residue for real c");
  }
  return out;
}

}  // namespace

LambdaResult lambda_for(const BoundCase& bound_case, int n) {
  if (n < 1) throw ValidationError("n must be a positive integer");
  const double nd = static_cast<double>(n);
  const double inv = 1.0 / nd;
  return std::visit(
      [&](const auto& cs) -> LambdaResult {
        using T = std::decay_t<decltype(cs)>;
        LambdaResult out;
        if constexpr (std::is_same_v<T, JanowskiCase>) {
          if (!(-1.0 <= cs.B && cs.B < cs.A && cs.A <= 1.0)) {
            throw ValidationError("janowski bound needs -1 <= B < A <= 1");
          }
          out.value = hyp2f1(1.0, inv, 1.0 + inv, cs.B) -
                      cs.A / (nd + 1.0) * hyp2f1(1.0, 1.0 + inv, 2.0 + inv, cs.B);
          out.method = "2F1";
        } else if constexpr (std::is_same_v<T, ExpCase>) {
          if (!(std::abs(cs.mu) <= 1.0)) throw ValidationError("exp bound needs |mu| <= 1");
          if (cs.mu.imag() == 0.0) {
            out.value = hyp1f1(inv, inv + 1.0, -cs.mu.real());
          } else {
            out.value = hyp1f1(inv, inv + 1.0, -cs.mu);
          }
          out.method = "1F1";
          if (!(cs.mu.imag() == 0.0 && cs.mu.real() > 0.0 && cs.mu.real() <= 1.0)) {
            out.tags.push_back("min-location unverified");
          }
        } else if constexpr (std::is_same_v<T, SqrtCase>) {
          if (!(0.0 <= cs.kappa && cs.kappa <= 1.0)) {
            throw ValidationError("sqrt bound needs kappa in [0, 1]");
          }
          out.value = hyp2f1(-0.5, inv, 1.0 + inv, cs.kappa);
          out.method = "2F1";
        } else {
          if (!(0.0 < cs.rho1 && cs.rho1 <= 1.0 && 0.0 < cs.rho2 && cs.rho2 <= 1.0)) {
            throw ValidationError("sector bound needs 0 < rho1, rho2 <= 1");
          }
          out = sector_lambda(cs.rho1, cs.rho2, n);
        }
        if (!is_finite(out.value)) throw NumericError("lambda is not finite");
        return out;
      },
      bound_case);
}

Complex lambda_by_quadrature(const AnalyticTarget& target, int n, double tol) {
  return quad_unit([&](double u) { return target.eval(-std::pow(u, n)); }, tol);
}

double zeta_bound(double alpha, double beta, Complex gamma, double lambda) {
  if (!(beta > 0.0)) throw ValidationError("zeta bound needs real beta > 0");
  const Complex base = beta * (1.0 - alpha) * lambda;
  const Complex p = principal_pow(base, 1.0 / (1.0 - alpha));
  return ((p - gamma) / beta).real();
}

double xi_bound(double alpha, double beta, Complex gamma, double lambda) {
  if (!(beta > 0.0)) throw ValidationError("xi bound needs real beta > 0");
  if (gamma == Complex{0.0, 0.0}) throw ValidationError("xi bound needs gamma != 0");
  const Complex s = std::sqrt(gamma * beta);
  const Complex arg = s * lambda;
  if (!(std::abs(arg) < kPi / 2)) throw DomainError("xi bound needs |sqrt(gamma beta) lambda| < pi/2");
  const Complex base = gamma / s * std::tan(arg);
  return principal_pow(base, 1.0 / (1.0 - alpha)).real();
}

double eta_miller_mocanu(double a) {
  if (!(0.0 <= a && a < 1.0)) throw ValidationError("eta needs 0 <= a < 1");
  const double beta1 = quad_unit([](double t) { return Complex(1.0 / (1.0 + t)); }, 1e-14).real();
  if (std::abs(beta1 - std::log(2.0)) > 1e-12) {
    throw NonConvergenceError("beta(1) quadrature disagrees with ln 2", beta1);
  }
  const double radicand = 2.0 * (1.0 - a) * beta1 + (2.0 * a - 1.0);
  if (radicand < 0.0) throw DomainError("eta radicand is negative");
  return std::sqrt(radicand);
}

MinLocationCheck check_min_location(const AnalyticTarget& target, int n, double radius,
                                    std::size_t samples) {
  const QEvaluator q(target, n);
  MinLocationCheck out;
  out.min_real = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < samples; ++j) {
    const double th = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(samples);
    const double v = q.value(std::polar(radius, th)).real();
    if (v < out.min_real) {
      out.min_real = v;
      out.argmin_theta = th;
    }
  }
  out.real_at_minus = q.value(-radius).real();
  const double spacing = 2.0 * kPi / static_cast<double>(samples);
  out.at_minus_one = std::abs(out.argmin_theta - kPi) <= 1.5 * spacing ||
                     out.real_at_minus <= out.min_real + 1e-12;
  return out;
}

BoundReport bound_report(const ParamSet& params, const AnalyticTarget& target,
                         bool locate_minimum) {
  if (!target.bound_case) {
    throw ValidationError("target '" + target.label + "' has no closed-form bound");
  }
  BoundReport r;
  r.case_id = case_id(*target.bound_case);
  r.params = params;
  r.target_label = target.label;
  r.case_parameters = target.parameters;
  r.lambda = lambda_for(*target.bound_case, params.n);
  r.quadrature_lambda_gap = std::abs(r.lambda.value - lambda_by_quadrature(target, params.n));
  r.tags = r.lambda.tags;
  const double lam = r.lambda.value.real();
  const bool real_beta = params.beta.imag() == 0.0 && params.beta.real() > 0.0;
  if (!real_beta) {
    r.tags.push_back("bound formula needs real beta > 0");
  } else if (params.op == Operator::psi1) {
    r.zeta = zeta_bound(params.alpha, params.beta.real(), params.gamma, lam);
  } else {
    r.xi = xi_bound(params.alpha, params.beta.real(), params.gamma, lam);
  }
  if (locate_minimum) {
    r.min_location = check_min_location(target, params.n);
    if (!r.min_location->at_minus_one) r.tags.push_back("minimum of Re Q not at z = -1");
  }
  return r;
}

}  // namespace convexdom
