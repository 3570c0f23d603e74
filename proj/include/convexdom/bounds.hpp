#pragma once

// Hypergeometric functions and the lower-bound constants. For each catalog
// family lambda = Q(-1) = integral_0^1 h(-u^n) du has a closed form:
//   Janowski     2F1(1, 1/n; 1+1/n; B) - A/(n+1) 2F1(1, 1+1/n; 2+1/n; B)
//   exponential  1F1(1/n; 1/n+1; -mu)
//   square root  2F1(-1/2, 1/n; 1+1/n; kappa)
//   sector       sum_k (rho' choose k) (-c)^k 2F1(rho', 1/n+k; 1+1/n+k; -1) / (1+nk)
// and the bound on Re p is lambda pushed through the outer map of q.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "convexdom/complex_core.hpp"
#include "convexdom/targets.hpp"

namespace convexdom {

/// log Gamma(x) for real x > 0 (Lanczos, g = 7, 9 coefficients).
double lanczos_log_gamma(double x);
/// Gamma(x) for real x, reflection below 1/2. DomainError at the poles.
double lanczos_gamma(double x);

/// Gauss series; |x| < 1. Throws NonConvergenceError past 10^6 terms.
double hyp2f1_series(double a, double b, double c, double x);
/// Euler integral; needs c > b > 0 and x in [-1, 1] with a convergent endpoint.
double hyp2f1_euler(double a, double b, double c, double x);
/// Series for |x| < 0.9 or terminating series, otherwise the Euler integral
/// (with a and b swapped if that makes it applicable).
double hyp2f1(double a, double b, double c, double x);

/// Confluent series with Kummer's transformation for negative x.
double hyp1f1(double a, double b, double x);
Complex hyp1f1(double a, double b, Complex x);

struct LambdaResult {
  /// Real part is the bound constant; imaginary part is kept for complex families.
  Complex value;
  std::size_t terms = 0;
  double error_estimate = 0.0;
  std::string method;
  std::vector<std::string> tags;
};

/// lambda for one of the four families and a given n >= 1.
LambdaResult lambda_for(const BoundCase& bound_case, int n);

/// integral_0^1 h(-u^n) du by quadrature, the independent check of lambda_for.
Complex lambda_by_quadrature(const AnalyticTarget& target, int n, double tol = 1e-13);

/// Re(((beta (1-alpha) lambda)^{1/(1-alpha)} - gamma) / beta), beta > 0.
double zeta_bound(double alpha, double beta, Complex gamma, double lambda);
/// Re((sqrt(gamma/beta) tan(sqrt(gamma beta) lambda))^{1/(1-alpha)}), beta > 0.
double xi_bound(double alpha, double beta, Complex gamma, double lambda);
/// sqrt(2 (1-a) ln 2 + 2a - 1) with ln 2 = integral_0^1 dt/(1+t) by quadrature.
double eta_miller_mocanu(double a);

struct MinLocationCheck {
  double min_real = 0.0;      // min Re Q on |z| = radius
  double argmin_theta = 0.0;  // in [0, 2 pi)
  double real_at_minus = 0.0; // Re Q(-radius)
  bool at_minus_one = false;  // argmin within one sample of theta = pi
};

/// Locates min Re Q on |z| = radius by sampling.
MinLocationCheck check_min_location(const AnalyticTarget& target, int n, double radius = 0.999,
                                    std::size_t samples = 720);

struct BoundReport {
  int case_id = 0;
  ParamSet params;
  std::string target_label;
  std::vector<std::pair<std::string, double>> case_parameters;
  LambdaResult lambda;
  double quadrature_lambda_gap = 0.0;  // |lambda - integral_0^1 h(-u^n) du|
  std::optional<double> zeta;
  std::optional<double> xi;
  std::optional<MinLocationCheck> min_location;
  std::vector<std::string> tags;
};

/// lambda, the quadrature cross-check, and whichever of zeta / xi applies to
/// params.op. ValidationError if the target has no bound family.
BoundReport bound_report(const ParamSet& params, const AnalyticTarget& target,
                         bool locate_minimum = true);

}  // namespace convexdom
