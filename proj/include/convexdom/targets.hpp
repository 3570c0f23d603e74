#pragma once

// Catalog of convex, non-vanishing targets h and the operator parameters
// (alpha, beta, gamma, n) that go with them.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "convexdom/complex_core.hpp"

namespace convexdom {

// Closed-form families for which the lower-bound constants are known.
struct JanowskiCase {
  double A;
  double B;
};
struct ExpCase {
  Complex mu;
};
struct SqrtCase {
  double kappa;
};
struct SectorCase {
  double rho1;
  double rho2;
};
using BoundCase = std::variant<JanowskiCase, ExpCase, SqrtCase, SectorCase>;

/// 1-based family index: Janowski 1, exponential 2, square root 3, sector 4.
int case_id(const BoundCase& c) noexcept;

struct AnalyticTarget {
  std::string label;
  /// Constructor precondition, quoted in validation reports.
  std::string constraint_note;
  ComplexMap eval;
  ComplexMap d1;
  ComplexMap d2;
  Complex center;
  std::vector<std::pair<std::string, double>> parameters;
  std::optional<BoundCase> bound_case;
};

/// (1 + A z)/(1 + B z), -1 <= B < A <= 1.
AnalyticTarget make_janowski(double A, double B);
/// exp(mu z), |mu| <= 1.
AnalyticTarget make_exp(Complex mu);
/// Principal sqrt(1 + kappa z), 0 <= kappa <= 1.
AnalyticTarget make_sqrt(double kappa);
/// ((1 + c z)/(1 - z))^rho', c = exp(i pi rho), continued from h(0) = 1.
AnalyticTarget make_sector(double rho1, double rho2);
/// (x0 + z)/(x0 - z), x0 > 1. r0 is accepted and ignored.
AnalyticTarget make_shifted_halfplane(double x0, double r0 = 0.0);

struct TargetSelfTest {
  double max_derivative_error = 0.0;  // |d1 - num_deriv| and |d2 - num_deriv|
  double convexity_margin = 0.0;      // min Re(1 + z d2/d1)
  double min_modulus = 0.0;           // min |h|
  double center_error = 0.0;          // |center - eval(0)|
  bool passed = false;
};

/// Derivative consistency at `probes` random grid points plus convexity and
/// non-vanishing over the whole grid. Deterministic for a given seed.
TargetSelfTest self_test(const AnalyticTarget& target, const DiskGrid& grid,
                         std::size_t probes = 100, unsigned long long seed = 7);

/// User-supplied target. Runs self_test on a 0.95 grid and throws
/// ValidationError listing the failed checks.
AnalyticTarget make_custom(std::string label, ComplexMap eval, ComplexMap d1, ComplexMap d2);

enum class Operator { psi1, psi2 };

std::string to_string(Operator op);
Operator operator_from_string(const std::string& name);

struct ParamSet {
  double alpha = 0.0;
  Complex beta{1.0, 0.0};
  Complex gamma{0.0, 0.0};
  int n = 1;
  Operator op = Operator::psi1;
};

/// Every violated hypothesis of the matching theorem, evaluated on `grid`.
/// Empty when the configuration is admissible.
std::vector<std::string> hypothesis_violations(const ParamSet& params,
                                               const AnalyticTarget& target,
                                               const DiskGrid& grid);

/// Throws ValidationError with all of hypothesis_violations().
void validate(const ParamSet& params, const AnalyticTarget& target, const DiskGrid& grid);

/// Principal sqrt(gamma beta); sqrt(gamma/beta) and sqrt(beta/gamma) are taken
/// as gamma/s and s/gamma so the three roots share one sign.
struct Psi2Roots {
  Complex s;          // sqrt(gamma beta)
  Complex gb_ratio;   // sqrt(gamma / beta)
  Complex bg_ratio;   // sqrt(beta / gamma)
};
Psi2Roots psi2_roots(const ParamSet& params);

}  // namespace convexdom
