#pragma once

// Verification suites. Each returns a report of named checks; a report passes
// only when every check passes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convexdom/bounds.hpp"
#include "convexdom/dominants.hpp"
#include "convexdom/geometry.hpp"

namespace convexdom {

enum class CheckStatus { pass, fail, inconclusive };

std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  double value = 0.0;
  double threshold = 0.0;
  std::string relation;  // "<", ">", "==", ">=" ...
  std::string detail;
};

struct Counterexample {
  std::string check;
  std::string configuration;
  double theta = 0.0;  // Schwarz map parameters
  Complex c;
  Complex z;
  double value = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  std::optional<double> convexity_margin_q;
  std::optional<double> convexity_margin_H;
  std::optional<bool> chain_ok;
  std::vector<SharpnessRow> sharpness_table;
  std::optional<double> ode_max_residual;
  std::optional<std::size_t> rays_off_principal;
  std::vector<Counterexample> counterexamples;
  /// Checks that were deliberately not run, with the reason.
  std::vector<std::string> skipped;

  bool passed() const;
  void expect_below(std::string name, double value, double threshold, std::string detail = {});
  void expect_above(std::string name, double value, double threshold, std::string detail = {});
  void expect_true(std::string name, bool ok, std::string detail = {});
  void merge(const VerificationReport& other, const std::string& prefix);
};

inline constexpr double kInnerRadius = 0.95;
inline constexpr double kBoundaryRadius = 0.999;
inline constexpr std::size_t kBoundarySamples = 2048;

/// Radii used for sharpness tables.
std::vector<double> default_sharpness_radii();

struct ConfigurationRun {
  DominantField q;
  DominantField H;
  VerificationReport report;
};

/// Builds q and H, then checks the center, the defining equation, convexity of
/// both, q inside H, and (when a bound applies) the sharpness table.
ConfigurationRun verify_configuration(const ParamSet& params, const AnalyticTarget& target,
                                      const DiskGrid& grid);

/// The three worked examples against their closed forms.
VerificationReport run_examples_suite(const DiskGrid& grid);

/// Exactness residuals of psi1 and psi2 on random samples plus the broken control.
VerificationReport run_exactness_suite(std::size_t samples, std::uint64_t seed);

/// min Re q on growing circles against zeta / xi for bound cases (i)-(iii).
VerificationReport run_sharpness_suite();

/// Manufactured f' with Re(f' + z f'') > 0: lower bounds on Re f', Re f/z
/// and Re sqrt(f/z).
VerificationReport run_univalence_suite(std::size_t samples, std::uint64_t seed,
                                        const DiskGrid& grid);

/// Random Schwarz maps x catalog targets x both operators: p inside q inside H,
/// convexity of q and H, and the lower bound on Re p.
VerificationReport run_property_suite(std::size_t samples, std::uint64_t seed,
                                      const DiskGrid& grid);

}  // namespace convexdom
