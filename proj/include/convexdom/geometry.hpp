#pragma once

// Geometric checks on built dominants: convexity margins, subordination
// containment by winding numbers, sharpness scans, and a radial ODE solver
// that manufactures solutions p of psi(p, zp') = h(omega(z)).

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "convexdom/complex_core.hpp"
#include "convexdom/dominants.hpp"
#include "convexdom/targets.hpp"

namespace convexdom {

/// omega(z) = e^{i theta} z (z + c)/(1 + conj(c) z), |c| < 1.
class SchwarzMap {
 public:
  SchwarzMap(double theta, Complex c);

  double theta() const noexcept { return theta_; }
  Complex c() const noexcept { return c_; }
  Complex operator()(Complex z) const;
  ComplexMap as_map() const;

 private:
  double theta_;
  Complex c_;
};

/// theta uniform on [0, 2 pi), c uniform by area on |c| <= 0.7.
SchwarzMap random_schwarz_map(std::mt19937_64& rng);

/// q' vanished at a grid point, so univalence cannot be judged.
class NonUnivalentError : public NumericError {
 public:
  NonUnivalentError(Complex z, const std::string& what);
  Complex where() const noexcept { return z_; }

 private:
  Complex z_;
};

/// min over the grid of Re(1 + z f''/f').
double convexity_margin(const DominantField& field);
double convexity_margin(const ComplexMap& d1, const ComplexMap& d2, const DiskGrid& grid);

/// convexity margin > alpha_thresh, alpha_thresh in [-1/2, 0].
bool univalence_margin(const DominantField& field, double alpha_thresh);
bool univalence_margin(double margin, double alpha_thresh);

enum class ContainmentStatus { inside, outside, inconclusive };

std::string to_string(ContainmentStatus s);

struct ContainmentResult {
  ContainmentStatus status = ContainmentStatus::inside;
  std::size_t checked = 0;
  std::size_t outside_count = 0;
  /// First point (in the inner map's domain) that is outside or undecidable.
  std::optional<Complex> witness;
};

/// Every inner value must have winding number 1 with respect to `outer`.
/// ValidationError when the two centers differ by more than 1e-8.
ContainmentResult containment(std::span<const Complex> inner_values,
                              std::span<const Complex> inner_points, Complex inner_center,
                              const BoundaryCurve& outer, Complex outer_center);

/// inner field at |z| <= r_inner against the image of |z| = r_outer under outer.
ContainmentResult containment(const DominantField& inner, const DominantField& outer,
                              double r_inner, double r_outer, std::size_t samples = 2048);

struct SharpnessRow {
  double r = 0.0;
  double min_real = 0.0;
  double argmin_theta = 0.0;
};

/// min over |z| = r of Re of the field's map (q or H) for each radius.
std::vector<SharpnessRow> sharpness_scan(const DominantField& field, std::span<const double> radii,
                                         std::size_t thetas = 720);

struct PSolution {
  DiskGrid grid;
  std::vector<Complex> p;         // indexed like the grid
  std::vector<Complex> zp;        // z p'(z) from the equation
  std::vector<Complex> f_over_z;  // (integral_0^z p) / z
  /// max |psi(p, z p') - h(omega(z))| with z p' measured by differencing the
  /// integrated solution.
  double self_residual = 0.0;
  std::size_t rejected_steps = 0;
};

inline constexpr double kOdeStart = 1e-4;
inline constexpr double kOdeMaxStep = 1e-3;
inline constexpr double kOdeMinStep = 1e-7;

/// Integrates psi(p, z p') = h(omega(z)) outward along each grid ray from
/// p(1e-4 e^{i theta}) = a0 with step-doubling RK4 in r.
PSolution ode_solve_p(const ParamSet& params, const AnalyticTarget& target,
                      const ComplexMap& omega, const DiskGrid& grid);

}  // namespace convexdom
