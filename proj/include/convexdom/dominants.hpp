#pragma once

// Best dominants q and majorants H of the two exact subordinations
//
//   psi1(p, zp') = (beta p + gamma)^{1-alpha} / (beta (1-alpha)) + zp' (beta p + gamma)^{-alpha}
//   psi2(p, zp') = arctan(sqrt(beta/gamma) p^{1-alpha}) / sqrt(gamma beta)
//                  + (1-alpha) zp' / (p^alpha (beta p^{2(1-alpha)} + gamma))
//
// Both are built as G^{1/(1-alpha)} for an inner function G of Q (for q) or
// of h (for H):
//   psi1: G = beta (1-alpha) F,              q = (G^{1/(1-alpha)} - gamma) / beta
//   psi2: G = sqrt(gamma/beta) tan(sqrt(gamma beta) F),  q = G^{1/(1-alpha)}
// The fractional power is continued along each grid ray from z = 0, where it
// takes the principal value that defines a0.

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "convexdom/complex_core.hpp"
#include "convexdom/integral_op.hpp"
#include "convexdom/targets.hpp"

namespace convexdom {

enum class DominantKind {
  best_dominant,  // q, built from Q
  majorant,       // H, built from h
};

struct DominantField {
  ParamSet params;
  AnalyticTarget target;
  DiskGrid grid;
  DominantKind kind = DominantKind::best_dominant;
  /// Indexed by grid.index(ray, ring). d1/d2 are empty for value-only builds.
  std::vector<Complex> values;
  std::vector<Complex> d1;
  std::vector<Complex> d2;
  Complex a0;
  /// Per ray: the continued power left the principal branch somewhere.
  std::vector<bool> off_principal;
  /// |value extrapolated to z = 0 - a0|; NaN when not checked.
  double center_gap = 0.0;

  bool has_derivatives() const noexcept { return !d1.empty(); }
  std::size_t rays_off_principal() const noexcept;
};

struct BuildOptions {
  double quad_tol = kDefaultQuadTol;
  bool derivatives = true;
  bool check_center = true;
};

/// Center value p(0) forced by h(0) = a and the operator parameters.
Complex a0_of(const ParamSet& params, const AnalyticTarget& target);

/// Builds q or H on the grid for params.op.
DominantField build_dominant(const ParamSet& params, const AnalyticTarget& target,
                             const DiskGrid& grid, DominantKind kind,
                             const BuildOptions& options = {});

DominantField build_q1(const ParamSet& params, const AnalyticTarget& target,
                       const DiskGrid& grid, const BuildOptions& options = {});
DominantField build_H1(const ParamSet& params, const AnalyticTarget& target,
                       const DiskGrid& grid, const BuildOptions& options = {});
DominantField build_q2(const ParamSet& params, const AnalyticTarget& target,
                       const DiskGrid& grid, const BuildOptions& options = {});
DominantField build_H2(const ParamSet& params, const AnalyticTarget& target,
                       const DiskGrid& grid, const BuildOptions& options = {});

/// Single value of q or H, continued along [0, z]. Returns a0 at z = 0.
Complex dominant_value(const ParamSet& params, const AnalyticTarget& target,
                       DominantKind kind, Complex z, double quad_tol = kDefaultQuadTol);

/// Image of |z| = r under q or H, `samples` points, closed.
BoundaryCurve dominant_boundary(const ParamSet& params, const AnalyticTarget& target,
                                DominantKind kind, double r, std::size_t samples,
                                double quad_tol = kDefaultQuadTol);

struct PsiValue {
  Complex value;
  Operator op;
};

PsiValue eval_psi1(Complex p, Complex zp, const ParamSet& params);
PsiValue eval_psi2(Complex p, Complex zp, const ParamSet& params);
PsiValue eval_psi(Complex p, Complex zp, const ParamSet& params);

/// The zp' that makes psi(p, zp') = w; psi is affine in its second argument.
Complex solve_psi_for_zp(Complex p, Complex w, const ParamSet& params);

struct ExactnessSample {
  Complex z;
  Complex p;
};

struct ExactnessResult {
  double residual = 0.0;
  std::size_t used = 0;
  std::size_t skipped = 0;
};

/// max |dM/dp - dN/dz| over the samples for the split psi = M(z, p) + N(z, p) p'.
/// `n_scale` multiplies N (1 for the real identity; 2 gives a broken control).
/// Samples whose stencil would cross a branch cut are skipped; DomainError if
/// every sample is skipped.
ExactnessResult exactness_residual(Operator op, const ParamSet& params,
                                   std::span<const ExactnessSample> samples,
                                   double n_scale = 1.0);

/// Samples with |z| < 0.9 and p kept well away from the cuts of the powers.
std::vector<ExactnessSample> random_exactness_samples(const ParamSet& params, std::size_t count,
                                                      std::mt19937_64& rng);

/// max over the grid of |psi(q, n z q') - h(z)|.
double ode_residual(const DominantField& field, const AnalyticTarget& target);

}  // namespace convexdom
