#pragma once

#include <vector>

#include "hscat/grid.hpp"
#include "hscat/transforms.hpp"

namespace hscat {

enum class HalfPlane { upper, lower };

/// Boundary values of a Hardy-class function on a full-line grid, together
/// with a constructive membership certificate: the relative Fourier mass on
/// the class-forbidden frequency half-line, measured by whichever
/// constructor built the object (frequency projection, the explicit
/// Hilbert-pair construction, or a closed form known to be analytic).
class HardyBoundary {
 public:
  /// Frequency-support projection of arbitrary samples; certificate is exact
  /// by construction.
  static HardyBoundary project(const SampledFunction& f, HalfPlane half);

  /// Wrap samples whose class membership is certified by the caller's
  /// construction, with the mass ratio it measured.
  static HardyBoundary from_certified(SampledFunction boundary, HalfPlane half,
                                      double forbidden_mass_ratio);

  const SampledFunction& boundary() const { return boundary_; }
  HalfPlane half() const { return half_; }
  double forbidden_mass_ratio() const { return mass_ratio_; }

  /// Boundary with values multiplied elementwise by e^{-iEt}. Preserves the
  /// lower class for t >= 0 and the upper class for t <= 0.
  HardyBoundary modulate(double t) const;

  /// a*this + b*other on the same grid and half.
  static HardyBoundary combine(cplx a, const HardyBoundary& x, cplx b,
                               const HardyBoundary& y);

 private:
  HardyBoundary(SampledFunction b, HalfPlane h, double mass);
  SampledFunction boundary_;
  HalfPlane half_;
  double mass_ratio_;
};

/// Riesz projection onto boundary values of the upper / lower Hardy class.
/// P_upper + P_lower = id and P_upper P_lower = 0 hold exactly on the grid
/// (the k = 0 bin is assigned to the upper class).
HardyBoundary riesz_project(const SampledFunction& f, HalfPlane half);

/// Cauchy-integral evaluation of the Hardy extension at z off the axis,
/// G(z) = (+-1)/(2 pi i) * integral b(E)/(E - z) dE (sign by class).
/// The grid quadrature is corrected by fitted c1/E + c2/E^2 + c3/E^3 tails,
/// so boundaries with slow algebraic decay evaluate accurately.
cplx halfplane_eval(const HardyBoundary& b, cplx z);

/// Squared L2 norm along the horizontal line at height alpha into the
/// analytic half-plane, computed spectrally:
/// M(alpha) = (1/2pi) * integral over the class support of
///            e^{-2 alpha k} |bhat(k)|^2 dk.
/// alpha >= 0 for the upper class, alpha <= 0 for the lower class;
/// alpha = 0 returns the plain squared L2 norm.
double line_norm(const HardyBoundary& b, double alpha);

/// A member of the restricted-boundary space: a function on the positive
/// half-line together with its two explicit full-line Hardy extensions
/// hilbert(f) + i f (upper) and hilbert(f) - i f (lower), built from a
/// smooth source f supported exactly on x <= 0. The two extensions agree on
/// the positive axis, where both equal hilbert(f).
struct DeltaElement {
  SampledFunction source;     // f on the full-line grid
  HardyBoundary g_plus;       // upper extension, hilbert(f) + i f
  HardyBoundary g_minus;      // lower extension, hilbert(f) - i f
  SampledFunction restriction;  // common values interpolated to a half-line grid

  /// Diagnostic seminorms of the source on the negative axis:
  /// sup|f|, sup|f'|, sup|f''| (finite stand-in for the smooth topology).
  std::vector<double> source_seminorms() const;
};

DeltaElement build_delta_element(const SampledFunction& f);

struct BreakReport {
  double t = 0.0;
  std::vector<double> alphas;
  std::vector<double> ratios;    // N_t(-alpha) / N_0(-alpha), lower extension
  std::vector<double> expected;  // e^{2 t alpha}
  double max_relative_error = 0.0;
  bool bounded_side_ok = false;  // sup_alpha e^{-2 t alpha} M(alpha) <= M(alpha_min)
};

/// Time-evolution breakdown: for t > 0 the damped-line norms of
/// e^{itE} g_minus grow like e^{2 t alpha} below the axis (no time evolution
/// for the lower extension), while the upper extension's line norms stay
/// bounded.
BreakReport time_evolution_break_check(const DeltaElement& d, double t,
                                       std::span<const double> alphas);

}  // namespace hscat
