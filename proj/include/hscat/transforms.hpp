#pragma once

#include "hscat/grid.hpp"

namespace hscat {

/// Pinned transform conventions for the whole project.
///
/// Forward Fourier transform: fhat(k) = integral e^{-ikx} f(x) dx.
/// Hilbert multiplier: hilbert(f) = F^{-1}[ +i sgn(k) fhat(k) ], which is
/// the convolution of f with the kernel -(1/pi) PV(1/x).
///
/// With these signs, hilbert(f) + i f has Fourier support on k > 0 (upper
/// Hardy class) and hilbert(f) - i f on k < 0 (lower class).
struct TransformConvention {
  static constexpr int fourier_sign = -1;
  static constexpr int hilbert_multiplier_sign = +1;
};

/// Samples of fhat on the dual grid (spacing 2*pi/(n*dx), symmetric about 0,
/// same full-line layout as position grids). Spectrally accurate for smooth
/// decaying input; Plancherel holds: ||fhat||^2 = 2*pi*||f||^2.
SampledFunction fourier(const SampledFunction& f);

/// Inverse of `fourier`; round trips reproduce the input to roundoff.
SampledFunction inverse_fourier(const SampledFunction& fhat);

/// Hilbert transform by the sign multiplier. The multiplier is applied on an
/// internally zero-extended copy of the grid so that the result matches the
/// line convolution rather than its circular (periodized) variant; the
/// extension is an implementation detail and the output lives on f's grid.
SampledFunction hilbert(const SampledFunction& f);

/// Independent oracle for `hilbert`: direct principal-value quadrature of
/// the convolution with -(1/pi) PV(1/x), with symmetric exclusion of the
/// singular node and odd-reflection acceleration (equivalently, a punctured
/// sum corrected by the integrand's derivative at the singularity). O(n^2),
/// spectrally accurate for smooth functions supported inside the grid.
SampledFunction pv_convolution_oracle(const SampledFunction& f);

enum class FrequencySide { negative, positive };

struct PropositionReport {
  /// Relative L2 mass of F(hilbert(f) +/- i f) on the half-line where it
  /// should vanish.
  double vanishing_mass_ratio = 0.0;
  /// Relative L2 deviation of the surviving part from +/- 2i fhat.
  double nonvanishing_deviation = 0.0;
  FrequencySide vanished_side = FrequencySide::negative;
};

/// For f supported exactly on x <= 0, checks that the Fourier transform of
/// hilbert(f) + sign*i*f vanishes on one frequency half-line and equals
/// sign*2i*fhat on the other. sign must be +1 or -1.
PropositionReport proposition_check(const SampledFunction& f, int sign);

namespace detail_transforms {
/// Shared internal: spectrum of f on the zero-extended analysis grid, with
/// pad chosen so the extended span is at least `min_span`. Returns the
/// padded arrays; used by hilbert, proposition_check and the Hardy
/// certificate machinery.
struct PaddedSpectrum {
  std::size_t n_pad = 0;
  std::size_t offset = 0;  // index of f's first sample in the padded array
  double spacing = 0.0;
  std::vector<cplx> spectrum;  // plain FFT layout (bin j=0 is k=0)
  double k_of(std::size_t j) const;
  int sgn_of(std::size_t j) const;  // sign of k, 0 at k=0, -1 at Nyquist
};
PaddedSpectrum padded_spectrum(const SampledFunction& f, double min_span);
}  // namespace detail_transforms

}  // namespace hscat
