#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace hscat::detail {

/// In-place iterative radix-2 FFT. sign = -1 gives sum_m x_m e^{-2pi i jm/n}
/// (the forward transform in this project's convention), sign = +1 the
/// unnormalized inverse. n must be a power of two.
///
/// Twiddles come from a table filled with direct cos/sin calls, so rounding
/// does not accumulate across butterfly stages and results are
/// bit-reproducible for identical inputs.
inline void fft_radix2(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  if (n < 2) return;
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<std::complex<double>> tw(n / 2);
  const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double th = ang * static_cast<double>(j);
    tw[j] = {std::cos(th), std::sin(th)};
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> w = tw[k * stride];
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

inline void fft_forward(std::vector<std::complex<double>>& a) { fft_radix2(a, -1); }

inline void fft_inverse(std::vector<std::complex<double>>& a) {
  fft_radix2(a, +1);
  const double inv = 1.0 / static_cast<double>(a.size());
  for (auto& z : a) z *= inv;
}

}  // namespace hscat::detail
