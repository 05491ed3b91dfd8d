#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hscat::detail {

using cplx = std::complex<double>;

/// Neumaier compensated accumulator. Fixed order of summation makes results
/// bit-reproducible across runs.
class KahanSum {
 public:
  void add(double x) {
    const double t = s_ + x;
    if (std::abs(s_) >= std::abs(x)) {
      c_ += (s_ - t) + x;
    } else {
      c_ += (x - t) + s_;
    }
    s_ = t;
  }
  double value() const { return s_ + c_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

class KahanSumC {
 public:
  void add(cplx z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  cplx value() const { return {re_.value(), im_.value()}; }

 private:
  KahanSum re_, im_;
};

inline bool all_finite(std::span<const cplx> v) {
  for (const cplx& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

/// Least-squares fit of complex samples y(x) ~ sum_{m=1..3} c_m x^{-m}.
/// Normal equations on a 3x3 real SPD system, solved by Gaussian
/// elimination with partial pivoting. Used for integral tail corrections.
struct InversePowerFit {
  cplx c1{0.0, 0.0}, c2{0.0, 0.0}, c3{0.0, 0.0};
};

inline InversePowerFit fit_inverse_powers(std::span<const double> x,
                                          std::span<const cplx> y) {
  // A^T A c = A^T y with A_{im} = x_i^{-m}.
  double ata[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  cplx aty[3] = {cplx{0, 0}, cplx{0, 0}, cplx{0, 0}};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double u = 1.0 / x[i];
    const double b[3] = {u, u * u, u * u * u};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) ata[r][c] += b[r] * b[c];
      aty[r] += b[r] * y[i];
    }
  }
  // Gaussian elimination with partial pivoting on the augmented system.
  int perm[3] = {0, 1, 2};
  for (int k = 0; k < 3; ++k) {
    int p = k;
    for (int r = k + 1; r < 3; ++r) {
      if (std::abs(ata[perm[r]][k]) > std::abs(ata[perm[p]][k])) p = r;
    }
    std::swap(perm[k], perm[p]);
    const double piv = ata[perm[k]][k];
    if (piv == 0.0) return {};  // degenerate window, no correction
    for (int r = k + 1; r < 3; ++r) {
      const double m = ata[perm[r]][k] / piv;
      for (int c = k; c < 3; ++c) ata[perm[r]][c] -= m * ata[perm[k]][c];
      aty[perm[r]] -= m * aty[perm[k]];
    }
  }
  cplx sol[3];
  for (int k = 2; k >= 0; --k) {
    cplx s = aty[perm[k]];
    for (int c = k + 1; c < 3; ++c) s -= ata[perm[k]][c] * sol[c];
    sol[k] = s / ata[perm[k]][k];
  }
  return {sol[0], sol[1], sol[2]};
}

/// 64-bit FNV-1a hash; used for config provenance.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace hscat::detail
