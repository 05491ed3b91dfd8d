#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "hscat/errors.hpp"

namespace hscat {

using cplx = std::complex<double>;

enum class GridKind { full_line, half_line };

/// Uniform sampling grid. Full-line grids cover [-L, L) symmetrically about
/// zero with the right endpoint excluded; half-line grids cover (0, L] with
/// midpoint offset, so the first node sits at spacing/2 and E = 0 is never
/// a node. Immutable after construction.
class Grid {
 public:
  static Grid make(GridKind kind, std::size_t n, double span);

  GridKind kind() const { return kind_; }
  std::size_t size() const { return n_; }
  double span() const { return span_; }
  double spacing() const { return spacing_; }

  double node(std::size_t i) const {
    return kind_ == GridKind::full_line
               ? -span_ + static_cast<double>(i) * spacing_
               : (static_cast<double>(i) + 0.5) * spacing_;
  }
  double first() const { return node(0); }
  double last() const { return node(n_ - 1); }
  bool contains(double x) const { return x >= first() && x <= last(); }

  bool operator==(const Grid& o) const {
    return kind_ == o.kind_ && n_ == o.n_ && span_ == o.span_;
  }
  bool operator!=(const Grid& o) const { return !(*this == o); }

 private:
  Grid(GridKind kind, std::size_t n, double span, double spacing)
      : kind_(kind), n_(n), span_(span), spacing_(spacing) {}
  GridKind kind_;
  std::size_t n_;
  double span_;
  double spacing_;
};

Grid make_grid(GridKind kind, std::size_t n, double span);

/// Complex-valued function sampled on a Grid. Values are validated to be
/// finite on construction; all operations producing SampledFunctions go
/// through this check.
class SampledFunction {
 public:
  SampledFunction(Grid grid, std::vector<cplx> values);

  const Grid& grid() const { return grid_; }
  std::span<const cplx> values() const { return values_; }
  const cplx& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  /// Copy with values transformed elementwise.
  template <class F>
  SampledFunction map(F&& f) const {
    std::vector<cplx> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(grid_.node(i), values_[i]);
    return SampledFunction(grid_, std::move(out));
  }

 private:
  Grid grid_;
  std::vector<cplx> values_;
};

enum class TestFamily { negative_support, hermite, gaussian_rational };

/// Descriptor of a test-function family member.
///
/// negative_support: f_k(x) = y^k exp(y + 1/y) for y = (x-c)/s < 0, else
///   exactly 0. Smooth on all of R, supported on x <= c <= 0.
/// hermite: L2-normalized Hermite function h_k((x-c)/s)/sqrt(s).
/// gaussian_rational: exp(-y^2/2)/(y+i)^{k+1}, y = (x-c)/s; a smooth
///   complex-valued function leaning toward the upper Hardy class.
struct TestFunctionDescriptor {
  TestFamily family = TestFamily::hermite;
  int index = 0;
  double scale = 1.0;
  double center = 0.0;

  static TestFunctionDescriptor negative_support(int k, double scale = 1.0,
                                                 double center = 0.0);
  static TestFunctionDescriptor hermite(int n, double scale = 1.0,
                                        double center = 0.0);
  static TestFunctionDescriptor gaussian_rational(int k, double scale = 1.0,
                                                  double center = 0.0);

  cplx evaluate(double x) const;
};

SampledFunction sample(const TestFunctionDescriptor& desc, const Grid& grid);

/// Quadrature inner product (f, g) = sum conj(f)*g*spacing, conjugate-linear
/// in the first argument. Compensated summation in fixed index order.
cplx inner_product(const SampledFunction& f, const SampledFunction& g);

double norm_l2(const SampledFunction& f);

/// Cubic interpolation through the four nearest grid points; exact at nodes.
cplx evaluate_at(const SampledFunction& f, double x);

}  // namespace hscat
