#include "hscat/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "hscat/detail/num.hpp"

namespace hscat {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

Grid Grid::make(GridKind kind, std::size_t n, double span) {
  if (!is_pow2(n) || n < 16) {
    std::ostringstream os;
    os << "make_grid: n must be a power of two >= 16, got n=" << n;
    throw ParameterError(os.str());
  }
  if (!(span > 0.0) || !std::isfinite(span)) {
    std::ostringstream os;
    os << "make_grid: span must be positive and finite, got span=" << span;
    throw ParameterError(os.str());
  }
  const double covered = (kind == GridKind::full_line) ? 2.0 * span : span;
  const double spacing = covered / static_cast<double>(n);
  return Grid(kind, n, span, spacing);
}

Grid make_grid(GridKind kind, std::size_t n, double span) {
  return Grid::make(kind, n, span);
}

SampledFunction::SampledFunction(Grid grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw IncompatibilityError("SampledFunction: values length does not match grid size");
  }
  if (!detail::all_finite(values_)) {
    throw NumericalQualityError("SampledFunction: non-finite values");
  }
}

namespace {

void check_family_params(int k, double s) {
  if (k < 0 || k > 8) {
    std::ostringstream os;
    os << "test function index must satisfy 0 <= k <= 8, got k=" << k;
    throw ParameterError(os.str());
  }
  if (!(s > 0.0) || !std::isfinite(s)) {
    std::ostringstream os;
    os << "test function scale must be positive, got scale=" << s;
    throw ParameterError(os.str());
  }
}

double negative_support_value(int k, double y) {
  if (y >= 0.0) return 0.0;
  // exp(y + 1/y + k log(-y)), assembled in the exponent to avoid 0 * inf
  // at the extremes of the support.
  const double expo = y + 1.0 / y + (k > 0 ? static_cast<double>(k) * std::log(-y) : 0.0);
  if (expo < -700.0) return 0.0;
  const double mag = std::exp(expo);
  return (k % 2 == 0) ? mag : -mag;
}

double hermite_value(int n, double y) {
  // normalized Hermite functions, h_0 = pi^{-1/4} exp(-y^2/2),
  // h_{m+1} = y sqrt(2/(m+1)) h_m - sqrt(m/(m+1)) h_{m-1}
  const double h0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * y * y);
  if (n == 0) return h0;
  double prev = h0;
  double cur = std::sqrt(2.0) * y * h0;
  for (int m = 1; m < n; ++m) {
    const double next = y * std::sqrt(2.0 / (m + 1.0)) * cur -
                        std::sqrt(static_cast<double>(m) / (m + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx gaussian_rational_value(int k, double y) {
  const cplx den = cplx(y, 1.0);
  cplx denp = den;
  for (int m = 0; m < k; ++m) denp *= den;
  return std::exp(-0.5 * y * y) / denp;
}

}  // namespace

TestFunctionDescriptor TestFunctionDescriptor::negative_support(int k, double scale,
                                                                double center) {
  check_family_params(k, scale);
  if (center > 0.0) {
    throw ParameterError("negative-support family requires center <= 0");
  }
  return {TestFamily::negative_support, k, scale, center};
}

TestFunctionDescriptor TestFunctionDescriptor::hermite(int n, double scale,
                                                       double center) {
  check_family_params(n, scale);
  return {TestFamily::hermite, n, scale, center};
}

TestFunctionDescriptor TestFunctionDescriptor::gaussian_rational(int k, double scale,
                                                                 double center) {
  check_family_params(k, scale);
  return {TestFamily::gaussian_rational, k, scale, center};
}

cplx TestFunctionDescriptor::evaluate(double x) const {
  const double y = (x - center) / scale;
  switch (family) {
    case TestFamily::negative_support:
      return negative_support_value(index, y);
    case TestFamily::hermite:
      return hermite_value(index, y) / std::sqrt(scale);
    case TestFamily::gaussian_rational:
      return gaussian_rational_value(index, y);
  }
  return 0.0;
}

SampledFunction sample(const TestFunctionDescriptor& desc, const Grid& grid) {
  check_family_params(desc.index, desc.scale);
  std::vector<cplx> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = desc.evaluate(grid.node(i));
  return SampledFunction(grid, std::move(v));
}

cplx inner_product(const SampledFunction& f, const SampledFunction& g) {
  if (f.grid() != g.grid()) {
    throw IncompatibilityError("inner_product: grids differ");
  }
  detail::KahanSumC acc;
  const auto fv = f.values();
  const auto gv = g.values();
  for (std::size_t i = 0; i < fv.size(); ++i) acc.add(std::conj(fv[i]) * gv[i]);
  return acc.value() * f.grid().spacing();
}

double norm_l2(const SampledFunction& f) {
  detail::KahanSum acc;
  for (const cplx& z : f.values()) acc.add(std::norm(z));
  return std::sqrt(acc.value() * f.grid().spacing());
}

cplx evaluate_at(const SampledFunction& f, double x) {
  const Grid& g = f.grid();
  if (!(x >= g.first() && x <= g.last())) {
    std::ostringstream os;
    os << "evaluate_at: x=" << x << " outside grid span [" << g.first() << ", "
       << g.last() << "]";
    throw DomainError(os.str());
  }
  const double u = (x - g.first()) / g.spacing();
  const std::size_t n = g.size();
  const auto nearest = static_cast<std::size_t>(std::llround(u));
  if (nearest < n && std::abs(x - g.node(nearest)) <=
                         4.0 * std::abs(x) * 1e-16 + 1e-300) {
    return f[nearest];  // exact at nodes
  }
  // 4-point Lagrange stencil, shifted inward at the edges
  auto i0 = static_cast<std::ptrdiff_t>(std::floor(u)) - 1;
  if (i0 < 0) i0 = 0;
  if (i0 > static_cast<std::ptrdiff_t>(n) - 4) i0 = static_cast<std::ptrdiff_t>(n) - 4;
  cplx acc(0.0, 0.0);
  for (int a = 0; a < 4; ++a) {
    const double xa = g.node(static_cast<std::size_t>(i0 + a));
    double w = 1.0;
    for (int b = 0; b < 4; ++b) {
      if (b == a) continue;
      const double xb = g.node(static_cast<std::size_t>(i0 + b));
      w *= (x - xb) / (xa - xb);
    }
    acc += w * f[static_cast<std::size_t>(i0 + a)];
  }
  return acc;
}

}  // namespace hscat
