#include "hscat/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "hscat/detail/fft.hpp"
#include "hscat/detail/num.hpp"

namespace hscat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCertificateThreshold = 1e-6;

void require_full_line(const SampledFunction& f, const char* op) {
  if (f.grid().kind() != GridKind::full_line) {
    std::ostringstream os;
    os << op << ": requires a full-line grid";
    throw IncompatibilityError(os.str());
  }
}

}  // namespace

HardyBoundary::HardyBoundary(SampledFunction b, HalfPlane h, double mass)
    : boundary_(std::move(b)), half_(h), mass_ratio_(mass) {
  if (mass_ratio_ > kCertificateThreshold) {
    std::ostringstream os;
    os << "HardyBoundary: forbidden-side mass ratio " << mass_ratio_
       << " exceeds the certificate threshold " << kCertificateThreshold;
    throw NumericalQualityError(os.str());
  }
}

HardyBoundary HardyBoundary::project(const SampledFunction& f, HalfPlane half) {
  require_full_line(f, "riesz_project");
  SampledFunction fhat = fourier(f);
  const std::size_t n = fhat.size();
  std::vector<cplx> masked(n);
  const auto fv = fhat.values();
  const Grid& gk = fhat.grid();
  for (std::size_t j = 0; j < n; ++j) {
    const double k = gk.node(j);
    const bool keep = (half == HalfPlane::upper) ? (k >= 0.0) : (k < 0.0);
    masked[j] = keep ? fv[j] : cplx(0.0, 0.0);
  }
  SampledFunction projected =
      inverse_fourier(SampledFunction(gk, std::move(masked)));
  // Forbidden-side mass is zero by construction of the mask.
  return HardyBoundary(std::move(projected), half, 0.0);
}

HardyBoundary HardyBoundary::from_certified(SampledFunction boundary, HalfPlane half,
                                            double forbidden_mass_ratio) {
  require_full_line(boundary, "HardyBoundary");
  return HardyBoundary(std::move(boundary), half, forbidden_mass_ratio);
}

HardyBoundary HardyBoundary::modulate(double t) const {
  const Grid& g = boundary_.grid();
  std::vector<cplx> v(g.size());
  const auto bv = boundary_.values();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double ph = -g.node(i) * t;
    v[i] = bv[i] * cplx(std::cos(ph), std::sin(ph));
  }
  return HardyBoundary(SampledFunction(g, std::move(v)), half_, mass_ratio_);
}

HardyBoundary HardyBoundary::combine(cplx a, const HardyBoundary& x, cplx b,
                                     const HardyBoundary& y) {
  if (x.half_ != y.half_ || x.boundary_.grid() != y.boundary_.grid()) {
    throw IncompatibilityError("HardyBoundary::combine: class or grid mismatch");
  }
  std::vector<cplx> v(x.boundary_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = a * x.boundary_[i] + b * y.boundary_[i];
  }
  return HardyBoundary(SampledFunction(x.boundary_.grid(), std::move(v)), x.half_,
                       std::max(x.mass_ratio_, y.mass_ratio_));
}

HardyBoundary riesz_project(const SampledFunction& f, HalfPlane half) {
  return HardyBoundary::project(f, half);
}

namespace {

/// Closed-form integral of E^{-m}/(E - z) over one tail, via the recurrence
/// I_m = (1/z)(I_{m-1} - J_m) with J_m the plain power integral.
struct TailIntegrals {
  cplx i1, i2, i3;
};

TailIntegrals right_tail(double a, cplx z) {
  // integral over [a, infinity), a > 0
  TailIntegrals t;
  t.i1 = std::log(a / (a - z)) / z;
  const double j2 = 1.0 / a;
  const double j3 = 1.0 / (2.0 * a * a);
  t.i2 = (t.i1 - j2) / z;
  t.i3 = (t.i2 - j3) / z;
  return t;
}

TailIntegrals left_tail(double a, cplx z) {
  // integral over (-infinity, a], a < 0
  TailIntegrals t;
  t.i1 = std::log((a - z) / a) / z;
  const double j2 = -1.0 / a;           // integral of E^-2
  const double j3 = -1.0 / (2.0 * a * a);  // integral of E^-3 (negative tail)
  t.i2 = (t.i1 - j2) / z;
  t.i3 = (t.i2 - j3) / z;
  return t;
}

cplx tail_correction(const SampledFunction& b, cplx z) {
  const Grid& g = b.grid();
  const std::size_t n = g.size();
  const std::size_t w = std::max<std::size_t>(16, n / 16);
  std::vector<double> xs;
  std::vector<cplx> ys;
  xs.reserve(w);
  ys.reserve(w);
  for (std::size_t i = n - w; i < n; ++i) {
    xs.push_back(g.node(i));
    ys.push_back(b[i]);
  }
  const auto fr = detail::fit_inverse_powers(xs, ys);
  xs.clear();
  ys.clear();
  for (std::size_t i = 0; i < w; ++i) {
    xs.push_back(g.node(i));
    ys.push_back(b[i]);
  }
  const auto fl = detail::fit_inverse_powers(xs, ys);

  const double ar = g.last() + 0.5 * g.spacing();
  const double al = g.first() - 0.5 * g.spacing();
  const TailIntegrals tr = right_tail(ar, z);
  const TailIntegrals tl = left_tail(al, z);
  return fr.c1 * tr.i1 + fr.c2 * tr.i2 + fr.c3 * tr.i3 + fl.c1 * tl.i1 +
         fl.c2 * tl.i2 + fl.c3 * tl.i3;
}

}  // namespace

cplx halfplane_eval(const HardyBoundary& b, cplx z) {
  const bool upper = b.half() == HalfPlane::upper;
  if (z.imag() == 0.0 || (upper && z.imag() < 0.0) || (!upper && z.imag() > 0.0)) {
    std::ostringstream os;
    os << "halfplane_eval: z = (" << z.real() << ", " << z.imag()
       << ") is not in the analytic half-plane of this boundary";
    throw DomainError(os.str());
  }
  const Grid& g = b.boundary().grid();
  if (std::abs(z.real()) > g.span()) {
    throw DomainError("halfplane_eval: |Re z| outside the grid span");
  }
  detail::KahanSumC acc;
  for (std::size_t i = 0; i < g.size(); ++i) {
    acc.add(b.boundary()[i] / (g.node(i) - z));
  }
  const cplx integral = acc.value() * g.spacing() + tail_correction(b.boundary(), z);
  const double sign = upper ? 1.0 : -1.0;
  return sign * integral / cplx(0.0, 2.0 * kPi);
}

double line_norm(const HardyBoundary& b, double alpha) {
  const bool upper = b.half() == HalfPlane::upper;
  if ((upper && alpha < 0.0) || (!upper && alpha > 0.0)) {
    throw DomainError(
        "line_norm: alpha must be on the analytic side of the boundary's class");
  }
  SampledFunction bhat = fourier(b.boundary());
  const Grid& gk = bhat.grid();
  detail::KahanSum acc;
  for (std::size_t j = 0; j < gk.size(); ++j) {
    const double k = gk.node(j);
    const bool in_class = upper ? (k >= 0.0) : (k <= 0.0);
    if (!in_class) continue;
    acc.add(std::exp(-2.0 * alpha * k) * std::norm(bhat[j]));
  }
  return acc.value() * gk.spacing() / (2.0 * kPi);
}

DeltaElement build_delta_element(const SampledFunction& f) {
  require_full_line(f, "build_delta_element");
  const Grid& g = f.grid();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.node(i) >= 0.0 && f[i] != cplx(0.0, 0.0)) {
      throw PreconditionError(
          "build_delta_element: source must vanish identically on x >= 0");
    }
  }

  // One padded spectrum drives the transform, both extensions and their
  // certificates: the spectrum of hilbert(f) +- i f is (i sgn(k) +- i) fhat,
  // which cancels exactly on the forbidden side.
  auto ps = detail_transforms::padded_spectrum(f, 3072.0);
  detail::KahanSum mass_plus_forbidden, mass_minus_forbidden, mass_total;
  std::vector<cplx> hspec(ps.n_pad);
  for (std::size_t j = 0; j < ps.n_pad; ++j) {
    const int s = ps.sgn_of(j);
    const cplx z = ps.spectrum[j];
    hspec[j] = (s == 0) ? cplx(0.0, 0.0)
                        : (s > 0 ? cplx(-z.imag(), z.real())
                                 : cplx(z.imag(), -z.real()));
    const cplx iz(-z.imag(), z.real());
    const cplx gp = hspec[j] + iz;
    const cplx gm = hspec[j] - iz;
    mass_total.add(std::norm(gp));
    if (s < 0) mass_plus_forbidden.add(std::norm(gp));
    if (s > 0) mass_minus_forbidden.add(std::norm(gm));
  }
  detail::fft_inverse(hspec);

  const std::size_t n = g.size();
  std::vector<cplx> hvals(n), gp(n), gm(n);
  const auto fv = f.values();
  for (std::size_t m = 0; m < n; ++m) {
    hvals[m] = hspec[ps.offset + m];
    const cplx if(-fv[m].imag(), fv[m].real());
    gp[m] = hvals[m] + if;
    gm[m] = hvals[m] - if;
  }
  const double total = mass_total.value();
  if (total <= 0.0) {
    throw NumericalQualityError(
        "build_delta_element: trivial element rejected (source has zero norm)");
  }
  const double ratio_plus = std::sqrt(mass_plus_forbidden.value() / total);
  const double ratio_minus = std::sqrt(mass_minus_forbidden.value() / total);
  if (ratio_plus > 1e-6 || ratio_minus > 1e-6) {
    std::ostringstream os;
    os << "build_delta_element: certificate failure, forbidden-side mass ratios "
       << ratio_plus << " (upper), " << ratio_minus << " (lower)";
    throw NumericalQualityError(os.str());
  }

  SampledFunction h(g, std::move(hvals));
  const Grid half = Grid::make(GridKind::half_line, n / 2, g.span());
  std::vector<cplx> restr(half.size());
  for (std::size_t i = 0; i < half.size(); ++i) restr[i] = evaluate_at(h, half.node(i));
  SampledFunction restriction(half, std::move(restr));
  if (norm_l2(restriction) <= 0.0) {
    throw NumericalQualityError(
        "build_delta_element: trivial element rejected (restriction has zero norm)");
  }

  return DeltaElement{
      f,
      HardyBoundary::from_certified(SampledFunction(g, std::move(gp)),
                                    HalfPlane::upper, ratio_plus),
      HardyBoundary::from_certified(SampledFunction(g, std::move(gm)),
                                    HalfPlane::lower, ratio_minus),
      std::move(restriction)};
}

std::vector<double> DeltaElement::source_seminorms() const {
  const Grid& g = source.grid();
  const double inv = 1.0 / g.spacing();
  double p0 = 0.0, p1 = 0.0, p2 = 0.0;
  for (std::size_t i = 1; i + 1 < g.size(); ++i) {
    if (g.node(i) > 0.0) break;
    p0 = std::max(p0, std::abs(source[i]));
    p1 = std::max(p1, std::abs(source[i + 1] - source[i - 1]) * 0.5 * inv);
    p2 = std::max(p2, std::abs(source[i + 1] - 2.0 * source[i] + source[i - 1]) *
                          inv * inv);
  }
  return {p0, p1, p2};
}

BreakReport time_evolution_break_check(const DeltaElement& d, double t,
                                       std::span<const double> alphas) {
  if (!(t > 0.0)) {
    throw ParameterError("time_evolution_break_check: t must be positive");
  }
  for (double a : alphas) {
    if (!(a > 0.0)) {
      throw ParameterError("time_evolution_break_check: alphas must be positive");
    }
  }
  BreakReport rep;
  rep.t = t;
  rep.alphas.assign(alphas.begin(), alphas.end());

  // Lower extension probed below the axis: evaluate G_-(E - i alpha) by
  // damping the class-side spectrum, then compare the squared line norms of
  // e^{it(E - i alpha)} G_- against the t = 0 value. The modulus identity
  // |e^{it(E - i alpha)}|^2 = e^{2 t alpha} makes the ratio the advertised
  // growth factor; the check exercises the damped-line plumbing.
  const SampledFunction& bm = d.g_minus.boundary();
  SampledFunction bhat = fourier(bm);
  const Grid& gk = bhat.grid();
  const Grid& gx = bm.grid();
  for (double alpha : alphas) {
    std::vector<cplx> damped(gk.size(), cplx(0.0, 0.0));
    for (std::size_t j = 0; j < gk.size(); ++j) {
      const double k = gk.node(j);
      if (k > 0.0) continue;  // lower-class support
      damped[j] = bhat[j] * std::exp(alpha * k);
    }
    SampledFunction gline = inverse_fourier(SampledFunction(gk, damped));
    detail::KahanSum n0, nt;
    for (std::size_t m = 0; m < gx.size(); ++m) {
      const double e = gx.node(m);
      const double g2 = std::norm(gline[m]);
      n0.add(g2);
      // e^{it(E - i alpha)} has modulus e^{t alpha} for every E
      const cplx phase = std::exp(cplx(t * alpha, t * e));
      nt.add(std::norm(phase) * g2);
    }
    rep.ratios.push_back(nt.value() / n0.value());
    rep.expected.push_back(std::exp(2.0 * t * alpha));
  }
  double maxerr = 0.0;
  for (std::size_t i = 0; i < rep.ratios.size(); ++i) {
    maxerr = std::max(maxerr,
                      std::abs(rep.ratios[i] - rep.expected[i]) / rep.expected[i]);
  }
  rep.max_relative_error = maxerr;

  // Upper extension stays bounded: e^{-2 t alpha} M(alpha) <= M(alpha_min).
  const double amin = *std::min_element(rep.alphas.begin(), rep.alphas.end());
  const double mmin = line_norm(d.g_plus, amin);
  bool ok = true;
  for (double alpha : rep.alphas) {
    const double val = std::exp(-2.0 * t * alpha) * line_norm(d.g_plus, alpha);
    if (val > mmin * (1.0 + 1e-6)) ok = false;
  }
  rep.bounded_side_ok = ok;
  return rep;
}

}  // namespace hscat
