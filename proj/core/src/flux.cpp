#include "nlcl/flux.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace nlcl {

namespace {

// Golden-section refinement of a minimum of g inside [lo, hi], down to
// kWidthTol interval width. Assumes g is unimodal on the bracket.
constexpr double kWidthTol = 1e-12;

double golden_min(double lo, double hi, const std::function<double(double)>& g) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double g1 = g(x1);
  double g2 = g(x2);
  while (hi - lo > kWidthTol) {
    if (g1 <= g2) {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - invphi * (hi - lo);
      g1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + invphi * (hi - lo);
      g2 = g(x2);
    }
  }
  return 0.5 * (lo + hi);
}

double extremum_over(double lo, double hi, const FluxFunction& flux, bool want_min) {
  constexpr int kSamples = 1024;
  const double sign = want_min ? 1.0 : -1.0;
  const auto g = [&](double u) { return sign * flux.value(u); };
  const double step = (hi - lo) / kSamples;
  double best_u = lo;
  double best_g = g(lo);
  for (int k = 1; k <= kSamples; ++k) {
    const double u = (k == kSamples) ? hi : lo + step * k;
    const double gu = g(u);
    if (gu < best_g) {
      best_g = gu;
      best_u = u;
    }
  }
  const double ref = golden_min(std::max(lo, best_u - step), std::min(hi, best_u + step), g);
  double out = std::min({g(ref), g(lo), g(hi), best_g});
  return sign * out;
}

}  // namespace

double FluxFunction::max_abs_derivative(double range_max) const {
  constexpr int kLatticePoints = 2001;
  double m = 0.0;
  for (int i = 0; i < kLatticePoints; ++i) {
    const double u = -range_max + 2.0 * range_max * static_cast<double>(i) / (kLatticePoints - 1);
    m = std::max(m, std::abs(derivative(u)));
  }
  return m;
}

double godunov_flux(double a, double b, const FluxFunction& flux) {
  if (a == b) return flux.value(a);
  if (a < b) return extremum_over(a, b, flux, /*want_min=*/true);
  return extremum_over(b, a, flux, /*want_min=*/false);
}

PreparedGodunovFlux::PreparedGodunovFlux(FluxFunction flux, double range_min, double range_max)
    : flux_(std::move(flux)) {
  // Interior extrema of f on the range: bracket every slope sign change on a
  // dense lattice, then refine. Monotone fluxes yield no entries.
  constexpr int kScan = 4096;
  const double step = (range_max - range_min) / kScan;
  double prev_u = range_min;
  double prev_f = flux_.value(prev_u);
  double cur_u = range_min + step;
  double cur_f = flux_.value(cur_u);
  for (int k = 1; k < kScan; ++k) {
    const double next_u = (k + 1 == kScan) ? range_max : range_min + step * (k + 1);
    const double next_f = flux_.value(next_u);
    const double dl = cur_f - prev_f;
    const double dr = next_f - cur_f;
    if ((dl < 0.0 && dr > 0.0) || (dl > 0.0 && dr < 0.0)) {
      const bool is_min = dl < 0.0;
      const double sign = is_min ? 1.0 : -1.0;
      const double u =
          golden_min(prev_u, next_u, [&](double x) { return sign * flux_.value(x); });
      critical_points_.push_back(u);
      critical_values_.push_back(flux_.value(u));
    }
    prev_u = cur_u;
    prev_f = cur_f;
    cur_u = next_u;
    cur_f = next_f;
  }
}

double PreparedGodunovFlux::operator()(double a, double b) const {
  const double fa = flux_.value(a);
  if (a == b) return fa;
  const double fb = flux_.value(b);
  const bool want_min = a < b;
  const double lo = want_min ? a : b;
  const double hi = want_min ? b : a;
  double best = want_min ? std::min(fa, fb) : std::max(fa, fb);
  auto it = std::lower_bound(critical_points_.begin(), critical_points_.end(), lo);
  for (; it != critical_points_.end() && *it < hi; ++it) {
    const double fc = critical_values_[static_cast<std::size_t>(it - critical_points_.begin())];
    best = want_min ? std::min(best, fc) : std::max(best, fc);
  }
  return best;
}

}  // namespace nlcl
