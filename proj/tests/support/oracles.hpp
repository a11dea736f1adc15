// Independent reference implementations used as test oracles. Everything here
// recomputes results by direct definition (dense summation, brute-force
// extremum search) and must stay decoupled from the library's fast paths.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "nlcl/fields.hpp"
#include "nlcl/flux.hpp"
#include "nlcl/kernel.hpp"

namespace nlcl::oracles {

/// Face averages for the exponential kernel by direct per-cell integration of
/// the kernel truncated at 40*eta upstream (mass defect e^-40).
inline std::vector<double> w_exponential_brute(const CellField& q, double eta) {
  const Grid1D& grid = q.grid();
  const double dx = grid.dx();
  const auto n = q.size();
  const auto reach = static_cast<long long>(std::ceil(40.0 * eta / dx));
  std::vector<double> w(n + 1, 0.0);
  for (std::size_t j = 0; j <= n; ++j) {
    double acc = 0.0;
    const long long first = static_cast<long long>(j) - reach;
    for (long long i = std::max(first, 0LL); i < static_cast<long long>(j); ++i) {
      // integral of exp((y - x_j)/eta)/eta over cell i, clipped to the truncation
      const double lo = std::max((static_cast<double>(i) - static_cast<double>(j)) * dx,
                                 -40.0 * eta);
      const double hi = (static_cast<double>(i) + 1.0 - static_cast<double>(j)) * dx;
      if (hi <= lo) continue;
      acc += std::abs(q[static_cast<std::size_t>(i)]) * (std::exp(hi / eta) - std::exp(lo / eta));
    }
    w[j] = acc;
  }
  return w;
}

/// Face averages for a tabulated kernel by per-cell integration, subdividing
/// every cell overlap at the kernel's own sample lattice so each slice is a
/// linear integrand (trapezoid exact).
inline std::vector<double> w_tabulated_brute(const CellField& q, const KernelSpec& kernel) {
  const Grid1D& grid = q.grid();
  const double dx = grid.dx();
  const auto n = q.size();
  const double support = kernel.support_length();
  const double h = support / static_cast<double>(kernel.samples().size() - 1);
  std::vector<double> w(n + 1, 0.0);
  for (std::size_t j = 0; j <= n; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(j, n); ++i) {
      const double y_lo = (static_cast<double>(i) - static_cast<double>(j)) * dx;
      const double y_hi = y_lo + dx;
      const double lo = std::max(y_lo, -support);
      const double hi = std::min(y_hi, 0.0);
      if (hi <= lo) continue;
      // slice [lo, hi] at sample abscissae
      double mass = 0.0;
      double a = lo;
      while (a < hi) {
        const double next_knot =
            -support + (std::floor((a + support) / h) + 1.0) * h;
        const double b = std::min(hi, next_knot);
        mass += 0.5 * (kernel.tabulated_value(a) + kernel.tabulated_value(b)) * (b - a);
        if (b <= a) break;
        a = b;
      }
      acc += std::abs(q[i]) * mass;
    }
    w[j] = acc;
  }
  return w;
}

/// Brute-force Godunov flux: min (a <= b) or max (a > b) of f over the
/// interval, by dense sampling with `samples` points, endpoints included.
template <typename F>
double godunov_brute(double a, double b, const F& f, int samples) {
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  const bool want_min = a <= b;
  double best = f(lo);
  for (int k = 1; k <= samples; ++k) {
    const double u = lo + (hi - lo) * static_cast<double>(k) / samples;
    const double v = f(u);
    best = want_min ? std::min(best, v) : std::max(best, v);
  }
  return best;
}

/// Uniformly spaced trapezoid value of integral_0^u alpha'(s) f'(s) ds.
template <typename AlphaPrime>
double beta_trapezoid(double u, const AlphaPrime& alpha_prime, const FluxFunction& flux,
                      int panels) {
  const double h = u / panels;
  double s = 0.5 * (alpha_prime(0.0) * flux.derivative(0.0) +
                    alpha_prime(u) * flux.derivative(u));
  for (int k = 1; k < panels; ++k) {
    const double x = h * k;
    s += alpha_prime(x) * flux.derivative(x);
  }
  return s * h;
}

/// Random piecewise-noisy cell field with values in [-amplitude, amplitude].
inline CellField random_field(const Grid1D& grid, double amplitude, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  std::vector<double> values(grid.n_cells());
  for (double& v : values) v = dist(rng);
  return CellField(grid, std::move(values));
}

}  // namespace nlcl::oracles
