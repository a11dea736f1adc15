#include "nlcl/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nlcl/errors.hpp"

namespace nlcl {

namespace {

constexpr double kBetaTol = 1e-10;

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate(const F& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  return adaptive_simpson(f, a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 40);
}

double psi(double s) {
  const double t = 1.0 - s * s;
  return t > 0.0 ? t * t : 0.0;
}

double psi_prime(double s) {
  const double t = 1.0 - s * s;
  return t > 0.0 ? -4.0 * s * t : 0.0;
}

}  // namespace

EntropyPair EntropyPair::quadratic() { return EntropyPair{}; }

EntropyPair EntropyPair::smoothed_kruzkov(double k, double delta) {
  if (!(delta > 0.0)) {
    throw ValidationError("smoothed Kruzkov entropy needs delta > 0");
  }
  EntropyPair p;
  p.quadratic_ = false;
  p.k_ = k;
  p.delta_ = delta;
  return p;
}

double EntropyPair::alpha(double u) const {
  if (quadratic_) return 0.5 * u * u;
  const double d = u - k_;
  return std::sqrt(d * d + delta_ * delta_) - delta_;
}

double EntropyPair::alpha_prime(double u) const {
  if (quadratic_) return u;
  const double d = u - k_;
  return d / std::sqrt(d * d + delta_ * delta_);
}

double EntropyPair::beta(double u, const FluxFunction& flux) const {
  return integrate([&](double s) { return alpha_prime(s) * flux.derivative(s); }, 0.0, u,
                   kBetaTol);
}

TestBump::TestBump(double t_center, double x_center, double t_radius, double x_radius)
    : t0_(t_center), x0_(x_center), rt_(t_radius), rx_(x_radius) {
  if (!(t_radius > 0.0) || !(x_radius > 0.0)) {
    throw ValidationError("bump radii must be positive");
  }
}

double TestBump::value(double t, double x) const {
  return psi((t - t0_) / rt_) * psi((x - x0_) / rx_);
}

double TestBump::dt(double t, double x) const {
  return psi_prime((t - t0_) / rt_) / rt_ * psi((x - x0_) / rx_);
}

double TestBump::dx(double t, double x) const {
  return psi((t - t0_) / rt_) * psi_prime((x - x0_) / rx_) / rx_;
}

double TestBump::c1_norm() const {
  // max|psi| = 1 at s = 0; max|psi'| = 8/(3 sqrt(3)) at s = 1/sqrt(3).
  const double psi_prime_max = 8.0 / (3.0 * std::sqrt(3.0));
  return 1.0 + psi_prime_max / rt_ + psi_prime_max / rx_;
}

double entropy_functional(const RunResult& traj, const EntropyPair& pair, const TestBump& bump,
                          const FluxFunction& flux) {
  if (traj.audit.empty()) {
    throw InsufficientTrajectoryResolution("trajectory has no audit frames");
  }
  const auto& frames = traj.audit;
  const double t_lo = bump.t_center() - bump.t_radius();
  const double t_hi = bump.t_center() + bump.t_radius();
  double max_gap = 0.0;
  for (std::size_t k = 1; k < frames.size(); ++k) {
    const double a = frames[k - 1].time;
    const double b = frames[k].time;
    if (b > t_lo && a < t_hi) max_gap = std::max(max_gap, b - a);
  }
  if (frames.back().time < t_hi) {
    throw InsufficientTrajectoryResolution(
        "trajectory ends at t = " + std::to_string(frames.back().time) +
        " before the bump's time support closes at " + std::to_string(t_hi));
  }
  if (max_gap > bump.t_radius() / 20.0) {
    throw InsufficientTrajectoryResolution(
        "audit stride too coarse for the bump: frame gap " + std::to_string(max_gap) +
        " exceeds t_radius/20 = " + std::to_string(bump.t_radius() / 20.0));
  }

  const Grid1D& grid = frames.front().q.grid();
  const double dx = grid.dx();
  // Cells inside the bump's spatial support.
  const double x_lo = bump.x_center() - bump.x_radius();
  const double x_hi = bump.x_center() + bump.x_radius();
  const auto i_lo = static_cast<std::size_t>(
      std::clamp((x_lo - grid.x_min()) / dx, 0.0, static_cast<double>(grid.n_cells())));
  const auto i_hi = static_cast<std::size_t>(
      std::clamp((x_hi - grid.x_min()) / dx + 1.0, 0.0, static_cast<double>(grid.n_cells())));

  double e = 0.0;
  for (std::size_t k = 0; k < frames.size(); ++k) {
    const double t = frames[k].time;
    if (t <= t_lo || t >= t_hi) continue;
    const double prev = k > 0 ? frames[k - 1].time : frames[k].time;
    const double next = k + 1 < frames.size() ? frames[k + 1].time : frames[k].time;
    const double weight = 0.5 * (next - prev);
    const CellField& q = frames[k].q;
    double slab = 0.0;
    for (std::size_t i = i_lo; i < i_hi; ++i) {
      const double x = grid.cell_center(i);
      slab += pair.alpha(q[i]) * bump.dt(t, x) + pair.beta(q[i], flux) * bump.dx(t, x);
    }
    e += weight * slab * dx;
  }
  // Initial-datum boundary term carries everything the bump does before t = 0.
  const CellField& q0 = frames.front().q;
  if (frames.front().time == 0.0 && bump.value(0.0, bump.x_center()) > 0.0) {
    double init = 0.0;
    for (std::size_t i = i_lo; i < i_hi; ++i) {
      init += pair.alpha(q0[i]) * bump.value(0.0, grid.cell_center(i));
    }
    e += init * dx;
  }
  return e;
}

double l1_distance(const CellField& a, const CellField& b, double window_lo, double window_hi) {
  if (!(a.grid() == b.grid())) {
    throw GridMismatch("l1_distance needs both fields on one grid");
  }
  if (!(window_lo < window_hi)) {
    throw ValidationError("l1_distance window must have positive length");
  }
  const Grid1D& grid = a.grid();
  const double dx = grid.dx();
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double cl = grid.face_coord(i);
    const double cr = cl + dx;
    const double overlap = std::min(cr, window_hi) - std::max(cl, window_lo);
    if (overlap > 0.0) sum += std::abs(a[i] - b[i]) * overlap;
  }
  return sum;
}

double total_variation(const CellField& a) {
  double tv = 0.0;
  for (std::size_t i = 1; i < a.size(); ++i) tv += std::abs(a[i] - a[i - 1]);
  return tv;
}

CellField coarsen(const CellField& fine, std::size_t factor) {
  if (factor == 0 || fine.size() % factor != 0) {
    throw IncompatibleFactor("cannot coarsen " + std::to_string(fine.size()) + " cells by " +
                             std::to_string(factor));
  }
  const Grid1D& fg = fine.grid();
  Grid1D coarse(fg.x_min(), fg.x_max(), fg.n_cells() / factor);
  std::vector<double> values(coarse.n_cells());
  for (std::size_t i = 0; i < values.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < factor; ++j) s += fine[i * factor + j];
    values[i] = s / static_cast<double>(factor);
  }
  return CellField(coarse, std::move(values));
}

}  // namespace nlcl
