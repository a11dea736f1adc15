#pragma once

#include <vector>

#include "nlcl/fields.hpp"
#include "nlcl/flux.hpp"
#include "nlcl/run_result.hpp"

namespace nlcl {

/// Convex entropy alpha with its flux beta, beta' = alpha' * f'.
///
/// Quadratic: alpha(u) = u^2/2. SmoothedKruzkov: alpha(u) =
/// sqrt((u-k)^2 + delta^2) - delta, a C^2 surrogate of |u - k|; the kink is
/// smoothed over O(delta) and perturbs the entropy functional by O(delta).
/// beta is integrated on demand by adaptive Simpson quadrature (tol 1e-10).
class EntropyPair {
 public:
  static EntropyPair quadratic();
  static EntropyPair smoothed_kruzkov(double k, double delta = 1e-3);

  double alpha(double u) const;
  double alpha_prime(double u) const;

  /// beta(u) = integral_0^u alpha'(s) f'(s) ds.
  double beta(double u, const FluxFunction& flux) const;

 private:
  EntropyPair() = default;
  bool quadratic_ = true;
  double k_ = 0.0;
  double delta_ = 1e-3;
};

/// Separable C^1 space-time bump phi(t,x) = psi((t-t0)/r_t) psi((x-x0)/r_x)
/// with psi(s) = (1-s^2)^2 on |s| < 1, zero outside.
class TestBump {
 public:
  TestBump(double t_center, double x_center, double t_radius, double x_radius);

  double value(double t, double x) const;
  double dt(double t, double x) const;
  double dx(double t, double x) const;

  double t_center() const { return t0_; }
  double x_center() const { return x0_; }
  double t_radius() const { return rt_; }
  double x_radius() const { return rx_; }

  /// sup|phi| + sup|phi_t| + sup|phi_x| (analytic).
  double c1_norm() const;

 private:
  double t0_, x0_, rt_, rx_;
};

/// Discrete entropy admissibility functional
///   E = sum_k w_k sum_i [alpha(q) phi_t + beta(q) phi_x](t_k, x_i) dx
///       + sum_i alpha(q0_i) phi(0, x_i) dx
/// over the trajectory's audit frames (trapezoid-style time weights, analytic
/// bump derivatives, midpoint in space). Throws
/// InsufficientTrajectoryResolution when the largest frame gap inside the
/// bump's time support exceeds t_radius/20.
double entropy_functional(const RunResult& traj, const EntropyPair& pair, const TestBump& bump,
                          const FluxFunction& flux);

/// L1 distance between two fields of one grid, restricted to [window_lo,
/// window_hi] (partial cells weighted by overlap length).
double l1_distance(const CellField& a, const CellField& b, double window_lo, double window_hi);

/// Sum of interior jumps |a_{i+1} - a_i|.
double total_variation(const CellField& a);

/// Block average of `factor` consecutive cells; conserves mass exactly.
CellField coarsen(const CellField& fine, std::size_t factor);

}  // namespace nlcl
