#pragma once

#include <vector>

#include "nlcl/velocity.hpp"

namespace nlcl {

/// Flux f(u) = u * V(|u|) of the underlying scalar law, with derivative
/// f'(u) = V(|u|) + |u| * V'(|u|). Odd in u by construction.
class FluxFunction {
 public:
  explicit FluxFunction(VelocityModel velocity) : velocity_(std::move(velocity)) {}

  double value(double u) const {
    return u * velocity_.value(u < 0.0 ? -u : u);
  }
  double derivative(double u) const {
    const double a = u < 0.0 ? -u : u;
    return velocity_.value(a) + a * velocity_.derivative(a);
  }
  const VelocityModel& velocity() const { return velocity_; }

  /// Largest |f'| sampled on [-range_max, range_max] (2e3+1 lattice).
  double max_abs_derivative(double range_max) const;

 private:
  VelocityModel velocity_;
};

/// Exact-Riemann (Godunov) numerical flux:
///   a <= b:  min over u in [a, b] of f(u)
///   a >  b:  max over u in [b, a] of f(u)
/// The extremum is located by dense sampling (2^10 points) plus
/// golden-section refinement to 1e-12 interval width; endpoints always
/// included. Oracle-grade; for inner loops use PreparedGodunovFlux.
double godunov_flux(double a, double b, const FluxFunction& flux);

/// Same min/max definition evaluated from precomputed interior extrema of f
/// on a fixed range: each call reduces to the endpoint values plus the
/// critical values falling inside the interval. Agrees with godunov_flux to
/// the refinement tolerance; O(log #extrema) per call.
class PreparedGodunovFlux {
 public:
  PreparedGodunovFlux(FluxFunction flux, double range_min, double range_max);

  double operator()(double a, double b) const;
  const FluxFunction& flux() const { return flux_; }

 private:
  FluxFunction flux_;
  std::vector<double> critical_points_;
  std::vector<double> critical_values_;
};

}  // namespace nlcl
