#pragma once

#include <vector>

namespace nlcl {

/// Monotone velocity law V on w >= 0 with derivative access.
///
/// Built-ins (Identity, Square, Power 2m) have analytic derivatives; the
/// tabulated variant interpolates linearly, clamps outside the abscissa range,
/// and differentiates by central differences with step 1e-6 * scale.
class VelocityModel {
 public:
  enum class Kind { Identity, Square, Power, Tabulated };

  static VelocityModel identity();
  static VelocityModel square();
  static VelocityModel power(int two_m);  // V(w) = w^{2m}, two_m even and positive
  static VelocityModel tabulated(std::vector<double> abscissae, std::vector<double> ordinates);

  Kind kind() const { return kind_; }
  int power_exponent() const { return two_m_; }

  double value(double w) const;
  double derivative(double w) const;

  /// Largest derivative sampled on [0, range_max] (1e3-point lattice).
  double lipschitz_on(double range_max) const;

 private:
  VelocityModel() = default;

  Kind kind_ = Kind::Identity;
  int two_m_ = 0;
  std::vector<double> abscissae_;
  std::vector<double> ordinates_;
};

struct ValidationReport {
  bool monotone = false;
  double lipschitz = 0.0;
  double range_max = 0.0;
};

/// Samples V on [0, range_max] (1e3 points); throws NonMonotoneVelocity if a
/// sampled decrease exceeds 1e-12 * scale, otherwise reports the Lipschitz
/// estimate from the derivative lattice.
ValidationReport validate_velocity(const VelocityModel& v, double range_max);

}  // namespace nlcl
