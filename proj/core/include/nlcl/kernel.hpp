#pragma once

#include <vector>

namespace nlcl {

/// One-sided averaging kernel supported on y <= 0 with unit mass.
///
/// Exponential: gamma_eta(y) = exp(y/eta)/eta (unit mass analytically).
/// TabulatedBV: nonnegative samples on a uniform lattice over
/// [-support_length, 0], interpreted piecewise-linearly and normalized to
/// unit trapezoidal mass at construction.
class KernelSpec {
 public:
  enum class Variant { Exponential, TabulatedBV };

  static KernelSpec exponential(double eta);
  static KernelSpec tabulated_bv(double support_length, std::vector<double> samples);

  Variant variant() const { return variant_; }
  bool is_exponential() const { return variant_ == Variant::Exponential; }

  /// Concentration parameter; only meaningful for the exponential variant.
  double eta() const { return eta_; }

  /// Support length; +inf conceptually for exponential, finite for tabulated.
  double support_length() const { return support_length_; }
  const std::vector<double>& samples() const { return samples_; }

  /// Point value gamma(y) for y in [-support_length, 0] (tabulated variant).
  double tabulated_value(double y) const;

  /// Integral of the tabulated kernel over [-support_length, s], exact for the
  /// piecewise-linear interpolant; clamps s to the support.
  double tabulated_mass_below(double s) const;

  /// Largest point value of the kernel (1/eta for exponential).
  double max_value() const;

  /// Total variation of the sample sequence (0 for exponential).
  double sample_total_variation() const;

 private:
  KernelSpec() = default;

  Variant variant_ = Variant::Exponential;
  double eta_ = 0.0;
  double support_length_ = 0.0;
  std::vector<double> samples_;
  std::vector<double> cumulative_;  // integral up to each sample abscissa
  double sample_spacing_ = 0.0;
};

}  // namespace nlcl
