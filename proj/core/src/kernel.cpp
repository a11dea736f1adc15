#include "nlcl/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nlcl/errors.hpp"

namespace nlcl {

KernelSpec KernelSpec::exponential(double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw InvalidKernel("exponential kernel needs eta > 0, got " + std::to_string(eta));
  }
  KernelSpec k;
  k.variant_ = Variant::Exponential;
  k.eta_ = eta;
  k.support_length_ = std::numeric_limits<double>::infinity();
  return k;
}

KernelSpec KernelSpec::tabulated_bv(double support_length, std::vector<double> samples) {
  if (!(support_length > 0.0) || !std::isfinite(support_length)) {
    throw InvalidKernel("tabulated kernel needs support_length > 0");
  }
  if (samples.size() < 2) {
    throw InvalidKernel("tabulated kernel needs at least 2 samples");
  }
  double raw_mass = 0.0;
  for (double s : samples) {
    if (!std::isfinite(s) || s < 0.0) {
      throw InvalidKernel("tabulated kernel samples must be finite and >= 0");
    }
  }
  const double h = support_length / static_cast<double>(samples.size() - 1);
  for (std::size_t j = 0; j + 1 < samples.size(); ++j) {
    raw_mass += 0.5 * (samples[j] + samples[j + 1]) * h;
  }
  if (!(raw_mass > 0.0)) {
    throw InvalidKernel("tabulated kernel has zero mass");
  }
  for (double& s : samples) s /= raw_mass;

  KernelSpec k;
  k.variant_ = Variant::TabulatedBV;
  k.support_length_ = support_length;
  k.sample_spacing_ = h;
  k.samples_ = std::move(samples);
  k.cumulative_.resize(k.samples_.size(), 0.0);
  for (std::size_t j = 1; j < k.samples_.size(); ++j) {
    k.cumulative_[j] = k.cumulative_[j - 1] + 0.5 * (k.samples_[j - 1] + k.samples_[j]) * h;
  }
  // Unit mass within 1e-10 after normalization (construction-time invariant).
  if (std::abs(k.cumulative_.back() - 1.0) > 1e-10) {
    throw InvalidKernel("tabulated kernel normalization failed");
  }
  return k;
}

double KernelSpec::tabulated_value(double y) const {
  // y measured from the evaluation point, y in [-support_length, 0]
  if (y < -support_length_ || y > 0.0) return 0.0;
  const double s = (y + support_length_) / sample_spacing_;
  const auto j = std::min(static_cast<std::size_t>(s), samples_.size() - 2);
  const double frac = s - static_cast<double>(j);
  return samples_[j] + frac * (samples_[j + 1] - samples_[j]);
}

double KernelSpec::tabulated_mass_below(double s) const {
  if (s <= -support_length_) return 0.0;
  if (s >= 0.0) return cumulative_.back();
  const double r = (s + support_length_) / sample_spacing_;
  const auto j = std::min(static_cast<std::size_t>(r), samples_.size() - 2);
  const double t = (r - static_cast<double>(j)) * sample_spacing_;  // offset into piece j
  const double slope = (samples_[j + 1] - samples_[j]) / sample_spacing_;
  return cumulative_[j] + samples_[j] * t + 0.5 * slope * t * t;
}

double KernelSpec::max_value() const {
  if (variant_ == Variant::Exponential) return 1.0 / eta_;
  return *std::max_element(samples_.begin(), samples_.end());
}

double KernelSpec::sample_total_variation() const {
  double tv = 0.0;
  for (std::size_t j = 1; j < samples_.size(); ++j) {
    tv += std::abs(samples_[j] - samples_[j - 1]);
  }
  return tv;
}

}  // namespace nlcl
