#include "nlcl/velocity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "nlcl/errors.hpp"

namespace nlcl {

VelocityModel VelocityModel::identity() {
  VelocityModel v;
  v.kind_ = Kind::Identity;
  return v;
}

VelocityModel VelocityModel::square() {
  VelocityModel v;
  v.kind_ = Kind::Square;
  return v;
}

VelocityModel VelocityModel::power(int two_m) {
  if (two_m <= 0 || two_m % 2 != 0) {
    throw ValidationError("power velocity exponent must be even and positive, got " +
                          std::to_string(two_m));
  }
  VelocityModel v;
  v.kind_ = Kind::Power;
  v.two_m_ = two_m;
  return v;
}

VelocityModel VelocityModel::tabulated(std::vector<double> abscissae, std::vector<double> ordinates) {
  if (abscissae.size() != ordinates.size() || abscissae.size() < 2) {
    throw ValidationError("tabulated velocity needs >= 2 matching (abscissa, ordinate) pairs");
  }
  // Sort by abscissa, then reject anything non-monotone outright.
  std::vector<std::size_t> order(abscissae.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return abscissae[a] < abscissae[b]; });
  std::vector<double> xs, ys;
  xs.reserve(order.size());
  ys.reserve(order.size());
  for (std::size_t i : order) {
    if (!std::isfinite(abscissae[i]) || !std::isfinite(ordinates[i])) {
      throw ValidationError("tabulated velocity has a non-finite entry");
    }
    xs.push_back(abscissae[i]);
    ys.push_back(ordinates[i]);
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) {
      throw ValidationError("tabulated velocity abscissae must be strictly increasing");
    }
    if (ys[i] < ys[i - 1]) {
      throw NonMonotoneVelocity("tabulated velocity decreases at w = " + std::to_string(xs[i]));
    }
  }
  VelocityModel v;
  v.kind_ = Kind::Tabulated;
  v.abscissae_ = std::move(xs);
  v.ordinates_ = std::move(ys);
  return v;
}

double VelocityModel::value(double w) const {
  switch (kind_) {
    case Kind::Identity:
      return w;
    case Kind::Square:
      return w * w;
    case Kind::Power:
      return std::pow(w, two_m_);
    case Kind::Tabulated: {
      if (w <= abscissae_.front()) return ordinates_.front();
      if (w >= abscissae_.back()) return ordinates_.back();
      const auto it = std::upper_bound(abscissae_.begin(), abscissae_.end(), w);
      const auto j = static_cast<std::size_t>(it - abscissae_.begin()) - 1;
      const double t = (w - abscissae_[j]) / (abscissae_[j + 1] - abscissae_[j]);
      return ordinates_[j] + t * (ordinates_[j + 1] - ordinates_[j]);
    }
  }
  return 0.0;
}

double VelocityModel::derivative(double w) const {
  switch (kind_) {
    case Kind::Identity:
      return 1.0;
    case Kind::Square:
      return 2.0 * w;
    case Kind::Power:
      return static_cast<double>(two_m_) * std::pow(w, two_m_ - 1);
    case Kind::Tabulated: {
      const double scale = std::max(1.0, abscissae_.back() - abscissae_.front());
      const double h = 1e-6 * scale;
      return (value(w + h) - value(w - h)) / (2.0 * h);
    }
  }
  return 0.0;
}

double VelocityModel::lipschitz_on(double range_max) const {
  constexpr int kLatticePoints = 1000;
  double lip = 0.0;
  for (int i = 0; i < kLatticePoints; ++i) {
    const double w = range_max * static_cast<double>(i) / (kLatticePoints - 1);
    lip = std::max(lip, std::abs(derivative(w)));
  }
  return lip;
}

ValidationReport validate_velocity(const VelocityModel& v, double range_max) {
  if (!(range_max >= 0.0)) {
    throw ValidationError("validate_velocity needs range_max >= 0");
  }
  constexpr int kLatticePoints = 1000;
  double scale = 1.0;
  double prev = v.value(0.0);
  for (int i = 0; i < kLatticePoints; ++i) {
    const double w = range_max * static_cast<double>(i) / (kLatticePoints - 1);
    scale = std::max(scale, std::abs(v.value(w)));
  }
  for (int i = 1; i < kLatticePoints; ++i) {
    const double w = range_max * static_cast<double>(i) / (kLatticePoints - 1);
    const double cur = v.value(w);
    if (prev - cur > 1e-12 * scale) {
      throw NonMonotoneVelocity("velocity decreases by " + std::to_string(prev - cur) +
                                " near w = " + std::to_string(w));
    }
    prev = cur;
  }
  ValidationReport report;
  report.monotone = true;
  report.lipschitz = v.lipschitz_on(range_max);
  report.range_max = range_max;
  return report;
}

}  // namespace nlcl
