#include "nlcl/initial_datum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nlcl/errors.hpp"

namespace nlcl {

InitialDatum::InitialDatum(std::vector<double> breakpoints, std::vector<double> plateau_values)
    : breakpoints_(std::move(breakpoints)), plateau_values_(std::move(plateau_values)) {
  if (breakpoints_.size() < 2) {
    throw InvalidDatum("datum needs at least 2 breakpoints");
  }
  if (plateau_values_.size() + 1 != breakpoints_.size()) {
    throw InvalidDatum("datum needs exactly one plateau value per breakpoint interval (" +
                       std::to_string(breakpoints_.size() - 1) + " intervals, " +
                       std::to_string(plateau_values_.size()) + " values)");
  }
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i])) throw InvalidDatum("datum breakpoint not finite");
    if (i > 0 && !(breakpoints_[i] > breakpoints_[i - 1])) {
      throw InvalidDatum("datum breakpoints must be strictly increasing");
    }
  }
  for (double v : plateau_values_) {
    if (!std::isfinite(v)) throw InvalidDatum("datum plateau value not finite");
  }
}

double InitialDatum::value_at(double x) const {
  if (x <= breakpoints_.front() || x >= breakpoints_.back()) return 0.0;
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return plateau_values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double InitialDatum::integral() const {
  double s = 0.0;
  for (std::size_t j = 0; j < plateau_values_.size(); ++j) {
    s += plateau_values_[j] * (breakpoints_[j + 1] - breakpoints_[j]);
  }
  return s;
}

double InitialDatum::abs_integral() const {
  double s = 0.0;
  for (std::size_t j = 0; j < plateau_values_.size(); ++j) {
    s += std::abs(plateau_values_[j]) * (breakpoints_[j + 1] - breakpoints_[j]);
  }
  return s;
}

double InitialDatum::sup_norm() const {
  double m = 0.0;
  for (double v : plateau_values_) m = std::max(m, std::abs(v));
  return m;
}

double InitialDatum::total_variation() const {
  double tv = std::abs(plateau_values_.front()) + std::abs(plateau_values_.back());
  for (std::size_t j = 1; j < plateau_values_.size(); ++j) {
    tv += std::abs(plateau_values_[j] - plateau_values_[j - 1]);
  }
  return tv;
}

CellField sample_datum(const InitialDatum& datum, const Grid1D& grid) {
  std::vector<double> values(grid.n_cells(), 0.0);
  const auto& bps = datum.breakpoints();
  const auto& vals = datum.plateau_values();
  const double dx = grid.dx();
  for (std::size_t j = 0; j < vals.size(); ++j) {
    if (vals[j] == 0.0) continue;
    const double a = bps[j];
    const double b = bps[j + 1];
    // Cells that can overlap [a, b]
    const auto lo = static_cast<long long>(std::floor((a - grid.x_min()) / dx));
    const auto hi = static_cast<long long>(std::ceil((b - grid.x_min()) / dx));
    for (long long i = std::max(lo, 0LL);
         i < std::min(hi, static_cast<long long>(grid.n_cells())); ++i) {
      const double cl = grid.face_coord(static_cast<std::size_t>(i));
      const double cr = cl + dx;
      const double overlap = std::min(cr, b) - std::max(cl, a);
      if (overlap > 0.0) values[static_cast<std::size_t>(i)] += vals[j] * overlap / dx;
    }
  }
  return CellField(grid, std::move(values));
}

}  // namespace nlcl
