#pragma once

#include <vector>

#include "nlcl/fields.hpp"
#include "nlcl/grid.hpp"

namespace nlcl {

/// Piecewise-constant, compactly supported initial condition.
///
/// plateau_values[j] holds on (breakpoints[j], breakpoints[j+1]); the datum is
/// zero outside the breakpoint range.
class InitialDatum {
 public:
  InitialDatum(std::vector<double> breakpoints, std::vector<double> plateau_values);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& plateau_values() const { return plateau_values_; }

  double value_at(double x) const;
  double integral() const;        ///< exact signed mass
  double abs_integral() const;    ///< exact L1 norm
  double sup_norm() const;
  double total_variation() const; ///< sum of all jumps, including the outer ones

 private:
  std::vector<double> breakpoints_;
  std::vector<double> plateau_values_;
};

/// Exact cell averages of the datum on the grid (jump cells get the
/// length-weighted average). Conserves mass exactly for grid-aligned
/// breakpoints.
CellField sample_datum(const InitialDatum& datum, const Grid1D& grid);

}  // namespace nlcl
