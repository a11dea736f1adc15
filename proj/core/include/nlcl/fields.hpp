#pragma once

#include <vector>

#include "nlcl/grid.hpp"

namespace nlcl {

/// Piecewise-constant cell averages on a Grid1D (one value per cell).
class CellField {
 public:
  CellField(Grid1D grid, std::vector<double> values);

  /// All-zero field on the given grid.
  static CellField zeros(const Grid1D& grid);

  const Grid1D& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  double mass() const;      ///< sum q_i * dx
  double l1_norm() const;   ///< sum |q_i| * dx
  double linf_norm() const; ///< max |q_i|

 private:
  Grid1D grid_;
  std::vector<double> values_;
};

/// Face-sampled field: n_cells + 1 values, entry j at face coordinate x_min + j*dx.
class FaceField {
 public:
  FaceField(Grid1D grid, std::vector<double> values);

  const Grid1D& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t j) const { return values_[j]; }
  std::size_t size() const { return values_.size(); }

 private:
  Grid1D grid_;
  std::vector<double> values_;
};

}  // namespace nlcl
