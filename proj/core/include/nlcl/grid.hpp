#pragma once

#include <cstddef>

namespace nlcl {

/// Uniform 1-D cell-centered mesh on [x_min, x_max].
///
/// Cell i covers [x_min + i*dx, x_min + (i+1)*dx]; its center is
/// x_min + (i+1/2)*dx. Faces are indexed 0..n_cells, face j at
/// x_min + j*dx. Immutable after construction.
class Grid1D {
 public:
  Grid1D(double x_min, double x_max, std::size_t n_cells);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t n_cells() const { return n_cells_; }
  double dx() const { return dx_; }

  double cell_center(std::size_t i) const { return x_min_ + (static_cast<double>(i) + 0.5) * dx_; }
  double face_coord(std::size_t j) const { return x_min_ + static_cast<double>(j) * dx_; }

  friend bool operator==(const Grid1D& a, const Grid1D& b) {
    return a.x_min_ == b.x_min_ && a.x_max_ == b.x_max_ && a.n_cells_ == b.n_cells_;
  }

 private:
  double x_min_;
  double x_max_;
  std::size_t n_cells_;
  double dx_;
};

/// Builds a grid, throwing InvalidGrid unless x_min < x_max and n_cells >= 2.
Grid1D build_grid(double x_min, double x_max, long long n_cells);

}  // namespace nlcl
