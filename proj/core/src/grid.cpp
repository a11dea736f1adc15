#include "nlcl/grid.hpp"

#include <cmath>
#include <string>

#include "nlcl/errors.hpp"

namespace nlcl {

Grid1D::Grid1D(double x_min, double x_max, std::size_t n_cells)
    : x_min_(x_min), x_max_(x_max), n_cells_(n_cells), dx_((x_max - x_min) / static_cast<double>(n_cells)) {}

Grid1D build_grid(double x_min, double x_max, long long n_cells) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    throw InvalidGrid("grid bounds must be finite with x_min < x_max, got [" +
                      std::to_string(x_min) + ", " + std::to_string(x_max) + "]");
  }
  if (n_cells < 2) {
    throw InvalidGrid("grid needs at least 2 cells, got " + std::to_string(n_cells));
  }
  return Grid1D(x_min, x_max, static_cast<std::size_t>(n_cells));
}

}  // namespace nlcl
