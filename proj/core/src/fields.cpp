#include "nlcl/fields.hpp"

#include <cmath>
#include <string>

#include "nlcl/errors.hpp"

namespace nlcl {

namespace {
void require_finite(const std::vector<double>& values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw ValidationError(std::string(what) + " contains a non-finite value");
    }
  }
}
}  // namespace

CellField::CellField(Grid1D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.n_cells()) {
    throw GridMismatch("cell field has " + std::to_string(values_.size()) +
                       " values for a grid of " + std::to_string(grid_.n_cells()) + " cells");
  }
  require_finite(values_, "cell field");
}

CellField CellField::zeros(const Grid1D& grid) {
  return CellField(grid, std::vector<double>(grid.n_cells(), 0.0));
}

double CellField::mass() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s * grid_.dx();
}

double CellField::l1_norm() const {
  double s = 0.0;
  for (double v : values_) s += std::abs(v);
  return s * grid_.dx();
}

double CellField::linf_norm() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

FaceField::FaceField(Grid1D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.n_cells() + 1) {
    throw GridMismatch("face field has " + std::to_string(values_.size()) +
                       " values for a grid of " + std::to_string(grid_.n_cells()) + " cells");
  }
  require_finite(values_, "face field");
}

}  // namespace nlcl
