#include "nlcl/nonlocal_operator.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "nlcl/errors.hpp"

namespace nlcl {

FaceField eval_w_exponential(const CellField& q, double eta) {
  if (!(eta > 0.0)) {
    throw InvalidKernel("eval_w_exponential needs eta > 0");
  }
  const auto n = q.size();
  const double decay = std::exp(-q.grid().dx() / eta);
  const double gain = 1.0 - decay;
  std::vector<double> w(n + 1);
  w[0] = 0.0;  // zero extension left of the domain
  for (std::size_t i = 0; i < n; ++i) {
    w[i + 1] = w[i] + gain * (std::abs(q[i]) - w[i]);
  }
  return FaceField(q.grid(), std::move(w));
}

FaceField eval_w_tabulated(const CellField& q, const KernelSpec& kernel) {
  if (kernel.is_exponential()) {
    throw InvalidKernel("eval_w_tabulated needs a tabulated kernel");
  }
  const Grid1D& grid = q.grid();
  const double dx = grid.dx();
  const double support = kernel.support_length();
  if (support < dx) {
    throw KernelUnderResolved("kernel support " + std::to_string(support) +
                              " shorter than one cell " + std::to_string(dx));
  }
  const auto n = q.size();
  const auto reach = static_cast<std::size_t>(std::ceil(support / dx));
  std::vector<double> w(n + 1, 0.0);
  for (std::size_t j = 0; j <= n; ++j) {
    // Face j integrates |q| over [x_j - support, x_j]; cell i contributes on
    // [x_i, x_{i+1}] intersected with that window, measured in kernel
    // coordinates y = cell position - x_j in [-support, 0].
    const std::size_t first = j > reach ? j - reach : 0;
    double acc = 0.0;
    double mass_hi = kernel.tabulated_mass_below((static_cast<double>(first) - static_cast<double>(j)) * dx);
    for (std::size_t i = first; i < j && i < n; ++i) {
      const double y_hi = (static_cast<double>(i) + 1.0 - static_cast<double>(j)) * dx;
      const double next = kernel.tabulated_mass_below(y_hi);
      acc += std::abs(q[i]) * (next - mass_hi);
      mass_hi = next;
    }
    w[j] = acc;
  }
  return FaceField(grid, std::move(w));
}

FaceField eval_w(const CellField& q, const KernelSpec& kernel) {
  return kernel.is_exponential() ? eval_w_exponential(q, kernel.eta())
                                 : eval_w_tabulated(q, kernel);
}

double check_identity(const CellField& q, const FaceField& w, double eta) {
  if (!(q.grid() == w.grid())) {
    throw GridMismatch("check_identity needs q and w on the same grid");
  }
  const double dx = q.grid().dx();
  double worst = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double slope = (w[i + 1] - w[i]) / dx;
    const double balance = (std::abs(q[i]) - w[i + 1]) / eta;
    worst = std::max(worst, std::abs(slope - balance));
  }
  return worst;
}

}  // namespace nlcl
