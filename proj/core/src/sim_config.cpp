#include "nlcl/sim_config.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nlcl/errors.hpp"

namespace nlcl {

double SimConfig::speed_bound() const {
  return velocity.value(datum.sup_norm()) * (1.0 + kMaxPrincipleSlack);
}

void SimConfig::validate() const {
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw ValidationError("t_end must be a nonnegative real, got " + std::to_string(t_end));
  }
  if (!(cfl > 0.0) || !(cfl <= 1.0)) {
    throw ValidationError("cfl must lie in (0, 1], got " + std::to_string(cfl));
  }
  if (snapshot_stride == 0) {
    throw ValidationError("snapshot_stride must be a positive integer");
  }
  for (std::size_t i = 0; i < snapshot_times.size(); ++i) {
    if (snapshot_times[i] < 0.0 || snapshot_times[i] > t_end) {
      throw ValidationError("snapshot time " + std::to_string(snapshot_times[i]) +
                            " outside [0, t_end]");
    }
    if (i > 0 && snapshot_times[i] < snapshot_times[i - 1]) {
      throw ValidationError("snapshot_times must be sorted");
    }
  }
  // Monotonicity of the velocity over the reachable range.
  validate_velocity(velocity, datum.sup_norm() * (1.0 + kMaxPrincipleSlack));

  // Padding: no wave may reach the boundary before t_end.
  const double margin = 5.0 * grid.dx();
  const double first_bp = datum.breakpoints().front();
  const double last_bp = datum.breakpoints().back();
  const double needed_left = first_bp - margin;
  const double needed_right = last_bp + t_end * speed_bound() + margin;
  if (grid.x_min() > needed_left) {
    throw ValidationError("domain not padded on the left: x_min = " + std::to_string(grid.x_min()) +
                          " must be <= " + std::to_string(needed_left));
  }
  if (grid.x_max() < needed_right) {
    throw ValidationError("domain not padded on the right: x_max = " +
                          std::to_string(grid.x_max()) + " must be >= " +
                          std::to_string(needed_right));
  }
  if (kernel && !kernel->is_exponential() && kernel->support_length() < grid.dx()) {
    throw KernelUnderResolved("tabulated kernel support " +
                              std::to_string(kernel->support_length()) +
                              " is shorter than one cell (" + std::to_string(grid.dx()) + ")");
  }
}

SimConfig make_sim_config(Grid1D grid, InitialDatum datum, std::optional<KernelSpec> kernel,
                          VelocityModel velocity, double t_end, double cfl,
                          std::vector<double> snapshot_times, std::size_t snapshot_stride) {
  SimConfig config{std::move(grid), std::move(datum), std::move(kernel), std::move(velocity),
                   t_end,           cfl,              std::move(snapshot_times), snapshot_stride};
  config.validate();
  return config;
}

}  // namespace nlcl
