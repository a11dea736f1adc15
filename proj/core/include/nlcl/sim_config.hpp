#pragma once

#include <optional>
#include <vector>

#include "nlcl/grid.hpp"
#include "nlcl/initial_datum.hpp"
#include "nlcl/kernel.hpp"
#include "nlcl/velocity.hpp"

namespace nlcl {

/// Slack multiplier on the propagation-speed bound used for domain padding,
/// covering the weak maximum principle's inflation with general kernels.
inline constexpr double kMaxPrincipleSlack = 0.05;

/// One fully validated simulation setup. Immutable after construction.
struct SimConfig {
  Grid1D grid;
  InitialDatum datum;
  std::optional<KernelSpec> kernel;  // absent => local run
  VelocityModel velocity;
  double t_end = 0.0;
  double cfl = 0.5;
  std::vector<double> snapshot_times;  // sorted, within [0, t_end]
  std::size_t snapshot_stride = 10;    // audit retention: every stride-th step

  /// Propagation-speed bound v_max = V(sup|q0|) * (1 + slack).
  double speed_bound() const;

  /// Throws ValidationError/ConfigError unless all invariants hold, in
  /// particular the padding rule: x_min <= first breakpoint - margin and
  /// x_max >= last breakpoint + t_end * v_max + margin with margin >= 5*dx.
  void validate() const;
};

/// Convenience constructor running validate().
SimConfig make_sim_config(Grid1D grid, InitialDatum datum, std::optional<KernelSpec> kernel,
                          VelocityModel velocity, double t_end, double cfl,
                          std::vector<double> snapshot_times, std::size_t snapshot_stride);

}  // namespace nlcl
