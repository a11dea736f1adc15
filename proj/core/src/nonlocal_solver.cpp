#include "nlcl/nonlocal_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "nlcl/errors.hpp"
#include "nlcl/nonlocal_operator.hpp"

namespace nlcl {

namespace {

constexpr double kSpeedFloor = 1e-14;

double total_variation_of(const std::vector<double>& v) {
  double tv = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) tv += std::abs(v[i] - v[i - 1]);
  return tv;
}

// Fraction of the face average that can move per cell; scales the V' share
// of the wave speed in the CFL bound. For the exponential kernel the
// recurrence gives it exactly; for tabulated kernels the shift-difference
// bound integral |gamma(z - dx) - gamma(z)| dz <= dx (gamma_max + TV) covers
// arbitrary BV shapes.
double cell_mass_fraction(const KernelSpec& kernel, double dx) {
  if (kernel.is_exponential()) return 1.0 - std::exp(-dx / kernel.eta());
  return std::min(1.0, dx * (kernel.max_value() + kernel.sample_total_variation()));
}

void append_diagnostics(DiagnosticsSeries& d, double time, const CellField& q) {
  d.time.push_back(time);
  d.mass.push_back(q.mass());
  d.l1.push_back(q.l1_norm());
  d.linf.push_back(q.linf_norm());
  d.tv.push_back(total_variation_of(q.values()));
}

}  // namespace

NonlocalState nonlocal_initial_state(const SimConfig& config) {
  if (!config.kernel) {
    throw ValidationError("nonlocal run needs a kernel");
  }
  CellField q = sample_datum(config.datum, config.grid);
  FaceField w = eval_w(q, *config.kernel);
  return NonlocalState{0.0, std::move(q), std::move(w), 0};
}

NonlocalState nonlocal_step(const NonlocalState& state, const SimConfig& config, double dt_cap) {
  const Grid1D& grid = state.q.grid();
  const double dx = grid.dx();
  const auto n = state.q.size();
  const KernelSpec& kernel = *config.kernel;

  std::vector<double> speed(n + 1);
  double speed_max = 0.0;
  for (std::size_t j = 0; j <= n; ++j) {
    speed[j] = config.velocity.value(state.w[j]);
    speed_max = std::max(speed_max, std::abs(speed[j]));
  }
  const double lip = config.velocity.lipschitz_on(state.q.linf_norm() + kSpeedFloor);
  const double wave_bound =
      speed_max + cell_mass_fraction(kernel, dx) * lip * state.q.linf_norm();
  double dt = config.cfl * dx / std::max(kSpeedFloor, wave_bound);
  dt = std::min(dt, dt_cap);
  if (dt * speed_max / dx > 1.0) {
    throw CflViolation("time step " + std::to_string(dt) + " breaks the CFL bound");
  }

  const std::vector<double>& q = state.q.values();
  std::vector<double> updated(n);
  const double lambda = dt / dx;
  // Upwind flux per face sign; q extended by zero outside the domain.
  auto flux_at = [&](std::size_t j) {
    const double up = speed[j] >= 0.0 ? (j > 0 ? q[j - 1] : 0.0) : (j < n ? q[j] : 0.0);
    return speed[j] * up;
  };
  double flux_left = flux_at(0);
  for (std::size_t i = 0; i < n; ++i) {
    const double flux_right = flux_at(i + 1);
    updated[i] = q[i] - lambda * (flux_right - flux_left);
    flux_left = flux_right;
  }

  CellField next_q(grid, std::move(updated));
  FaceField next_w = eval_w(next_q, kernel);
  return NonlocalState{state.time + dt, std::move(next_q), std::move(next_w),
                       state.step_index + 1};
}

RunResult run_nonlocal(const SimConfig& config) {
  config.validate();
  if (!config.kernel) {
    throw ValidationError("run_nonlocal needs a kernel in the config");
  }
  RunResult result;
  const double dx = config.grid.dx();
  if (config.kernel->is_exponential() && config.kernel->eta() < dx) {
    result.warnings.push_back("eta = " + std::to_string(config.kernel->eta()) +
                              " is below dx = " + std::to_string(dx) +
                              "; the face average degenerates toward |q| of the adjacent cell");
  }

  NonlocalState state = nonlocal_initial_state(config);
  const double mass0 = state.q.mass();
  const double sup0 = state.q.linf_norm();
  const double sup_bound =
      config.kernel->is_exponential() ? sup0 : (1.0 + kMaxPrincipleSlack) * sup0;

  // Step targets: every snapshot time plus t_end, hit exactly by clipping dt.
  std::vector<double> targets = config.snapshot_times;
  targets.push_back(config.t_end);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  append_diagnostics(result.diagnostics, state.time, state.q);
  result.audit.push_back(AuditFrame{state.time, state.q});
  auto snapshot_due = [&](double t) {
    for (double s : config.snapshot_times) {
      if (s == t) return true;
    }
    return false;
  };
  if (snapshot_due(0.0) || config.t_end == 0.0) {
    result.snapshots.push_back(Snapshot{0.0, state.q, state.w});
  }

  std::size_t target_idx = 0;
  while (state.time < config.t_end) {
    while (target_idx < targets.size() && targets[target_idx] <= state.time) ++target_idx;
    const double next_target = target_idx < targets.size() ? targets[target_idx] : config.t_end;
    NonlocalState next = nonlocal_step(state, config, next_target - state.time);
    if (next.time >= next_target - 1e-15 * std::max(1.0, next_target)) {
      next.time = next_target;  // land exactly
    }
    state = std::move(next);

    append_diagnostics(result.diagnostics, state.time, state.q);
    const double mass = result.diagnostics.mass.back();
    const double mass_tol =
        1e-12 * (1.0 + std::abs(mass0)) * static_cast<double>(state.step_index);
    if (std::abs(mass - mass0) > mass_tol) {
      throw InvariantViolation("mass drifted by " + std::to_string(mass - mass0) + " after " +
                               std::to_string(state.step_index) + " steps");
    }
    if (result.diagnostics.linf.back() > sup_bound + 1e-12) {
      throw MaxPrincipleViolation("sup|q| = " + std::to_string(result.diagnostics.linf.back()) +
                                  " exceeded the bound " + std::to_string(sup_bound));
    }

    const bool is_final = state.time >= config.t_end;
    if (state.step_index % config.snapshot_stride == 0 || is_final) {
      result.audit.push_back(AuditFrame{state.time, state.q});
    }
    if (snapshot_due(state.time)) {
      result.snapshots.push_back(Snapshot{state.time, state.q, state.w});
    }
  }
  result.total_steps = state.step_index;
  return result;
}

}  // namespace nlcl
