#include "nlcl/local_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "nlcl/errors.hpp"
#include "nlcl/flux.hpp"

namespace nlcl {

namespace {

double total_variation_of(const std::vector<double>& v) {
  double tv = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) tv += std::abs(v[i] - v[i - 1]);
  return tv;
}

void append_diagnostics(DiagnosticsSeries& d, double time, const CellField& q) {
  d.time.push_back(time);
  d.mass.push_back(q.mass());
  d.l1.push_back(q.l1_norm());
  d.linf.push_back(q.linf_norm());
  d.tv.push_back(total_variation_of(q.values()));
}

}  // namespace

RunResult run_local(const SimConfig& config) {
  config.validate();
  RunResult result;

  CellField q = sample_datum(config.datum, config.grid);
  const Grid1D& grid = config.grid;
  const double dx = grid.dx();
  const auto n = q.size();
  const double mass0 = q.mass();
  const double sup0 = q.linf_norm();

  const double flux_range = config.datum.sup_norm() + 0.1;
  FluxFunction flux(config.velocity);
  const PreparedGodunovFlux face_flux(flux, -flux_range, flux_range);
  const double dt_cfl = config.cfl * dx / std::max(1e-14, flux.max_abs_derivative(flux_range));

  std::vector<double> targets = config.snapshot_times;
  targets.push_back(config.t_end);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  append_diagnostics(result.diagnostics, 0.0, q);
  result.audit.push_back(AuditFrame{0.0, q});
  auto snapshot_due = [&](double t) {
    for (double s : config.snapshot_times) {
      if (s == t) return true;
    }
    return false;
  };
  if (snapshot_due(0.0) || config.t_end == 0.0) {
    result.snapshots.push_back(Snapshot{0.0, q, std::nullopt});
  }

  double t = 0.0;
  std::size_t step = 0;
  std::size_t target_idx = 0;
  std::vector<double> updated(n);
  while (t < config.t_end) {
    while (target_idx < targets.size() && targets[target_idx] <= t) ++target_idx;
    const double next_target = target_idx < targets.size() ? targets[target_idx] : config.t_end;
    double dt = std::min(dt_cfl, next_target - t);
    const double lambda = dt / dx;

    const std::vector<double>& v = q.values();
    double flux_left = face_flux(0.0, v[0]);
    for (std::size_t i = 0; i < n; ++i) {
      const double right_state = i + 1 < n ? v[i + 1] : 0.0;
      const double flux_right = face_flux(v[i], right_state);
      updated[i] = v[i] - lambda * (flux_right - flux_left);
      flux_left = flux_right;
    }
    q = CellField(grid, updated);
    t += dt;
    if (t >= next_target - 1e-15 * std::max(1.0, next_target)) t = next_target;
    ++step;

    append_diagnostics(result.diagnostics, t, q);
    const double mass = result.diagnostics.mass.back();
    if (std::abs(mass - mass0) > 1e-12 * (1.0 + std::abs(mass0)) * static_cast<double>(step)) {
      throw InvariantViolation("mass drifted by " + std::to_string(mass - mass0) + " after " +
                               std::to_string(step) + " steps");
    }
    if (result.diagnostics.linf.back() > sup0 + 1e-12) {
      throw MaxPrincipleViolation("sup|q| = " + std::to_string(result.diagnostics.linf.back()) +
                                  " exceeded sup|q0| = " + std::to_string(sup0));
    }

    const bool is_final = t >= config.t_end;
    if (step % config.snapshot_stride == 0 || is_final) {
      result.audit.push_back(AuditFrame{t, q});
    }
    if (snapshot_due(t)) {
      result.snapshots.push_back(Snapshot{t, q, std::nullopt});
    }
  }
  result.total_steps = step;
  return result;
}

}  // namespace nlcl
