#pragma once

#include <limits>

#include "nlcl/fields.hpp"
#include "nlcl/run_result.hpp"
#include "nlcl/sim_config.hpp"

namespace nlcl {

/// Instantaneous solver state; w is always the operator value of the current q.
struct NonlocalState {
  double time = 0.0;
  CellField q;
  FaceField w;
  std::size_t step_index = 0;
};

/// Initial state for a config (samples the datum and evaluates the operator).
NonlocalState nonlocal_initial_state(const SimConfig& config);

/// One conservative upwind step with face speeds V(W).
///
/// Time step: cfl * dx / max(eps_v, max_f |V(W_f)| + a * Lip(V) * max|q|)
/// where a = 1 - exp(-dx/eta) for the exponential kernel (min(1, dx*max gamma)
/// for tabulated ones). The second term is the kernel-scaled share of the
/// local wave speed |f'| = V + |u|V'; without it the update loses
/// monotonicity once eta is comparable to dx. The step is additionally capped
/// by dt_cap so callers can land on snapshot times exactly. W is recomputed
/// from the updated q before returning.
NonlocalState nonlocal_step(const NonlocalState& state, const SimConfig& config,
                            double dt_cap = std::numeric_limits<double>::infinity());

/// Advances the nonlocal law to t_end, collecting snapshots at the configured
/// times, audit frames every snapshot_stride-th step, and per-step
/// diagnostics. Enforces at runtime: exact mass conservation (1e-12 scaled),
/// the discrete maximum principle (sup|q| <= sup|q0| + 1e-12 for exponential
/// kernels, (1+slack) inflation for tabulated ones), and the CFL guard.
RunResult run_nonlocal(const SimConfig& config);

}  // namespace nlcl
