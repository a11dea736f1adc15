#pragma once

#include "nlcl/run_result.hpp"
#include "nlcl/sim_config.hpp"

namespace nlcl {

/// Godunov finite-volume solve of the local law (exact min/max Riemann flux,
/// robust to non-convex f). CFL uses max|f'| over
/// [-sup|q0| - 0.1, sup|q0| + 0.1]. Snapshots, audit frames and diagnostics
/// as in run_nonlocal; the kernel in the config, if any, is ignored.
RunResult run_local(const SimConfig& config);

}  // namespace nlcl
