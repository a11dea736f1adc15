#pragma once

#include <string>
#include <vector>

#include "nlcl/analysis.hpp"
#include "nlcl/run_result.hpp"
#include "nlcl/sim_config.hpp"

namespace nlcl {

/// Vanishing-nonlocality experiment: one base setup swept over a descending
/// family of exponential-kernel widths, compared against a refined local
/// reference on a fixed window.
struct SweepSpec {
  SimConfig base;
  std::vector<double> etas;        // strictly decreasing, positive
  double window_lo = -0.6;
  double window_hi = 1.1;
  std::size_t reference_refinement = 8;

  void validate() const;
};

struct ConvergenceRow {
  double eta = 0.0;
  double l1_q = 0.0;        // |q_eta(t_end) - q_ref(t_end)|_L1(window)
  double l1_w = 0.0;        // |W_eta(t_end) - |q_ref(t_end)||_L1(window)
  double linf_max = 0.0;    // max over time of sup|q_eta|
  double entropy_min = 0.0; // min over the bump lattice of E[phi, quadratic, q_eta]
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;  // ordered as the requested etas
};

/// 3x3 bump family used for entropy audits: supports tile times
/// (0.1 T, 0.9 T) and the spatial support of the solution exactly
/// (time centers {0.4, 0.5, 0.6} T, radius 0.3 T; space centers at fractions
/// {0.3, 0.5, 0.7} of [first breakpoint, last breakpoint + v_max T], radius
/// 0.3 of that width).
std::vector<TestBump> entropy_bump_lattice(const SimConfig& config);

/// Everything a sweep produces, for callers that also want the trajectories.
struct SweepOutcome {
  ConvergenceTable table;
  std::vector<RunResult> nonlocal_runs;   // one per eta
  RunResult reference_run;                // fine local reference
  CellField reference_final_coarse;       // coarsened to the base grid
};

SweepOutcome run_sweep_detailed(const SweepSpec& spec);

/// Runs the fine local reference once and every nonlocal eta-run once,
/// coarsens the reference, and fills the table. Deterministic given the spec.
ConvergenceTable singular_limit_sweep(const SweepSpec& spec);

/// The four panel setups of the reproduction study: data
/// -1/2 X(-0.5,0) + X(0,0.5) and +1/2 X(-0.5,0) - X(0,0.5), velocities
/// Identity and Square, at the Nx=1001 plotted-window resolution
/// (dx = 1.7/1001 on the padded domain [-2, 3]).
std::vector<std::pair<std::string, SweepSpec>> figure1_panels();

struct Figure1Summary {
  std::size_t nonlocal_runs = 0;
  std::size_t reference_runs = 0;
  std::vector<std::string> files_written;
};

/// Executes the 2 data x 2 velocities x 3 eta matrix, writing one snapshot
/// CSV per (run, snapshot time) and one convergence table per panel into
/// output_dir (created if absent).
Figure1Summary figure1(const std::string& output_dir);

}  // namespace nlcl
