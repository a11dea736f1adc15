#include "nlcl/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <string>

#include "nlcl/csv_io.hpp"
#include "nlcl/errors.hpp"
#include "nlcl/local_solver.hpp"
#include "nlcl/nonlocal_solver.hpp"

namespace nlcl {

void SweepSpec::validate() const {
  base.validate();
  if (etas.empty()) throw ValidationError("sweep needs at least one eta");
  for (std::size_t i = 0; i < etas.size(); ++i) {
    if (!(etas[i] > 0.0)) throw ValidationError("sweep etas must be positive");
    if (i > 0 && !(etas[i] < etas[i - 1])) {
      throw ValidationError("sweep etas must be strictly decreasing");
    }
  }
  if (!(window_lo < window_hi)) throw ValidationError("sweep window must have positive length");
  if (window_lo < base.grid.x_min() || window_hi > base.grid.x_max()) {
    throw ValidationError("sweep window must lie inside the padded domain");
  }
  if (reference_refinement == 0) throw ValidationError("reference_refinement must be positive");
}

std::vector<TestBump> entropy_bump_lattice(const SimConfig& config) {
  const double t_end = config.t_end;
  const double support_lo = config.datum.breakpoints().front();
  const double support_hi = config.datum.breakpoints().back() + config.speed_bound() * t_end;
  const double width = support_hi - support_lo;
  const double rt = 0.3 * t_end;
  const double rx = 0.3 * width;
  std::vector<TestBump> bumps;
  for (double ft : {0.4, 0.5, 0.6}) {
    for (double fx : {0.3, 0.5, 0.7}) {
      bumps.emplace_back(ft * t_end, support_lo + fx * width, rt, rx);
    }
  }
  return bumps;
}

namespace {

// L1(window) distance between the face averages (right face per cell) and
// the cell values of |ref|.
double l1_face_vs_abs(const FaceField& w, const CellField& ref, double lo, double hi) {
  if (!(w.grid() == ref.grid())) throw GridMismatch("face/cell comparison needs one grid");
  const Grid1D& grid = ref.grid();
  const double dx = grid.dx();
  double sum = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const double cl = grid.face_coord(i);
    const double overlap = std::min(cl + dx, hi) - std::max(cl, lo);
    if (overlap > 0.0) sum += std::abs(w[i + 1] - std::abs(ref[i])) * overlap;
  }
  return sum;
}

SimConfig refined_local_config(const SimConfig& base, std::size_t refinement) {
  SimConfig fine = base;
  fine.grid = Grid1D(base.grid.x_min(), base.grid.x_max(), base.grid.n_cells() * refinement);
  fine.kernel.reset();
  // The reference is only sampled at the end; skip the audit trail.
  fine.snapshot_stride = std::numeric_limits<std::size_t>::max();
  fine.snapshot_times = {base.t_end};
  return fine;
}

}  // namespace

SweepOutcome run_sweep_detailed(const SweepSpec& raw_spec) {
  raw_spec.validate();
  // Comparisons happen at t_end; make sure every run snapshots it.
  SweepSpec spec = raw_spec;
  if (spec.base.snapshot_times.empty() || spec.base.snapshot_times.back() != spec.base.t_end) {
    spec.base.snapshot_times.push_back(spec.base.t_end);
  }

  SweepOutcome out{ConvergenceTable{}, {}, RunResult{}, CellField::zeros(spec.base.grid)};
  out.reference_run = run_local(refined_local_config(spec.base, spec.reference_refinement));
  out.reference_final_coarse =
      coarsen(out.reference_run.snapshots.back().q, spec.reference_refinement);

  const FluxFunction flux(spec.base.velocity);
  const EntropyPair quadratic = EntropyPair::quadratic();
  const std::vector<TestBump> bumps = entropy_bump_lattice(spec.base);

  for (double eta : spec.etas) {
    SimConfig config = spec.base;
    config.kernel = KernelSpec::exponential(eta);
    RunResult run = run_nonlocal(config);

    ConvergenceRow row;
    row.eta = eta;
    const Snapshot& final_snap = run.snapshots.back();
    row.l1_q = l1_distance(final_snap.q, out.reference_final_coarse, spec.window_lo,
                           spec.window_hi);
    row.l1_w = l1_face_vs_abs(*final_snap.w, out.reference_final_coarse, spec.window_lo,
                              spec.window_hi);
    row.linf_max = *std::max_element(run.diagnostics.linf.begin(), run.diagnostics.linf.end());
    if (row.linf_max == 0.0) {
      // identically zero trajectory: every integrand of E vanishes exactly,
      // no matter how coarse the audit trail is
      row.entropy_min = 0.0;
    } else {
      double emin = std::numeric_limits<double>::infinity();
      for (const TestBump& bump : bumps) {
        emin = std::min(emin, entropy_functional(run, quadratic, bump, flux));
      }
      row.entropy_min = emin;
    }

    out.table.rows.push_back(row);
    out.nonlocal_runs.push_back(std::move(run));
  }
  return out;
}

ConvergenceTable singular_limit_sweep(const SweepSpec& spec) {
  return run_sweep_detailed(spec).table;
}

std::vector<std::pair<std::string, SweepSpec>> figure1_panels() {
  // Plotted-window convention: Nx = 1001 over [-0.6, 1.1]; the padded domain
  // [-2, 3] keeps that dx.
  const double dx = 1.7 / 1001.0;
  const auto n_cells = static_cast<long long>(std::llround(5.0 / dx));
  const Grid1D grid = build_grid(-2.0, 3.0, n_cells);

  const InitialDatum datum_a({-0.5, 0.0, 0.5}, {-0.5, 1.0});
  const InitialDatum datum_b({-0.5, 0.0, 0.5}, {0.5, -1.0});

  std::vector<std::pair<std::string, SweepSpec>> panels;
  for (const auto& [dname, datum] : {std::pair{"q0_A", datum_a}, std::pair{"q0_B", datum_b}}) {
    for (const auto& [vname, velocity] :
         {std::pair{"vel_id", VelocityModel::identity()},
          std::pair{"vel_sq", VelocityModel::square()}}) {
      SweepSpec spec{
          make_sim_config(grid, datum, std::nullopt, velocity, /*t_end=*/0.5, /*cfl=*/0.5,
                          /*snapshot_times=*/{0.25, 0.5}, /*snapshot_stride=*/4),
          /*etas=*/{1e-1, 1e-2, 1e-3},
          /*window_lo=*/-0.6,
          /*window_hi=*/1.1,
          /*reference_refinement=*/8};
      panels.emplace_back(std::string(dname) + "_" + vname, std::move(spec));
    }
  }
  return panels;
}

Figure1Summary figure1(const std::string& output_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + output_dir + "': " + ec.message());

  Figure1Summary summary;
  for (const auto& [name, spec] : figure1_panels()) {
    SweepOutcome outcome = run_sweep_detailed(spec);
    ++summary.reference_runs;
    for (std::size_t r = 0; r < outcome.nonlocal_runs.size(); ++r) {
      ++summary.nonlocal_runs;
      const RunResult& run = outcome.nonlocal_runs[r];
      for (std::size_t s = 0; s < run.snapshots.size(); ++s) {
        const std::string file = name + "_eta_" + format_label(spec.etas[r]) + "_t_" +
                                 format_label(run.snapshots[s].time) + ".csv";
        write_snapshot_csv(run, s, (fs::path(output_dir) / file).string());
        summary.files_written.push_back(file);
      }
    }
    const std::string table_file = name + "_table.csv";
    write_table_csv(outcome.table, (fs::path(output_dir) / table_file).string());
    summary.files_written.push_back(table_file);
  }
  return summary;
}

}  // namespace nlcl
