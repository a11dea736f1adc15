#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nlcl/config_file.hpp"
#include "nlcl/csv_io.hpp"
#include "nlcl/errors.hpp"
#include "nlcl/local_solver.hpp"
#include "nlcl/nonlocal_solver.hpp"
#include "nlcl/sweep.hpp"

using namespace nlcl;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path temp_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("nlcl_test_" + tag);
  std::filesystem::create_directories(dir);
  return dir;
}

constexpr const char* kMinimalLocal = R"(
[grid]
x_min = -2.0
x_max = 3.0
n_cells = 400

[datum]
breakpoints = -0.5, 0, 0.5
plateaus = -0.5, 1

[velocity]
type = identity

[time]
t_end = 0.25
)";

}  // namespace

TEST_CASE("minimal local config applies defaults") {
  const ParsedConfig parsed = parse_config_text(kMinimalLocal);
  CHECK(!parsed.config.kernel.has_value());
  CHECK(!parsed.sweep.has_value());
  CHECK(parsed.config.cfl == 0.5);
  CHECK(parsed.config.snapshot_stride == 10);
  REQUIRE(parsed.config.snapshot_times.size() == 1);
  CHECK(parsed.config.snapshot_times[0] == 0.25);
  CHECK(parsed.config.grid.n_cells() == 400);
}

TEST_CASE("exponential kernel section") {
  std::string text = kMinimalLocal;
  text += "\n[kernel]\ntype = exponential\neta = 0.1\n";
  const ParsedConfig parsed = parse_config_text(text);
  REQUIRE(parsed.config.kernel.has_value());
  CHECK(parsed.config.kernel->is_exponential());
  CHECK(parsed.config.kernel->eta() == 0.1);
}

TEST_CASE("sweep section yields a sweep spec") {
  std::string text = kMinimalLocal;
  text += "\n[kernel]\ntype = exponential\neta = 0.1\n";
  text += "\n[sweep]\netas = 0.1, 0.01, 0.001\nwindow = -0.6, 1.1\n";
  const ParsedConfig parsed = parse_config_text(text);
  REQUIRE(parsed.sweep.has_value());
  REQUIRE(parsed.sweep->etas.size() == 3);
  CHECK(parsed.sweep->etas[0] == 0.1);
  CHECK(parsed.sweep->etas[2] == 0.001);
  CHECK(parsed.sweep->window_lo == -0.6);
  CHECK(parsed.sweep->window_hi == 1.1);
  CHECK(parsed.sweep->reference_refinement == 8);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_config_text("[grid]\nx_min - 2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_config_text("[nonsense]\n"), ParseError);
  CHECK_THROWS_AS(parse_config_text("x = 1\n"), ParseError);  // key outside section
  CHECK_THROWS_AS(parse_config_text("[grid]\nx_min = 0\nx_min = 1\n"), ParseError);
  // malformed number inside an otherwise complete config
  std::string bad_number = kMinimalLocal;
  const auto xmin = bad_number.find("x_min = -2.0");
  bad_number.replace(xmin, 12, "x_min = zero");
  CHECK_THROWS_AS(parse_config_text(bad_number), ParseError);
  CHECK_THROWS_AS(parse_config_text(std::string(kMinimalLocal) + "[grid2]\n"), ParseError);
}

TEST_CASE("validation errors name the violated invariant") {
  // domain not padded
  std::string text = kMinimalLocal;
  const auto pos = text.find("x_max = 3.0");
  text.replace(pos, 11, "x_max = 0.6");
  try {
    parse_config_text(text);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("padded") != std::string::npos);
  }
  // missing required section
  CHECK_THROWS_AS(parse_config_text("[grid]\nx_min = 0\nx_max = 1\nn_cells = 10\n"),
                  ValidationError);
  // unknown key inside a known section
  CHECK_THROWS_AS(parse_config_text(std::string(kMinimalLocal) + "\n[time]x\n"), ParseError);
}

TEST_CASE("snapshot csv round-trips bit-exactly") {
  const ParsedConfig parsed = parse_config_text(kMinimalLocal);
  const RunResult run = run_local(parsed.config);
  const auto dir = temp_dir("roundtrip");
  const std::string path = (dir / "snap.csv").string();
  write_snapshot_csv(run, 0, path);

  const SnapshotData data = read_snapshot_csv(path);
  const CellField& original = run.snapshots[0].q;
  REQUIRE(data.q.size() == original.size());
  for (std::size_t i = 0; i < original.size(); ++i) {
    CHECK(data.q[i] == original[i]);  // bit-exact
    CHECK(data.x[i] == original.grid().cell_center(i));
  }
  CHECK(data.w.empty());  // local run leaves w blank

  const CellField rebuilt = snapshot_to_field(data);
  CHECK(rebuilt.grid().n_cells() == original.grid().n_cells());
  for (std::size_t i = 0; i < original.size(); ++i) CHECK(rebuilt[i] == original[i]);
}

TEST_CASE("snapshot csv formatting details") {
  // zero field prints exactly "0"; header + one row per cell; LF endings
  RunResult run;
  run.snapshots.push_back(
      Snapshot{0.0, CellField::zeros(build_grid(-1.0, 1.0, 4)), std::nullopt});
  const auto dir = temp_dir("format");
  const std::string path = (dir / "zero.csv").string();
  write_snapshot_csv(run, 0, path);
  const std::string text = slurp(path);
  CHECK(text.find('\r') == std::string::npos);
  std::istringstream in(text);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    if (lines == 1) {
      CHECK(line == "x,q,w");
    } else {
      CHECK(line.substr(line.find(',') + 1) == "0,");
    }
  }
  CHECK(lines == 5);  // header + 4 cells
}

TEST_CASE("nonlocal snapshot csv carries the face averages") {
  std::string text = kMinimalLocal;
  text += "\n[kernel]\ntype = exponential\neta = 0.1\n";
  const ParsedConfig parsed = parse_config_text(text);
  const RunResult run = run_nonlocal(parsed.config);
  const auto dir = temp_dir("withw");
  const std::string path = (dir / "snap.csv").string();
  write_snapshot_csv(run, 0, path);
  const SnapshotData data = read_snapshot_csv(path);
  REQUIRE(data.w.size() == data.q.size());
  const FaceField& w = *run.snapshots[0].w;
  for (std::size_t i = 0; i < data.w.size(); ++i) CHECK(data.w[i] == w[i + 1]);
}

TEST_CASE("table csv round-trip of written digits") {
  ConvergenceTable table;
  table.rows.push_back({0.1, 0.25, 0.125, 1.0, -0.001953125});
  table.rows.push_back({0.01, 1.0 / 3.0, 0.2, 1.0 + 1e-13, -1e-17});
  const auto dir = temp_dir("table");
  const std::string path = (dir / "table.csv").string();
  write_table_csv(table, path);
  const std::string text = slurp(path);
  CHECK(text.rfind("eta,l1_q,l1_w,linf_max,entropy_min\n", 0) == 0);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("determinism: identical runs produce byte-identical csvs") {
  std::string text = kMinimalLocal;
  text += "\n[kernel]\ntype = exponential\neta = 0.05\n";
  const auto dir = temp_dir("determinism");
  const std::string a = (dir / "a.csv").string();
  const std::string b = (dir / "b.csv").string();
  write_snapshot_csv(run_nonlocal(parse_config_text(text).config), 0, a);
  write_snapshot_csv(run_nonlocal(parse_config_text(text).config), 0, b);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("sweep on a zero datum has zero error columns") {
  SimConfig base = make_sim_config(build_grid(-1.0, 1.0, 64), InitialDatum({-0.2, 0.2}, {0.0}),
                                   std::nullopt, VelocityModel::identity(), 0.1, 0.5, {0.1}, 1);
  SweepSpec spec{base, {0.1}, -0.5, 0.5, 2};
  const ConvergenceTable table = singular_limit_sweep(spec);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].l1_q == 0.0);
  CHECK(table.rows[0].l1_w == 0.0);
  CHECK(table.rows[0].linf_max == 0.0);
}

namespace {

// fine enough (n, stride 1) that the entropy lattice's time resolution holds
constexpr const char* kSweepText = R"(
[grid]
x_min = -2.0
x_max = 3.0
n_cells = 800

[datum]
breakpoints = -0.5, 0, 0.5
plateaus = -0.5, 1

[velocity]
type = identity

[kernel]
type = exponential
eta = 0.1

[time]
t_end = 0.25
snapshot_stride = 1

[sweep]
etas = 0.1, 0.02
window = -0.6, 1.1
reference_refinement = 4
)";

}  // namespace

TEST_CASE("sweep rows satisfy the triangle inequality against stored snapshots") {
  const ParsedConfig parsed = parse_config_text(kSweepText);
  const SweepOutcome outcome = run_sweep_detailed(*parsed.sweep);

  for (std::size_t r = 0; r < outcome.table.rows.size(); ++r) {
    const auto& row = outcome.table.rows[r];
    const Snapshot& snap = outcome.nonlocal_runs[r].snapshots.back();
    // recompute |W - |q_eta|| on the window and check l1_w <= l1_q + that
    const Grid1D& g = snap.q.grid();
    double wq = 0.0;
    for (std::size_t i = 0; i < snap.q.size(); ++i) {
      const double cl = g.face_coord(i);
      const double overlap = std::min(cl + g.dx(), 1.1) - std::max(cl, -0.6);
      if (overlap > 0.0) wq += std::abs((*snap.w)[i + 1] - std::abs(snap.q[i])) * overlap;
    }
    CHECK(row.l1_w <= row.l1_q + wq + 1e-12);
  }
}

TEST_CASE("reference sanity: coarsened reference tracks a direct coarse run") {
  const ParsedConfig parsed = parse_config_text(kSweepText);
  const SweepOutcome outcome = run_sweep_detailed(*parsed.sweep);

  SimConfig direct = parsed.config;
  direct.kernel.reset();
  const RunResult coarse_run = run_local(direct);
  const double separation = l1_distance(outcome.reference_final_coarse,
                                        coarse_run.snapshots.back().q, -0.6, 1.1);
  double smallest = std::numeric_limits<double>::infinity();
  for (const auto& row : outcome.table.rows) smallest = std::min(smallest, row.l1_q);
  CHECK(separation < smallest);
}
