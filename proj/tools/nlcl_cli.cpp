// Command-line front end: single runs, vanishing-nonlocality sweeps, the
// four-panel reproduction study, entropy audits, and snapshot comparison.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlcl/analysis.hpp"
#include "nlcl/config_file.hpp"
#include "nlcl/csv_io.hpp"
#include "nlcl/errors.hpp"
#include "nlcl/local_solver.hpp"
#include "nlcl/nonlocal_solver.hpp"
#include "nlcl/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitIo = 4;

void print_warnings(const nlcl::RunResult& result) {
  for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
}

void print_table(const nlcl::ConvergenceTable& table) {
  std::cout << "# windowed L1 distances at the final snapshot time stand in for\n"
               "# weak-star convergence, which is not directly measurable\n";
  std::cout << "eta,l1_q,l1_w,linf_max,entropy_min\n";
  for (const auto& row : table.rows) {
    std::cout << nlcl::format_double(row.eta) << ',' << nlcl::format_double(row.l1_q) << ','
              << nlcl::format_double(row.l1_w) << ',' << nlcl::format_double(row.linf_max) << ','
              << nlcl::format_double(row.entropy_min) << "\n";
  }
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
  const nlcl::ParsedConfig parsed = nlcl::parse_config(config_path);
  const bool nonlocal = parsed.config.kernel.has_value();
  const nlcl::RunResult result =
      nonlocal ? nlcl::run_nonlocal(parsed.config) : nlcl::run_local(parsed.config);
  print_warnings(result);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw nlcl::IoError("cannot create '" + out_dir + "': " + ec.message());
  for (std::size_t s = 0; s < result.snapshots.size(); ++s) {
    const std::string file = "snapshot_t_" + nlcl::format_label(result.snapshots[s].time) +
                             ".csv";
    nlcl::write_snapshot_csv(result, s, (std::filesystem::path(out_dir) / file).string());
    std::cout << "wrote " << file << "\n";
  }
  const auto& d = result.diagnostics;
  std::cout << (nonlocal ? "nonlocal" : "local") << " run: " << result.total_steps
            << " steps\n";
  std::printf("  mass     %.12g -> %.12g\n", d.mass.front(), d.mass.back());
  std::printf("  l1       %.12g -> %.12g\n", d.l1.front(), d.l1.back());
  std::printf("  sup      %.12g -> %.12g\n", d.linf.front(), d.linf.back());
  std::printf("  tv       %.12g -> %.12g\n", d.tv.front(), d.tv.back());
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& out_file) {
  const nlcl::ParsedConfig parsed = nlcl::parse_config(config_path);
  if (!parsed.sweep) {
    throw nlcl::ValidationError("config file has no [sweep] section");
  }
  const nlcl::ConvergenceTable table = nlcl::singular_limit_sweep(*parsed.sweep);
  print_table(table);
  if (!out_file.empty()) {
    nlcl::write_table_csv(table, out_file);
    std::cout << "wrote " << out_file << "\n";
  }
  return kExitOk;
}

int cmd_figure1(const std::string& out_dir) {
  const nlcl::Figure1Summary summary = nlcl::figure1(out_dir);
  std::cout << "figure1: " << summary.nonlocal_runs << " nonlocal runs, "
            << summary.reference_runs << " reference runs, " << summary.files_written.size()
            << " files in " << out_dir << "\n";
  std::cout << "# windowed L1 distances at the final snapshot time stand in for\n"
               "# weak-star convergence, which is not directly measurable\n";
  return kExitOk;
}

int cmd_entropy_audit(const std::string& config_path) {
  const nlcl::ParsedConfig parsed = nlcl::parse_config(config_path);
  const bool nonlocal = parsed.config.kernel.has_value();
  const nlcl::RunResult result =
      nonlocal ? nlcl::run_nonlocal(parsed.config) : nlcl::run_local(parsed.config);
  print_warnings(result);

  const nlcl::FluxFunction flux(parsed.config.velocity);
  const nlcl::EntropyPair pair = nlcl::EntropyPair::quadratic();
  double min_e = std::numeric_limits<double>::infinity();
  std::cout << "t_center,x_center,E\n";
  for (const nlcl::TestBump& bump : nlcl::entropy_bump_lattice(parsed.config)) {
    const double e = nlcl::entropy_functional(result, pair, bump, flux);
    min_e = std::min(min_e, e);
    std::cout << nlcl::format_double(bump.t_center()) << ','
              << nlcl::format_double(bump.x_center()) << ',' << nlcl::format_double(e) << "\n";
  }
  std::cout << "min_E," << nlcl::format_double(min_e) << "\n";
  return kExitOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b,
                const std::vector<double>& window) {
  const nlcl::CellField a = nlcl::snapshot_to_field(nlcl::read_snapshot_csv(path_a));
  const nlcl::CellField b = nlcl::snapshot_to_field(nlcl::read_snapshot_csv(path_b));
  const double d = nlcl::l1_distance(a, b, window[0], window[1]);
  std::cout << nlcl::format_double(d) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-volume laboratory for nonlocal conservation laws with "
               "sign-unrestricted data and their vanishing-nonlocality limits"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::string out_file;
  std::string path_a, path_b;
  std::vector<double> window{-0.6, 1.1};

  auto* run = app.add_subcommand("run", "Run one simulation from a config file");
  run->add_option("config", config_path, "config file")->required();
  run->add_option("--out", out_dir, "output directory for snapshot CSVs");

  auto* sweep = app.add_subcommand("sweep", "Vanishing-nonlocality convergence table");
  sweep->add_option("config", config_path, "config file with a [sweep] section")->required();
  sweep->add_option("--out", out_file, "also write the table CSV here");

  auto* fig = app.add_subcommand("figure1", "Four-panel reproduction study");
  fig->add_option("--out", out_dir, "output directory")->required();

  auto* audit = app.add_subcommand("entropy-audit", "Entropy functional over the bump family");
  audit->add_option("config", config_path, "config file")->required();

  auto* compare = app.add_subcommand("compare", "Windowed L1 distance of two snapshot CSVs");
  compare->add_option("snapshotA", path_a, "first snapshot CSV")->required();
  compare->add_option("snapshotB", path_b, "second snapshot CSV")->required();
  compare->add_option("--window", window, "comparison window a,b")->delimiter(',')
      ->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run->parsed()) return cmd_run(config_path, out_dir);
    if (sweep->parsed()) return cmd_sweep(config_path, out_file);
    if (fig->parsed()) return cmd_figure1(out_dir);
    if (audit->parsed()) return cmd_entropy_audit(config_path);
    if (compare->parsed()) return cmd_compare(path_a, path_b, window);
  } catch (const nlcl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nlcl::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const nlcl::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
