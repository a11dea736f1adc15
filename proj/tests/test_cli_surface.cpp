// Exercises the installed command surface of the nlcl binary: subcommands,
// exit codes, and the compare round trip. The binary path arrives via the
// NLCL_CLI environment variable set by CTest.
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string cli() {
  const char* path = std::getenv("NLCL_CLI");
  REQUIRE_MESSAGE(path != nullptr, "NLCL_CLI must point at the built binary");
  return path;
}

int run_cmd(const std::string& args) {
  const std::string cmd = cli() + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

fs::path write_config(const std::string& name, const std::string& body) {
  const fs::path dir = fs::temp_directory_path() / "nlcl_cli_surface";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream out(path);
  out << body;
  return path;
}

constexpr const char* kGoodRun = R"(
[grid]
x_min = -2.0
x_max = 3.0
n_cells = 300

[datum]
breakpoints = -0.5, 0, 0.5
plateaus = -0.5, 1

[kernel]
type = exponential
eta = 0.1

[velocity]
type = identity

[time]
t_end = 0.1
snapshot_times = 0.05, 0.1
)";

}  // namespace

TEST_CASE("run succeeds on a good config and writes the snapshots") {
  const fs::path config = write_config("good.cfg", kGoodRun);
  const fs::path out = fs::temp_directory_path() / "nlcl_cli_surface" / "run_out";
  CHECK(run_cmd("run " + config.string() + " --out " + out.string()) == 0);
  CHECK(fs::exists(out / "snapshot_t_0.05.csv"));
  CHECK(fs::exists(out / "snapshot_t_0.1.csv"));
}

TEST_CASE("compare reports the windowed distance of a snapshot to itself") {
  const fs::path out = fs::temp_directory_path() / "nlcl_cli_surface" / "run_out";
  const std::string snap = (out / "snapshot_t_0.1.csv").string();
  REQUIRE(fs::exists(snap));
  CHECK(run_cmd("compare " + snap + " " + snap + " --window -0.6,1.1") == 0);
}

TEST_CASE("exit code 2 on config errors") {
  const fs::path bad_syntax = write_config("bad_syntax.cfg", "[grid]\nx_min - 2\n");
  CHECK(run_cmd("run " + bad_syntax.string()) == 2);

  const fs::path bad_padding = write_config("bad_padding.cfg", R"(
[grid]
x_min = -0.5
x_max = 0.6
n_cells = 50

[datum]
breakpoints = -0.5, 0, 0.5
plateaus = -0.5, 1

[velocity]
type = identity

[time]
t_end = 0.5
)");
  CHECK(run_cmd("run " + bad_padding.string()) == 2);

  CHECK(run_cmd("run /nonexistent/path.cfg") == 4);  // unreadable file is an IO error
  CHECK(run_cmd("frobnicate") == 2);                 // unknown subcommand
  // sweep on a file without a [sweep] section
  const fs::path no_sweep = write_config("no_sweep.cfg", kGoodRun);
  CHECK(run_cmd("sweep " + no_sweep.string()) == 2);
}

TEST_CASE("exit code 4 on unwritable output") {
  const fs::path config = write_config("good2.cfg", kGoodRun);
  CHECK(run_cmd("run " + config.string() + " --out /proc/no_such_dir") == 4);
}
