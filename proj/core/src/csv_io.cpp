#include "nlcl/csv_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nlcl/errors.hpp"
#include "nlcl/sweep.hpp"

namespace nlcl {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

namespace {

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps newlines LF everywhere
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

double parse_cell(const std::string& token, const std::string& path, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end == token.c_str()) {
    throw IoError("bad numeric cell '" + token + "' in " + path + " line " +
                  std::to_string(line));
  }
  return v;
}

}  // namespace

void write_snapshot_csv(const RunResult& result, std::size_t snapshot_index,
                        const std::string& path) {
  if (snapshot_index >= result.snapshots.size()) {
    throw IoError("snapshot index " + std::to_string(snapshot_index) + " out of range (" +
                  std::to_string(result.snapshots.size()) + " snapshots)");
  }
  const Snapshot& snap = result.snapshots[snapshot_index];
  auto out = open_for_write(path);
  out << "x,q,w\n";
  const Grid1D& grid = snap.q.grid();
  for (std::size_t i = 0; i < snap.q.size(); ++i) {
    out << format_double(grid.cell_center(i)) << ',' << format_double(snap.q[i]) << ',';
    if (snap.w) out << format_double((*snap.w)[i + 1]);
    out << '\n';
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

void write_table_csv(const ConvergenceTable& table, const std::string& path) {
  auto out = open_for_write(path);
  out << "eta,l1_q,l1_w,linf_max,entropy_min\n";
  for (const auto& row : table.rows) {
    out << format_double(row.eta) << ',' << format_double(row.l1_q) << ','
        << format_double(row.l1_w) << ',' << format_double(row.linf_max) << ','
        << format_double(row.entropy_min) << '\n';
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

SnapshotData read_snapshot_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  SnapshotData data;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != "x,q,w") throw IoError("unexpected header '" + line + "' in " + path);
      continue;
    }
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string xs, qs, ws;
    if (!std::getline(row, xs, ',') || !std::getline(row, qs, ',')) {
      throw IoError("short row in " + path + " line " + std::to_string(line_no));
    }
    std::getline(row, ws, ',');
    data.x.push_back(parse_cell(xs, path, line_no));
    data.q.push_back(parse_cell(qs, path, line_no));
    if (!ws.empty()) data.w.push_back(parse_cell(ws, path, line_no));
  }
  if (data.x.size() < 2) throw IoError("snapshot '" + path + "' has fewer than 2 rows");
  if (!data.w.empty() && data.w.size() != data.x.size()) {
    throw IoError("snapshot '" + path + "' mixes blank and filled w cells");
  }
  return data;
}

CellField snapshot_to_field(const SnapshotData& data) {
  const double dx = data.x[1] - data.x[0];
  if (!(dx > 0.0)) throw IoError("snapshot x column is not increasing");
  const double x_min = data.x.front() - 0.5 * dx;
  const double x_max = data.x.back() + 0.5 * dx;
  Grid1D grid(x_min, x_max, data.x.size());
  return CellField(grid, data.q);
}

}  // namespace nlcl
