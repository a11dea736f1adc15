#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nlcl/fields.hpp"
#include "nlcl/run_result.hpp"

namespace nlcl {

struct ConvergenceTable;  // sweep.hpp

/// Writes one snapshot as "x,q,w" rows (header first, LF newlines, 17
/// significant digits; w column left empty for local runs). Row i pairs cell
/// i's center and value with the face average at its right face; the leftmost
/// face value is implicitly 0.
void write_snapshot_csv(const RunResult& result, std::size_t snapshot_index,
                        const std::string& path);

/// Writes a sweep table as "eta,l1_q,l1_w,linf_max,entropy_min" rows.
void write_table_csv(const ConvergenceTable& table, const std::string& path);

/// Parsed snapshot file contents.
struct SnapshotData {
  std::vector<double> x;
  std::vector<double> q;
  std::vector<double> w;  // empty when the w column was blank
};

SnapshotData read_snapshot_csv(const std::string& path);

/// Rebuilds the cell field, inferring the uniform grid from the x column.
CellField snapshot_to_field(const SnapshotData& data);

/// 17-significant-digit decimal form used in every CSV cell (round-trips
/// doubles bit-exactly).
std::string format_double(double v);

/// Short decimal form for file names and labels (6 significant digits).
std::string format_label(double v);

}  // namespace nlcl
