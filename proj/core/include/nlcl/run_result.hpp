#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlcl/fields.hpp"

namespace nlcl {

/// Solution state captured at one requested snapshot time. The face average w
/// is present for nonlocal runs only.
struct Snapshot {
  double time = 0.0;
  CellField q;
  std::optional<FaceField> w;
};

/// Lightweight solution frame retained every snapshot_stride-th step for the
/// entropy audit (always includes the initial and final steps).
struct AuditFrame {
  double time = 0.0;
  CellField q;
};

/// Per-accepted-step scalar diagnostics.
struct DiagnosticsSeries {
  std::vector<double> time;
  std::vector<double> mass;  // sum q dx
  std::vector<double> l1;    // sum |q| dx
  std::vector<double> linf;  // max |q|
  std::vector<double> tv;    // sum |q_{i+1} - q_i|
};

/// Full outcome of one run: requested snapshots, audit trail, diagnostics.
struct RunResult {
  std::vector<Snapshot> snapshots;
  std::vector<AuditFrame> audit;
  DiagnosticsSeries diagnostics;
  std::vector<std::string> warnings;
  std::size_t total_steps = 0;
};

}  // namespace nlcl
