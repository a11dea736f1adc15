#pragma once

#include <optional>
#include <string>

#include "nlcl/sim_config.hpp"
#include "nlcl/sweep.hpp"

namespace nlcl {

/// Result of parsing a run file: always a validated SimConfig; additionally a
/// SweepSpec when the file carries a [sweep] section.
struct ParsedConfig {
  SimConfig config;
  std::optional<SweepSpec> sweep;
};

/// Parses the line-oriented "key = value" schema with sections [grid],
/// [datum], [kernel], [velocity], [time], [sweep] (kernel and sweep
/// optional). Defaults: cfl 0.5, snapshot_times {t_end}, snapshot_stride 10,
/// sweep window [-0.6, 1.1], reference_refinement 8. Throws ParseError with
/// a line number on malformed input, ValidationError (and friends) on
/// violated invariants.
ParsedConfig parse_config(const std::string& path);

/// Same parser over an in-memory string (the file-based overload reads and
/// delegates here).
ParsedConfig parse_config_text(const std::string& text);

}  // namespace nlcl
