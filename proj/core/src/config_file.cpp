#include "nlcl/config_file.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "nlcl/errors.hpp"

namespace nlcl {

namespace {

struct Entry {
  std::string value;
  int line = 0;
  mutable bool used = false;
};

using Section = std::map<std::string, Entry>;
using Tree = std::map<std::string, Section>;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Tree read_tree(const std::string& text) {
  static const std::vector<std::string> known = {"grid", "datum", "kernel",
                                                 "velocity", "time", "sweep"};
  Tree tree;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", line_no);
      section = trim(line.substr(1, line.size() - 2));
      if (std::find(known.begin(), known.end(), section) == known.end()) {
        throw ParseError("unknown section [" + section + "]", line_no);
      }
      tree[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
    if (section.empty()) throw ParseError("key outside any section", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ParseError("empty key or value", line_no);
    if (!tree[section].emplace(key, Entry{value, line_no}).second) {
      throw ParseError("duplicate key '" + key + "'", line_no);
    }
  }
  return tree;
}

double to_real(const std::string& token, int line) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size()) {
    throw ParseError("not a number: '" + token + "'", line);
  }
  return v;
}

long long to_integer(const std::string& token, int line) {
  char* end = nullptr;
  const long long v = std::strtoll(token.c_str(), &end, 10);
  if (end != token.c_str() + token.size()) {
    throw ParseError("not an integer: '" + token + "'", line);
  }
  return v;
}

std::vector<double> to_list(const std::string& token, int line) {
  std::vector<double> out;
  std::string cell;
  std::istringstream in(token);
  while (std::getline(in, cell, ',')) {
    cell = trim(cell);
    if (cell.empty()) throw ParseError("empty list element", line);
    out.push_back(to_real(cell, line));
  }
  if (out.empty()) throw ParseError("empty list", line);
  return out;
}

class SectionView {
 public:
  SectionView(const Tree& tree, const std::string& name) : name_(name) {
    const auto it = tree.find(name);
    section_ = it == tree.end() ? nullptr : &it->second;
  }

  bool present() const { return section_ != nullptr; }

  const Entry* find(const std::string& key) const {
    if (!section_) return nullptr;
    const auto it = section_->find(key);
    if (it == section_->end()) return nullptr;
    it->second.used = true;
    return &it->second;
  }

  const Entry& require(const std::string& key) const {
    const Entry* e = find(key);
    if (!e) {
      throw ValidationError("missing key '" + key + "' in section [" + name_ + "]");
    }
    return *e;
  }

  double real(const std::string& key) const {
    const Entry& e = require(key);
    return to_real(e.value, e.line);
  }
  double real_or(const std::string& key, double fallback) const {
    const Entry* e = find(key);
    return e ? to_real(e->value, e->line) : fallback;
  }
  long long integer(const std::string& key) const {
    const Entry& e = require(key);
    return to_integer(e.value, e.line);
  }
  long long integer_or(const std::string& key, long long fallback) const {
    const Entry* e = find(key);
    return e ? to_integer(e->value, e->line) : fallback;
  }
  std::vector<double> list(const std::string& key) const {
    const Entry& e = require(key);
    return to_list(e.value, e.line);
  }
  std::string word(const std::string& key) const { return require(key).value; }

  void reject_unused() const {
    if (!section_) return;
    for (const auto& [key, entry] : *section_) {
      if (!entry.used) {
        throw ParseError("unknown key '" + key + "' in section [" + name_ + "]", entry.line);
      }
    }
  }

 private:
  std::string name_;
  const Section* section_;
};

}  // namespace

ParsedConfig parse_config_text(const std::string& text) {
  const Tree tree = read_tree(text);

  const SectionView grid_sec(tree, "grid");
  const SectionView datum_sec(tree, "datum");
  const SectionView kernel_sec(tree, "kernel");
  const SectionView velocity_sec(tree, "velocity");
  const SectionView time_sec(tree, "time");
  const SectionView sweep_sec(tree, "sweep");

  if (!grid_sec.present() || !datum_sec.present() || !velocity_sec.present() ||
      !time_sec.present()) {
    throw ValidationError("config needs sections [grid], [datum], [velocity], [time]");
  }

  Grid1D grid =
      build_grid(grid_sec.real("x_min"), grid_sec.real("x_max"), grid_sec.integer("n_cells"));
  InitialDatum datum(datum_sec.list("breakpoints"), datum_sec.list("plateaus"));

  std::optional<KernelSpec> kernel;
  if (kernel_sec.present()) {
    const std::string type = kernel_sec.word("type");
    if (type == "exponential") {
      kernel = KernelSpec::exponential(kernel_sec.real("eta"));
    } else if (type == "tabulated") {
      kernel = KernelSpec::tabulated_bv(kernel_sec.real("support_length"),
                                        kernel_sec.list("samples"));
    } else {
      throw ValidationError("kernel type must be 'exponential' or 'tabulated', got '" + type +
                            "'");
    }
  }

  VelocityModel velocity = VelocityModel::identity();
  const std::string vtype = velocity_sec.word("type");
  if (vtype == "identity") {
    velocity = VelocityModel::identity();
  } else if (vtype == "square") {
    velocity = VelocityModel::square();
  } else if (vtype == "power") {
    velocity = VelocityModel::power(static_cast<int>(velocity_sec.integer("two_m")));
  } else if (vtype == "tabulated") {
    velocity =
        VelocityModel::tabulated(velocity_sec.list("abscissae"), velocity_sec.list("ordinates"));
  } else {
    throw ValidationError("velocity type must be identity|square|power|tabulated, got '" + vtype +
                          "'");
  }

  const double t_end = time_sec.real("t_end");
  const double cfl = time_sec.real_or("cfl", 0.5);
  std::vector<double> snapshot_times;
  if (time_sec.find("snapshot_times")) {
    snapshot_times = time_sec.list("snapshot_times");
  } else {
    snapshot_times = {t_end};
  }
  const long long stride = time_sec.integer_or("snapshot_stride", 10);
  if (stride <= 0) throw ValidationError("snapshot_stride must be positive");

  ParsedConfig parsed{make_sim_config(grid, datum, kernel, velocity, t_end, cfl, snapshot_times,
                                      static_cast<std::size_t>(stride)),
                      std::nullopt};

  if (sweep_sec.present()) {
    SweepSpec sweep{parsed.config, sweep_sec.list("etas"), -0.6, 1.1, 8};
    if (sweep_sec.find("window")) {
      const std::vector<double> window = sweep_sec.list("window");
      if (window.size() != 2) throw ValidationError("sweep window needs exactly two values");
      sweep.window_lo = window[0];
      sweep.window_hi = window[1];
    }
    const long long refinement = sweep_sec.integer_or("reference_refinement", 8);
    if (refinement <= 0) throw ValidationError("reference_refinement must be positive");
    sweep.reference_refinement = static_cast<std::size_t>(refinement);
    sweep.validate();
    parsed.sweep = std::move(sweep);
  }

  grid_sec.reject_unused();
  datum_sec.reject_unused();
  kernel_sec.reject_unused();
  velocity_sec.reject_unused();
  time_sec.reject_unused();
  sweep_sec.reject_unused();
  return parsed;
}

ParsedConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace nlcl
