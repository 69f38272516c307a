#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "octolat/io.hpp"

namespace octolat {

struct SuiteOptions {
  std::uint64_t seed = 7;
  int size = 4;
  double h = 1.0;
  bool timings = false;               // wall_time_s stays 0.0 when off
  std::size_t max_points = 1679616;  // 6^8 cap for derived kernels
};

struct SuiteResult {
  std::vector<AuditReport> reports;
  bool hard_pass = true;  // every report with a pass field passed
};

const std::vector<std::string>& suite_names();  // includes "all"

// Runs one named suite (algebra, operators, stokes, fundsol, borel-pompeiu,
// hardy, or all) and returns its report stream. Hard assertions set the pass
// field; audit-only measurements never do.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace octolat
