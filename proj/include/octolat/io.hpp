#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "octolat/grid.hpp"
#include "octolat/spectral.hpp"

namespace octolat {

// One verified (or merely measured) claim. Tag fields that do not apply to a
// claim stay at their defaults so every report serializes with the same
// schema; `pass` is emitted only for hard assertions (has_pass).
struct AuditReport {
  std::string claim;
  std::string e_variant;                // "paper" | "exact" | ""
  std::string boundary_sum_convention;  // "corrected" | "as-printed" | ""
  std::string parenthesization;         // "left-nested" | "right-nested" | ""
  int weight_exponent = 0;              // 0 when not applicable
  GridSpec grid;
  std::uint64_t seed = 0;
  double residual_max = 0.0;
  double residual_mean = 0.0;
  bool has_pass = false;
  bool pass = false;
  double wall_time_s = 0.0;  // stays 0.0 unless timings were requested
};

// Single-line JSON with a fixed field order, suitable for a report stream.
std::string to_json_line(const AuditReport& r);
void write_report_stream(std::ostream& os, const std::vector<AuditReport>& reports);

// Binary kernel container: magic "OCT8", version u32, variant u8 (0 paper,
// 1 exact), direction u8 (0 forward, 1 backward), 8 x u32 sizes, f64 h,
// u32 singular-node count followed by the node indices, then the values in
// row-major order (m7 fastest), 8 components per point, each written as two
// little-endian f64 (re, im). Kernel values are real, so im is written 0.0;
// on reload the singular-node norm forms are not recoverable and read as 0.
void write_kernel_bin(const std::string& path, const Fundsol& kernel);
Fundsol read_kernel_bin(const std::string& path);

// Lossless CSV export: columns m0..m7 then c0_re,c0_im,...,c7_re,c7_im with
// 17 significant digits.
void write_kernel_csv(const std::string& path, const Fundsol& kernel);

// Boundary-layer CSV: a leading "# layer=<L> h=<h>" line, a header row
// m0..m6,c0..c7, then one row per point. The reader infers the axis sizes
// and requires every point of the inferred box exactly once.
void write_boundary_csv(const std::string& path, const BoundaryData& bd);
BoundaryData read_boundary_csv(const std::string& path);

}  // namespace octolat
