#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "octolat/calculus.hpp"
#include "octolat/errors.hpp"
#include "octolat/hardy.hpp"
#include "octolat/io.hpp"
#include "octolat/spectral.hpp"
#include "octolat/suites.hpp"

namespace {

using namespace octolat;

GridSpec layer_echo(const LayerSpec& sp) {
  GridSpec g;
  for (int j = 0; j < 7; ++j) g.n[j] = sp.n[j];
  g.n[7] = 1;
  g.h = sp.h;
  return g;
}

void emit_reports(const std::string& path, const std::vector<AuditReport>& reports) {
  if (path.empty()) {
    write_report_stream(std::cout, reports);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedInput("cannot open report path: " + path);
  write_report_stream(out, reports);
}

int run_verify(const std::string& suite, const SuiteOptions& opts,
               const std::string& report_path) {
  const SuiteResult res = run_suite(suite, opts);
  emit_reports(report_path, res.reports);
  return res.hard_pass ? 0 : 1;
}

int run_fundsol(int size, double h, const std::string& direction, const std::string& variant,
                const std::string& out_path, const std::string& format,
                std::uint64_t max_points, const std::string& report_path, bool timings) {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t pts = 1;
  for (int j = 0; j < 8; ++j) pts *= static_cast<std::uint64_t>(size);
  if (pts > max_points)
    throw SizeCapExceeded("requested " + std::to_string(pts) + " points, cap is " +
                          std::to_string(max_points));
  const GridSpec spec = GridSpec::uniform_torus(size, h);
  const DiffDirection dir =
      direction == "forward" ? DiffDirection::forward : DiffDirection::backward;
  const FundsolVariant var =
      variant == "paper" ? FundsolVariant::paper : FundsolVariant::exact;
  const Fundsol kernel = fundsol(spec, dir, var);
  if (format == "bin") {
    write_kernel_bin(out_path, kernel);
  } else {
    write_kernel_csv(out_path, kernel);
  }
  AuditReport r;
  r.claim = "cmd-fundsol-" + variant + "-" + direction;
  r.e_variant = variant;
  r.grid = spec;
  r.residual_max = kernel.max_imag;
  r.residual_mean = static_cast<double>(kernel.singular.nodes.size());
  if (timings)
    r.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit_reports(report_path, {r});
  return 0;
}

int run_project(const std::string& in_path, const std::string& sign_name,
                const std::string& op, const std::string& out_path, double tol,
                const std::string& report_path, bool timings) {
  const auto start = std::chrono::steady_clock::now();
  const BoundaryData bd = read_boundary_csv(in_path);
  const HSign sign = sign_name == "plus" ? HSign::plus : HSign::minus;

  AuditReport r;
  r.claim = "project-" + op + "-" + sign_name;
  r.grid = layer_echo(bd.spec7);

  if (op == "membership") {
    const MembershipReport m = hardy_membership(bd, sign, tol);
    r.residual_max = m.residual;
    r.residual_mean = m.tol;
    r.has_pass = true;
    r.pass = m.member;
  } else {
    BoundaryData result;
    if (op == "H") {
      result = apply_H(bd, sign);
    } else if (op == "P") {
      result = apply_P(bd, sign);
    } else {
      result = apply_extension(
          bd, sign == HSign::plus ? HalfSpaceSide::upper : HalfSpaceSide::lower);
    }
    r.residual_max = max_abs(result);
    r.residual_mean = max_abs(bd);
    if (!out_path.empty()) write_boundary_csv(out_path, result);
  }
  if (timings)
    r.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit_reports(report_path, {r});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"octolat: discrete octonionic function theory on the lattice (h Z)^8"};
  app.require_subcommand(1);
  // Long-only help; the short -h would clash with the --h mesh-width option.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_config("--config", "", "Read options from an INI file");

  std::string report_path;
  bool timings = false;
  std::uint64_t max_points = 1679616;
  app.add_option("--report", report_path,
                 "Write JSON report lines to this path instead of stdout");
  app.add_flag("--timings", timings, "Record wall-clock seconds in reports");
  app.add_option("--max-points", max_points, "Cap on lattice points per kernel")
      ->envname("OCTOLAT_MAX_POINTS")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run verification and audit suites");
  std::string suite = "all";
  SuiteOptions sopts;
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember(suite_names()))
      ->capture_default_str();
  verify->add_option("--seed", sopts.seed, "Base seed for randomized claims")
      ->capture_default_str();
  verify->add_option("--size", sopts.size, "Axis size for the default torus")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();
  verify->add_option("--h", sopts.h, "Mesh width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* fsol = app.add_subcommand("fundsol", "Compute a fundamental-solution kernel");
  int fs_size = 4;
  double fs_h = 1.0;
  std::string fs_direction = "forward";
  std::string fs_variant = "exact";
  std::string fs_out;
  std::string fs_format = "bin";
  fsol->add_option("--size", fs_size, "Torus axis size")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  fsol->add_option("--h", fs_h, "Mesh width")->check(CLI::PositiveNumber)->capture_default_str();
  fsol->add_option("--direction", fs_direction, "Difference direction")
      ->check(CLI::IsMember({"forward", "backward"}))
      ->capture_default_str();
  fsol->add_option("--variant", fs_variant, "Kernel variant")
      ->check(CLI::IsMember({"paper", "exact"}))
      ->capture_default_str();
  fsol->add_option("--out", fs_out, "Output path")->required();
  fsol->add_option("--format", fs_format, "Output format")
      ->check(CLI::IsMember({"bin", "csv"}))
      ->capture_default_str();

  auto* proj = app.add_subcommand("project", "Apply a boundary-layer operator to CSV data");
  std::string pj_in;
  std::string pj_sign = "plus";
  std::string pj_op;
  std::string pj_out;
  double pj_tol = 1e-8;
  proj->add_option("--in", pj_in, "Input boundary CSV")->required();
  proj->add_option("--sign", pj_sign, "Operator sign")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  proj->add_option("--op", pj_op, "Operator")
      ->check(CLI::IsMember({"H", "P", "A", "membership"}))
      ->required();
  proj->add_option("--out", pj_out, "Output boundary CSV (ignored for membership)");
  proj->add_option("--tol", pj_tol, "Membership tolerance")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      sopts.max_points = max_points;
      sopts.timings = timings;
      return run_verify(suite, sopts, report_path);
    }
    if (fsol->parsed()) {
      return run_fundsol(fs_size, fs_h, fs_direction, fs_variant, fs_out, fs_format,
                         max_points, report_path, timings);
    }
    return run_project(pj_in, pj_sign, pj_op, pj_out, pj_tol, report_path, timings);
  } catch (const SizeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
