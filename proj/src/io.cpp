#include "octolat/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace octolat {

namespace {

const char kMagic[4] = {'O', 'C', 'T', '8'};
constexpr std::uint32_t kVersion = 1;

void put_bytes(std::ostream& os, const void* p, std::size_t n) {
  os.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

void put_u8(std::ostream& os, std::uint8_t v) { put_bytes(os, &v, 1); }

void put_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xffu);
  put_bytes(os, b, 4);
}

void put_f64(std::ostream& os, double v) {
  std::uint64_t u;
  std::memcpy(&u, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xffu);
  put_bytes(os, b, 8);
}

void get_bytes(std::istream& is, void* p, std::size_t n, const char* what) {
  is.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(is.gcount()) != n)
    throw MalformedInput(std::string("kernel file truncated at ") + what);
}

std::uint8_t get_u8(std::istream& is, const char* what) {
  std::uint8_t v;
  get_bytes(is, &v, 1, what);
  return v;
}

std::uint32_t get_u32(std::istream& is, const char* what) {
  unsigned char b[4];
  get_bytes(is, b, 4, what);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

double get_f64(std::istream& is, const char* what) {
  unsigned char b[8];
  get_bytes(is, b, 8, what);
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  double v;
  std::memcpy(&v, &u, 8);
  return v;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::ordered_json grid_json(const GridSpec& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n;
  j["h"] = g.h;
  j["topology"] = g.topology == Topology::torus ? "torus" : "block";
  j["origin"] = g.origin;
  return j;
}

}  // namespace

std::string to_json_line(const AuditReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["e_variant"] = r.e_variant;
  j["boundary_sum_convention"] = r.boundary_sum_convention;
  j["parenthesization"] = r.parenthesization;
  j["weight_exponent"] = r.weight_exponent;
  j["grid"] = grid_json(r.grid);
  j["seed"] = r.seed;
  j["residual_max"] = r.residual_max;
  j["residual_mean"] = r.residual_mean;
  if (r.has_pass) j["pass"] = r.pass;
  j["wall_time_s"] = r.wall_time_s;
  return j.dump();
}

void write_report_stream(std::ostream& os, const std::vector<AuditReport>& reports) {
  for (const AuditReport& r : reports) os << to_json_line(r) << '\n';
}

void write_kernel_bin(const std::string& path, const Fundsol& kernel) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw MalformedInput("cannot open for writing: " + path);
  put_bytes(os, kMagic, 4);
  put_u32(os, kVersion);
  put_u8(os, kernel.variant == FundsolVariant::paper ? 0 : 1);
  put_u8(os, kernel.direction == DiffDirection::forward ? 0 : 1);
  for (int j = 0; j < 8; ++j) put_u32(os, static_cast<std::uint32_t>(kernel.values.spec.n[j]));
  put_f64(os, kernel.values.spec.h);
  put_u32(os, static_cast<std::uint32_t>(kernel.singular.nodes.size()));
  for (const SingularNode& s : kernel.singular.nodes) put_u32(os, s.index);
  const std::size_t count = kernel.values.spec.point_count();
  for (std::size_t i = 0; i < count; ++i) {
    for (int c = 0; c < 8; ++c) {
      put_f64(os, kernel.values.comp[c][i]);
      put_f64(os, 0.0);
    }
  }
  if (!os) throw MalformedInput("write failed: " + path);
}

Fundsol read_kernel_bin(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw MalformedInput("cannot open for reading: " + path);
  char magic[4];
  get_bytes(is, magic, 4, "magic");
  if (std::memcmp(magic, kMagic, 4) != 0) throw MalformedInput("bad kernel magic: " + path);
  const std::uint32_t version = get_u32(is, "version");
  if (version != kVersion) throw MalformedInput("unsupported kernel version");
  const std::uint8_t variant = get_u8(is, "variant");
  const std::uint8_t direction = get_u8(is, "direction");
  if (variant > 1 || direction > 1) throw MalformedInput("bad kernel header flags");
  std::array<int, 8> sizes{};
  for (int j = 0; j < 8; ++j) {
    const std::uint32_t n = get_u32(is, "sizes");
    if (n < 2 || n > (1u << 16)) throw MalformedInput("bad kernel axis size");
    sizes[j] = static_cast<int>(n);
  }
  const double h = get_f64(is, "h");
  Fundsol k;
  k.variant = variant == 0 ? FundsolVariant::paper : FundsolVariant::exact;
  k.direction = direction == 0 ? DiffDirection::forward : DiffDirection::backward;
  k.values = GridFunction(GridSpec::torus(sizes, h));
  const std::uint32_t nsing = get_u32(is, "singular count");
  const std::size_t count = k.values.spec.point_count();
  if (nsing > count) throw MalformedInput("singular count exceeds point count");
  k.singular.nodes.reserve(nsing);
  for (std::uint32_t i = 0; i < nsing; ++i)
    k.singular.nodes.push_back({get_u32(is, "singular nodes"), 0.0});
  double max_im = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    for (int c = 0; c < 8; ++c) {
      k.values.comp[c][i] = get_f64(is, "values");
      max_im = std::max(max_im, std::abs(get_f64(is, "values")));
    }
  }
  k.max_imag = max_im;
  return k;
}

void write_kernel_csv(const std::string& path, const Fundsol& kernel) {
  std::ofstream os(path);
  if (!os) throw MalformedInput("cannot open for writing: " + path);
  os << "m0,m1,m2,m3,m4,m5,m6,m7";
  for (int c = 0; c < 8; ++c) os << ",c" << c << "_re,c" << c << "_im";
  os << '\n';
  const std::size_t count = kernel.values.spec.point_count();
  for (std::size_t i = 0; i < count; ++i) {
    const LatticePoint m = kernel.values.spec.point_at(i);
    for (int j = 0; j < 8; ++j) os << (j ? "," : "") << m[j];
    for (int c = 0; c < 8; ++c) os << ',' << fmt17(kernel.values.comp[c][i]) << ",0";
    os << '\n';
  }
  if (!os) throw MalformedInput("write failed: " + path);
}

void write_boundary_csv(const std::string& path, const BoundaryData& bd) {
  std::ofstream os(path);
  if (!os) throw MalformedInput("cannot open for writing: " + path);
  os << "# layer=" << bd.layer << " h=" << fmt17(bd.spec7.h) << '\n';
  os << "m0,m1,m2,m3,m4,m5,m6,c0,c1,c2,c3,c4,c5,c6,c7\n";
  for (std::size_t i = 0; i < bd.size(); ++i) {
    const std::array<int, 7> m = bd.spec7.point_at(i);
    for (int j = 0; j < 7; ++j) os << (j ? "," : "") << m[j];
    for (int c = 0; c < 8; ++c) os << ',' << fmt17(bd.comp[c][i]);
    os << '\n';
  }
  if (!os) throw MalformedInput("write failed: " + path);
}

BoundaryData read_boundary_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw MalformedInput("cannot open for reading: " + path);
  int layer = 0;
  double h = 1.0;
  std::string line;
  struct Row {
    std::array<int, 7> m;
    std::array<double, 8> c;
  };
  std::vector<Row> rows;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::sscanf(line.c_str(), "# layer=%d h=%lf", &layer, &h);
      continue;
    }
    if (!header_seen && line.find("m0") == 0) {
      header_seen = true;
      continue;
    }
    Row r{};
    std::istringstream ss(line);
    std::string tok;
    int col = 0;
    while (std::getline(ss, tok, ',')) {
      char* end = nullptr;
      if (col < 7) {
        const long v = std::strtol(tok.c_str(), &end, 10);
        if (end == tok.c_str() || v < 0) throw MalformedInput("bad index in " + path);
        r.m[col] = static_cast<int>(v);
      } else if (col < 15) {
        r.c[col - 7] = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str()) throw MalformedInput("bad value in " + path);
      } else {
        throw MalformedInput("too many columns in " + path);
      }
      ++col;
    }
    if (col != 15) throw MalformedInput("expected 15 columns in " + path);
    rows.push_back(r);
  }
  if (rows.empty()) throw MalformedInput("no data rows in " + path);
  if (h <= 0.0) throw MalformedInput("nonpositive h in " + path);

  LayerSpec sp;
  sp.h = h;
  for (int j = 0; j < 7; ++j) {
    int hi = 0;
    for (const Row& r : rows) hi = std::max(hi, r.m[j]);
    sp.n[j] = hi + 1;
    if (sp.n[j] < 2) throw MalformedInput("inferred axis size below 2 in " + path);
  }
  if (rows.size() != sp.point_count())
    throw MalformedInput("row count does not cover the inferred box in " + path);

  BoundaryData bd(sp, layer);
  std::vector<char> seen(sp.point_count(), 0);
  for (const Row& r : rows) {
    const std::size_t idx = sp.flat_index(r.m);
    if (seen[idx]) throw MalformedInput("duplicate point in " + path);
    seen[idx] = 1;
    Octonion x;
    for (int c = 0; c < 8; ++c) x.c[c] = r.c[c];
    set_value_at_flat(bd, idx, x);
  }
  return bd;
}

}  // namespace octolat
