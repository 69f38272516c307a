#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "octolat/errors.hpp"
#include "octolat/io.hpp"
#include "octolat/oracle.hpp"
#include "octolat/spectral.hpp"

using namespace octolat;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

ComplexOctonion from_array(const std::array<std::complex<double>, 8>& v) {
  ComplexOctonion a;
  for (int c = 0; c < 8; ++c) a.set_comp(c, v[static_cast<std::size_t>(c)]);
  return a;
}

}  // namespace

TEST_CASE("seeded rng is reproducible and bounded") {
  SeededRng a(123), b(123), c(124);
  bool diverged = false;
  for (int i = 0; i < 1000; ++i) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    if (x != c.uniform()) diverged = true;
    CHECK(x >= -1.0);
    CHECK(x < 1.0);
  }
  CHECK(diverged);

  SeededRng d(5);
  bool lo = false, hi = false;
  for (int i = 0; i < 500; ++i) {
    const int v = d.uniform_int(2, 4);
    CHECK(v >= 2);
    CHECK(v <= 4);
    lo = lo || v == 2;
    hi = hi || v == 4;
  }
  CHECK(lo);
  CHECK(hi);
}

TEST_CASE("random fields honor the support box and zero-mean option") {
  std::array<int, 8> sizes;
  sizes.fill(3);
  std::array<int, 8> origin{};
  origin[7] = -1;
  const GridSpec spec = GridSpec::block(sizes, 1.0, origin);
  IndexBox box;
  box.empty = false;
  for (int j = 0; j < 8; ++j) {
    box.lo[j] = 0;
    box.hi[j] = 1;
  }
  const GridFunction f = random_grid(77, spec, &box, true);
  const IndexBox got = support_box(f);
  REQUIRE_FALSE(got.empty);
  for (int j = 0; j < 8; ++j) {
    CHECK(got.lo[j] >= box.lo[j]);
    CHECK(got.hi[j] <= box.hi[j]);
  }
  for (int c = 0; c < 8; ++c) {
    double sum = 0.0;
    for (double v : f.comp[c]) sum += v;
    CHECK(std::abs(sum) < 1e-12);
  }
  // Same seed, same field.
  const GridFunction g = random_grid(77, spec, &box, true);
  CHECK(max_abs_diff(f, g) == 0.0);
}

TEST_CASE("dense symbol inverse matches the algebraic inverse") {
  const ComplexOctonion e1 = ComplexOctonion::basis(1);
  double cond = 0.0;
  const ComplexOctonion inv = dense_symbol_inverse(e1, MulSide::left, &cond);
  CHECK(max_abs(inv - ComplexOctonion::basis(1, -1.0)) < 1e-12);
  CHECK(cond >= 1.0);

  SeededRng rng(31);
  for (int t = 0; t < 20; ++t) {
    ComplexOctonion s;
    for (int c = 0; c < 8; ++c) s.set_comp(c, {rng.uniform(), rng.uniform()});
    const ComplexOctonion li = dense_symbol_inverse(s, MulSide::left);
    CHECK(max_abs(mul(s, li) - ComplexOctonion::basis(0)) < 1e-10);
    const ComplexOctonion ri = dense_symbol_inverse(s, MulSide::right);
    CHECK(max_abs(mul(ri, s) - ComplexOctonion::basis(0)) < 1e-10);
  }

  ComplexOctonion zd = ComplexOctonion::basis(0);
  zd.set_comp(1, {0.0, 1.0});
  CHECK_THROWS_AS(dense_symbol_inverse(zd, MulSide::left), SingularMatrix);
}

TEST_CASE("null vector of a zero-divisor multiplication matrix") {
  ComplexOctonion zd = ComplexOctonion::basis(0);
  zd.set_comp(1, {0.0, 1.0});
  const std::array<std::complex<double>, 8> v = null_vector8(mul_matrix(zd, MulSide::left));
  const ComplexOctonion nv = from_array(v);
  CHECK(max_abs(mul(zd, nv)) < 1e-10);
  double big = 0.0;
  for (const auto& z : v) big = std::max(big, std::abs(z));
  CHECK(big == doctest::Approx(1.0));

  const ComplexOctonion reg = ComplexOctonion::basis(3, 2.0);
  CHECK_THROWS_AS(null_vector8(mul_matrix(reg, MulSide::left)), SingularMatrix);
}

TEST_CASE("solve8 solves the real representation") {
  SeededRng rng(32);
  ComplexOctonion s;
  for (int c = 0; c < 8; ++c) s.set_comp(c, {rng.uniform(), rng.uniform()});
  const std::array<std::complex<double>, 8> a = {{{rng.uniform(), 0.0},
                                                  {rng.uniform(), 0.2},
                                                  {rng.uniform(), -0.4},
                                                  {rng.uniform(), 0.0},
                                                  {rng.uniform(), 1.0},
                                                  {rng.uniform(), 0.0},
                                                  {rng.uniform(), -0.1},
                                                  {rng.uniform(), 0.3}}};
  const std::array<std::complex<double>, 64> m = mul_matrix(s, MulSide::left);
  const std::array<std::complex<double>, 8> x = solve8(m, a);
  for (int r = 0; r < 8; ++r) {
    std::complex<double> acc = 0.0;
    for (int cc = 0; cc < 8; ++cc)
      acc += m[static_cast<std::size_t>(r * 8 + cc)] * x[static_cast<std::size_t>(cc)];
    CHECK(std::abs(acc - a[static_cast<std::size_t>(r)]) < 1e-10);
  }
}

TEST_CASE("oracle guards refuse oversized inputs") {
  const GridSpec big = GridSpec::uniform_torus(5, 1.0);
  const GridFunction f(big);
  CHECK_THROWS_AS(naive_dft(f), SizeGuard);
  const LayerSpec sp = LayerSpec::uniform(5, 1.0);
  const BoundaryData bd(sp, 0);
  CHECK_THROWS_AS(naive_boundary_convolution(bd, bd, 1.0), SizeGuard);
}

TEST_CASE("binary kernel files round trip bit-exactly") {
  const GridSpec spec = GridSpec::uniform_torus(3, 1.0);
  const Fundsol e = fundsol(spec, DiffDirection::forward, FundsolVariant::exact);
  const std::string path = "tmp_test_kernel.oct8";
  write_kernel_bin(path, e);
  const Fundsol back = read_kernel_bin(path);
  CHECK(back.variant == e.variant);
  CHECK(back.direction == e.direction);
  CHECK(back.values.spec.h == e.values.spec.h);
  REQUIRE(back.singular.nodes.size() == e.singular.nodes.size());
  for (std::size_t i = 0; i < e.singular.nodes.size(); ++i)
    CHECK(back.singular.nodes[i].index == e.singular.nodes[i].index);
  CHECK(max_abs_diff(back.values, e.values) == 0.0);
  CHECK(back.max_imag == 0.0);

  const std::string again = "tmp_test_kernel2.oct8";
  write_kernel_bin(again, e);
  CHECK(slurp(path) == slurp(again));
  std::remove(path.c_str());
  std::remove(again.c_str());
}

TEST_CASE("malformed kernel files are rejected") {
  const std::string path = "tmp_bad_kernel.oct8";
  {
    std::ofstream os(path, std::ios::binary);
    os << "NOPE";
  }
  CHECK_THROWS_AS(read_kernel_bin(path), MalformedInput);
  {
    std::ofstream os(path, std::ios::binary);
    os << "OCT8";  // header cut off after the magic
  }
  CHECK_THROWS_AS(read_kernel_bin(path), MalformedInput);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_kernel_bin("does_not_exist.oct8"), MalformedInput);
}

TEST_CASE("boundary csv round trips") {
  const LayerSpec sp = LayerSpec::uniform(2, 0.75);
  const BoundaryData bd = random_boundary(55, sp, -1);
  const std::string path = "tmp_boundary.csv";
  write_boundary_csv(path, bd);
  const BoundaryData back = read_boundary_csv(path);
  CHECK(back.layer == -1);
  CHECK(back.spec7.h == doctest::Approx(0.75).epsilon(1e-16));
  CHECK(max_abs_diff(back, bd) == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("malformed boundary csv inputs are rejected") {
  const std::string path = "tmp_bad_boundary.csv";
  {
    std::ofstream os(path);
    os << "# layer=0 h=1\n";
  }
  CHECK_THROWS_AS(read_boundary_csv(path), MalformedInput);
  {
    std::ofstream os(path);
    os << "# layer=0 h=1\n";
    os << "m0,m1,m2,m3,m4,m5,m6,c0,c1,c2,c3,c4,c5,c6,c7\n";
    os << "0,0,0,0,0,0,0,1,0,0,0,0,0,0,0\n";
    os << "0,0,0,0,0,0,0,2,0,0,0,0,0,0,0\n";  // duplicate point
  }
  CHECK_THROWS_AS(read_boundary_csv(path), MalformedInput);
  {
    std::ofstream os(path);
    os << "# layer=0 h=-1\n";
    os << "m0,m1,m2,m3,m4,m5,m6,c0,c1,c2,c3,c4,c5,c6,c7\n";
    os << "0,0,0,0,0,0,0,1,0,0,0,0,0,0,0\n";
  }
  CHECK_THROWS_AS(read_boundary_csv(path), MalformedInput);
  std::remove(path.c_str());
}

TEST_CASE("report lines serialize with a fixed field order") {
  AuditReport r;
  r.claim = "demo";
  r.e_variant = "exact";
  r.boundary_sum_convention = "corrected";
  r.parenthesization = "";
  r.weight_exponent = 2;
  r.grid = GridSpec::uniform_torus(2, 1.0);
  r.seed = 7;
  r.residual_max = 0.5;
  r.residual_mean = 0.25;
  r.has_pass = true;
  r.pass = true;
  const std::string want =
      "{\"claim\":\"demo\",\"e_variant\":\"exact\","
      "\"boundary_sum_convention\":\"corrected\",\"parenthesization\":\"\","
      "\"weight_exponent\":2,\"grid\":{\"n\":[2,2,2,2,2,2,2,2],\"h\":1.0,"
      "\"topology\":\"torus\",\"origin\":[0,0,0,0,0,0,0,0]},\"seed\":7,"
      "\"residual_max\":0.5,\"residual_mean\":0.25,\"pass\":true,"
      "\"wall_time_s\":0.0}";
  CHECK(to_json_line(r) == want);

  r.has_pass = false;
  const std::string audit = to_json_line(r);
  CHECK(audit.find("\"pass\"") == std::string::npos);
}
