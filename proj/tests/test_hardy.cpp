#include <array>
#include <cmath>
#include <complex>

#include "doctest.h"
#include "octolat/errors.hpp"
#include "octolat/hardy.hpp"
#include "octolat/oracle.hpp"
#include "octolat/spectral.hpp"

using namespace octolat;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Partial inverse transform in the eighth frequency only: integrates the
// 8-D symbol xi-tilde / d^2 over xi_7 by the trapezoid rule, which converges
// geometrically for fixed nonzero layer frequency.
ComplexOctonion layer_value_by_quadrature(const std::array<double, 7>& xib, double h,
                                          int m7, int nodes) {
  const std::vector<double> ax7 = frequency_axis(nodes, h);
  ComplexOctonion acc;
  for (double xi7 : ax7) {
    std::array<double, 8> xi{};
    for (int j = 0; j < 7; ++j) xi[j] = xib[static_cast<std::size_t>(j)];
    xi[7] = xi7;
    ComplexOctonion v = symbol_cr(xi, h, DiffDirection::forward);
    v *= std::complex<double>(1.0 / symbol_d2(xi, h), 0.0);
    const double phase = -static_cast<double>(m7) * h * xi7;
    v *= std::complex<double>(std::cos(phase), std::sin(phase));
    acc += v;
  }
  acc *= std::complex<double>(1.0 / (static_cast<double>(nodes) * h), 0.0);
  return acc;
}

// Independent closed form for the same integral by residues. With
// z = exp(-i h xi7) the transverse integral picks up the pole at z = lambda
// inside the unit circle, plus a pole at z = 0 when m7 = -1:
//   g(m7 >= 0) = N(lambda) lambda^m7 / (db R)
//   g(-1)      = -h N(0) + N(lambda) / (lambda db R)
// with N(z) = xib-tilde + e7 (z - 1)/h, db the 7-D symbol root,
// R = sqrt(4 + h^2 db^2) and lambda = (2 + h^2 db^2 - h db R) / 2.
ComplexOctonion layer_value_by_residues(const std::array<double, 7>& xib, double h,
                                        int m7) {
  std::array<double, 8> xi8{};
  for (int j = 0; j < 7; ++j) xi8[j] = xib[static_cast<std::size_t>(j)];
  const ComplexOctonion base = symbol_cr(xi8, h, DiffDirection::forward);
  const double db2 = symbol_d2(xi8, h);
  const double db = std::sqrt(db2);
  const double r = std::sqrt(4.0 + h * h * db2);
  const double lam = 0.5 * (2.0 + h * h * db2 - h * db * r);
  const auto numer = [&](double z) {
    ComplexOctonion v = base;
    v += ComplexOctonion::basis(7, std::complex<double>((z - 1.0) / h, 0.0));
    return v;
  };
  if (m7 >= 0) {
    ComplexOctonion v = numer(lam);
    v *= std::complex<double>(std::pow(lam, m7) / (db * r), 0.0);
    return v;
  }
  ComplexOctonion v = numer(0.0);
  v *= std::complex<double>(-h, 0.0);
  ComplexOctonion w = numer(lam);
  w *= std::complex<double>(1.0 / (lam * db * r), 0.0);
  v += w;
  return v;
}

BoundaryData nyquist_mode(const LayerSpec& sp, int layer) {
  BoundaryData bd(sp, layer);
  for (std::size_t i = 0; i < bd.size(); ++i) {
    const std::array<int, 7> m = sp.point_at(i);
    bd.comp[0][i] = (m[0] % 2 == 0) ? 1.0 : -1.0;
  }
  return bd;
}

}  // namespace

TEST_CASE("layer symbols at the pinned frequency") {
  std::array<double, 7> xi{};
  xi[0] = kPi;
  const ComplexOctonion v0 = boundary_symbol_E(xi, 1.0, 0);
  ComplexOctonion want = ComplexOctonion::basis(0, -1.0 / (2.0 * std::sqrt(2.0)));
  want -= ComplexOctonion::basis(7, 0.5 - 1.0 / (2.0 * std::sqrt(2.0)));
  CHECK(max_abs(v0 - want) < 1e-14);

  const ComplexOctonion sp = multiplier_s(xi, 1.0, HSign::plus);
  CHECK(max_abs(sp - ComplexOctonion::basis(7, 1.0 + std::sqrt(2.0))) < 1e-14);
  const ComplexOctonion sm = multiplier_s(xi, 1.0, HSign::minus);
  CHECK(max_abs(sm - ComplexOctonion::basis(7, 1.0 - std::sqrt(2.0))) < 1e-14);

  CHECK_THROWS_AS(boundary_symbol_E(std::array<double, 7>{}, 1.0, 0), SingularFrequency);
  CHECK_THROWS_AS(boundary_symbol_E(xi, 1.0, 2), MalformedInput);
}

TEST_CASE("adjacent layer symbols differ only in the e7 part") {
  const std::array<double, 7> xi = {0.7, -1.3, 0.2, 2.9, -0.4, 1.1, -2.2};
  const ComplexOctonion up = boundary_symbol_E(xi, 0.5, 1);
  const ComplexOctonion dn = boundary_symbol_E(xi, 0.5, -1);
  const ComplexOctonion sum = up + dn;
  CHECK(std::abs(sum.comp(7)) < 1e-13);
  const ComplexOctonion diff = up - dn;
  for (int c = 0; c < 7; ++c) CHECK(std::abs(diff.comp(c)) < 1e-13);
  CHECK(std::abs(diff.comp(7)) > 1e-3);
}

TEST_CASE("layer symbols match the transverse quadrature") {
  const std::array<double, 7> points[2] = {
      {kPi, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {kPi / 2.0, -kPi / 2.0, kPi, 0.0, 0.0, 0.0, kPi / 2.0}};
  const double h = 1.0;
  const int nodes = 512;
  for (const std::array<double, 7>& xib : points) {
    // Quadrature and residue evaluation agree on every layer; they share no
    // code beyond the 8-D symbols.
    for (int m7 : {0, 1, -1}) {
      const ComplexOctonion q = layer_value_by_quadrature(xib, h, m7, nodes);
      CHECK(max_abs(q - layer_value_by_residues(xib, h, m7)) < 1e-12);
    }
    // The computed kernel pairs its layer 0 with the printed layer-0 formula
    // and its layer +1 with the printed -h formula.
    const ComplexOctonion q0 = layer_value_by_quadrature(xib, h, 0, nodes);
    CHECK(max_abs(q0 - boundary_symbol_E(xib, h, 0)) < 1e-8);
    const ComplexOctonion q1 = layer_value_by_quadrature(xib, h, 1, nodes);
    CHECK(max_abs(q1 - boundary_symbol_E(xib, h, -1)) < 1e-8);
    // Layer -1 matches the printed +h formula in the first seven components
    // only: its e7 part equals minus the layer-0 e7 part (a residue-calculus
    // identity, since lambda h db R = 1 - lambda^2), which the printed +h
    // formula does not reproduce.
    const ComplexOctonion qm1 = layer_value_by_quadrature(xib, h, -1, nodes);
    const ComplexOctonion p1 = boundary_symbol_E(xib, h, 1);
    for (int c = 0; c < 7; ++c) CHECK(std::abs(qm1.comp(c) - p1.comp(c)) < 1e-8);
    CHECK(std::abs(qm1.comp(7) - p1.comp(7)) > 1e-2);
    CHECK(std::abs(qm1.comp(7) + q0.comp(7)) < 1e-8);
  }
}

TEST_CASE("multiplier fields zero the mean mode") {
  const LayerSpec sp = LayerSpec::uniform(2, 1.0);
  const MultiplierField s = MultiplierField::standard(sp, HSign::plus);
  CHECK(max_abs(s.values[0]) == 0.0);
  const MultiplierField a = MultiplierField::extension(sp, HalfSpaceSide::upper);
  CHECK(max_abs(a.values[0]) == 0.0);
  const MultiplierField am = MultiplierField::extension(sp, HalfSpaceSide::lower);
  CHECK(max_abs(am.values[0] - ComplexOctonion::basis(0)) == 0.0);
}

TEST_CASE("sigma audit finds no unit modes on the small torus") {
  const LayerSpec sp = LayerSpec::uniform(4, 1.0);
  for (HSign sign : {HSign::plus, HSign::minus}) {
    const SigmaAudit sa = sigma_audit(sp, sign);
    CHECK(sa.node_count == sp.point_count() - 1);
    CHECK(sa.sigma_min > 0.5);
    CHECK(sa.unit_nodes.empty());
  }
}

TEST_CASE("single-mode application equals the node multiplication") {
  const LayerSpec sp = LayerSpec::uniform(3, 1.0);
  const MultiplierField s = MultiplierField::standard(sp, HSign::plus);
  const std::size_t k0 = sp.strides()[0];
  const std::size_t k0n = static_cast<std::size_t>(sp.n[0] - 1) * sp.strides()[0];

  SpectralLayer fh(sp, 0);
  ComplexOctonion v;
  for (int c = 0; c < 8; ++c) v.set_comp(c, {0.1 * (c + 1), 0.05 * (7 - c)});
  ComplexOctonion vc;
  for (int c = 0; c < 8; ++c) vc.set_comp(c, std::conj(v.comp(c)));
  set_value_at_flat(fh, k0, v);
  set_value_at_flat(fh, k0n, vc);
  const BoundaryData f = idft7_real(fh);

  SpectralLayer gh(sp, 0);
  set_value_at_flat(gh, k0, mul(s.values[k0], v));
  set_value_at_flat(gh, k0n, mul(s.values[k0n], vc));
  const BoundaryData want = idft7_real(gh);

  CHECK(max_abs_diff(apply_H(f, HSign::plus), want) / max_abs(want) < 1e-12);
}

TEST_CASE("fixed point of an injected zero-divisor multiplier") {
  const LayerSpec sp = LayerSpec::uniform(3, 1.0);
  MultiplierField s;
  s.spec7 = sp;
  s.values.assign(sp.point_count(), ComplexOctonion::basis(0));
  const std::size_t k0 = sp.strides()[0];
  const std::size_t k0n = static_cast<std::size_t>(sp.n[0] - 1) * sp.strides()[0];
  ComplexOctonion sk = ComplexOctonion::basis(0, 2.0);
  sk.set_comp(1, {0.0, 1.0});
  ComplexOctonion skn = ComplexOctonion::basis(0, 2.0);
  skn.set_comp(1, {0.0, -1.0});
  s.values[k0] = sk;
  s.values[k0n] = skn;

  const std::array<std::complex<double>, 8> nv =
      null_vector8(mul_matrix(sk - ComplexOctonion::basis(0), MulSide::left));
  SpectralLayer fh(sp, 0);
  ComplexOctonion vf, vfc;
  for (int c = 0; c < 8; ++c) {
    vf.set_comp(c, nv[static_cast<std::size_t>(c)]);
    vfc.set_comp(c, std::conj(nv[static_cast<std::size_t>(c)]));
  }
  set_value_at_flat(fh, k0, vf);
  set_value_at_flat(fh, k0n, vfc);
  const BoundaryData f = idft7_real(fh);
  REQUIRE(max_abs(f) > 0.0);
  CHECK(max_abs_diff(apply_multiplier(f, s), f) / max_abs(f) < 1e-10);
}

TEST_CASE("projection is idempotent for an involutive multiplier") {
  const LayerSpec sp = LayerSpec::uniform(2, 1.0);
  MultiplierField s;
  s.spec7 = sp;
  s.values.assign(sp.point_count(), ComplexOctonion::basis(0));
  s.values[3] = ComplexOctonion::basis(0, -1.0);  // real self-conjugate mode

  const BoundaryData f = random_boundary(2100, sp, 0);
  const BoundaryData pf = lin_comb(0.5, f, 0.5, apply_multiplier(f, s));
  const BoundaryData ppf = lin_comb(0.5, pf, 0.5, apply_multiplier(pf, s));
  CHECK(max_abs_diff(ppf, pf) / max_abs(f) < 1e-12);
}

TEST_CASE("projection deviation with the derived multiplier is order one") {
  const LayerSpec sp = LayerSpec::uniform(4, 1.0);
  const BoundaryData f = random_boundary(2200, sp, 0, true);
  const BoundaryData pf = apply_P(f, HSign::plus);
  const double dev = max_abs_diff(apply_P(pf, HSign::plus), pf) / max_abs(f);
  CHECK(dev > 1e-4);
  CHECK(dev < 10.0);

  const MembershipReport m = hardy_membership(pf, HSign::plus);
  CHECK_FALSE(m.member);
  CHECK(m.residual > 1e-3);
}

TEST_CASE("membership requires zero-mean data") {
  const LayerSpec sp = LayerSpec::uniform(2, 1.0);
  BoundaryData constant(sp, 0);
  for (std::size_t i = 0; i < constant.size(); ++i) constant.comp[0][i] = 0.25;
  CHECK_THROWS_AS(hardy_membership(constant, HSign::plus), MalformedInput);

  const BoundaryData zero(sp, 0);
  const MembershipReport m = hardy_membership(zero, HSign::plus);
  CHECK(m.member);
  CHECK(m.residual == 0.0);
}

TEST_CASE("inner product of a point mass") {
  for (double h : {1.0, 0.5}) {
    const LayerSpec sp = LayerSpec::uniform(2, h);
    BoundaryData f(sp, 0);
    f.comp[0][0] = 1.0;
    for (HalfSpaceSide side : {HalfSpaceSide::upper, HalfSpaceSide::lower}) {
      const Octonion ip = inner_product(f, f, side);
      CHECK(max_abs(ip - Octonion::scalar(h * h)) < 1e-15);
    }
  }
}

TEST_CASE("inner product axioms on random data") {
  const LayerSpec sp = LayerSpec::uniform(2, 0.5);
  const AxiomResiduals ax = hilbert_axioms_check(2300, sp, HalfSpaceSide::upper, 8);
  CHECK(ax.additivity / ax.scale < 1e-12);
  CHECK(ax.hermitian / ax.scale < 1e-12);
  CHECK(ax.positivity_offaxis / ax.scale < 1e-12);
  CHECK(ax.positivity_scalar_min >= -1e-12 * ax.scale);
  CHECK(ax.r_homogeneity / ax.scale < 1e-12);
}

TEST_CASE("right scaling by a basis unit escapes the product rule") {
  // f = e1 at a single point, alpha = e2: the product-scaled inner product
  // differs from the scaled product by exactly -2 h^2 e2.
  const double h = 1.0;
  const LayerSpec sp = LayerSpec::uniform(2, h);
  BoundaryData f(sp, 0);
  f.comp[1][0] = 1.0;
  BoundaryData fa(sp, 0);
  fa.comp[4][0] = 1.0;  // e1 e2 = e4

  const Octonion lhs = inner_product(fa, f, HalfSpaceSide::upper);
  const Octonion rhs = mul(inner_product(f, f, HalfSpaceSide::upper), Octonion::basis(2));
  const Octonion diff = lhs - rhs;
  CHECK(max_abs(diff + Octonion::basis(2, 2.0 * h * h)) < 1e-15);
  // The scalar parts still agree, the para-linearity relation.
  CHECK(std::abs(diff.c[0]) < 1e-15);
}

TEST_CASE("weight exponent seven rescales the inner product") {
  const LayerSpec sp = LayerSpec::uniform(2, 0.5);
  const BoundaryData f = random_boundary(2400, sp, 0);
  const BoundaryData g = random_boundary(2401, sp, 0);
  InnerProductOptions w7;
  w7.weight_exponent = 7;
  const Octonion a = inner_product(f, g, HalfSpaceSide::upper, w7);
  const Octonion b = inner_product(f, g, HalfSpaceSide::upper) * std::pow(0.5, 5.0);
  CHECK(max_abs(a - b) / max_abs(b) < 1e-13);
}

TEST_CASE("extension operators at the mesh-scale mode") {
  const LayerSpec sp = LayerSpec::uniform(2, 1.0);
  {
    const BoundaryData mode = nyquist_mode(sp, -1);
    const BoundaryData got = apply_extension(mode, HalfSpaceSide::lower);
    CHECK(got.layer == 0);
    const double factor = 3.0 + 2.0 * std::sqrt(2.0);
    for (std::size_t i = 0; i < mode.size(); ++i)
      CHECK(got.comp[0][i] == doctest::Approx(factor * mode.comp[0][i]).epsilon(1e-12));
  }
  {
    const BoundaryData mode = nyquist_mode(sp, 1);
    const BoundaryData got = apply_extension(mode, HalfSpaceSide::upper);
    CHECK(got.layer == 0);
    const double factor = -(1.0 + std::sqrt(2.0));
    for (std::size_t i = 0; i < mode.size(); ++i)
      CHECK(got.comp[0][i] == doctest::Approx(factor * mode.comp[0][i]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(apply_extension(BoundaryData(sp, 0), HalfSpaceSide::upper), MalformedInput);
  CHECK_THROWS_AS(apply_extension(BoundaryData(sp, 1), HalfSpaceSide::lower), MalformedInput);
}

TEST_CASE("layer transform matches a direct summation") {
  const LayerSpec sp = LayerSpec::uniform(2, 0.75);
  const BoundaryData f = random_boundary(2500, sp, 0);
  const SpectralLayer F = dft7(f);
  std::array<std::vector<double>, 7> ax;
  for (int j = 0; j < 7; ++j) ax[j] = frequency_axis(sp.n[j], sp.h);
  const double w = std::pow(sp.h, 7.0);
  for (std::size_t k = 0; k < sp.point_count(); ++k) {
    const std::array<int, 7> kk = sp.point_at(k);
    ComplexOctonion want;
    for (std::size_t mi = 0; mi < sp.point_count(); ++mi) {
      const std::array<int, 7> mm = sp.point_at(mi);
      double phase = 0.0;
      for (int j = 0; j < 7; ++j)
        phase += mm[j] * sp.h * ax[j][static_cast<std::size_t>(kk[j])];
      const std::complex<double> ph{std::cos(phase), std::sin(phase)};
      ComplexOctonion term = ComplexOctonion::from_real(value_at_flat(f, mi));
      term *= ph * w;
      want += term;
    }
    CHECK(max_abs(value_at_flat(F, k) - want) < 1e-12);
  }
}
