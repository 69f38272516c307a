#include <array>
#include <cmath>

#include "doctest.h"
#include "octolat/calculus.hpp"
#include "octolat/errors.hpp"
#include "octolat/oracle.hpp"
#include "octolat/spectral.hpp"

using namespace octolat;

namespace {

GridSpec half_window(HalfSpaceSide side) {
  std::array<int, 8> sizes;
  sizes.fill(3);
  sizes[7] = 5;
  std::array<int, 8> origin{};
  origin[7] = side == HalfSpaceSide::upper ? -1 : -3;
  return GridSpec::block(sizes, 1.0, origin);
}

IndexBox inner_box(int m7_lo, int m7_hi) {
  IndexBox b;
  b.empty = false;
  for (int j = 0; j < 7; ++j) {
    b.lo[j] = 1;
    b.hi[j] = 1;
  }
  b.lo[7] = m7_lo;
  b.hi[7] = m7_hi;
  return b;
}

}  // namespace

TEST_CASE("corrected half-space identity vanishes to machine precision") {
  for (HalfSpaceSide side : {HalfSpaceSide::upper, HalfSpaceSide::lower}) {
    const GridSpec win = half_window(side);
    const IndexBox fb =
        side == HalfSpaceSide::upper ? inner_box(0, 1) : inner_box(-1, 0);
    const IndexBox gb =
        side == HalfSpaceSide::upper ? inner_box(1, 2) : inner_box(-2, -1);
    for (int t = 0; t < 5; ++t) {
      const std::uint64_t b = 900 + static_cast<std::uint64_t>(t) * 2;
      const GridFunction f = random_grid(b, win, &fb);
      const GridFunction g = random_grid(b + 1, win, &gb);
      const IdentityResidual res = stokes_residual(f, g, side, {});
      CHECK(res.residual_max / res.scale < 1e-12);
      CHECK(res.convention == SumConvention::corrected);
    }
  }
}

TEST_CASE("corrected whole-space identity for the central operator") {
  std::array<int, 8> sizes;
  sizes.fill(3);
  sizes[7] = 4;
  std::array<int, 8> origin{};
  origin[7] = -1;
  const GridSpec win = GridSpec::block(sizes, 0.5, origin);
  const IndexBox box = inner_box(0, 1);
  for (int t = 0; t < 5; ++t) {
    const std::uint64_t b = 950 + static_cast<std::uint64_t>(t) * 2;
    const GridFunction f = random_grid(b, win, &box);
    const GridFunction g = random_grid(b + 1, win, &box);
    const IdentityResidual res = stokes_residual_central_wholespace(f, g);
    CHECK(res.residual_max / res.scale < 1e-12);
  }
}

TEST_CASE("written summation form leaves a pinned point-mass defect") {
  const GridSpec win = half_window(HalfSpaceSide::upper);
  GridFunction f(win);
  LatticePoint p;
  p.fill(1);
  p[7] = 2;
  add_value_at(f, p, Octonion::scalar(1.0));
  const GridFunction g = f;

  const IdentityResidual ok = stokes_residual(f, g, HalfSpaceSide::upper, {});
  CHECK(ok.residual_max < 1e-14);

  StokesOptions printed;
  printed.convention = SumConvention::as_printed;
  const IdentityResidual bad = stokes_residual(f, g, HalfSpaceSide::upper, printed);
  // Both sums evaluate; their mismatch concentrates at 2 h^7 per component.
  CHECK(bad.residual_max == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(bad.residual_mean == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("half-space sums validate their inputs") {
  const GridSpec win = half_window(HalfSpaceSide::upper);
  const IndexBox box = inner_box(0, 1);
  const GridFunction f = random_grid(1000, win, &box);

  const GridFunction torus_f = random_grid(1001, GridSpec::uniform_torus(3, 1.0));
  CHECK_THROWS_AS(stokes_residual(torus_f, torus_f, HalfSpaceSide::upper, {}),
                  TopologyMismatch);

  const IndexBox lower_box = inner_box(-1, 0);
  const GridFunction other = random_grid(1002, half_window(HalfSpaceSide::lower), &lower_box);
  CHECK_THROWS_AS(stokes_residual(f, other, HalfSpaceSide::upper, {}), MalformedInput);

  const GridFunction touching = random_grid(1003, win);
  CHECK_THROWS_AS(stokes_residual(touching, touching, HalfSpaceSide::upper, {}),
                  SupportViolation);
}

TEST_CASE("interior reconstruction from volume and boundary sums") {
  std::array<int, 8> sizes;
  sizes.fill(5);
  std::array<int, 8> origin{};
  origin[7] = -1;
  const GridSpec win = GridSpec::block(sizes, 1.0, origin);
  IndexBox fb;
  fb.empty = false;
  for (int j = 0; j < 7; ++j) {
    fb.lo[j] = 1;
    fb.hi[j] = 3;
  }
  fb.lo[7] = 0;
  fb.hi[7] = 2;
  const GridFunction f = random_grid(1100, win, &fb);

  const Fundsol e4 = fundsol(GridSpec::uniform_torus(4, 1.0), DiffDirection::forward,
                             FundsolVariant::exact);
  BorelPompeiuOptions opts;
  opts.kernel = &e4;

  LatticePoint m;
  m.fill(2);
  m[7] = 1;
  const Octonion got = borel_pompeiu_eval(f, m, HalfSpaceSide::upper, opts);
  const Octonion want = value_at(f, m);
  CHECK(max_abs(got - want) / max_abs(want) < 0.5);

  // Point above the support: the two sums cancel up to kernel wrap error.
  LatticePoint outside;
  outside.fill(2);
  outside[7] = 3;
  const Octonion off = borel_pompeiu_eval(f, outside, HalfSpaceSide::upper, opts);
  CHECK(max_abs(off) < 0.5 * max_abs(f));
}

TEST_CASE("interior reconstruction validates its inputs") {
  const GridFunction torus_f = random_grid(1200, GridSpec::uniform_torus(3, 1.0));
  LatticePoint m{};
  CHECK_THROWS_AS(borel_pompeiu_eval(torus_f, m, HalfSpaceSide::upper, {}),
                  TopologyMismatch);

  const GridSpec win = half_window(HalfSpaceSide::upper);
  const IndexBox box = inner_box(0, 1);
  const GridFunction f = random_grid(1201, win, &box);
  m.fill(1);
  m[7] = 1;

  BorelPompeiuOptions capped;
  capped.max_points = 10;
  CHECK_THROWS_AS(borel_pompeiu_eval(f, m, HalfSpaceSide::upper, capped),
                  MissingFundamentalSolution);

  const Fundsol bw = fundsol(GridSpec::uniform_torus(3, 1.0), DiffDirection::backward,
                             FundsolVariant::exact);
  BorelPompeiuOptions wrong;
  wrong.kernel = &bw;
  CHECK_THROWS_AS(borel_pompeiu_eval(f, m, HalfSpaceSide::upper, wrong), MalformedInput);

  const Fundsol paper = fundsol(GridSpec::uniform_torus(3, 1.0), DiffDirection::forward,
                                FundsolVariant::paper);
  BorelPompeiuOptions mismatched;
  mismatched.kernel = &paper;  // options still request the exact variant
  CHECK_THROWS_AS(borel_pompeiu_eval(f, m, HalfSpaceSide::upper, mismatched),
                  MalformedInput);
}

TEST_CASE("boundary-to-interior transform of a point mass") {
  const LayerSpec sp = LayerSpec::uniform(3, 1.0);
  const Fundsol e3 = fundsol(GridSpec::uniform_torus(3, 1.0), DiffDirection::forward,
                             FundsolVariant::exact);
  BoundaryData bd(sp, 0);
  bd.comp[0][0] = 1.0;

  CauchyOptions copts;
  copts.kernel = &e3;
  copts.path = ConvolutionPath::direct;
  const GridFunction c = cauchy_transform(bd, HalfSpaceSide::upper, copts);
  LatticePoint m{};
  m[7] = 1;
  LatticePoint k0{};
  Octonion want{};
  acc_basis_mul_right(want, 7, value_at(e3.values, k0));
  want = -want;  // upper corrected orientation, h = 1
  CHECK(max_abs(value_at(c, m) - want) < 1e-13);

  CauchyOptions printed = copts;
  printed.convention = SumConvention::as_printed;
  const GridFunction cp = cauchy_transform(bd, HalfSpaceSide::upper, printed);
  LatticePoint k1{};
  k1[7] = 1;
  Octonion wantp{};
  acc_basis_mul_left(wantp, 7, value_at(e3.values, k1));
  CHECK(max_abs(value_at(cp, m) - wantp) < 1e-13);
}

TEST_CASE("spectral and direct convolution paths agree") {
  const LayerSpec sp = LayerSpec::uniform(2, 1.0);
  const BoundaryData bd = random_boundary(1300, sp, 0);
  for (SumConvention conv : {SumConvention::corrected, SumConvention::as_printed}) {
    for (HalfSpaceSide side : {HalfSpaceSide::upper, HalfSpaceSide::lower}) {
      CauchyOptions a;
      a.convention = conv;
      a.path = ConvolutionPath::spectral;
      CauchyOptions b = a;
      b.path = ConvolutionPath::direct;
      if (side == HalfSpaceSide::lower) {
        a.m7_lo = b.m7_lo = -2;
        a.m7_hi = b.m7_hi = -1;
      } else {
        a.m7_lo = b.m7_lo = 1;
        a.m7_hi = b.m7_hi = 2;
      }
      const GridFunction x = cauchy_transform(bd, side, a);
      const GridFunction y = cauchy_transform(bd, side, b);
      CHECK(max_abs_diff(x, y) < 1e-10);
    }
  }
}

TEST_CASE("transform is additive in the boundary data") {
  const LayerSpec sp = LayerSpec::uniform(2, 1.0);
  const BoundaryData f = random_boundary(1400, sp, 0);
  const BoundaryData g = random_boundary(1401, sp, 0);
  CauchyOptions copts;
  const GridFunction lhs = cauchy_transform(lin_comb(0.25, f, 1.0, g), HalfSpaceSide::upper, copts);
  const GridFunction rhs = lin_comb(0.25, cauchy_transform(f, HalfSpaceSide::upper, copts), 1.0,
                                    cauchy_transform(g, HalfSpaceSide::upper, copts));
  CHECK(max_abs_diff(lhs, rhs) / max_abs(rhs) < 1e-12);
}

TEST_CASE("transform kernel validation") {
  const LayerSpec sp = LayerSpec::uniform(3, 1.0);
  const BoundaryData bd = random_boundary(1500, sp, 0);
  const Fundsol e4 = fundsol(GridSpec::uniform_torus(4, 1.0), DiffDirection::forward,
                             FundsolVariant::exact);
  CauchyOptions wrong_axes;
  wrong_axes.kernel = &e4;
  CHECK_THROWS_AS(cauchy_transform(bd, HalfSpaceSide::upper, wrong_axes), MalformedInput);

  const Fundsol bw = fundsol(GridSpec::uniform_torus(3, 1.0), DiffDirection::backward,
                             FundsolVariant::exact);
  CauchyOptions wrong_dir;
  wrong_dir.kernel = &bw;
  CHECK_THROWS_AS(cauchy_transform(bd, HalfSpaceSide::upper, wrong_dir), MalformedInput);
}

TEST_CASE("monogenicity probe") {
  const GridSpec spec = GridSpec::uniform_torus(3, 1.0);
  GridFunction constant(spec);
  for (std::size_t i = 0; i < spec.point_count(); ++i)
    set_value_at_flat(constant, i, Octonion::basis(4, 2.0));
  const MonogenicityReport ok = is_monogenic(constant, DiffDirection::forward, 0, 2);
  CHECK(ok.monogenic);
  CHECK(ok.residual_max == 0.0);

  GridFunction spike(spec);
  spike.comp[0][13] = 1.0;
  const MonogenicityReport bad = is_monogenic(spike, DiffDirection::forward, 0, 2);
  CHECK_FALSE(bad.monogenic);
  CHECK(bad.residual_max > 0.1);
}
