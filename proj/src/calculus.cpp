#include "octolat/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "octolat/errors.hpp"
#include "octolat/octonion.hpp"

namespace octolat {

namespace {

constexpr std::size_t kDirectPathGuard = 16384;  // 4^7

bool in_half(HalfSpaceSide side, int m7) {
  return side == HalfSpaceSide::upper ? m7 >= 1 : m7 <= -1;
}

IndexBox union_box(const IndexBox& a, const IndexBox& b) {
  if (a.empty) return b;
  if (b.empty) return a;
  IndexBox u = a;
  for (int j = 0; j < 8; ++j) {
    u.lo[j] = std::min(u.lo[j], b.lo[j]);
    u.hi[j] = std::max(u.hi[j], b.hi[j]);
  }
  return u;
}

// The inflated support has to stay inside the window so finite sums agree
// with the infinite-lattice identities under zero extension.
void require_margin(const GridSpec& spec, const IndexBox& support) {
  if (support.empty) return;
  for (int j = 0; j < 8; ++j) {
    const int lo = spec.origin[j];
    const int hi = spec.origin[j] + spec.n[j] - 1;
    if (support.lo[j] - 1 < lo || support.hi[j] + 1 > hi)
      throw SupportViolation("support touches the window face in axis " + std::to_string(j));
  }
}

void require_block_pair(const GridFunction& f, const GridFunction& g) {
  if (f.spec.topology != Topology::block || g.spec.topology != Topology::block)
    throw TopologyMismatch("half-space sums need a block window");
  if (!f.spec.same_shape(g.spec) || f.spec.origin != g.spec.origin)
    throw MalformedInput("f and g must share one window");
}

void require_layers(const GridSpec& spec, int lo_layer, int hi_layer) {
  const int lo = spec.origin[7];
  const int hi = spec.origin[7] + spec.n[7] - 1;
  if (lo_layer < lo || hi_layer > hi)
    throw MalformedInput("window must contain layers m7 in [" + std::to_string(lo_layer) + "," +
                         std::to_string(hi_layer) + "]");
}

// Walks the window cross-section in axes 0..6, handing lattice coordinates
// to fn.
template <class Fn>
void for_each_cross_section(const GridSpec& spec, Fn&& fn) {
  std::array<int, 7> m{};
  for (int j = 0; j < 7; ++j) m[j] = spec.origin[j];
  for (;;) {
    fn(m);
    int axis = 6;
    for (; axis >= 0; --axis) {
      if (++m[axis] <= spec.origin[axis] + spec.n[axis] - 1) break;
      m[axis] = spec.origin[axis];
    }
    if (axis < 0) break;
  }
}

LatticePoint with_layer(const std::array<int, 7>& m, int layer) {
  LatticePoint p{};
  for (int j = 0; j < 7; ++j) p[j] = m[j];
  p[7] = layer;
  return p;
}

GridFunction central_diff(const GridFunction& f, int axis) {
  GridFunction d = diff(f, axis, DiffDirection::forward);
  const GridFunction b = diff(f, axis, DiffDirection::backward);
  for (int c = 0; c < 8; ++c)
    for (std::size_t i = 0; i < d.comp[c].size(); ++i) d.comp[c][i] = 0.5 * (d.comp[c][i] + b.comp[c][i]);
  return d;
}

IdentityResidual finish(IdentityResidual r) {
  const Octonion d = r.lhs - r.rhs;
  r.residual_max = max_abs(d);
  double sum = 0.0;
  for (int c = 0; c < 8; ++c) sum += std::abs(d[c]);
  r.residual_mean = sum / 8.0;
  r.scale = std::max({max_abs(r.lhs), max_abs(r.rhs), 1.0});
  return r;
}

}  // namespace

IdentityResidual stokes_residual(const GridFunction& f, const GridFunction& g, HalfSpaceSide side,
                                 const StokesOptions& opts) {
  require_block_pair(f, g);
  const int layer_g = (side == HalfSpaceSide::upper) ? 1 : 0;
  const int layer_f = (side == HalfSpaceSide::upper) ? 0 : -1;
  require_layers(f.spec, std::min(layer_f, layer_g), std::max(layer_f, layer_g));
  require_margin(f.spec, union_box(support_box(f), support_box(g)));

  const double h = f.spec.h;
  const int n7 = f.spec.n[7];
  const int o7 = f.spec.origin[7];
  const std::size_t total = f.spec.point_count();
  const GridFunction gDp = apply_cr(g, CrVariant::forward, MulSide::right);

  // Axis 7 is the fastest-varying index, so m7 = origin + flat % n7.
  Octonion lhs;
  if (opts.convention == SumConvention::corrected) {
    for (std::size_t i = 0; i < total; ++i) {
      if (!in_half(side, o7 + static_cast<int>(i % n7))) continue;
      lhs += mul(value_at_flat(gDp, i), value_at_flat(f, i));
    }
    for (int j = 0; j < 8; ++j) {
      const GridFunction dfj = diff(f, j, DiffDirection::backward);
      for (std::size_t i = 0; i < total; ++i) {
        if (!in_half(side, o7 + static_cast<int>(i % n7))) continue;
        const Octonion dv = value_at_flat(dfj, i);
        if (max_abs(dv) == 0.0) continue;
        Octonion gej;
        acc_basis_mul_right(gej, j, value_at_flat(g, i));
        lhs += mul(gej, dv);
      }
    }
  } else {
    const GridFunction dmf = apply_cr(f, CrVariant::backward, MulSide::left);
    for (std::size_t i = 0; i < total; ++i) {
      if (!in_half(side, o7 + static_cast<int>(i % n7))) continue;
      lhs += mul(value_at_flat(gDp, i), value_at_flat(f, i)) -
             mul(value_at_flat(g, i), value_at_flat(dmf, i));
    }
  }
  lhs *= std::pow(h, 8.0);

  int wexp = opts.boundary_weight_exponent;
  if (wexp == 0) wexp = (opts.convention == SumConvention::corrected) ? 7 : 8;

  Octonion bacc;
  for_each_cross_section(f.spec, [&](const std::array<int, 7>& mbar) {
    const Octonion gv = value_at(g, with_layer(mbar, layer_g));
    const Octonion fv = value_at(f, with_layer(mbar, layer_f));
    if (max_abs(gv) == 0.0 || max_abs(fv) == 0.0) return;
    if (opts.convention == SumConvention::corrected) {
      Octonion ge7;
      acc_basis_mul_right(ge7, 7, gv);
      bacc += mul(ge7, fv);
    } else {
      acc_basis_mul_left(bacc, 7, mul(gv, fv));
    }
  });
  double sign;
  if (opts.convention == SumConvention::corrected)
    sign = (side == HalfSpaceSide::upper) ? -1.0 : 1.0;
  else
    sign = (side == HalfSpaceSide::upper) ? 1.0 : -1.0;

  IdentityResidual r;
  r.claim = (side == HalfSpaceSide::upper) ? "stokes-upper" : "stokes-lower";
  r.convention = opts.convention;
  r.lhs = lhs;
  r.rhs = bacc * (sign * std::pow(h, static_cast<double>(wexp)));
  return finish(std::move(r));
}

IdentityResidual stokes_residual_central_wholespace(const GridFunction& f, const GridFunction& g,
                                                    SumConvention convention) {
  if (!f.spec.same_shape(g.spec) || f.spec.origin != g.spec.origin ||
      f.spec.topology != g.spec.topology)
    throw MalformedInput("f and g must share one grid");
  if (f.spec.topology == Topology::block)
    require_margin(f.spec, union_box(support_box(f), support_box(g)));

  const std::size_t total = f.spec.point_count();
  const GridFunction gDc = apply_cr(g, CrVariant::central, MulSide::right);
  Octonion lhs;
  if (convention == SumConvention::corrected) {
    for (std::size_t i = 0; i < total; ++i)
      lhs += mul(value_at_flat(gDc, i), value_at_flat(f, i));
    for (int j = 0; j < 8; ++j) {
      const GridFunction dfj = central_diff(f, j);
      for (std::size_t i = 0; i < total; ++i) {
        const Octonion dv = value_at_flat(dfj, i);
        if (max_abs(dv) == 0.0) continue;
        Octonion gej;
        acc_basis_mul_right(gej, j, value_at_flat(g, i));
        lhs += mul(gej, dv);
      }
    }
  } else {
    const GridFunction dcf = apply_cr(f, CrVariant::central, MulSide::left);
    for (std::size_t i = 0; i < total; ++i)
      lhs += mul(value_at_flat(gDc, i), value_at_flat(f, i)) -
             mul(value_at_flat(g, i), value_at_flat(dcf, i));
  }
  lhs *= std::pow(f.spec.h, 8.0);

  IdentityResidual r;
  r.claim = "stokes-central-wholespace";
  r.convention = convention;
  r.lhs = lhs;
  return finish(std::move(r));
}

namespace {

const Fundsol* resolve_bp_kernel(const GridFunction& f, const BorelPompeiuOptions& opts,
                                 Fundsol& local) {
  if (opts.kernel) {
    const Fundsol* e = opts.kernel;
    if (e->direction != DiffDirection::forward)
      throw MalformedInput("Borel-Pompeiu kernel must be the forward-direction solution");
    if (e->variant != opts.variant)
      throw MalformedInput("kernel variant does not match the requested variant");
    if (e->values.spec.topology != Topology::torus)
      throw TopologyMismatch("kernel must live on a torus");
    if (e->values.spec.h != f.spec.h) throw MalformedInput("kernel mesh width differs from f");
    return e;
  }
  std::array<int, 8> sizes{};
  std::size_t prod = 1;
  for (int j = 0; j < 8; ++j) {
    sizes[j] = 2 * f.spec.n[j];
    prod *= static_cast<std::size_t>(sizes[j]);
  }
  if (prod > opts.max_points)
    throw MissingFundamentalSolution(
        "default kernel torus would exceed max_points; pass an explicit kernel");
  local = fundsol(GridSpec::torus(sizes, f.spec.h), DiffDirection::forward, opts.variant);
  return &local;
}

}  // namespace

Octonion borel_pompeiu_eval(const GridFunction& f, const LatticePoint& m, HalfSpaceSide side,
                            const BorelPompeiuOptions& opts) {
  if (f.spec.topology != Topology::block)
    throw TopologyMismatch("borel_pompeiu_eval needs a block window");
  const int layer_bnd_f = (side == HalfSpaceSide::upper) ? 0 : -1;
  const int layer_base = (side == HalfSpaceSide::upper) ? 1 : 0;
  require_layers(f.spec, std::min(layer_bnd_f, layer_base), std::max(layer_bnd_f, layer_base));
  require_margin(f.spec, support_box(f));

  Fundsol local;
  const Fundsol* E = resolve_bp_kernel(f, opts, local);

  const double h = f.spec.h;
  const int n7 = f.spec.n[7];
  const int o7 = f.spec.origin[7];
  const std::size_t total = f.spec.point_count();

  Octonion vol;
  if (opts.convention == SumConvention::corrected) {
    for (int j = 0; j < 8; ++j) {
      const GridFunction dfj = diff(f, j, DiffDirection::backward);
      for (std::size_t i = 0; i < total; ++i) {
        if (!in_half(side, o7 + static_cast<int>(i % n7))) continue;
        const Octonion dv = value_at_flat(dfj, i);
        if (max_abs(dv) == 0.0) continue;
        const LatticePoint n = f.spec.point_at(i);
        LatticePoint d{};
        for (int a = 0; a < 8; ++a) d[a] = n[a] - m[a];
        Octonion eej;
        acc_basis_mul_right(eej, j, value_at(E->values, d));
        vol += mul(eej, dv);
      }
    }
  } else {
    const GridFunction dmf = apply_cr(f, CrVariant::backward, MulSide::left);
    for (std::size_t i = 0; i < total; ++i) {
      if (!in_half(side, o7 + static_cast<int>(i % n7))) continue;
      const Octonion dv = value_at_flat(dmf, i);
      if (max_abs(dv) == 0.0) continue;
      const LatticePoint n = f.spec.point_at(i);
      LatticePoint d{};
      for (int a = 0; a < 8; ++a) d[a] = n[a] - m[a];
      vol += mul(value_at(E->values, d), dv);
    }
  }
  vol *= std::pow(h, 8.0);

  Octonion bnd;
  for_each_cross_section(f.spec, [&](const std::array<int, 7>& nbar) {
    const Octonion fv = value_at(f, with_layer(nbar, layer_bnd_f));
    if (max_abs(fv) == 0.0) return;
    LatticePoint d{};
    for (int a = 0; a < 7; ++a) d[a] = nbar[a] - m[a];
    if (opts.convention == SumConvention::corrected) {
      d[7] = layer_base - m[7];
      Octonion ee7;
      acc_basis_mul_right(ee7, 7, value_at(E->values, d));
      bnd += mul(ee7, fv);
    } else {
      d[7] = layer_base;
      acc_basis_mul_left(bnd, 7, mul(value_at(E->values, d), fv));
    }
  });

  if (opts.convention == SumConvention::corrected) {
    const double bsign = (side == HalfSpaceSide::upper) ? -1.0 : 1.0;
    return bnd * (bsign * std::pow(h, 7.0)) - vol;
  }
  const double bsign = (side == HalfSpaceSide::upper) ? 1.0 : -1.0;
  return vol + bnd * (bsign * std::pow(h, 8.0));
}

GridFunction cauchy_transform(const BoundaryData& bd, HalfSpaceSide side,
                              const CauchyOptions& opts) {
  int lo = opts.m7_lo;
  int hi = opts.m7_hi;
  if (lo > hi) {
    lo = (side == HalfSpaceSide::upper) ? 1 : -3;
    hi = (side == HalfSpaceSide::upper) ? 3 : -1;
  }
  const LayerSpec& s7 = bd.spec7;

  Fundsol local;
  const Fundsol* E = opts.kernel;
  if (E) {
    if (E->values.spec.topology != Topology::torus)
      throw TopologyMismatch("kernel must live on a torus");
    for (int j = 0; j < 7; ++j)
      if (E->values.spec.n[j] != s7.n[j])
        throw MalformedInput("kernel axes 0..6 must match the boundary layer");
    if (E->values.spec.h != s7.h) throw MalformedInput("kernel mesh width differs from the layer");
    if (E->direction != DiffDirection::forward)
      throw MalformedInput("Cauchy transform kernel must be the forward-direction solution");
    if (E->variant != opts.variant)
      throw MalformedInput("kernel variant does not match the requested variant");
  } else {
    std::array<int, 8> sizes{};
    for (int j = 0; j < 7; ++j) sizes[j] = s7.n[j];
    sizes[7] = s7.n[0];
    local = fundsol(GridSpec::torus(sizes, s7.h), DiffDirection::forward, opts.variant);
    E = &local;
  }

  std::array<int, 8> on{};
  std::array<int, 8> oo{};
  for (int j = 0; j < 7; ++j) on[j] = s7.n[j];
  on[7] = hi - lo + 1;
  oo[7] = lo;
  GridFunction out(GridSpec::block(on, s7.h, oo));

  const double h = s7.h;
  const bool corrected = opts.convention == SumConvention::corrected;
  const int base = (side == HalfSpaceSide::upper) ? 1 : 0;
  double sign;
  double wfac;
  if (corrected) {
    sign = (side == HalfSpaceSide::upper) ? -1.0 : 1.0;
    wfac = std::pow(h, 7.0);
  } else {
    sign = (side == HalfSpaceSide::upper) ? 1.0 : -1.0;
    wfac = std::pow(h, 8.0);
  }

  const std::size_t totw = s7.point_count();
  SpectralLayer bf;
  bool have_bf = false;
  const ComplexOctonion e7c = ComplexOctonion::basis(7, {1.0, 0.0});

  for (int m7 = lo; m7 <= hi; ++m7) {
    const int klayer = corrected ? base - m7 : base;
    const BoundaryData kernel = layer_of(E->values, klayer);
    BoundaryData out_layer;
    if (opts.path == ConvolutionPath::direct) {
      if (totw > kDirectPathGuard) throw SizeGuard("direct path limited to 4^7 points");
      out_layer.spec7 = s7;
      out_layer.layer = m7;
      for (int c = 0; c < 8; ++c) out_layer.comp[c].assign(totw, 0.0);
      for (std::size_t mf = 0; mf < totw; ++mf) {
        const std::array<int, 7> mm = s7.point_at(mf);
        Octonion acc;
        for (std::size_t nf = 0; nf < totw; ++nf) {
          const Octonion bv = value_at_flat(bd, nf);
          if (max_abs(bv) == 0.0) continue;
          const std::array<int, 7> nn = s7.point_at(nf);
          std::array<int, 7> dd{};
          for (int a = 0; a < 7; ++a) dd[a] = nn[a] - mm[a];
          const Octonion kv = value_at_flat(kernel, kernel.spec7.flat_index(dd));
          if (corrected) {
            Octonion ke7;
            acc_basis_mul_right(ke7, 7, kv);
            acc += mul(ke7, bv);
          } else {
            acc_basis_mul_left(acc, 7, mul(kv, bv));
          }
        }
        set_value_at_flat(out_layer, mf, acc * (sign * wfac));
      }
    } else {
      if (!have_bf) {
        bf = dft7(bd);
        have_bf = true;
      }
      const SpectralLayer kf = dft7(kernel);
      SpectralLayer gs;
      gs.spec7 = s7;
      gs.layer = m7;
      for (int c = 0; c < 8; ++c) gs.comp[c].assign(totw, {0.0, 0.0});
      const std::complex<double> scale{sign * wfac / std::pow(h, 7.0), 0.0};
      for (std::size_t kfi = 0; kfi < totw; ++kfi) {
        const std::array<int, 7> k = s7.point_at(kfi);
        std::array<int, 7> kneg{};
        for (int a = 0; a < 7; ++a) kneg[a] = (s7.n[a] - k[a]) % s7.n[a];
        const ComplexOctonion km = value_at_flat(kf, s7.flat_index(kneg));
        const ComplexOctonion bv = value_at_flat(bf, kfi);
        ComplexOctonion val = corrected ? mul(mul(km, e7c), bv) : mul(e7c, mul(km, bv));
        val *= scale;
        set_value_at_flat(gs, kfi, val);
      }
      out_layer = idft7_real(gs);
      out_layer.layer = m7;
    }
    const std::size_t layer_offset = static_cast<std::size_t>(m7 - lo);
    const std::size_t n7out = static_cast<std::size_t>(on[7]);
    for (std::size_t p = 0; p < totw; ++p)
      set_value_at_flat(out, p * n7out + layer_offset, value_at_flat(out_layer, p));
  }
  return out;
}

MonogenicityReport is_monogenic(const GridFunction& f, DiffDirection variant, int m7_lo,
                                int m7_hi, MulSide side, double tol) {
  const CrVariant v =
      (variant == DiffDirection::forward) ? CrVariant::forward : CrVariant::backward;
  const GridFunction r = apply_cr(f, v, side);
  const int n7 = f.spec.n[7];
  const int o7 = f.spec.origin[7];
  double worst = 0.0;
  const std::size_t total = f.spec.point_count();
  for (std::size_t i = 0; i < total; ++i) {
    const int m7 = o7 + static_cast<int>(i % n7);
    if (m7 < m7_lo || m7 > m7_hi) continue;
    worst = std::max(worst, max_abs(value_at_flat(r, i)));
  }
  MonogenicityReport rep;
  rep.tol = (tol > 0.0) ? tol : 1e-10 * max_abs(f) / f.spec.h;
  rep.residual_max = worst;
  rep.monogenic = worst <= rep.tol;
  return rep;
}

}  // namespace octolat
