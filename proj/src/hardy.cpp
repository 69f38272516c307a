#include "octolat/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "octolat/oracle.hpp"

namespace octolat {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::array<std::vector<double>, 7> frequency_axes(const LayerSpec& sp) {
  std::array<std::vector<double>, 7> ax;
  for (int j = 0; j < 7; ++j) ax[j] = frequency_axis(sp.n[j], sp.h);
  return ax;
}

std::array<double, 7> node_frequency(const std::array<std::vector<double>, 7>& ax,
                                     const std::array<int, 7>& k) {
  std::array<double, 7> xi{};
  for (int j = 0; j < 7; ++j) xi[j] = ax[j][static_cast<std::size_t>(k[j])];
  return xi;
}

bool is_dc(const std::array<int, 7>& k) {
  for (int j = 0; j < 7; ++j)
    if (k[j] != 0) return false;
  return true;
}

BoundaryData right_mul(const BoundaryData& f, const Octonion& a) {
  BoundaryData out(f.spec7, f.layer);
  for (std::size_t i = 0; i < f.size(); ++i)
    set_value_at_flat(out, i, mul(value_at_flat(f, i), a));
  return out;
}

}  // namespace

double layer_d(const std::array<double, 7>& xi, double h) {
  double s = 0.0;
  for (int j = 0; j < 7; ++j) {
    const double t = std::sin(0.5 * h * xi[j]);
    s += t * t;
  }
  return 2.0 * std::sqrt(s) / h;
}

ComplexOctonion layer_symbol_xi(const std::array<double, 7>& xi, double h) {
  ComplexOctonion v;
  for (int j = 0; j < 7; ++j) v.set_comp(j, symbol_xi(xi[j], h, DiffDirection::forward));
  return v;
}

ComplexOctonion boundary_symbol_E(const std::array<double, 7>& xi, double h, int layer) {
  const double d = layer_d(xi, h);
  if (d == 0.0) throw SingularFrequency("boundary_symbol_E: zero layer frequency");
  const double r = std::sqrt(4.0 + h * h * d * d);
  const ComplexOctonion x = layer_symbol_xi(xi, h);
  if (layer == 0) {
    ComplexOctonion v = x * std::complex<double>(1.0 / (d * r));
    v -= ComplexOctonion::basis(7, 0.5 - h * d / (2.0 * r));
    return v;
  }
  if (layer == 1 || layer == -1) {
    const double hd = h * d;
    const double a = (2.0 + hd * hd) / (2.0 * r) - hd / 2.0;
    const double b = -(3.0 * hd + hd * hd * hd) / (2.0 * r) + (hd * hd + 1.0) / 2.0;
    ComplexOctonion v = x * std::complex<double>(a / d);
    v += ComplexOctonion::basis(7, layer > 0 ? b : -b);
    return v;
  }
  throw MalformedInput("boundary_symbol_E: layer must be -1, 0, or 1");
}

ComplexOctonion multiplier_s(const std::array<double, 7>& xi, double h, HSign sign) {
  const double d = layer_d(xi, h);
  if (d == 0.0) throw SingularFrequency("multiplier_s: zero layer frequency");
  const double r = std::sqrt(4.0 + h * h * d * d);
  const ComplexOctonion x = layer_symbol_xi(xi, h) * std::complex<double>(1.0 / d);
  ComplexOctonion v = mul(ComplexOctonion::basis(7), x);
  if (sign == HSign::plus) {
    v *= std::complex<double>(2.0 / (h * d - r));
  } else {
    v *= std::complex<double>((h * d - r) / 2.0);
    v = -v;
  }
  return v;
}

MultiplierField MultiplierField::standard(const LayerSpec& spec7, HSign sign) {
  MultiplierField s;
  s.spec7 = spec7;
  s.values.assign(spec7.point_count(), ComplexOctonion{});
  const auto ax = frequency_axes(spec7);
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    const std::array<int, 7> k = spec7.point_at(i);
    if (is_dc(k)) continue;
    s.values[i] = multiplier_s(node_frequency(ax, k), spec7.h, sign);
  }
  return s;
}

MultiplierField MultiplierField::extension(const LayerSpec& spec7, HalfSpaceSide side) {
  MultiplierField s;
  s.spec7 = spec7;
  s.values.assign(spec7.point_count(), ComplexOctonion{});
  const auto ax = frequency_axes(spec7);
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    const std::array<int, 7> k = spec7.point_at(i);
    if (is_dc(k)) {
      if (side == HalfSpaceSide::lower) s.values[i] = ComplexOctonion::basis(0);
      continue;
    }
    const std::array<double, 7> xi = node_frequency(ax, k);
    const double h = spec7.h;
    const double d = layer_d(xi, h);
    const double r = std::sqrt(4.0 + h * h * d * d);
    if (side == HalfSpaceSide::upper) {
      const ComplexOctonion x = layer_symbol_xi(xi, h) * std::complex<double>(1.0 / d);
      s.values[i] = x * std::complex<double>(2.0 / (r - h * d));
    } else {
      s.values[i] = ComplexOctonion::scalar((r + h * d) / (r - h * d));
    }
  }
  return s;
}

BoundaryData apply_multiplier(const BoundaryData& bd, const MultiplierField& s,
                              double* max_imag) {
  if (!bd.spec7.same_shape(s.spec7))
    throw MalformedInput("apply_multiplier: layer shape mismatch");
  SpectralLayer f = dft7(bd);
  for (std::size_t i = 0; i < f.size(); ++i)
    set_value_at_flat(f, i, mul(s.values[i], value_at_flat(f, i)));
  BoundaryData out = idft7_real(f, max_imag);
  out.layer = bd.layer;
  return out;
}

BoundaryData apply_H(const BoundaryData& bd, HSign sign, Parenthesization paren) {
  (void)paren;  // one application reads the same under either grouping
  return apply_multiplier(bd, MultiplierField::standard(bd.spec7, sign));
}

BoundaryData apply_H_twice(const BoundaryData& bd, HSign sign, Parenthesization paren) {
  if (paren == Parenthesization::right_nested) return apply_H(apply_H(bd, sign), sign);
  MultiplierField s = MultiplierField::standard(bd.spec7, sign);
  for (auto& v : s.values) v = mul(v, v);
  return apply_multiplier(bd, s);
}

BoundaryData apply_P(const BoundaryData& bd, HSign sign, Parenthesization paren) {
  return lin_comb(0.5, bd, 0.5, apply_H(bd, sign, paren));
}

BoundaryData apply_extension(const BoundaryData& bd, HalfSpaceSide side) {
  const int want = side == HalfSpaceSide::upper ? 1 : -1;
  if (bd.layer != want)
    throw MalformedInput("apply_extension: expected data on layer " + std::to_string(want));
  BoundaryData out = apply_multiplier(bd, MultiplierField::extension(bd.spec7, side));
  out.layer = 0;
  return out;
}

MembershipReport hardy_membership(const BoundaryData& bd, HSign sign, double tol) {
  const std::size_t count = bd.size();
  const double scale = max_abs(bd);
  for (int j = 0; j < 8; ++j) {
    double sum = 0.0;
    for (double v : bd.comp[j]) sum += v;
    if (std::abs(sum / static_cast<double>(count)) > 1e-10 * (1.0 + scale))
      throw MalformedInput("hardy_membership: input has a DC component");
  }
  MembershipReport r;
  r.tol = tol;
  const double res = max_abs_diff(bd, apply_H(bd, sign));
  r.residual = scale > 0.0 ? res / scale : res;
  r.member = r.residual <= tol;
  return r;
}

Octonion inner_product(const BoundaryData& f, const BoundaryData& g, HalfSpaceSide side,
                       const InnerProductOptions& opts) {
  if (!f.spec7.same_shape(g.spec7) || f.layer != g.layer)
    throw MalformedInput("inner_product: layer mismatch");
  Octonion acc;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Octonion a{}, b{};
    acc_basis_mul_left(a, 7, value_at_flat(g, i));
    acc_basis_mul_left(b, 7, value_at_flat(f, i));
    if (side == HalfSpaceSide::upper) {
      a = -a;
      b = -b;
    }
    acc += mul(conj(a), b);
  }
  acc *= std::pow(f.spec7.h, opts.weight_exponent);
  return acc;
}

AxiomResiduals hilbert_axioms_check(std::uint64_t seed, const LayerSpec& spec7,
                                    HalfSpaceSide side, int trials,
                                    const InnerProductOptions& opts) {
  AxiomResiduals r;
  r.positivity_scalar_min = std::numeric_limits<double>::infinity();
  const int layer = side == HalfSpaceSide::upper ? 0 : -1;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t base = seed + 977u * static_cast<std::uint64_t>(t);
    const BoundaryData f = random_boundary(base + 1, spec7, layer);
    const BoundaryData g = random_boundary(base + 2, spec7, layer);
    const BoundaryData w = random_boundary(base + 3, spec7, layer);
    SeededRng rng(base + 4);
    const Octonion alpha = rng.octonion();
    const double lam = rng.uniform();

    const Octonion fg = inner_product(f, g, side, opts);
    const Octonion fw = inner_product(f, w, side, opts);
    const Octonion gw = inner_product(g, w, side, opts);
    const Octonion ff = inner_product(f, f, side, opts);
    r.scale = std::max({r.scale, max_abs(fg), max_abs(ff)});

    const Octonion add1 = inner_product(lin_comb(1.0, f, 1.0, g), w, side, opts) - fw - gw;
    const Octonion add2 = inner_product(f, lin_comb(1.0, g, 1.0, w), side, opts) - fg - fw;
    r.additivity = std::max({r.additivity, max_abs(add1), max_abs(add2)});

    r.hermitian = std::max(r.hermitian, max_abs(inner_product(g, f, side, opts) - conj(fg)));

    for (int j = 1; j < 8; ++j)
      r.positivity_offaxis = std::max(r.positivity_offaxis, std::abs(ff.c[j]));
    r.positivity_scalar_min = std::min(r.positivity_scalar_min, ff.c[0]);

    const Octonion hom1 = inner_product(lin_comb(lam, f, 0.0, f), g, side, opts) - fg * lam;
    const Octonion hom2 = inner_product(f, lin_comb(lam, g, 0.0, g), side, opts) - fg * lam;
    r.r_homogeneity = std::max({r.r_homogeneity, max_abs(hom1), max_abs(hom2)});

    const Octonion fafg = inner_product(right_mul(f, alpha), f, side, opts);
    r.o_homogeneity = std::max(r.o_homogeneity, max_abs(fafg - mul(ff, alpha)));

    const Octonion fag = inner_product(right_mul(f, alpha), g, side, opts);
    r.para_linearity =
        std::max(r.para_linearity, std::abs(fag.c[0] - mul(fg, alpha).c[0]));
  }
  if (trials <= 0) r.positivity_scalar_min = 0.0;
  return r;
}

SigmaAudit sigma_audit(const LayerSpec& spec7, HSign sign) {
  SigmaAudit a;
  a.sigma_min = std::numeric_limits<double>::infinity();
  const MultiplierField s = MultiplierField::standard(spec7, sign);
  const ComplexOctonion one = ComplexOctonion::basis(0);
  for (std::size_t i = 1; i < s.values.size(); ++i) {
    const ComplexOctonion sig = mul(s.values[i], s.values[i]) - one;
    const double m = std::sqrt(coeff_norm_sq(sig));
    a.sigma_max = std::max(a.sigma_max, m);
    a.sigma_min = std::min(a.sigma_min, m);
    if (m < 1e-10) a.unit_nodes.push_back(i);
    ++a.node_count;
  }
  if (a.node_count == 0) a.sigma_min = 0.0;
  return a;
}

}  // namespace octolat
