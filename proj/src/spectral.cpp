#include "octolat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "octolat/errors.hpp"

namespace octolat {

namespace {

constexpr double kPi = std::numbers::pi;

// One separable pass along `axis` of a row-major complex array.
// sign = +1 applies the kernel e^{+2 pi i k m / N}, sign = -1 its inverse.
void axis_pass(std::vector<std::complex<double>>& a, const std::vector<int>& shape, int axis,
               int sign) {
  const int rank = static_cast<int>(shape.size());
  const int n = shape[axis];
  std::vector<std::complex<double>> w(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) {
      const long long km = static_cast<long long>(k) * m % n;
      const double ang = sign * 2.0 * kPi * static_cast<double>(km) / n;
      w[static_cast<std::size_t>(k) * n + m] = std::polar(1.0, ang);
    }
  }
  std::vector<std::size_t> strides(rank);
  std::size_t s = 1;
  for (int j = rank - 1; j >= 0; --j) {
    strides[j] = s;
    s *= static_cast<std::size_t>(shape[j]);
  }
  const std::size_t pencils = s / static_cast<std::size_t>(n);
  const std::size_t stride = strides[axis];
  std::vector<std::complex<double>> buf(n), out(n);
  for (std::size_t p = 0; p < pencils; ++p) {
    std::size_t base = 0;
    std::size_t rem = p;
    for (int j = rank - 1; j >= 0; --j) {
      if (j == axis) continue;
      const std::size_t nj = static_cast<std::size_t>(shape[j]);
      base += (rem % nj) * strides[j];
      rem /= nj;
    }
    for (int k = 0; k < n; ++k) buf[k] = a[base + static_cast<std::size_t>(k) * stride];
    for (int k = 0; k < n; ++k) {
      std::complex<double> acc{0.0, 0.0};
      const std::complex<double>* row = &w[static_cast<std::size_t>(k) * n];
      for (int m = 0; m < n; ++m) acc += row[m] * buf[m];
      out[k] = acc;
    }
    for (int k = 0; k < n; ++k) a[base + static_cast<std::size_t>(k) * stride] = out[k];
  }
}

void transform_all(std::vector<std::complex<double>>& a, const std::vector<int>& shape, int sign,
                   double scale) {
  for (int axis = 0; axis < static_cast<int>(shape.size()); ++axis) axis_pass(a, shape, axis, sign);
  for (auto& v : a) v *= scale;
}

std::vector<int> torus_shape(const GridSpec& spec) {
  if (spec.topology != Topology::torus)
    throw TopologyMismatch("spectral transforms require torus topology");
  return std::vector<int>(spec.n.begin(), spec.n.end());
}

std::vector<int> layer_shape(const LayerSpec& spec7) {
  return std::vector<int>(spec7.n.begin(), spec7.n.end());
}

double inverse_scale(const std::vector<int>& shape, double h) {
  double s = 1.0;
  for (int n : shape) s *= n;
  return 1.0 / (s * std::pow(h, static_cast<double>(shape.size())));
}

}  // namespace

std::vector<double> frequency_axis(int n, double h) {
  if (n < 1 || h <= 0.0) throw MalformedInput("frequency_axis needs n >= 1 and h > 0");
  std::vector<double> xi(n);
  for (int k = 0; k < n; ++k) {
    const int kk = (2 * k >= n) ? k - n : k;
    xi[k] = 2.0 * kPi * kk / (n * h);
  }
  return xi;
}

std::complex<double> symbol_xi(double xi, double h, DiffDirection dir) {
  const std::complex<double> i{0.0, 1.0};
  if (dir == DiffDirection::forward) return -(1.0 - std::exp(-i * (h * xi))) / h;
  return (1.0 - std::exp(i * (h * xi))) / h;
}

double symbol_d2(const std::array<double, 8>& xi, double h) {
  double d2 = 0.0;
  for (double x : xi) {
    const double s = std::sin(x * h / 2.0);
    d2 += s * s;
  }
  return 4.0 / (h * h) * d2;
}

ComplexOctonion symbol_cr(const std::array<double, 8>& xi, double h, DiffDirection dir) {
  ComplexOctonion s;
  for (int j = 0; j < 8; ++j) s.set_comp(j, symbol_xi(xi[j], h, dir));
  return s;
}

ComplexOctonion symbol_cr_variant(const std::array<double, 8>& xi, double h, CrVariant variant) {
  switch (variant) {
    case CrVariant::forward:
      return symbol_cr(xi, h, DiffDirection::forward);
    case CrVariant::backward:
      return symbol_cr(xi, h, DiffDirection::backward);
    case CrVariant::conj_forward:
      return conj(symbol_cr(xi, h, DiffDirection::forward));
    case CrVariant::conj_backward:
      return conj(symbol_cr(xi, h, DiffDirection::backward));
    case CrVariant::central: {
      ComplexOctonion s = symbol_cr(xi, h, DiffDirection::forward);
      s += symbol_cr(xi, h, DiffDirection::backward);
      s *= std::complex<double>{0.5, 0.0};
      return s;
    }
  }
  throw MalformedInput("unknown Cauchy-Riemann variant");
}

SpectralField dft(const GridFunction& f) {
  const std::vector<int> shape = torus_shape(f.spec);
  SpectralField F(f.spec);
  const double scale = std::pow(f.spec.h, 8.0);
  std::vector<std::complex<double>> buf(f.size());
  for (int c = 0; c < 8; ++c) {
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = {f.comp[c][i], 0.0};
    transform_all(buf, shape, +1, scale);
    F.comp[c] = buf;
  }
  return F;
}

SpectralField dft(const SpectralField& f) {
  const std::vector<int> shape = torus_shape(f.spec);
  SpectralField F(f.spec);
  const double scale = std::pow(f.spec.h, 8.0);
  for (int c = 0; c < 8; ++c) {
    F.comp[c] = f.comp[c];
    transform_all(F.comp[c], shape, +1, scale);
  }
  return F;
}

SpectralField idft(const SpectralField& F) {
  const std::vector<int> shape = torus_shape(F.spec);
  SpectralField f(F.spec);
  const double scale = inverse_scale(shape, F.spec.h);
  for (int c = 0; c < 8; ++c) {
    f.comp[c] = F.comp[c];
    transform_all(f.comp[c], shape, -1, scale);
  }
  return f;
}

GridFunction idft_real(const SpectralField& F, double* max_imag) {
  const std::vector<int> shape = torus_shape(F.spec);
  GridFunction f(F.spec);
  const double scale = inverse_scale(shape, F.spec.h);
  double worst = 0.0;
  std::vector<std::complex<double>> buf(F.size());
  for (int c = 0; c < 8; ++c) {
    buf = F.comp[c];
    transform_all(buf, shape, -1, scale);
    for (std::size_t i = 0; i < buf.size(); ++i) {
      f.comp[c][i] = buf[i].real();
      worst = std::max(worst, std::abs(buf[i].imag()));
    }
  }
  if (max_imag) *max_imag = worst;
  return f;
}

SpectralLayer dft7(const BoundaryData& f) {
  const std::vector<int> shape = layer_shape(f.spec7);
  SpectralLayer F;
  F.spec7 = f.spec7;
  F.layer = f.layer;
  const double scale = std::pow(f.spec7.h, 7.0);
  std::vector<std::complex<double>> buf(f.spec7.point_count());
  for (int c = 0; c < 8; ++c) {
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = {f.comp[c][i], 0.0};
    transform_all(buf, shape, +1, scale);
    F.comp[c] = buf;
  }
  return F;
}

SpectralLayer dft7(const SpectralLayer& f) {
  const std::vector<int> shape = layer_shape(f.spec7);
  SpectralLayer F = f;
  const double scale = std::pow(f.spec7.h, 7.0);
  for (int c = 0; c < 8; ++c) transform_all(F.comp[c], shape, +1, scale);
  return F;
}

SpectralLayer idft7(const SpectralLayer& F) {
  const std::vector<int> shape = layer_shape(F.spec7);
  SpectralLayer f = F;
  const double scale = inverse_scale(shape, F.spec7.h);
  for (int c = 0; c < 8; ++c) transform_all(f.comp[c], shape, -1, scale);
  return f;
}

BoundaryData idft7_real(const SpectralLayer& F, double* max_imag) {
  const std::vector<int> shape = layer_shape(F.spec7);
  BoundaryData f;
  f.spec7 = F.spec7;
  f.layer = F.layer;
  const double scale = inverse_scale(shape, F.spec7.h);
  double worst = 0.0;
  std::vector<std::complex<double>> buf(F.spec7.point_count());
  for (int c = 0; c < 8; ++c) {
    buf = F.comp[c];
    transform_all(buf, shape, -1, scale);
    f.comp[c].resize(buf.size());
    for (std::size_t i = 0; i < buf.size(); ++i) {
      f.comp[c][i] = buf[i].real();
      worst = std::max(worst, std::abs(buf[i].imag()));
    }
  }
  if (max_imag) *max_imag = worst;
  return f;
}

bool SingularSet::contains(std::uint32_t index) const {
  for (const auto& node : nodes)
    if (node.index == index) return true;
  return false;
}

namespace {

struct SymbolTables {
  std::array<std::vector<double>, 8> t;                 // per-axis (4/h^2) sin^2 terms
  std::array<std::vector<std::complex<double>>, 8> s;   // per-axis difference symbols
};

SymbolTables make_tables(const GridSpec& spec, DiffDirection dir) {
  SymbolTables tab;
  for (int axis = 0; axis < 8; ++axis) {
    const std::vector<double> xi = frequency_axis(spec.n[axis], spec.h);
    tab.t[axis].resize(xi.size());
    tab.s[axis].resize(xi.size());
    for (std::size_t k = 0; k < xi.size(); ++k) {
      const double sn = std::sin(xi[k] * spec.h / 2.0);
      tab.t[axis][k] = 4.0 / (spec.h * spec.h) * sn * sn;
      tab.s[axis][k] = symbol_xi(xi[k], spec.h, dir);
    }
  }
  return tab;
}

// Walks all frequency nodes in flat (row-major) order; fn receives the flat
// index, the per-axis node indices, and the accumulated d^2.
template <class Fn>
void for_each_node(const GridSpec& spec, const SymbolTables& tab, Fn&& fn) {
  std::array<int, 8> k{};
  const std::size_t total = spec.point_count();
  for (std::size_t flat = 0; flat < total; ++flat) {
    double d2 = 0.0;
    for (int axis = 0; axis < 8; ++axis) d2 += tab.t[axis][k[axis]];
    fn(flat, k, d2);
    for (int axis = 7; axis >= 0; --axis) {
      if (++k[axis] < spec.n[axis]) break;
      k[axis] = 0;
    }
  }
}

struct SingularScan {
  SingularSet set;
  std::vector<std::uint8_t> flags;
  std::vector<std::complex<double>> denom;  // N(xi-tilde) at regular nodes
};

SingularScan scan_exact(const GridSpec& spec, const SymbolTables& tab) {
  SingularScan scan;
  scan.flags.assign(spec.point_count(), 0);
  scan.denom.assign(spec.point_count(), {0.0, 0.0});
  for_each_node(spec, tab, [&](std::size_t flat, const std::array<int, 8>& k, double d2) {
    std::complex<double> nf{0.0, 0.0};
    for (int axis = 0; axis < 8; ++axis) {
      const std::complex<double> s = tab.s[axis][k[axis]];
      nf += s * s;
    }
    const double eps = 1e-10 * (1.0 + d2);
    if (std::abs(nf) <= eps) {
      scan.flags[flat] = 1;
      scan.set.nodes.push_back({static_cast<std::uint32_t>(flat), std::abs(nf)});
    } else {
      scan.denom[flat] = nf;
    }
  });
  return scan;
}

}  // namespace

SingularSet singular_set(const GridSpec& spec, DiffDirection direction) {
  if (spec.topology != Topology::torus)
    throw TopologyMismatch("singular_set requires torus topology");
  const SymbolTables tab = make_tables(spec, direction);
  return scan_exact(spec, tab).set;
}

Fundsol fundsol(const GridSpec& spec, DiffDirection direction, FundsolVariant variant) {
  const std::vector<int> shape = torus_shape(spec);
  const SymbolTables tab = make_tables(spec, direction);
  Fundsol out{GridFunction(spec), variant, direction, {}, 0.0};
  const std::size_t total = spec.point_count();
  const double scale = inverse_scale(shape, spec.h);

  std::vector<std::uint8_t> flags;
  std::vector<std::complex<double>> denom;
  if (variant == FundsolVariant::exact) {
    SingularScan scan = scan_exact(spec, tab);
    out.singular = std::move(scan.set);
    flags = std::move(scan.flags);
    denom = std::move(scan.denom);
  } else {
    flags.assign(total, 0);
    denom.assign(total, {0.0, 0.0});
    for_each_node(spec, tab, [&](std::size_t flat, const std::array<int, 8>&, double d2) {
      if (flat == 0) {
        flags[flat] = 1;
        return;
      }
      denom[flat] = {d2, 0.0};
    });
    out.singular.nodes.push_back({0u, 0.0});
  }

  std::vector<std::complex<double>> buf(total);
  for (int c = 0; c < 8; ++c) {
    for_each_node(spec, tab, [&](std::size_t flat, const std::array<int, 8>& k, double) {
      if (flags[flat]) {
        buf[flat] = {0.0, 0.0};
        return;
      }
      std::complex<double> num = tab.s[c][k[c]];
      if (variant == FundsolVariant::exact && c != 0) num = -num;
      buf[flat] = num / denom[flat];
    });
    transform_all(buf, shape, -1, scale);
    for (std::size_t i = 0; i < total; ++i) {
      out.values.comp[c][i] = buf[i].real();
      out.max_imag = std::max(out.max_imag, std::abs(buf[i].imag()));
    }
  }
  return out;
}

GridFunction singular_correction(const GridSpec& spec, const SingularSet& set) {
  const std::vector<int> shape = torus_shape(spec);
  std::vector<std::complex<double>> buf(spec.point_count(), {0.0, 0.0});
  for (const auto& node : set.nodes) {
    if (node.index >= buf.size()) throw MalformedInput("singular node index out of range");
    buf[node.index] = {1.0, 0.0};
  }
  transform_all(buf, shape, -1, inverse_scale(shape, spec.h));
  GridFunction g(spec);
  for (std::size_t i = 0; i < buf.size(); ++i) g.comp[0][i] = buf[i].real();
  return g;
}

namespace {

// Depth-first accumulation over the M^8 quadrature nodes. Returns the sum of
// weights over the visited subtree; per-axis numerators accumulate into acc.
struct PointQuad {
  int M = 0;
  std::vector<double> t;
  std::vector<std::complex<double>> s;
  std::array<std::vector<std::complex<double>>, 8> phase;
  std::array<std::complex<double>, 8> acc{};

  std::complex<double> descend(int axis, double d2, std::complex<double> ph, bool zero_prefix) {
    std::complex<double> subtree{0.0, 0.0};
    if (axis == 7) {
      std::complex<double> a7{0.0, 0.0};
      for (int k = 0; k < M; ++k) {
        if (zero_prefix && k == 0) continue;
        const std::complex<double> w = ph * phase[7][k] / (d2 + t[k]);
        subtree += w;
        a7 += w * s[k];
      }
      acc[7] += a7;
      return subtree;
    }
    for (int k = 0; k < M; ++k) {
      const std::complex<double> sub =
          descend(axis + 1, d2 + t[k], ph * phase[axis][k], zero_prefix && k == 0);
      acc[axis] += s[k] * sub;
      subtree += sub;
    }
    return subtree;
  }
};

}  // namespace

Octonion fundsol_pointwise(const LatticePoint& m, double h, DiffDirection dir, int M,
                           double* max_imag) {
  if (M < 2 || h <= 0.0) throw MalformedInput("fundsol_pointwise needs M >= 2 and h > 0");
  PointQuad q;
  q.M = M;
  const std::vector<double> xi = frequency_axis(M, h);
  q.t.resize(M);
  q.s.resize(M);
  for (int k = 0; k < M; ++k) {
    const double sn = std::sin(xi[k] * h / 2.0);
    q.t[k] = 4.0 / (h * h) * sn * sn;
    q.s[k] = symbol_xi(xi[k], h, dir);
  }
  for (int axis = 0; axis < 8; ++axis) {
    q.phase[axis].resize(M);
    for (int k = 0; k < M; ++k) {
      const std::complex<double> i{0.0, 1.0};
      q.phase[axis][k] = std::exp(-i * (m[axis] * h * xi[k]));
    }
  }
  q.descend(0, 0.0, {1.0, 0.0}, true);
  const double norm = std::pow(M * h, 8.0);
  Octonion e;
  double worst = 0.0;
  for (int c = 0; c < 8; ++c) {
    const std::complex<double> v = q.acc[c] / norm;
    e[c] = v.real();
    worst = std::max(worst, std::abs(v.imag()));
  }
  if (max_imag) *max_imag = worst;
  return e;
}

DecayProbe decay_probe(DiffDirection dir, int axis, const std::vector<int>& radii, int M,
                       double h) {
  if (axis < 0 || axis > 7) throw MalformedInput("decay_probe axis must be in 0..7");
  if (radii.size() < 2) throw MalformedInput("decay_probe needs at least two radii");
  DecayProbe probe;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int r : radii) {
    if (r == 0) throw MalformedInput("decay_probe radius must be nonzero");
    LatticePoint m{};
    m[axis] = r;
    const double a = norm(fundsol_pointwise(m, h, dir, M));
    probe.samples.emplace_back(r, a);
    const double x = std::log(static_cast<double>(std::abs(r)));
    const double y = std::log(a);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(radii.size());
  probe.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return probe;
}

}  // namespace octolat
