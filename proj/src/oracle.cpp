#include "octolat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "octolat/errors.hpp"

namespace octolat {

namespace {

constexpr std::size_t kDftGuard = 65536;          // 4^8
constexpr std::size_t kConvolutionGuard = 16384;  // 4^7

}  // namespace

SpectralField naive_dft(const GridFunction& f) {
  if (f.spec.topology != Topology::torus)
    throw TopologyMismatch("naive_dft requires torus topology");
  const std::size_t total = f.size();
  if (total > kDftGuard) throw SizeGuard("naive_dft limited to 4^8 points");
  SpectralField F(f.spec);
  const double h = f.spec.h;
  const double weight = std::pow(h, 8.0);
  const std::size_t n_total = total;
  for (std::size_t kf = 0; kf < n_total; ++kf) {
    const LatticePoint k = f.spec.point_at(kf);
    for (std::size_t mf = 0; mf < n_total; ++mf) {
      const LatticePoint m = f.spec.point_at(mf);
      double ang = 0.0;
      for (int j = 0; j < 8; ++j) {
        // <mh, xi> with xi_j = 2 pi k_j / (N_j h); the h factors cancel.
        ang += 2.0 * std::numbers::pi * static_cast<double>(m[j]) * k[j] / f.spec.n[j];
      }
      const std::complex<double> ker = std::polar(1.0, ang);
      for (int c = 0; c < 8; ++c) F.comp[c][kf] += ker * (f.comp[c][mf] * weight);
    }
  }
  return F;
}

BoundaryData naive_boundary_convolution(const BoundaryData& kernel, const BoundaryData& bd,
                                        double weight) {
  if (!kernel.spec7.same_shape(bd.spec7))
    throw MalformedInput("naive_boundary_convolution needs matching layer shapes");
  const std::size_t total = kernel.spec7.point_count();
  if (total > kConvolutionGuard)
    throw SizeGuard("naive_boundary_convolution limited to 4^7 points");
  BoundaryData out;
  out.spec7 = bd.spec7;
  out.layer = bd.layer;
  for (int c = 0; c < 8; ++c) out.comp[c].assign(total, 0.0);
  for (std::size_t mf = 0; mf < total; ++mf) {
    const std::array<int, 7> m = bd.spec7.point_at(mf);
    Octonion acc;
    for (std::size_t nf = 0; nf < total; ++nf) {
      const std::array<int, 7> n = bd.spec7.point_at(nf);
      std::array<int, 7> diff{};
      for (int j = 0; j < 7; ++j) diff[j] = n[j] - m[j];
      const Octonion k = value_at_flat(kernel, kernel.spec7.flat_index(diff));
      const Octonion v = value_at_flat(bd, nf);
      Octonion term;
      acc_basis_mul_left(term, 7, mul(k, v));
      acc += term * weight;
    }
    set_value_at_flat(out, mf, acc);
  }
  return out;
}

std::array<std::complex<double>, 64> mul_matrix(const ComplexOctonion& s, MulSide side) {
  std::array<std::complex<double>, 64> a{};
  for (int c = 0; c < 8; ++c) {
    for (int j = 0; j < 8; ++j) {
      const std::complex<double> coeff = s.comp(j);
      const BasisProduct p =
          (side == MulSide::left) ? kBasisTable[j][c] : kBasisTable[c][j];
      a[static_cast<std::size_t>(p.index) * 8 + c] += static_cast<double>(p.sign) * coeff;
    }
  }
  return a;
}

std::array<std::complex<double>, 8> solve8(std::array<std::complex<double>, 64> a,
                                           std::array<std::complex<double>, 8> b,
                                           double* cond_estimate) {
  double scale = 0.0;
  for (const auto& v : a) scale = std::max(scale, std::abs(v));
  double piv_max = 0.0;
  double piv_min = 0.0;
  for (int col = 0; col < 8; ++col) {
    int pivot = col;
    double best = std::abs(a[static_cast<std::size_t>(col) * 8 + col]);
    for (int r = col + 1; r < 8; ++r) {
      const double mag = std::abs(a[static_cast<std::size_t>(r) * 8 + col]);
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best <= 1e-13 * (1.0 + scale))
      throw SingularMatrix("multiplication matrix is numerically singular");
    if (pivot != col) {
      for (int c = 0; c < 8; ++c)
        std::swap(a[static_cast<std::size_t>(pivot) * 8 + c],
                  a[static_cast<std::size_t>(col) * 8 + c]);
      std::swap(b[pivot], b[col]);
    }
    piv_max = std::max(piv_max, best);
    piv_min = (col == 0) ? best : std::min(piv_min, best);
    const std::complex<double> d = a[static_cast<std::size_t>(col) * 8 + col];
    for (int r = col + 1; r < 8; ++r) {
      const std::complex<double> factor = a[static_cast<std::size_t>(r) * 8 + col] / d;
      if (factor == std::complex<double>{0.0, 0.0}) continue;
      a[static_cast<std::size_t>(r) * 8 + col] = {0.0, 0.0};
      for (int c = col + 1; c < 8; ++c)
        a[static_cast<std::size_t>(r) * 8 + c] -= factor * a[static_cast<std::size_t>(col) * 8 + c];
      b[r] -= factor * b[col];
    }
  }
  if (cond_estimate) *cond_estimate = (piv_min > 0.0) ? piv_max / piv_min : 0.0;
  std::array<std::complex<double>, 8> x{};
  for (int r = 7; r >= 0; --r) {
    std::complex<double> acc = b[r];
    for (int c = r + 1; c < 8; ++c) acc -= a[static_cast<std::size_t>(r) * 8 + c] * x[c];
    x[r] = acc / a[static_cast<std::size_t>(r) * 8 + r];
  }
  return x;
}

std::array<std::complex<double>, 8> null_vector8(std::array<std::complex<double>, 64> a) {
  double scale = 0.0;
  for (const auto& v : a) scale = std::max(scale, std::abs(v));
  const double tol = 1e-10 * (1.0 + scale);

  // Row echelon with partial pivoting; pivcol[r] records the pivot column of
  // eliminated row r, -1 marks columns left free.
  std::array<int, 8> pivcol{};
  pivcol.fill(-1);
  std::array<bool, 8> col_has_pivot{};
  int row = 0;
  for (int col = 0; col < 8 && row < 8; ++col) {
    int pivot = row;
    double best = std::abs(a[static_cast<std::size_t>(row) * 8 + col]);
    for (int r = row + 1; r < 8; ++r) {
      const double mag = std::abs(a[static_cast<std::size_t>(r) * 8 + col]);
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best <= tol) continue;
    if (pivot != row)
      for (int c = 0; c < 8; ++c)
        std::swap(a[static_cast<std::size_t>(pivot) * 8 + c],
                  a[static_cast<std::size_t>(row) * 8 + c]);
    const std::complex<double> d = a[static_cast<std::size_t>(row) * 8 + col];
    for (int r = row + 1; r < 8; ++r) {
      const std::complex<double> factor = a[static_cast<std::size_t>(r) * 8 + col] / d;
      if (factor == std::complex<double>{0.0, 0.0}) continue;
      a[static_cast<std::size_t>(r) * 8 + col] = {0.0, 0.0};
      for (int c = col + 1; c < 8; ++c)
        a[static_cast<std::size_t>(r) * 8 + c] -= factor * a[static_cast<std::size_t>(row) * 8 + c];
    }
    pivcol[row] = col;
    col_has_pivot[col] = true;
    ++row;
  }
  int free_col = -1;
  for (int c = 0; c < 8; ++c) {
    if (!col_has_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col < 0) throw SingularMatrix("matrix has full rank, no null vector");

  std::array<std::complex<double>, 8> x{};
  x[free_col] = {1.0, 0.0};
  for (int r = row - 1; r >= 0; --r) {
    const int pc = pivcol[r];
    std::complex<double> acc{0.0, 0.0};
    for (int c = pc + 1; c < 8; ++c) acc -= a[static_cast<std::size_t>(r) * 8 + c] * x[c];
    x[pc] = acc / a[static_cast<std::size_t>(r) * 8 + pc];
  }
  int lead = 0;
  for (int c = 1; c < 8; ++c)
    if (std::abs(x[c]) > std::abs(x[lead])) lead = c;
  const std::complex<double> d = x[lead];
  for (auto& v : x) v /= d;
  return x;
}

ComplexOctonion dense_symbol_inverse(const ComplexOctonion& s, MulSide side,
                                     double* cond_estimate) {
  std::array<std::complex<double>, 8> e0{};
  e0[0] = {1.0, 0.0};
  const std::array<std::complex<double>, 8> x = solve8(mul_matrix(s, side), e0, cond_estimate);
  ComplexOctonion out;
  for (int c = 0; c < 8; ++c) out.set_comp(c, x[c]);
  return out;
}

double SeededRng::uniform() {
  const std::uint64_t x = eng_();
  return static_cast<double>(x >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

int SeededRng::uniform_int(int lo, int hi) {
  if (hi < lo) throw MalformedInput("uniform_int needs lo <= hi");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(eng_() % span);
}

Octonion SeededRng::octonion() {
  Octonion v;
  for (int c = 0; c < 8; ++c) v[c] = uniform();
  return v;
}

GridFunction random_grid(std::uint64_t seed, const GridSpec& spec, const IndexBox* box,
                         bool zero_mean, ValueKind kind) {
  SeededRng rng(seed);
  GridFunction f(spec);
  const std::size_t total = spec.point_count();
  const auto inside = [&](std::size_t flat) {
    if (!box) return true;
    if (box->empty) return false;
    const LatticePoint m = spec.point_at(flat);
    for (int j = 0; j < 8; ++j)
      if (m[j] < box->lo[j] || m[j] > box->hi[j]) return false;
    return true;
  };
  std::size_t filled = 0;
  std::array<double, 8> sum{};
  const int comps = (kind == ValueKind::scalar) ? 1 : 8;
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (!inside(flat)) continue;
    ++filled;
    for (int c = 0; c < comps; ++c) {
      const double v = rng.uniform();
      f.comp[c][flat] = v;
      sum[c] += v;
    }
  }
  if (zero_mean && filled > 0) {
    for (std::size_t flat = 0; flat < total; ++flat) {
      if (!inside(flat)) continue;
      for (int c = 0; c < comps; ++c) f.comp[c][flat] -= sum[c] / static_cast<double>(filled);
    }
  }
  return f;
}

BoundaryData random_boundary(std::uint64_t seed, const LayerSpec& spec7, int layer,
                             bool zero_mean) {
  SeededRng rng(seed);
  BoundaryData bd;
  bd.spec7 = spec7;
  bd.layer = layer;
  const std::size_t total = spec7.point_count();
  std::array<double, 8> sum{};
  for (int c = 0; c < 8; ++c) bd.comp[c].assign(total, 0.0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (int c = 0; c < 8; ++c) {
      const double v = rng.uniform();
      bd.comp[c][flat] = v;
      sum[c] += v;
    }
  }
  if (zero_mean && total > 0) {
    for (int c = 0; c < 8; ++c) {
      const double mean = sum[c] / static_cast<double>(total);
      for (auto& v : bd.comp[c]) v -= mean;
    }
  }
  return bd;
}

}  // namespace octolat
