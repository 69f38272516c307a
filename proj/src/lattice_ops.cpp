#include "octolat/lattice_ops.hpp"

#include <string>

namespace octolat {

namespace {

void require_stencil_grid(const GridSpec& spec) {
  for (int j = 0; j < 8; ++j) {
    if (spec.n[j] < 3)
      throw MalformedInput("stencil operation on degenerate grid (axis size < 3)");
  }
}

// Component array of f shifted by +step or -step along one axis, as a flat
// vector aligned with the unshifted layout.
void shifted_component(const GridFunction& f, int comp, int axis, int step,
                       std::vector<double>& out) {
  const GridSpec& sp = f.spec;
  const auto strides = sp.strides();
  const std::size_t count = sp.point_count();
  const int n = sp.n[axis];
  const std::size_t stride = strides[axis];
  const std::vector<double>& src = f.comp[comp];
  out.resize(count);

  // Iterate pencils along the axis: outer indices enumerate all positions of
  // the remaining axes.
  const std::size_t pencil_count = count / static_cast<std::size_t>(n);
  for (std::size_t p = 0; p < pencil_count; ++p) {
    // Decompose p into base offset with the axis removed.
    std::size_t rem = p;
    std::size_t base = 0;
    for (int j = 7; j >= 0; --j) {
      if (j == axis) continue;
      const std::size_t nj = static_cast<std::size_t>(sp.n[j]);
      base += (rem % nj) * strides[j];
      rem /= nj;
    }
    for (int k = 0; k < n; ++k) {
      const int ks = k + step;
      double v = 0.0;
      if (ks >= 0 && ks < n) {
        v = src[base + static_cast<std::size_t>(ks) * stride];
      } else if (sp.topology == Topology::torus) {
        v = src[base + static_cast<std::size_t>(wrap_index(ks, n)) * stride];
      }
      out[base + static_cast<std::size_t>(k) * stride] = v;
    }
  }
}

}  // namespace

GridFunction diff(const GridFunction& f, int axis, DiffDirection dir) {
  require_stencil_grid(f.spec);
  GridFunction out(f.spec);
  const double inv_h = 1.0 / f.spec.h;
  std::vector<double> shifted;
  for (int c = 0; c < 8; ++c) {
    const std::vector<double>& cur = f.comp[c];
    std::vector<double>& dst = out.comp[c];
    if (dir == DiffDirection::forward) {
      shifted_component(f, c, axis, +1, shifted);
      for (std::size_t i = 0; i < cur.size(); ++i) dst[i] = (shifted[i] - cur[i]) * inv_h;
    } else {
      shifted_component(f, c, axis, -1, shifted);
      for (std::size_t i = 0; i < cur.size(); ++i) dst[i] = (cur[i] - shifted[i]) * inv_h;
    }
  }
  return out;
}

GridFunction apply_cr(const GridFunction& f, CrVariant variant, MulSide side) {
  if (variant == CrVariant::central) {
    GridFunction a = apply_cr(f, CrVariant::forward, side);
    const GridFunction b = apply_cr(f, CrVariant::backward, side);
    for (int c = 0; c < 8; ++c)
      for (std::size_t i = 0; i < a.comp[c].size(); ++i)
        a.comp[c][i] = 0.5 * (a.comp[c][i] + b.comp[c][i]);
    return a;
  }

  const bool conjugated =
      variant == CrVariant::conj_forward || variant == CrVariant::conj_backward;
  const DiffDirection dir =
      (variant == CrVariant::forward || variant == CrVariant::conj_forward)
          ? DiffDirection::forward
          : DiffDirection::backward;

  GridFunction out(f.spec);
  const std::size_t count = f.spec.point_count();
  for (int axis = 0; axis < 8; ++axis) {
    const GridFunction d = diff(f, axis, dir);
    const double sign = (conjugated && axis >= 1) ? -1.0 : 1.0;
    // Accumulate sign * e_axis * d (left) or sign * d * e_axis (right),
    // component-mixed through the basis table.
    for (int k = 0; k < 8; ++k) {
      const BasisProduct p =
          (side == MulSide::left) ? kBasisTable[axis][k] : kBasisTable[k][axis];
      const double s = sign * p.sign;
      const std::vector<double>& src = d.comp[k];
      std::vector<double>& dst = out.comp[p.index];
      for (std::size_t i = 0; i < count; ++i) dst[i] += s * src[i];
    }
  }
  return out;
}

GridFunction star_laplacian(const GridFunction& f) {
  require_stencil_grid(f.spec);
  GridFunction out(f.spec);
  const double inv_h2 = 1.0 / (f.spec.h * f.spec.h);
  std::vector<double> up, down;
  for (int c = 0; c < 8; ++c) {
    const std::vector<double>& cur = f.comp[c];
    std::vector<double>& dst = out.comp[c];
    for (int axis = 0; axis < 8; ++axis) {
      shifted_component(f, c, axis, +1, up);
      shifted_component(f, c, axis, -1, down);
      for (std::size_t i = 0; i < cur.size(); ++i)
        dst[i] += (up[i] - 2.0 * cur[i] + down[i]) * inv_h2;
    }
  }
  return out;
}

}  // namespace octolat
