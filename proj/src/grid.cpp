#include "octolat/grid.hpp"

#include <algorithm>
#include <string>

namespace octolat {

GridSpec GridSpec::torus(const std::array<int, 8>& sizes, double h) {
  GridSpec s;
  s.n = sizes;
  s.h = h;
  s.topology = Topology::torus;
  for (int j = 0; j < 8; ++j) {
    if (sizes[j] < 2) throw MalformedInput("GridSpec: axis size below 2");
  }
  if (h <= 0.0) throw MalformedInput("GridSpec: nonpositive lattice constant");
  return s;
}

GridSpec GridSpec::uniform_torus(int size, double h) {
  std::array<int, 8> sizes;
  sizes.fill(size);
  return torus(sizes, h);
}

GridSpec GridSpec::block(const std::array<int, 8>& sizes, double h,
                         const std::array<int, 8>& origin) {
  GridSpec s = torus(sizes, h);
  s.topology = Topology::block;
  s.origin = origin;
  return s;
}

Octonion value_at(const GridFunction& f, const LatticePoint& m) {
  const GridSpec& sp = f.spec;
  LatticePoint q = m;
  if (sp.topology == Topology::torus) {
    for (int j = 0; j < 8; ++j) q[j] = wrap_index(q[j], sp.n[j]);
  } else {
    for (int j = 0; j < 8; ++j) {
      const int rel = q[j] - sp.origin[j];
      if (rel < 0 || rel >= sp.n[j]) return Octonion{};
    }
  }
  return value_at_flat(f, sp.flat_index(q));
}

void add_value_at(GridFunction& f, const LatticePoint& m, const Octonion& x) {
  const GridSpec& sp = f.spec;
  LatticePoint q = m;
  if (sp.topology == Topology::torus) {
    for (int j = 0; j < 8; ++j) q[j] = wrap_index(q[j], sp.n[j]);
  } else {
    for (int j = 0; j < 8; ++j) {
      const int rel = q[j] - sp.origin[j];
      if (rel < 0 || rel >= sp.n[j])
        throw SupportViolation("add_value_at: point outside block window");
    }
  }
  const std::size_t idx = sp.flat_index(q);
  for (int j = 0; j < 8; ++j) f.comp[j][idx] += x.c[j];
}

double max_abs(const GridFunction& f) {
  double m = 0.0;
  for (int j = 0; j < 8; ++j)
    for (double v : f.comp[j]) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const GridFunction& f, const GridFunction& g) {
  double m = 0.0;
  for (int j = 0; j < 8; ++j)
    for (std::size_t i = 0; i < f.comp[j].size(); ++i)
      m = std::max(m, std::abs(f.comp[j][i] - g.comp[j][i]));
  return m;
}

GridFunction lin_comb(double a, const GridFunction& f, double b, const GridFunction& g) {
  if (!f.spec.same_shape(g.spec)) throw MalformedInput("lin_comb: window mismatch");
  GridFunction out(f.spec);
  for (int j = 0; j < 8; ++j)
    for (std::size_t i = 0; i < out.comp[j].size(); ++i)
      out.comp[j][i] = a * f.comp[j][i] + b * g.comp[j][i];
  return out;
}

IndexBox support_box(const GridFunction& f) {
  IndexBox box;
  const std::size_t count = f.spec.point_count();
  for (std::size_t idx = 0; idx < count; ++idx) {
    bool nonzero = false;
    for (int j = 0; j < 8; ++j) {
      if (f.comp[j][idx] != 0.0) {
        nonzero = true;
        break;
      }
    }
    if (!nonzero) continue;
    const LatticePoint m = f.spec.point_at(idx);
    if (box.empty) {
      box.lo = m;
      box.hi = m;
      box.empty = false;
    } else {
      for (int j = 0; j < 8; ++j) {
        box.lo[j] = std::min(box.lo[j], m[j]);
        box.hi[j] = std::max(box.hi[j], m[j]);
      }
    }
  }
  return box;
}

LayerSpec LayerSpec::uniform(int size, double h) {
  LayerSpec s;
  s.n.fill(size);
  s.h = h;
  return s;
}

LayerSpec LayerSpec::of_grid(const GridSpec& spec) {
  LayerSpec s;
  for (int j = 0; j < 7; ++j) s.n[j] = spec.n[j];
  s.h = spec.h;
  return s;
}

double max_abs(const BoundaryData& f) {
  double m = 0.0;
  for (int j = 0; j < 8; ++j)
    for (double v : f.comp[j]) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const BoundaryData& f, const BoundaryData& g) {
  double m = 0.0;
  for (int j = 0; j < 8; ++j)
    for (std::size_t i = 0; i < f.comp[j].size(); ++i)
      m = std::max(m, std::abs(f.comp[j][i] - g.comp[j][i]));
  return m;
}

BoundaryData lin_comb(double a, const BoundaryData& f, double b, const BoundaryData& g) {
  if (!f.spec7.same_shape(g.spec7) || f.layer != g.layer)
    throw MalformedInput("lin_comb: layer mismatch");
  BoundaryData out(f.spec7, f.layer);
  for (int j = 0; j < 8; ++j)
    for (std::size_t i = 0; i < out.comp[j].size(); ++i)
      out.comp[j][i] = a * f.comp[j][i] + b * g.comp[j][i];
  return out;
}

BoundaryData layer_of(const GridFunction& f, int layer) {
  const GridSpec& sp = f.spec;
  BoundaryData bd(LayerSpec::of_grid(sp), layer);
  const std::size_t layer_points = bd.spec7.point_count();
  for (std::size_t i = 0; i < layer_points; ++i) {
    const std::array<int, 7> q = bd.spec7.point_at(i);
    LatticePoint m{};
    for (int j = 0; j < 7; ++j) m[j] = q[j] + sp.origin[j];
    m[7] = layer;
    set_value_at_flat(bd, i, value_at(f, m));
  }
  return bd;
}

}  // namespace octolat
