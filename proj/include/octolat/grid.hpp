#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "octolat/errors.hpp"
#include "octolat/octonion.hpp"

namespace octolat {

enum class Topology { torus, block };

using LatticePoint = std::array<int, 8>;

// Finite computational window of the lattice hZ^8: either a discrete torus or
// an axis-aligned block read as zero outside (compact support model). Block
// windows carry an origin so that negative layers like m7 = -1 exist.
struct GridSpec {
  std::array<int, 8> n{};       // points per axis
  double h = 1.0;               // lattice constant
  Topology topology = Topology::torus;
  std::array<int, 8> origin{};  // lattice index of the first stored point

  static GridSpec torus(const std::array<int, 8>& sizes, double h);
  static GridSpec uniform_torus(int size, double h);
  static GridSpec block(const std::array<int, 8>& sizes, double h,
                        const std::array<int, 8>& origin);

  std::size_t point_count() const {
    std::size_t p = 1;
    for (int j = 0; j < 8; ++j) p *= static_cast<std::size_t>(n[j]);
    return p;
  }

  // Row-major strides, m7 varying fastest.
  std::array<std::size_t, 8> strides() const {
    std::array<std::size_t, 8> s{};
    s[7] = 1;
    for (int j = 6; j >= 0; --j) s[j] = s[j + 1] * static_cast<std::size_t>(n[j + 1]);
    return s;
  }

  std::size_t flat_index(const LatticePoint& m) const {
    const auto s = strides();
    std::size_t idx = 0;
    for (int j = 0; j < 8; ++j) idx += static_cast<std::size_t>(m[j] - origin[j]) * s[j];
    return idx;
  }

  LatticePoint point_at(std::size_t flat) const {
    LatticePoint m{};
    for (int j = 7; j >= 0; --j) {
      m[j] = static_cast<int>(flat % static_cast<std::size_t>(n[j])) + origin[j];
      flat /= static_cast<std::size_t>(n[j]);
    }
    return m;
  }

  bool same_shape(const GridSpec& o) const {
    return n == o.n && h == o.h && topology == o.topology && origin == o.origin;
  }
};

inline int wrap_index(int m, int n) {
  int r = m % n;
  if (r < 0) r += n;
  return r;
}

// Octonion-valued grid function, stored as a structure of arrays: one
// contiguous value array per basis component.
template <class S>
struct BasicGridFunction {
  GridSpec spec;
  std::array<std::vector<S>, 8> comp;

  BasicGridFunction() = default;
  explicit BasicGridFunction(const GridSpec& sp) : spec(sp) {
    for (auto& v : comp) v.assign(sp.point_count(), S{});
  }

  std::size_t size() const { return comp[0].size(); }
};

using GridFunction = BasicGridFunction<double>;
using SpectralField = BasicGridFunction<std::complex<double>>;

inline Octonion value_at_flat(const GridFunction& f, std::size_t idx) {
  Octonion x;
  for (int j = 0; j < 8; ++j) x.c[j] = f.comp[j][idx];
  return x;
}

inline void set_value_at_flat(GridFunction& f, std::size_t idx, const Octonion& x) {
  for (int j = 0; j < 8; ++j) f.comp[j][idx] = x.c[j];
}

inline ComplexOctonion value_at_flat(const SpectralField& f, std::size_t idx) {
  ComplexOctonion x;
  for (int j = 0; j < 8; ++j) x.set_comp(j, f.comp[j][idx]);
  return x;
}

inline void set_value_at_flat(SpectralField& f, std::size_t idx, const ComplexOctonion& x) {
  for (int j = 0; j < 8; ++j) f.comp[j][idx] = x.comp(j);
}

// Value at a lattice point honoring the topology: torus indices wrap, block
// reads outside the stored box return zero.
Octonion value_at(const GridFunction& f, const LatticePoint& m);
void add_value_at(GridFunction& f, const LatticePoint& m, const Octonion& x);

double max_abs(const GridFunction& f);
double max_abs_diff(const GridFunction& f, const GridFunction& g);

// a*f + b*g on matching windows.
GridFunction lin_comb(double a, const GridFunction& f, double b, const GridFunction& g);

// Inclusive index box; empty() when no point is set.
struct IndexBox {
  LatticePoint lo{};
  LatticePoint hi{};
  bool empty = true;
};

IndexBox support_box(const GridFunction& f);

// 7-axis layer geometry for boundary data (axes 0..6 of the lattice).
struct LayerSpec {
  std::array<int, 7> n{};
  double h = 1.0;

  static LayerSpec uniform(int size, double h);
  static LayerSpec of_grid(const GridSpec& spec);

  std::size_t point_count() const {
    std::size_t p = 1;
    for (int j = 0; j < 7; ++j) p *= static_cast<std::size_t>(n[j]);
    return p;
  }

  std::array<std::size_t, 7> strides() const {
    std::array<std::size_t, 7> s{};
    s[6] = 1;
    for (int j = 5; j >= 0; --j) s[j] = s[j + 1] * static_cast<std::size_t>(n[j + 1]);
    return s;
  }

  std::size_t flat_index(const std::array<int, 7>& m) const {
    const auto s = strides();
    std::size_t idx = 0;
    for (int j = 0; j < 7; ++j) idx += static_cast<std::size_t>(wrap_index(m[j], n[j])) * s[j];
    return idx;
  }

  std::array<int, 7> point_at(std::size_t flat) const {
    std::array<int, 7> m{};
    for (int j = 6; j >= 0; --j) {
      m[j] = static_cast<int>(flat % static_cast<std::size_t>(n[j]));
      flat /= static_cast<std::size_t>(n[j]);
    }
    return m;
  }

  bool same_shape(const LayerSpec& o) const { return n == o.n && h == o.h; }
};

// Octonion-valued function on a 7-D layer at a fixed m7 (the layer tag).
template <class S>
struct BasicLayerFunction {
  LayerSpec spec7;
  int layer = 0;
  std::array<std::vector<S>, 8> comp;

  BasicLayerFunction() = default;
  BasicLayerFunction(const LayerSpec& sp, int layer_tag) : spec7(sp), layer(layer_tag) {
    for (auto& v : comp) v.assign(sp.point_count(), S{});
  }

  std::size_t size() const { return comp[0].size(); }
};

using BoundaryData = BasicLayerFunction<double>;
using SpectralLayer = BasicLayerFunction<std::complex<double>>;

inline Octonion value_at_flat(const BoundaryData& f, std::size_t idx) {
  Octonion x;
  for (int j = 0; j < 8; ++j) x.c[j] = f.comp[j][idx];
  return x;
}

inline void set_value_at_flat(BoundaryData& f, std::size_t idx, const Octonion& x) {
  for (int j = 0; j < 8; ++j) f.comp[j][idx] = x.c[j];
}

inline ComplexOctonion value_at_flat(const SpectralLayer& f, std::size_t idx) {
  ComplexOctonion x;
  for (int j = 0; j < 8; ++j) x.set_comp(j, f.comp[j][idx]);
  return x;
}

inline void set_value_at_flat(SpectralLayer& f, std::size_t idx, const ComplexOctonion& x) {
  for (int j = 0; j < 8; ++j) f.comp[j][idx] = x.comp(j);
}

double max_abs(const BoundaryData& f);
double max_abs_diff(const BoundaryData& f, const BoundaryData& g);

BoundaryData lin_comb(double a, const BoundaryData& f, double b, const BoundaryData& g);

// Extract the 7-D layer m7 = layer (wrapped on a torus) from an 8-D function.
BoundaryData layer_of(const GridFunction& f, int layer);

}  // namespace octolat
