#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "octolat/errors.hpp"

namespace octolat {

// Signed basis product: e_i * e_j = sign * e_index.
struct BasisProduct {
  int sign;
  int index;
};

using BasisTable = std::array<std::array<BasisProduct, 8>, 8>;

// Oriented triples (a,b,c) with e_a e_b = e_c cyclically and anti-cyclically
// with a sign flip. Together with e_0 neutral and e_j^2 = -e_0 they generate
// the whole multiplication table (Baez labelling: e4 = e1e2, e5 = e1e3,
// e6 = e2e3, e7 = (e1e2)e3).
inline constexpr std::array<std::array<int, 3>, 7> kOctonionTriples = {{
    {1, 2, 4},
    {1, 3, 5},
    {2, 3, 6},
    {3, 7, 4},
    {2, 5, 7},
    {1, 7, 6},
    {4, 6, 5},
}};

constexpr BasisTable make_basis_table() {
  BasisTable t{};
  for (int j = 0; j < 8; ++j) {
    t[0][j] = {1, j};
    t[j][0] = {1, j};
  }
  for (int j = 1; j < 8; ++j) t[j][j] = {-1, 0};
  for (const auto& tr : kOctonionTriples) {
    const int rots[3][3] = {{tr[0], tr[1], tr[2]},
                            {tr[1], tr[2], tr[0]},
                            {tr[2], tr[0], tr[1]}};
    for (const auto& r : rots) {
      t[r[0]][r[1]] = {1, r[2]};
      t[r[1]][r[0]] = {-1, r[2]};
    }
  }
  return t;
}

inline constexpr BasisTable kBasisTable = make_basis_table();

struct Octonion {
  std::array<double, 8> c{};

  static Octonion scalar(double v) {
    Octonion x;
    x.c[0] = v;
    return x;
  }

  static Octonion basis(int j, double v = 1.0) {
    Octonion x;
    x.c[j] = v;
    return x;
  }

  double& operator[](int j) { return c[j]; }
  double operator[](int j) const { return c[j]; }

  Octonion& operator+=(const Octonion& o) {
    for (int j = 0; j < 8; ++j) c[j] += o.c[j];
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    for (int j = 0; j < 8; ++j) c[j] -= o.c[j];
    return *this;
  }
  Octonion& operator*=(double s) {
    for (int j = 0; j < 8; ++j) c[j] *= s;
    return *this;
  }

  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator-(const Octonion& a) {
    Octonion r;
    for (int j = 0; j < 8; ++j) r.c[j] = -a.c[j];
    return r;
  }
  friend Octonion operator*(Octonion a, double s) { return a *= s; }
  friend Octonion operator*(double s, Octonion a) { return a *= s; }
};

inline Octonion mul(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (int i = 0; i < 8; ++i) {
    const double ai = a.c[i];
    if (ai == 0.0) continue;
    for (int j = 0; j < 8; ++j) {
      const BasisProduct p = kBasisTable[i][j];
      r.c[p.index] += p.sign * ai * b.c[j];
    }
  }
  return r;
}

inline Octonion conj(const Octonion& a) {
  Octonion r;
  r.c[0] = a.c[0];
  for (int j = 1; j < 8; ++j) r.c[j] = -a.c[j];
  return r;
}

inline double norm(const Octonion& a) {
  double s = 0.0;
  for (int j = 0; j < 8; ++j) s += a.c[j] * a.c[j];
  return std::sqrt(s);
}

inline double norm_sq(const Octonion& a) {
  double s = 0.0;
  for (int j = 0; j < 8; ++j) s += a.c[j] * a.c[j];
  return s;
}

inline double max_abs(const Octonion& a) {
  double m = 0.0;
  for (int j = 0; j < 8; ++j) m = std::max(m, std::abs(a.c[j]));
  return m;
}

inline Octonion inverse(const Octonion& a) {
  const double n2 = norm_sq(a);
  if (n2 == 0.0) throw ZeroInput("inverse: zero octonion");
  Octonion r = conj(a);
  r *= 1.0 / n2;
  return r;
}

// (ab)c - a(bc)
inline Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c) {
  return mul(mul(a, b), c) - mul(a, mul(b, c));
}

// Complexified octonion a + i*b, stored as a pair of real octonions. The
// complex unit commutes with every e_j, so the product reduces to four real
// products: (a+ib)(c+id) = (ac - bd) + i(ad + bc).
struct ComplexOctonion {
  Octonion re, im;

  static ComplexOctonion scalar(std::complex<double> v) {
    ComplexOctonion x;
    x.re.c[0] = v.real();
    x.im.c[0] = v.imag();
    return x;
  }

  static ComplexOctonion basis(int j, std::complex<double> v = 1.0) {
    ComplexOctonion x;
    x.re.c[j] = v.real();
    x.im.c[j] = v.imag();
    return x;
  }

  static ComplexOctonion from_real(const Octonion& a) {
    ComplexOctonion x;
    x.re = a;
    return x;
  }

  std::complex<double> comp(int j) const { return {re.c[j], im.c[j]}; }
  void set_comp(int j, std::complex<double> v) {
    re.c[j] = v.real();
    im.c[j] = v.imag();
  }

  ComplexOctonion& operator+=(const ComplexOctonion& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexOctonion& operator-=(const ComplexOctonion& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexOctonion& operator*=(std::complex<double> s) {
    const Octonion r = re * s.real() - im * s.imag();
    const Octonion i = re * s.imag() + im * s.real();
    re = r;
    im = i;
    return *this;
  }

  friend ComplexOctonion operator+(ComplexOctonion a, const ComplexOctonion& b) { return a += b; }
  friend ComplexOctonion operator-(ComplexOctonion a, const ComplexOctonion& b) { return a -= b; }
  friend ComplexOctonion operator-(const ComplexOctonion& a) {
    ComplexOctonion r;
    r.re = -a.re;
    r.im = -a.im;
    return r;
  }
  friend ComplexOctonion operator*(ComplexOctonion a, std::complex<double> s) { return a *= s; }
};

inline ComplexOctonion mul(const ComplexOctonion& a, const ComplexOctonion& b) {
  ComplexOctonion r;
  r.re = mul(a.re, b.re) - mul(a.im, b.im);
  r.im = mul(a.re, b.im) + mul(a.im, b.re);
  return r;
}

// Octonionic conjugate; complex_coefficients additionally conjugates every
// coefficient (i -> -i).
inline ComplexOctonion conj(const ComplexOctonion& a, bool complex_coefficients = false) {
  ComplexOctonion r;
  r.re = conj(a.re);
  r.im = complex_coefficients ? -conj(a.im) : conj(a.im);
  return r;
}

// N(a) = sum_j a_j^2 over complex coefficients; a * conj(a) = N(a) e_0.
// Reduces to |a|^2 on real octonions.
inline std::complex<double> norm_form(const ComplexOctonion& a) {
  double re = 0.0, im = 0.0;
  for (int j = 0; j < 8; ++j) {
    re += a.re.c[j] * a.re.c[j] - a.im.c[j] * a.im.c[j];
    im += 2.0 * a.re.c[j] * a.im.c[j];
  }
  return {re, im};
}

inline double coeff_norm_sq(const ComplexOctonion& a) {
  return norm_sq(a.re) + norm_sq(a.im);
}

inline double max_abs(const ComplexOctonion& a) {
  double m = 0.0;
  for (int j = 0; j < 8; ++j) m = std::max(m, std::abs(a.comp(j)));
  return m;
}

inline ComplexOctonion inverse(const ComplexOctonion& a) {
  const std::complex<double> n = norm_form(a);
  const double eps = 1e-12 * (1.0 + coeff_norm_sq(a));
  if (std::abs(n) <= eps) throw ZeroDivisor("inverse: norm form below zero-divisor threshold");
  return conj(a) * (1.0 / n);
}

inline ComplexOctonion associator(const ComplexOctonion& a, const ComplexOctonion& b,
                                  const ComplexOctonion& c) {
  return mul(mul(a, b), c) - mul(a, mul(b, c));
}

// Left multiplication by the basis element e_j (scaled), accumulated into out:
// out += s * (e_j * x). Used by the lattice operators, where x is a value of a
// grid function and the table row gives the component mixing.
inline void acc_basis_mul_left(Octonion& out, int j, const Octonion& x, double s = 1.0) {
  for (int k = 0; k < 8; ++k) {
    const BasisProduct p = kBasisTable[j][k];
    out.c[p.index] += p.sign * s * x.c[k];
  }
}

// out += s * (x * e_j)
inline void acc_basis_mul_right(Octonion& out, int j, const Octonion& x, double s = 1.0) {
  for (int k = 0; k < 8; ++k) {
    const BasisProduct p = kBasisTable[k][j];
    out.c[p.index] += p.sign * s * x.c[k];
  }
}

}  // namespace octolat
