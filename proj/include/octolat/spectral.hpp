#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "octolat/grid.hpp"
#include "octolat/lattice_ops.hpp"

namespace octolat {

// Frequency nodes xi_k = 2 pi k / (N h) mapped into [-pi/h, pi/h).
std::vector<double> frequency_axis(int n, double h);

// Symbols of the forward/backward differences: -+ h^-1 (1 - e^{-+ i h xi}).
std::complex<double> symbol_xi(double xi, double h, DiffDirection dir);

// d^2 = (4/h^2) sum_j sin^2(xi_j h / 2)
double symbol_d2(const std::array<double, 8>& xi, double h);

// xi-tilde = sum_{j=0}^{7} e_j xi_h^{+-j}
ComplexOctonion symbol_cr(const std::array<double, 8>& xi, double h, DiffDirection dir);

// Symbol of any Cauchy-Riemann operator variant (left action multiplies the
// transform from the left by this value, right action from the right).
ComplexOctonion symbol_cr_variant(const std::array<double, 8>& xi, double h, CrVariant variant);

// Forward transform: F(xi) = sum_m e^{+i<mh,xi>} f(mh) h^8; inverse scaled so
// idft(dft(f)) = f. Componentwise over the 8 octonion components.
SpectralField dft(const GridFunction& f);
SpectralField dft(const SpectralField& f);
SpectralField idft(const SpectralField& F);
// Inverse transform of a field known to be conjugate-symmetric; returns the
// real part and reports the largest discarded imaginary magnitude.
GridFunction idft_real(const SpectralField& F, double* max_imag = nullptr);

// 7-axis layer transforms with the same kernel convention (weight h^7).
SpectralLayer dft7(const BoundaryData& f);
SpectralLayer dft7(const SpectralLayer& f);
SpectralLayer idft7(const SpectralLayer& F);
BoundaryData idft7_real(const SpectralLayer& F, double* max_imag = nullptr);

struct SingularNode {
  std::uint32_t index;       // flat frequency-node index
  double abs_norm_form;      // |N(xi-tilde)| at the node
};

// Frequency nodes where the complexified symbol has no inverse. Node 0 is
// always a member (the symbol vanishes there); additional members are genuine
// zero divisors of the complexified algebra.
struct SingularSet {
  std::vector<SingularNode> nodes;
  bool contains(std::uint32_t index) const;
};

enum class FundsolVariant { paper, exact };

struct Fundsol {
  GridFunction values;
  FundsolVariant variant = FundsolVariant::exact;
  DiffDirection direction = DiffDirection::forward;
  SingularSet singular;
  double max_imag = 0.0;  // realification defect of the inverse transform
};

// Fundamental solution of the discrete Cauchy-Riemann operator on the torus.
// variant paper: E-hat = xi-tilde / d^2 with the zero node zeroed.
// variant exact: E-hat = conj(xi-tilde) / N(xi-tilde), the true two-sided
// inverse, with every singular node zeroed and reported.
Fundsol fundsol(const GridSpec& spec, DiffDirection direction, FundsolVariant variant);

// Singular set alone (exact-variant detection with eps = 1e-10 (1 + d^2)).
SingularSet singular_set(const GridSpec& spec, DiffDirection direction);

// Indicator of the singular set transported to the lattice: the inverse
// transform of the set's characteristic field. apply_cr(E_exact, D, left) =
// delta_h - this correction, with delta_h the point mass of weight h^-8.
GridFunction singular_correction(const GridSpec& spec, const SingularSet& set);

// Trapezoidal quadrature of (2 pi)^-8 Int (xi-tilde / d^2) e^{-i<mh,xi>} dxi
// over [-pi/h, pi/h)^8 on M nodes per axis, zero node skipped. Aliases to the
// paper-variant torus kernel on an M-per-axis torus at the reduced index.
Octonion fundsol_pointwise(const LatticePoint& m, double h, DiffDirection dir, int M,
                           double* max_imag = nullptr);

struct DecayProbe {
  std::vector<std::pair<int, double>> samples;  // (radius, |E(r e_axis)|)
  double slope = 0.0;                           // least-squares log-log slope
};

DecayProbe decay_probe(DiffDirection dir, int axis, const std::vector<int>& radii, int M,
                       double h = 1.0);

}  // namespace octolat
