#pragma once

#include <string>

#include "octolat/grid.hpp"
#include "octolat/lattice_ops.hpp"
#include "octolat/spectral.hpp"

namespace octolat {

enum class HalfSpaceSide { upper, lower };

// Two executable readings of the half-lattice boundary identities.
//
// corrected: the summation-by-parts form that holds to machine precision.
//   Volume term  sum_{half} { [g D+] f + sum_j (g e_j)(d-_j f) } h^8
//   telescopes in axis 7 to the boundary term
//     upper:  -h^7 sum_{m_} (g(m_,1) e7) f(m_,0)
//     lower:  +h^7 sum_{m_} (g(m_,0) e7) f(m_,-1).
//
// as_printed: the published grouping and weights, kept verbatim for audits.
//   Volume term  sum_{half} { [g D+] f - g [D- f] } h^8 against
//     upper:  +h^8 sum_{m_} e7 (g(m_,1) f(m_,0))
//     lower:  -h^8 sum_{m_} e7 (g(m_,0) f(m_,-1)).
//   Boundary-kernel layers in the Borel-Pompeiu and Cauchy forms stay fixed
//   (1 for upper, 0 for lower) instead of shifting with the evaluation layer.
enum class SumConvention { corrected, as_printed };

inline const char* to_string(SumConvention c) {
  return c == SumConvention::corrected ? "corrected" : "as-printed";
}

struct IdentityResidual {
  std::string claim;
  Octonion lhs;
  Octonion rhs;
  double residual_max = 0.0;
  double residual_mean = 0.0;
  double scale = 1.0;  // max(|lhs|, |rhs|, 1)
  SumConvention convention = SumConvention::corrected;
};

struct StokesOptions {
  SumConvention convention = SumConvention::corrected;
  // 0 picks the convention default: 7 for corrected, 8 for as_printed.
  int boundary_weight_exponent = 0;
};

// Half-lattice Stokes identity on a block window. The volume sum runs over
// window points with m7 >= 1 (upper) or m7 <= -1 (lower); the boundary sum
// runs over the window cross-section in axes 0..6.
IdentityResidual stokes_residual(const GridFunction& f, const GridFunction& g, HalfSpaceSide side,
                                 const StokesOptions& opts = {});

// Whole-space identity for the central operator (torus or block window).
IdentityResidual stokes_residual_central_wholespace(
    const GridFunction& f, const GridFunction& g,
    SumConvention convention = SumConvention::corrected);

struct BorelPompeiuOptions {
  SumConvention convention = SumConvention::corrected;
  FundsolVariant variant = FundsolVariant::exact;
  // Explicit torus kernel (forward direction). When null a kernel is computed
  // on a torus with every size twice the window size, subject to max_points.
  const Fundsol* kernel = nullptr;
  std::size_t max_points = 1679616;  // 6^8
};

// Reconstruction candidate at lattice point m: boundary-layer term minus
// (corrected) or plus (as_printed sign pattern) the volume term with the
// backward derivative of f. Approximates f(mh) inside the half-space and 0
// outside, up to torus wrap error of the kernel.
Octonion borel_pompeiu_eval(const GridFunction& f, const LatticePoint& m, HalfSpaceSide side,
                            const BorelPompeiuOptions& opts = {});

enum class ConvolutionPath { spectral, direct };

struct CauchyOptions {
  SumConvention convention = SumConvention::corrected;
  FundsolVariant variant = FundsolVariant::exact;
  const Fundsol* kernel = nullptr;  // torus kernel; axes 0..6 must match bd
  ConvolutionPath path = ConvolutionPath::spectral;
  // Output layers, inclusive; lo > hi selects the side default ([1,3] upper,
  // [-3,-1] lower).
  int m7_lo = 1;
  int m7_hi = 0;
};

// Layer convolution of boundary data with shifted fundamental-solution
// layers, one output layer per m7 in range. The direct path is guarded to
// 4^7 points per layer.
GridFunction cauchy_transform(const BoundaryData& bd, HalfSpaceSide side,
                              const CauchyOptions& opts = {});

struct MonogenicityReport {
  bool monogenic = false;
  double residual_max = 0.0;
  double tol = 0.0;
};

// Checks apply_cr(f, D(variant), side) over window layers m7 in [m7_lo,
// m7_hi]. tol <= 0 selects the default 1e-10 * max|f| / h.
MonogenicityReport is_monogenic(const GridFunction& f, DiffDirection variant, int m7_lo,
                                int m7_hi, MulSide side = MulSide::left, double tol = -1.0);

}  // namespace octolat
