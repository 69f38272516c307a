#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "octolat/calculus.hpp"
#include "octolat/grid.hpp"
#include "octolat/spectral.hpp"

namespace octolat {

// d-bar: sqrt((4/h^2) sum_{j=0}^{6} sin^2(xi_j h / 2)).
double layer_d(const std::array<double, 7>& xi, double h);

// xi-bar-tilde-plus = sum_{j=0}^{6} e_j xi_h^{+j} (component 7 is zero).
ComplexOctonion layer_symbol_xi(const std::array<double, 7>& xi, double h);

// Closed-form boundary-layer transforms of the forward fundamental solution,
// evaluated verbatim. layer is the lattice offset: 0, +1 (layer +h), -1
// (layer -h). Throws SingularFrequency at xi = 0.
ComplexOctonion boundary_symbol_E(const std::array<double, 7>& xi, double h, int layer);

enum class HSign { plus, minus };

// Multiplier values, product chain grouped left to right:
//   s+ = e7 (xi-tilde/d) (2 / (h d - sqrt(4 + h^2 d^2)))
//   s- = -e7 (xi-tilde/d) ((h d - sqrt(4 + h^2 d^2)) / 2).
// Throws SingularFrequency at xi = 0; grid-level constructors map DC to 0.
ComplexOctonion multiplier_s(const std::array<double, 7>& xi, double h, HSign sign);

// Per-node multiplier on a layer frequency grid. The standard fields realize
// the closed forms; tests may inject synthetic fields through `values`.
struct MultiplierField {
  LayerSpec spec7;
  std::vector<ComplexOctonion> values;

  static MultiplierField standard(const LayerSpec& spec7, HSign sign);  // DC -> 0
  // Extension multipliers: A+ (upper, DC -> 0) and the scalar A- (lower,
  // DC -> 1).
  static MultiplierField extension(const LayerSpec& spec7, HalfSpaceSide side);
};

// Grouping used when one call stands for a repeated application:
// right_nested composes operators, s (s f-hat); left_nested squares the
// symbol first, (s s) f-hat. A single application is the same either way.
enum class Parenthesization { left_nested, right_nested };

BoundaryData apply_multiplier(const BoundaryData& bd, const MultiplierField& s,
                              double* max_imag = nullptr);

BoundaryData apply_H(const BoundaryData& bd, HSign sign,
                     Parenthesization paren = Parenthesization::right_nested);

// H applied twice under the requested grouping (operator composition versus
// symbol squaring; these differ because the algebra is non-associative).
BoundaryData apply_H_twice(const BoundaryData& bd, HSign sign,
                           Parenthesization paren = Parenthesization::right_nested);

// P = (I + H) / 2.
BoundaryData apply_P(const BoundaryData& bd, HSign sign,
                     Parenthesization paren = Parenthesization::right_nested);

// Upper extension maps layer 1 data to layer 0 via A+; lower maps layer -1
// data to layer 0 via the scalar A-.
BoundaryData apply_extension(const BoundaryData& bd, HalfSpaceSide side);

struct MembershipReport {
  bool member = false;
  double residual = 0.0;  // ||bd - H bd||_inf / ||bd||_inf
  double tol = 0.0;
};

// Hardy-space test: data is a member when it is fixed by H. Requires
// zero-mean input (the DC multiplier value is not canonical).
MembershipReport hardy_membership(const BoundaryData& bd, HSign sign, double tol = 1e-8);

struct InnerProductOptions {
  int weight_exponent = 2;  // printed weight h^2; 7 available for experiments
};

// Octonion-valued inner products on a boundary layer:
//   upper: sum_m conj(-e7 g(m)) (-e7 f(m)) h^2
//   lower: sum_m conj(e7 g(m)) (e7 f(m)) h^2.
Octonion inner_product(const BoundaryData& f, const BoundaryData& g, HalfSpaceSide side,
                       const InnerProductOptions& opts = {});

struct AxiomResiduals {
  double additivity = 0.0;          // (i) both slots
  double hermitian = 0.0;           // (ii) <g,f> - conj(<f,g>)
  double positivity_offaxis = 0.0;  // (iii) nonscalar part of <f,f>
  double positivity_scalar_min = 0.0;
  double r_homogeneity = 0.0;       // (iv) real scalars
  double o_homogeneity = 0.0;       // (v) <f a, f> - <f,f> a, reported
  double para_linearity = 0.0;      // (vi) Re<f a, g> - Re(<f,g> a), reported
  double scale = 1.0;               // largest inner-product magnitude seen
};

AxiomResiduals hilbert_axioms_check(std::uint64_t seed, const LayerSpec& spec7,
                                    HalfSpaceSide side, int trials = 16,
                                    const InnerProductOptions& opts = {});

struct SigmaAudit {
  double sigma_max = 0.0;  // max |s s - e0| over non-DC nodes
  double sigma_min = 0.0;  // min over the same nodes
  std::size_t node_count = 0;
  std::vector<std::size_t> unit_nodes;  // nodes with |sigma| < 1e-10
};

SigmaAudit sigma_audit(const LayerSpec& spec7, HSign sign);

}  // namespace octolat
