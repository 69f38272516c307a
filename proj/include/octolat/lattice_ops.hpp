#pragma once

#include "octolat/grid.hpp"

namespace octolat {

enum class DiffDirection { forward, backward };

// Discrete Cauchy-Riemann operator variants. The conjugated variants keep the
// +d/dx0 term and flip the sign of the e_j terms for j >= 1; central averages
// the forward and backward operators.
enum class CrVariant { forward, backward, conj_forward, conj_backward, central };

enum class MulSide { left, right };

// Forward difference h^-1 (f(m + e_j) - f(m)) or backward difference
// h^-1 (f(m) - f(m - e_j)); shifts wrap on a torus and read zero outside a
// block window.
GridFunction diff(const GridFunction& f, int axis, DiffDirection dir);

// Left: sum_j e_j (d_j f); right: sum_j (d_j f) e_j, multiplication per the
// octonion table.
GridFunction apply_cr(const GridFunction& f, CrVariant variant, MulSide side);

// sum_j d+_j d-_j f, the 17-point star stencil.
GridFunction star_laplacian(const GridFunction& f);

}  // namespace octolat
