#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>

#include "octolat/grid.hpp"
#include "octolat/lattice_ops.hpp"
#include "octolat/octonion.hpp"

namespace octolat {

// Direct double-sum evaluation of the forward transform, same kernel
// e^{+i<mh,xi>} and weight h^8 as the fast path but sharing no code with it.
// Guarded to 4^8 points.
SpectralField naive_dft(const GridFunction& f);

// Direct layer convolution out(m) = weight * sum_n e7 * (kernel(n - m) * bd(n)),
// kernel indexed on its own 7-torus, products grouped exactly as written.
// Guarded to 4^7 points.
BoundaryData naive_boundary_convolution(const BoundaryData& kernel, const BoundaryData& bd,
                                        double weight);

// Row-major 8x8 complex matrix of left or right multiplication by s.
std::array<std::complex<double>, 64> mul_matrix(const ComplexOctonion& s, MulSide side);

// Gaussian elimination with partial pivoting for an 8x8 complex system.
// cond_estimate receives max|pivot| / min|pivot| when non-null.
std::array<std::complex<double>, 8> solve8(std::array<std::complex<double>, 64> a,
                                           std::array<std::complex<double>, 8> b,
                                           double* cond_estimate = nullptr);

// Unit-normalized null vector of an 8x8 complex matrix (the entry of largest
// modulus is scaled to 1). Throws SingularMatrix when the matrix has full rank.
std::array<std::complex<double>, 8> null_vector8(std::array<std::complex<double>, 64> a);

// Inverse of s through the dense multiplication matrix: solves L_s x = e0
// (or R_s x = e0). Independent of the algebraic conj(s)/N(s) route.
ComplexOctonion dense_symbol_inverse(const ComplexOctonion& s, MulSide side,
                                     double* cond_estimate = nullptr);

// Deterministic random stream: mt19937_64 with the fixed mapping
// (x >> 11) * 2^-53 scaled to [-1, 1).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  double uniform();
  int uniform_int(int lo, int hi);  // inclusive bounds
  Octonion octonion();

 private:
  std::mt19937_64 eng_;
};

enum class ValueKind { full, scalar };

// Uniform coefficients in [-1, 1) at every point of the support box (whole
// grid when box is null); points outside stay exactly zero. zero_mean
// redistributes the sum over the support so the DC Fourier node vanishes.
GridFunction random_grid(std::uint64_t seed, const GridSpec& spec, const IndexBox* box = nullptr,
                         bool zero_mean = false, ValueKind kind = ValueKind::full);

BoundaryData random_boundary(std::uint64_t seed, const LayerSpec& spec7, int layer = 0,
                             bool zero_mean = false);

}  // namespace octolat
