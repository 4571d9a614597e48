#pragma once

#include <complex>
#include <vector>

#include "qpb/quaternion_matrix.hpp"

namespace qpb {

// Hard cap on complex matrix dimension. Everything here is desk-scale; a
// bigger input is almost certainly a caller bug, so fail loudly instead of
// grinding silently.
inline constexpr Index kMaxComplexDim = 512;

// All eigenvalues of a square complex matrix, in the solver's order (callers
// that need an order sort themselves). Empty input gives an empty list.
// Throws ConvergenceError carrying the partial diagonal if the solver fails.
std::vector<std::complex<double>> complex_eigenvalues(const CMatrix& m);

// Largest singular value: sqrt of the top eigenvalue of the Hermitian Gram
// matrix M^H M. Any rectangular shape within the cap; 0 for an empty matrix.
double spectral_norm(const CMatrix& m);

// Unit eigenvector for a known eigenvalue, by inverse iteration (at most five
// steps). lambda is expected accurate to ~1e-6 or better; the factorization
// shifts lambda by 1e-10 if M - lambda*I is exactly singular. The returned
// vector has residual ||Mv - v*lambda|| <= 1e-8 * ||M||_2 and its largest
// component made real positive, so results are deterministic.
// norm2_hint, when nonnegative, is trusted as ||M||_2 and saves recomputing it.
Eigen::VectorXcd complex_eigenvector(const CMatrix& m, std::complex<double> lambda,
                                     double norm2_hint = -1.0);

}  // namespace qpb
