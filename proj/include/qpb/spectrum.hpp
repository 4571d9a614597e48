#pragma once

#include <complex>
#include <vector>

#include "qpb/complex_kernel.hpp"
#include "qpb/quaternion_matrix.hpp"

namespace qpb {

// Right spectrum of a square quaternionic matrix. Each similarity class of
// right eigenvalues has constant modulus and exactly one complex
// representative with nonnegative imaginary part; those canonical
// representatives are what this records, n of them for an n x n matrix.
struct RightSpectrum {
  std::vector<std::complex<double>> representatives;  // Im >= 0, sorted by
                                                      // modulus desc, then
                                                      // real desc, imag desc
  double radius = 0.0;                                // max modulus, 0 when empty
  Index adjoint_dimension = 0;                        // 2n
};

// Total order used everywhere a deterministic eigenvalue sequence is needed.
bool spectrum_order(const std::complex<double>& a, const std::complex<double>& b);

// Collapses a conjugate-closed eigenvalue list (the adjoint spectrum) to one
// canonical representative per conjugate pair. Greedy nearest-conjugate
// matching in spectrum_order; an eigenvalue whose best partner sits farther
// than tol away means the input was not conjugate-closed to working accuracy,
// which is a NumericalError. Representatives are symmetrized so Im >= 0 holds
// exactly.
std::vector<std::complex<double>> pair_conjugates(std::vector<std::complex<double>> values,
                                                  double tol);

RightSpectrum right_spectrum(const QMatrix& a);

double right_spectral_radius(const QMatrix& a);

// Spectral norm through the complex adjoint, which preserves it.
double spectral_norm(const QMatrix& a);

// 2x2 nonnegative matrix of block spectral norms for the given partition.
// Its spectral radius dominates the right spectral radius of a (when the
// diagonal blocks are square) and its spectral norm dominates ||a||_2.
Eigen::Matrix2d partition_majorant(const QMatrix& a, Index split_row, Index split_col);

}  // namespace qpb
