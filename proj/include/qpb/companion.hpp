#pragma once

#include <complex>
#include <vector>

#include "qpb/quaternion.hpp"
#include "qpb/quaternion_matrix.hpp"
#include "qpb/spectrum.hpp"

namespace qpb {

// Monic quaternionic matrix polynomial A_0 + A_1 u + ... + A_{k-1} u^{k-1} +
// I u^k with n x n coefficient blocks. The leading identity is implied, never
// stored; there is no way to build a non-monic instance.
class MatrixPolynomial {
 public:
  // coeffs = A_0 .. A_{k-1}. All blocks must be square with one common size.
  explicit MatrixPolynomial(std::vector<QMatrix> coeffs);

  // Scalar polynomial as the n = 1 case.
  static MatrixPolynomial from_scalar(const std::vector<Quaterniond>& coeffs);

  Index degree() const { return static_cast<Index>(coeffs_.size()); }
  Index block_size() const { return n_; }
  const QMatrix& coeff(Index i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<QMatrix>& coeffs() const { return coeffs_; }

 private:
  Index n_;
  std::vector<QMatrix> coeffs_;
};

// First and second derived coefficient families:
//   B_i = A_{k-1} A_i - A_{i-1}          (A_{-1} = 0)
//   C_i = -A_{k-1} B_i + A_{k-2} A_i - A_{i-2}   (A_{-2} = 0)
// These are exactly the last block rows of the squared and cubed companion
// matrix; watch the product order.
struct DerivedCoefficients {
  std::vector<QMatrix> b;
  std::vector<QMatrix> c;
};

DerivedCoefficients derived_coefficients(const MatrixPolynomial& p);  // degree >= 2

// kn x kn block companion matrix, possibly raised to a power. Keeps its
// polynomial so powers can be formed from the structure alone.
struct CompanionMatrix {
  MatrixPolynomial poly;
  int power;
  QMatrix matrix;
};

// Power 1: identity blocks on the first superdiagonal, last block row
// [-A_0 ... -A_{k-1}].
CompanionMatrix build_companion(const MatrixPolynomial& p);

// Powers 2 and 3. When degree >= m + 1 the result is written directly from
// the shifted-identity / -A / B / C row structure; smaller degrees fall back
// to repeated multiplication (the structure degenerates there). Requires the
// power-1 companion as input.
CompanionMatrix companion_power(const CompanionMatrix& c, int m);

// Principal submatrix the squared-companion norm argument runs through:
// top-left (k-1)n block of the squared companion. Identity blocks shifted by
// two, one zero block row, then [-A_0 ... -A_{k-2}]. Degree >= 4.
QMatrix proof_matrix_s(const MatrixPolynomial& p);

// Same for the cubed companion: top-left (k-2)n block, shift three, two zero
// block rows, then [-A_0 ... -A_{k-3}]. Degree >= 5. Note the first identity
// block needs degree >= 6; at degree 5 this matrix is nilpotent with norm 0.
QMatrix proof_matrix_n(const MatrixPolynomial& p);

// 2x2 block carve-up of any matrix at the given row/column split.
struct BlockPartition {
  QMatrix m11, m12, m21, m22;
};

BlockPartition block_partition(const QMatrix& m, Index split_row, Index split_col);

// Right spectrum of the polynomial = right spectrum of its companion matrix.
RightSpectrum polynomial_right_spectrum(const MatrixPolynomial& p);

// Right eigenpair pulled out of the companion adjoint: unit-norm quaternionic
// eigenvector x (the leading n-block of the companion eigenvector) and the
// canonical eigenvalue representative, with the evaluation residual
// ||A_0 x + A_1 x lambda + ... + x lambda^k||_2.
struct PolynomialEigenpair {
  std::complex<double> lambda;
  std::vector<Quaterniond> x;
  double residual;
};

std::vector<PolynomialEigenpair> polynomial_eigenpairs(const MatrixPolynomial& p);

double polynomial_residual(const MatrixPolynomial& p, const std::vector<Quaterniond>& x,
                           std::complex<double> lambda);

}  // namespace qpb
