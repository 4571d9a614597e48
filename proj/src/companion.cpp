#include "qpb/companion.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qpb/complex_kernel.hpp"
#include "qpb/errors.hpp"

namespace qpb {

MatrixPolynomial::MatrixPolynomial(std::vector<QMatrix> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DegreeError("polynomial degree must be at least 1");
  n_ = coeffs_[0].rows();
  if (n_ < 1) throw ShapeError("coefficient blocks must be at least 1x1");
  for (const QMatrix& a : coeffs_)
    if (a.rows() != n_ || a.cols() != n_)
      throw ShapeError("coefficient block is " + std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()) + ", expected " + std::to_string(n_) + "x" +
                       std::to_string(n_));
}

MatrixPolynomial MatrixPolynomial::from_scalar(const std::vector<Quaterniond>& coeffs) {
  std::vector<QMatrix> blocks;
  blocks.reserve(coeffs.size());
  for (const Quaterniond& q : coeffs) {
    QMatrix m(1, 1);
    m(0, 0) = q;
    blocks.push_back(std::move(m));
  }
  return MatrixPolynomial(std::move(blocks));
}

DerivedCoefficients derived_coefficients(const MatrixPolynomial& p) {
  const Index k = p.degree(), n = p.block_size();
  if (k < 2)
    throw DegreeError("derived_coefficients: degree " + std::to_string(k) + ", need >= 2");
  const QMatrix zero = QMatrix::Zero(n, n);
  const QMatrix& lead = p.coeff(k - 1);
  const QMatrix& sublead = p.coeff(k - 2);

  DerivedCoefficients d;
  d.b.reserve(static_cast<std::size_t>(k));
  d.c.reserve(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) {
    const QMatrix& prev1 = i >= 1 ? p.coeff(i - 1) : zero;
    const QMatrix& prev2 = i >= 2 ? p.coeff(i - 2) : zero;
    d.b.push_back(lead * p.coeff(i) - prev1);
    d.c.push_back(-(lead * d.b.back()) + sublead * p.coeff(i) - prev2);
  }
  return d;
}

namespace {

void place_identity_shift(QMatrix& m, Index n, Index block_row, Index block_col) {
  set_block(m, block_row * n, block_col * n, QMatrix::Identity(n));
}

void place_coeff_row(QMatrix& m, Index n, Index block_row, const std::vector<QMatrix>& row,
                     bool negate) {
  for (Index i = 0; i < static_cast<Index>(row.size()); ++i) {
    const QMatrix& a = row[static_cast<std::size_t>(i)];
    set_block(m, block_row * n, i * n, negate ? -a : a);
  }
}

}  // namespace

CompanionMatrix build_companion(const MatrixPolynomial& p) {
  const Index k = p.degree(), n = p.block_size();
  QMatrix m = QMatrix::Zero(k * n, k * n);
  for (Index r = 0; r + 1 < k; ++r) place_identity_shift(m, n, r, r + 1);
  place_coeff_row(m, n, k - 1, p.coeffs(), /*negate=*/true);
  return {p, 1, std::move(m)};
}

CompanionMatrix companion_power(const CompanionMatrix& c, int m) {
  if (c.power != 1)
    throw ParameterError("companion_power: input has power " + std::to_string(c.power) +
                         ", need the power-1 companion");
  if (m != 2 && m != 3)
    throw UnsupportedPowerError("companion_power: power " + std::to_string(m) +
                                " not supported, only 2 and 3");
  const MatrixPolynomial& p = c.poly;
  const Index k = p.degree(), n = p.block_size();

  if (k < m + 1) {
    // Too small for the shifted structure; multiply it out.
    QMatrix acc = c.matrix;
    for (int i = 1; i < m; ++i) acc = acc * c.matrix;
    return {p, m, std::move(acc)};
  }

  const DerivedCoefficients d = derived_coefficients(p);
  QMatrix out = QMatrix::Zero(k * n, k * n);
  for (Index r = 0; r + m < k; ++r) place_identity_shift(out, n, r, r + m);
  place_coeff_row(out, n, k - m, p.coeffs(), /*negate=*/true);
  place_coeff_row(out, n, k - m + 1, d.b, /*negate=*/false);
  if (m == 3) place_coeff_row(out, n, k - m + 2, d.c, /*negate=*/false);
  return {p, m, std::move(out)};
}

QMatrix proof_matrix_s(const MatrixPolynomial& p) {
  const Index k = p.degree(), n = p.block_size();
  if (k < 4) throw DegreeError("proof_matrix_s: degree " + std::to_string(k) + ", need >= 4");
  QMatrix s = QMatrix::Zero((k - 1) * n, (k - 1) * n);
  for (Index r = 0; r + 3 < k; ++r) place_identity_shift(s, n, r, r + 2);
  for (Index i = 0; i + 1 < k; ++i) set_block(s, (k - 2) * n, i * n, -p.coeff(i));
  return s;
}

QMatrix proof_matrix_n(const MatrixPolynomial& p) {
  const Index k = p.degree(), n = p.block_size();
  if (k < 5) throw DegreeError("proof_matrix_n: degree " + std::to_string(k) + ", need >= 5");
  QMatrix out = QMatrix::Zero((k - 2) * n, (k - 2) * n);
  for (Index r = 0; r + 5 < k; ++r) place_identity_shift(out, n, r, r + 3);
  for (Index i = 0; i + 2 < k; ++i) set_block(out, (k - 3) * n, i * n, -p.coeff(i));
  return out;
}

BlockPartition block_partition(const QMatrix& m, Index split_row, Index split_col) {
  if (split_row < 1 || split_row >= m.rows() || split_col < 1 || split_col >= m.cols())
    throw ShapeError("block_partition: split (" + std::to_string(split_row) + ", " +
                     std::to_string(split_col) + ") outside the matrix interior");
  return {block(m, 0, 0, split_row, split_col),
          block(m, 0, split_col, split_row, m.cols() - split_col),
          block(m, split_row, 0, m.rows() - split_row, split_col),
          block(m, split_row, split_col, m.rows() - split_row, m.cols() - split_col)};
}

RightSpectrum polynomial_right_spectrum(const MatrixPolynomial& p) {
  return right_spectrum(build_companion(p).matrix);
}

double polynomial_residual(const MatrixPolynomial& p, const std::vector<Quaterniond>& x,
                           std::complex<double> lambda) {
  const Index k = p.degree(), n = p.block_size();
  if (static_cast<Index>(x.size()) != n)
    throw ShapeError("polynomial_residual: vector length " + std::to_string(x.size()) +
                     ", expected " + std::to_string(n));
  const Quaterniond lam = from_complex(lambda);

  std::vector<Quaterniond> acc(static_cast<std::size_t>(n));
  std::vector<Quaterniond> cur = x;  // x * lambda^i, built up by right factors
  for (Index i = 0; i <= k; ++i) {
    if (i > 0)
      for (Quaterniond& q : cur) q = q * lam;
    if (i == k) {
      for (Index r = 0; r < n; ++r) acc[static_cast<std::size_t>(r)] += cur[static_cast<std::size_t>(r)];
    } else {
      const QMatrix& a = p.coeff(i);
      for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < n; ++c)
          acc[static_cast<std::size_t>(r)] += a(r, c) * cur[static_cast<std::size_t>(c)];
    }
  }
  double s = 0.0;
  for (const Quaterniond& q : acc) s += abs2(q);
  return std::sqrt(s);
}

std::vector<PolynomialEigenpair> polynomial_eigenpairs(const MatrixPolynomial& p) {
  const Index k = p.degree(), n = p.block_size();
  const CompanionMatrix comp = build_companion(p);
  const CMatrix chi = complex_adjoint(comp.matrix);
  const double norm2 = spectral_norm(chi);
  const double tol = 1e-8 * std::max(1.0, chi.norm());
  const std::vector<std::complex<double>> reps = pair_conjugates(complex_eigenvalues(chi), tol);

  std::vector<PolynomialEigenpair> pairs;
  pairs.reserve(reps.size());
  const Index kn = k * n;
  for (const std::complex<double>& lambda : reps) {
    const Eigen::VectorXcd v = complex_eigenvector(chi, lambda, norm2);
    // Adjoint eigenvector (u; w) maps back to the quaternionic eigenvector
    // with entries u_t - conj(w_t) * j.
    std::vector<Quaterniond> head(static_cast<std::size_t>(n));
    double head_norm2 = 0.0;
    for (Index t = 0; t < n; ++t) {
      const std::complex<double> u = v(t);
      const std::complex<double> w = v(t + kn);
      const Quaterniond q{u.real(), u.imag(), -w.real(), w.imag()};
      head[static_cast<std::size_t>(t)] = q;
      head_norm2 += abs2(q);
    }
    // A companion eigenvector determines its leading block up to right powers
    // of lambda; it cannot vanish unless the whole vector does.
    if (!(head_norm2 > 1e-60))
      throw NumericalError("polynomial_eigenpairs: vanishing leading block in companion "
                           "eigenvector");
    const double inv = 1.0 / std::sqrt(head_norm2);
    for (Quaterniond& q : head) q *= inv;
    pairs.push_back({lambda, head, polynomial_residual(p, head, lambda)});
  }
  return pairs;
}

}  // namespace qpb
