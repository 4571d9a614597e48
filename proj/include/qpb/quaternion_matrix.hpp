#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qpb/errors.hpp"
#include "qpb/quaternion.hpp"

namespace qpb {

using Index = Eigen::Index;

// Dense quaternionic matrix, row-major. Deliberately not an Eigen matrix of
// quaternion scalars: Eigen's product kernels give no operand-order guarantee
// for a non-commutative scalar, and a flipped Hamilton product would be
// invisible until the bounds go quietly wrong. Products here spell out the
// left-to-right order.
template <typename T = double>
class QuaternionMatrix {
 public:
  QuaternionMatrix() = default;
  QuaternionMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    data_.resize(static_cast<std::size_t>(rows * cols));
  }

  static QuaternionMatrix Zero(Index rows, Index cols) { return {rows, cols}; }

  static QuaternionMatrix Identity(Index n) {
    QuaternionMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = Quaternion<T>(T(1));
    return m;
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

  Quaternion<T>& operator()(Index i, Index j) {
    return data_[static_cast<std::size_t>(i * cols_ + j)];
  }
  const Quaternion<T>& operator()(Index i, Index j) const {
    return data_[static_cast<std::size_t>(i * cols_ + j)];
  }

  friend bool operator==(const QuaternionMatrix& a, const QuaternionMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Quaternion<T>> data_;
};

using QMatrix = QuaternionMatrix<double>;

// Dense complex matrix carrier for everything the complex kernel touches.
using CMatrix = Eigen::MatrixXcd;

namespace detail {
inline std::string dim_str(Index r, Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}
}  // namespace detail

template <typename T>
QuaternionMatrix<T> operator+(const QuaternionMatrix<T>& a, const QuaternionMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("sum of " + detail::dim_str(a.rows(), a.cols()) + " and " +
                     detail::dim_str(b.rows(), b.cols()));
  QuaternionMatrix<T> s(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) s(i, j) = a(i, j) + b(i, j);
  return s;
}

template <typename T>
QuaternionMatrix<T> operator-(const QuaternionMatrix<T>& a, const QuaternionMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("difference of " + detail::dim_str(a.rows(), a.cols()) + " and " +
                     detail::dim_str(b.rows(), b.cols()));
  QuaternionMatrix<T> s(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) s(i, j) = a(i, j) - b(i, j);
  return s;
}

template <typename T>
QuaternionMatrix<T> operator-(const QuaternionMatrix<T>& a) {
  QuaternionMatrix<T> s(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) s(i, j) = -a(i, j);
  return s;
}

// (AB)_{ij} = sum_t A_{it} * B_{tj}, A factor on the left of every product.
template <typename T>
QuaternionMatrix<T> operator*(const QuaternionMatrix<T>& a, const QuaternionMatrix<T>& b) {
  if (a.cols() != b.rows())
    throw ShapeError("product of " + detail::dim_str(a.rows(), a.cols()) + " and " +
                     detail::dim_str(b.rows(), b.cols()));
  QuaternionMatrix<T> p(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index t = 0; t < a.cols(); ++t) {
      const Quaternion<T>& ait = a(i, t);
      if (ait == Quaternion<T>()) continue;
      for (Index j = 0; j < b.cols(); ++j) p(i, j) += ait * b(t, j);
    }
  return p;
}

template <typename T>
QuaternionMatrix<T> conj_transpose(const QuaternionMatrix<T>& a) {
  QuaternionMatrix<T> h(a.cols(), a.rows());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) h(j, i) = conj(a(i, j));
  return h;
}

// Max column sum of entry moduli.
template <typename T>
T norm_one(const QuaternionMatrix<T>& a) {
  T best = T(0);
  for (Index j = 0; j < a.cols(); ++j) {
    T s = T(0);
    for (Index i = 0; i < a.rows(); ++i) s += abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

// Max row sum of entry moduli.
template <typename T>
T norm_inf(const QuaternionMatrix<T>& a) {
  T best = T(0);
  for (Index i = 0; i < a.rows(); ++i) {
    T s = T(0);
    for (Index j = 0; j < a.cols(); ++j) s += abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

template <typename T>
T norm_frobenius(const QuaternionMatrix<T>& a) {
  T s = T(0);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) s += abs2(a(i, j));
  return std::sqrt(s);
}

// Complex adjoint of A = A1 + A2*j: [[A1, A2], [-conj(A2), conj(A1)]] with
// entrywise (not transposed) conjugates. A *-homomorphism, so spectra and
// spectral norms transfer; right eigenvalue representatives of A are ordinary
// eigenvalues of this matrix.
template <typename T>
Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic> complex_adjoint(
    const QuaternionMatrix<T>& a) {
  const Index m = a.rows(), n = a.cols();
  Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic> chi(2 * m, 2 * n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) {
      const std::complex<T> p1 = a(i, j).part1();
      const std::complex<T> p2 = a(i, j).part2();
      chi(i, j) = p1;
      chi(i, j + n) = p2;
      chi(i + m, j) = -std::conj(p2);
      chi(i + m, j + n) = std::conj(p1);
    }
  return chi;
}

template <typename T>
QuaternionMatrix<T> block(const QuaternionMatrix<T>& a, Index row0, Index col0, Index nrows,
                          Index ncols) {
  if (row0 < 0 || col0 < 0 || nrows < 0 || ncols < 0 || row0 + nrows > a.rows() ||
      col0 + ncols > a.cols())
    throw ShapeError("block out of range");
  QuaternionMatrix<T> b(nrows, ncols);
  for (Index i = 0; i < nrows; ++i)
    for (Index j = 0; j < ncols; ++j) b(i, j) = a(row0 + i, col0 + j);
  return b;
}

template <typename T>
void set_block(QuaternionMatrix<T>& a, Index row0, Index col0, const QuaternionMatrix<T>& b) {
  if (row0 < 0 || col0 < 0 || row0 + b.rows() > a.rows() || col0 + b.cols() > a.cols())
    throw ShapeError("block out of range");
  for (Index i = 0; i < b.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) a(row0 + i, col0 + j) = b(i, j);
}

}  // namespace qpb
