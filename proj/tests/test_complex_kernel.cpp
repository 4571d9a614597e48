#include <doctest.h>

#include <Eigen/LU>

#include <cmath>
#include <complex>
#include <vector>

#include "qpb/complex_kernel.hpp"
#include "qpb/errors.hpp"
#include "test_support.hpp"

using qpb::CMatrix;
using qpb::Index;
using qpb::SplitMix64;

namespace {

CMatrix random_cmatrix(SplitMix64& rng, Index d) {
  CMatrix m(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      m(i, j) = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return m;
}

}  // namespace

TEST_CASE("eigenvalues of small fixed matrices") {
  CMatrix rot(2, 2);
  rot << std::complex<double>(0, 0), std::complex<double>(1, 0), std::complex<double>(-1, 0),
      std::complex<double>(0, 0);
  CHECK(qt::same_spectrum(qpb::complex_eigenvalues(rot),
                          {{0.0, 1.0}, {0.0, -1.0}}, 1e-12));

  CMatrix diag = CMatrix::Zero(2, 2);
  diag(0, 0) = {2.0, 0.0};
  diag(1, 1) = {0.0, 3.0};
  CHECK(qt::same_spectrum(qpb::complex_eigenvalues(diag), {{2.0, 0.0}, {0.0, 3.0}}, 1e-12));

  CHECK(qpb::complex_eigenvalues(CMatrix(0, 0)).empty());
}

TEST_CASE("eigenvalue shape and cap errors") {
  CHECK_THROWS_AS((void)qpb::complex_eigenvalues(CMatrix(2, 3)), qpb::ShapeError);
  CHECK_THROWS_AS((void)qpb::complex_eigenvalues(CMatrix::Zero(513, 513)), qpb::ParameterError);
  CHECK_THROWS_AS((void)qpb::spectral_norm(CMatrix::Zero(513, 2)), qpb::ParameterError);
}

TEST_CASE("eigenvalue sums match the trace") {
  SplitMix64 rng(59);
  for (int t = 0; t < 20; ++t) {
    const CMatrix m = random_cmatrix(rng, 8);
    std::complex<double> sum = 0.0;
    for (const auto& v : qpb::complex_eigenvalues(m)) sum += v;
    CHECK(std::abs(sum - m.trace()) <= 1e-9 * std::max(1.0, m.norm()));
  }
}

TEST_CASE("eigenvalue products match the LU determinant") {
  SplitMix64 rng(61);
  for (int t = 0; t < 10; ++t) {
    const Index d = 2 + static_cast<Index>(rng.next() % 11);  // up to 12
    const CMatrix m = random_cmatrix(rng, d);
    std::complex<double> prod = 1.0;
    for (const auto& v : qpb::complex_eigenvalues(m)) prod *= v;
    const std::complex<double> det = Eigen::PartialPivLU<CMatrix>(m).determinant();
    CHECK(std::abs(prod - det) <= 1e-8 * std::max(1.0, std::abs(det)));
  }
}

TEST_CASE("spectral norm on fixed matrices") {
  CHECK(qpb::spectral_norm(CMatrix::Identity(3, 3)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(qpb::spectral_norm(CMatrix::Zero(4, 2)) == 0.0);
  CHECK(qpb::spectral_norm(CMatrix(0, 0)) == 0.0);

  CMatrix diag = CMatrix::Zero(2, 2);
  diag(0, 0) = {3.0, 0.0};
  diag(1, 1) = {0.0, -4.0};
  CHECK(qpb::spectral_norm(diag) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("spectral norm dominated by frobenius and consistent with the gram spectrum") {
  SplitMix64 rng(67);
  for (int t = 0; t < 10; ++t) {
    const CMatrix m = random_cmatrix(rng, 6);
    const double s = qpb::spectral_norm(m);
    CHECK(s <= m.norm() + 1e-12);

    // Dual route: top Gram eigenvalue through the general eigensolver.
    double top = 0.0;
    for (const auto& v : qpb::complex_eigenvalues(CMatrix(m.adjoint() * m)))
      top = std::max(top, v.real());
    CHECK(qt::close_rel(s * s, top, 1e-10));
  }
}

TEST_CASE("spectral norm of rectangular input") {
  SplitMix64 rng(71);
  CMatrix m(3, 5);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 5; ++j) m(i, j) = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  const double s = qpb::spectral_norm(m);
  const double st = qpb::spectral_norm(CMatrix(m.adjoint()));
  CHECK(qt::close_rel(s, st, 1e-12));
}

TEST_CASE("eigenvector for fixed eigenvalues") {
  CMatrix diag = CMatrix::Zero(2, 2);
  diag(0, 0) = 1.0;
  diag(1, 1) = 2.0;
  const Eigen::VectorXcd v = qpb::complex_eigenvector(diag, 2.0);
  CHECK(std::abs(v(0)) <= 1e-10);
  CHECK(std::abs(std::abs(v(1)) - 1.0) <= 1e-12);
  // Phase convention: dominant component real positive.
  CHECK(v(1).real() > 0.0);
  CHECK(std::abs(v(1).imag()) <= 1e-12);

  CMatrix rot(2, 2);
  rot << std::complex<double>(0, 0), std::complex<double>(1, 0), std::complex<double>(-1, 0),
      std::complex<double>(0, 0);
  const Eigen::VectorXcd w = qpb::complex_eigenvector(rot, {0.0, 1.0});
  CHECK((rot * w - std::complex<double>(0.0, 1.0) * w).norm() <= 1e-12);
}

TEST_CASE("eigenvector survives an exactly singular shift") {
  CMatrix diag = CMatrix::Zero(2, 2);
  diag(0, 0) = 1.0;
  diag(1, 1) = 3.0;
  const Eigen::VectorXcd v = qpb::complex_eigenvector(diag, 1.0);
  CHECK((diag * v - v).norm() <= 1e-8 * 3.0);
}

TEST_CASE("eigenvector residuals on random matrices") {
  SplitMix64 rng(73);
  for (int t = 0; t < 10; ++t) {
    const CMatrix m = random_cmatrix(rng, 6);
    const double nrm = qpb::spectral_norm(m);
    const auto values = qpb::complex_eigenvalues(m);
    const Eigen::VectorXcd v = qpb::complex_eigenvector(m, values.front(), nrm);
    CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
    CHECK((m * v - values.front() * v).norm() <= 1e-8 * nrm);
  }
}

TEST_CASE("eigenvector is deterministic") {
  SplitMix64 rng(79);
  const CMatrix m = random_cmatrix(rng, 5);
  const auto values = qpb::complex_eigenvalues(m);
  const Eigen::VectorXcd a = qpb::complex_eigenvector(m, values[1]);
  const Eigen::VectorXcd b = qpb::complex_eigenvector(m, values[1]);
  CHECK(a == b);
}
