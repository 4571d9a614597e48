#include "qpb/complex_kernel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <cmath>
#include <limits>
#include <string>

#include "qpb/errors.hpp"

namespace qpb {

namespace {

void check_square_capped(const CMatrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw ShapeError(std::string(who) + ": matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", need square");
  if (m.rows() > kMaxComplexDim)
    throw ParameterError(std::string(who) + ": dimension " + std::to_string(m.rows()) +
                         " exceeds cap " + std::to_string(kMaxComplexDim));
}

}  // namespace

std::vector<std::complex<double>> complex_eigenvalues(const CMatrix& m) {
  check_square_capped(m, "complex_eigenvalues");
  if (m.rows() == 0) return {};

  Eigen::ComplexSchur<CMatrix> schur(m, /*computeU=*/false);
  const Eigen::VectorXcd diag = schur.matrixT().diagonal();
  std::vector<std::complex<double>> values(diag.data(), diag.data() + diag.size());
  if (schur.info() != Eigen::Success)
    throw ConvergenceError("complex_eigenvalues: Schur iteration did not converge",
                           std::move(values));
  return values;
}

double spectral_norm(const CMatrix& m) {
  if (m.rows() > kMaxComplexDim || m.cols() > kMaxComplexDim)
    throw ParameterError("spectral_norm: dimension exceeds cap " +
                         std::to_string(kMaxComplexDim));
  if (m.size() == 0) return 0.0;

  // Gram route: squaring the condition number is harmless for sigma_max,
  // which is all anyone downstream consumes.
  const CMatrix gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw ConvergenceError("spectral_norm: Hermitian eigensolver did not converge");
  const double top = es.eigenvalues()(es.eigenvalues().size() - 1);
  return std::sqrt(std::max(0.0, top));
}

Eigen::VectorXcd complex_eigenvector(const CMatrix& m, std::complex<double> lambda,
                                     double norm2_hint) {
  check_square_capped(m, "complex_eigenvector");
  const Index d = m.rows();
  if (d == 0) throw ShapeError("complex_eigenvector: empty matrix");

  const double nrm = norm2_hint >= 0.0 ? norm2_hint : spectral_norm(m);
  const double accept = 1e-8 * nrm;
  // Internal target well below the contract threshold: an early stop at the
  // contract edge would leak into downstream residuals with no headroom.
  const double target = 1e-13 * std::max(1.0, nrm);
  constexpr int kMaxSteps = 5;
  const double inf = std::numeric_limits<double>::infinity();

  // Runs inverse iteration at the given shift. Returns the best residual seen
  // (infinity signals an exactly singular factor or a blown-up solve).
  Eigen::VectorXcd best = Eigen::VectorXcd::Zero(d);
  auto run = [&](std::complex<double> shift) -> double {
    Eigen::PartialPivLU<CMatrix> lu(m - shift * CMatrix::Identity(d, d));
    if (lu.matrixLU().diagonal().cwiseAbs().minCoeff() == 0.0) return inf;
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(d) / std::sqrt(double(d));
    double best_res = inf;
    for (int step = 0; step < kMaxSteps; ++step) {
      Eigen::VectorXcd w = lu.solve(v);
      const double wn = w.norm();
      if (!std::isfinite(wn) || wn == 0.0) return best_res;
      v = w / wn;
      const double res = (m * v - lambda * v).norm();
      if (res < best_res) {
        best_res = res;
        best = v;
      }
      if (res <= target) break;
    }
    return best_res;
  };

  double res = run(lambda);
  // Exactly singular shift: lambda hit an eigenvalue dead on. Nudge off it.
  if (res == inf) res = run(lambda + 1e-10);
  if (!(res <= accept))
    throw ConvergenceError("complex_eigenvector: residual " + std::to_string(res) +
                           " above threshold after " + std::to_string(kMaxSteps) + " steps",
                           {lambda});

  // Fix the free phase: largest-modulus component (first among ties) made
  // real positive.
  Index pivot = 0;
  double pivot_abs = 0.0;
  for (Index i = 0; i < d; ++i) {
    const double a = std::abs(best(i));
    if (a > pivot_abs) {
      pivot_abs = a;
      pivot = i;
    }
  }
  if (pivot_abs > 0.0) best *= std::conj(best(pivot)) / pivot_abs;
  return best;
}

}  // namespace qpb
