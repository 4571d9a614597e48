#include "qpb/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpb/errors.hpp"

namespace qpb {

bool spectrum_order(const std::complex<double>& a, const std::complex<double>& b) {
  const double ma = std::abs(a), mb = std::abs(b);
  if (ma != mb) return ma > mb;
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

std::vector<std::complex<double>> pair_conjugates(std::vector<std::complex<double>> values,
                                                  double tol) {
  if (values.size() % 2 != 0)
    throw NumericalError("pair_conjugates: odd eigenvalue count " +
                         std::to_string(values.size()));
  std::sort(values.begin(), values.end(), spectrum_order);

  std::vector<std::complex<double>> reps;
  reps.reserve(values.size() / 2);
  std::vector<bool> used(values.size(), false);
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (used[a]) continue;
    used[a] = true;
    const std::complex<double> want = std::conj(values[a]);
    std::size_t best = values.size();
    double best_dist = 0.0;
    for (std::size_t b = a + 1; b < values.size(); ++b) {
      if (used[b]) continue;
      const double dist = std::abs(values[b] - want);
      if (best == values.size() || dist < best_dist) {
        best = b;
        best_dist = dist;
      }
    }
    if (best == values.size() || best_dist > tol)
      throw NumericalError("pair_conjugates: no conjugate partner within tolerance for (" +
                           std::to_string(values[a].real()) + ", " +
                           std::to_string(values[a].imag()) + ")");
    used[best] = true;
    // The pair is (v, ~conj(v)); average out the roundoff asymmetry. The
    // imaginary parts have opposite signs, so the half-gap is the canonical
    // nonnegative imaginary part.
    const std::complex<double>& v = values[a];
    const std::complex<double>& w = values[best];
    reps.emplace_back((v.real() + w.real()) / 2.0, std::abs(v.imag() - w.imag()) / 2.0);
  }
  std::sort(reps.begin(), reps.end(), spectrum_order);
  return reps;
}

RightSpectrum right_spectrum(const QMatrix& a) {
  if (a.rows() != a.cols())
    throw ShapeError("right_spectrum: matrix is " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + ", need square");
  const CMatrix chi = complex_adjoint(a);
  const double tol = 1e-8 * std::max(1.0, chi.norm());

  RightSpectrum out;
  out.adjoint_dimension = chi.rows();
  out.representatives = pair_conjugates(complex_eigenvalues(chi), tol);
  out.radius = out.representatives.empty() ? 0.0 : std::abs(out.representatives.front());
  return out;
}

double right_spectral_radius(const QMatrix& a) { return right_spectrum(a).radius; }

double spectral_norm(const QMatrix& a) { return spectral_norm(complex_adjoint(a)); }

Eigen::Matrix2d partition_majorant(const QMatrix& a, Index split_row, Index split_col) {
  if (a.rows() != a.cols())
    throw ShapeError("partition_majorant: matrix is " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + ", need square");
  const Index n = a.rows();
  if (split_row < 1 || split_row >= n || split_col < 1 || split_col >= n)
    throw ShapeError("partition_majorant: split (" + std::to_string(split_row) + ", " +
                     std::to_string(split_col) + ") outside 1.." + std::to_string(n - 1));

  Eigen::Matrix2d m;
  m(0, 0) = spectral_norm(block(a, 0, 0, split_row, split_col));
  m(0, 1) = spectral_norm(block(a, 0, split_col, split_row, n - split_col));
  m(1, 0) = spectral_norm(block(a, split_row, 0, n - split_row, split_col));
  m(1, 1) = spectral_norm(block(a, split_row, split_col, n - split_row, n - split_col));
  return m;
}

}  // namespace qpb
