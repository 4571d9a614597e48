#include "qpb/random_polynomial.hpp"

#include <string>
#include <vector>

#include "qpb/errors.hpp"

namespace qpb {

MatrixPolynomial random_polynomial(Index k, Index n, std::uint64_t seed, double scale) {
  if (k < 1) throw ParameterError("random_polynomial: degree " + std::to_string(k) + ", need >= 1");
  if (n < 1)
    throw ParameterError("random_polynomial: block size " + std::to_string(n) + ", need >= 1");
  if (!(scale > 0.0))
    throw ParameterError("random_polynomial: scale " + std::to_string(scale) + ", need > 0");

  SplitMix64 rng(seed);
  std::vector<QMatrix> coeffs;
  coeffs.reserve(static_cast<std::size_t>(k));
  for (Index c = 0; c < k; ++c) {
    QMatrix a(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const double w = rng.uniform(-scale, scale);
        const double x = rng.uniform(-scale, scale);
        const double y = rng.uniform(-scale, scale);
        const double z = rng.uniform(-scale, scale);
        a(i, j) = {w, x, y, z};
      }
    coeffs.push_back(std::move(a));
  }
  return MatrixPolynomial(std::move(coeffs));
}

}  // namespace qpb
