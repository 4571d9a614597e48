#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpb/companion.hpp"
#include "qpb/quaternion.hpp"

namespace qpb {

// Labels are this artifact's stable external vocabulary: they appear as CLI
// flags, CSV columns, and JSON keys, so they never change spelling.
enum class BoundName {
  lemma33,
  lemma34,
  thm35,
  thm36,
  thm37,
  b1,
  cor35_scalar,
  cor36_scalar,
  cor37_scalar,
};

const char* to_string(BoundName name);

struct BoundReport {
  BoundName name;
  Index degree = 0;
  Index block_size = 0;
  bool computed = false;
  double value = 0.0;  // meaningful only when computed
  std::map<std::string, double> intermediates;
  std::string skip_reason;  // set exactly when not computed
};

// Square root with a defended discriminant: values in [-1e-12, 0) are
// roundoff and clamp to zero, anything lower is a real inconsistency and
// throws NumericalError.
double sqrt_clamped(double disc);

// Upper bound on the squared spectral norm of the first proof matrix
// (top-left block of the squared companion). Degree >= 3.
BoundReport lemma33_value(const MatrixPolynomial& p);

// Same for the second proof matrix (cubed companion). Degree >= 4; the
// nonnegativity of the discriminant is only guaranteed from degree 5 up,
// below that the clamp rule decides.
BoundReport lemma34_value(const MatrixPolynomial& p);

// Spectral radius bounds on the right eigenvalues of the polynomial. Every
// right eigenvalue lambda satisfies |lambda| <= value.
BoundReport thm35_bound(const MatrixPolynomial& p);  // degree >= 4, square root route
BoundReport thm36_bound(const MatrixPolynomial& p);  // degree >= 4, fourth root route
BoundReport thm37_bound(const MatrixPolynomial& p);  // degree >= 5, cube root route
BoundReport b1_bound(const MatrixPolynomial& p);     // degree >= 2, baseline

// The four radius bounds with per-bound skip reasons instead of exceptions,
// plus which computed bound is smallest (ties go to the earlier name in the
// fixed order thm35, thm36, thm37, b1).
struct BoundSet {
  std::vector<BoundReport> reports;
  std::optional<BoundName> tightest;
};

BoundSet all_bounds(const MatrixPolynomial& p);

// Scalar polynomial bounds: the same computation on the 1x1 matrix embedding,
// reported under the scalar label. which must be one of the cor*_scalar
// names.
BoundReport scalar_bound(const std::vector<Quaterniond>& coeffs, BoundName which);

}  // namespace qpb
