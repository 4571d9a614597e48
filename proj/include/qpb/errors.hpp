#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qpb {

// Base for everything thrown by this library, so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension mismatch: non-square input, incompatible product shapes,
// inconsistent coefficient blocks, bad split indices.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Degree below the floor an operation needs (or zero where >= 1 is required).
class DegreeError : public Error {
 public:
  using Error::Error;
};

// Mathematically undefined request, e.g. inverting the zero quaternion.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Out-of-range or malformed argument: nonpositive sizes, zero scale,
// dimension above the desk-scale cap, unparsable tolerance.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Matrix power other than the supported {2, 3}.
class UnsupportedPowerError : public Error {
 public:
  using Error::Error;
};

// Iterative kernel ran out of iterations. Carries whatever partial result the
// kernel had, so diagnostics can still look at it.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<std::complex<double>> partial)
      : Error(what), partial_(std::move(partial)) {}
  explicit ConvergenceError(const std::string& what) : Error(what) {}

  const std::vector<std::complex<double>>& partial() const { return partial_; }

 private:
  std::vector<std::complex<double>> partial_;
};

// Numerical consistency check failed: an eigenvalue with no conjugate partner,
// a discriminant more negative than roundoff can explain.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed input file (JSON syntax or schema).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Explicit leading coefficient that is not the identity.
class MonicityError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure: missing file, unwritable output.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpb
