#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qpb/companion.hpp"
#include "qpb/quaternion.hpp"

namespace qpb {

// Polynomial file schema:
//   {"n": int, "k": int, "coeffs": [A_0, ..., A_{k-1}]}
// where each A_i is n rows of n entries and each entry is [w, x, y, z].
// A k+1-th coefficient may be present but must be exactly the identity
// (the type is monic-only); anything else is a MonicityError.
// Serialization round-trips doubles exactly.
nlohmann::ordered_json polynomial_to_json(const MatrixPolynomial& p);
MatrixPolynomial polynomial_from_json(const nlohmann::json& j);

MatrixPolynomial load_polynomial(const std::string& path);
void save_polynomial(const std::string& path, const MatrixPolynomial& p);

// Scalar coefficient file schema, for the zeros workflow:
//   {"coeffs": [[w, x, y, z], ...]}   (a_0 .. a_{k-1}, monic implied)
std::vector<Quaterniond> scalar_coeffs_from_json(const nlohmann::json& j);
std::vector<Quaterniond> load_scalar_coeffs(const std::string& path);

}  // namespace qpb
