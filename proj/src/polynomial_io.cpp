#include "qpb/polynomial_io.hpp"

#include <fstream>
#include <utility>

#include "qpb/errors.hpp"

namespace qpb {

namespace {

using nlohmann::json;

Quaterniond entry_from_json(const json& e, const std::string& where) {
  if (!e.is_array() || e.size() != 4)
    throw ParseError(where + ": entry must be a [w, x, y, z] quadruple");
  for (const json& c : e)
    if (!c.is_number()) throw ParseError(where + ": non-numeric component");
  return {e[0].get<double>(), e[1].get<double>(), e[2].get<double>(), e[3].get<double>()};
}

QMatrix coeff_from_json(const json& a, Index n, const std::string& where) {
  if (!a.is_array() || static_cast<Index>(a.size()) != n)
    throw ShapeError(where + ": expected " + std::to_string(n) + " rows");
  QMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const json& row = a[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw ShapeError(where + ": expected " + std::to_string(n) + " entries per row");
    for (Index j = 0; j < n; ++j)
      m(i, j) = entry_from_json(row[static_cast<std::size_t>(j)],
                                where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return m;
}

Index positive_int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("missing or non-integer \"") + key + "\" field");
  return j[key].get<Index>();
}

}  // namespace

nlohmann::ordered_json polynomial_to_json(const MatrixPolynomial& p) {
  nlohmann::ordered_json j;
  j["n"] = p.block_size();
  j["k"] = p.degree();
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const QMatrix& a : p.coeffs()) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Index i = 0; i < a.rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Index jj = 0; jj < a.cols(); ++jj) {
        const Quaterniond& q = a(i, jj);
        row.push_back({q.w, q.x, q.y, q.z});
      }
      rows.push_back(std::move(row));
    }
    coeffs.push_back(std::move(rows));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

MatrixPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("polynomial document must be a JSON object");
  const Index n = positive_int_field(j, "n");
  const Index k = positive_int_field(j, "k");
  if (k < 1) throw DegreeError("polynomial file: k = " + std::to_string(k) + ", need >= 1");
  if (n < 1) throw ShapeError("polynomial file: n = " + std::to_string(n) + ", need >= 1");
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("missing or non-array \"coeffs\" field");
  const json& coeffs = j["coeffs"];
  const Index count = static_cast<Index>(coeffs.size());
  if (count != k && count != k + 1)
    throw ShapeError("polynomial file: " + std::to_string(count) + " coefficients for k = " +
                     std::to_string(k));

  std::vector<QMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i)
    blocks.push_back(coeff_from_json(coeffs[static_cast<std::size_t>(i)], n,
                                     "coeffs[" + std::to_string(i) + "]"));
  if (count == k + 1) {
    const QMatrix lead =
        coeff_from_json(coeffs[static_cast<std::size_t>(k)], n, "leading coefficient");
    if (!(lead == QMatrix::Identity(n)))
      throw MonicityError("explicit leading coefficient is not the identity");
  }
  return MatrixPolynomial(std::move(blocks));
}

MatrixPolynomial load_polynomial(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return polynomial_from_json(j);
}

void save_polynomial(const std::string& path, const MatrixPolynomial& p) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << polynomial_to_json(p).dump(2) << "\n";
  if (!out) throw IoError("write failed for " + path);
}

std::vector<Quaterniond> scalar_coeffs_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("scalar document needs a \"coeffs\" array");
  const json& coeffs = j["coeffs"];
  if (coeffs.empty()) throw DegreeError("scalar file: empty coefficient list");
  std::vector<Quaterniond> out;
  out.reserve(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    out.push_back(entry_from_json(coeffs[i], "coeffs[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Quaterniond> load_scalar_coeffs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return scalar_coeffs_from_json(j);
}

}  // namespace qpb
