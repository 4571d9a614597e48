#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpb/bounds.hpp"
#include "qpb/companion.hpp"

namespace qpb {

// The four radius bounds a verification row tracks, in column order.
inline constexpr std::array<BoundName, 4> kRowBounds{BoundName::thm35, BoundName::thm36,
                                                     BoundName::thm37, BoundName::b1};

struct BoundOutcome {
  bool computed = false;
  double value = 0.0;
  double slack = 0.0;  // value - rho_r; meaningful when computed and rho_r known
  std::string skip_reason;
};

struct VerificationRow {
  std::string id;
  Index k = 0;
  Index n = 0;
  bool have_radius = false;
  double rho_r = 0.0;
  std::array<BoundOutcome, 4> bounds;  // kRowBounds order
  std::optional<BoundName> tightest;
  std::vector<std::string> violations;  // labels of bounds the radius exceeded
  std::string solver_error;             // nonempty if the spectrum computation failed
  double elapsed_ms = 0.0;
};

// A bound fails verification when rho_r > value + tol * max(1, value).
// Solver failures land in solver_error rather than being thrown.
VerificationRow verify_instance(const MatrixPolynomial& p, double tol);

// Effective verification slack: QBOUND_TOL env var wins, then the explicit
// setting, then 1e-8. A QBOUND_TOL that does not parse as a positive number
// throws ParameterError: a typo'd tolerance must not silently become the
// default and fake a clean run.
double resolve_tolerance(std::optional<double> configured);

// Suite configuration (see README for the JSON schema): an optional seeded
// random sweep plus optional explicit files.
struct SuiteConfig {
  struct RandomSweep {
    std::uint64_t seed_start = 0;
    std::uint64_t seed_count = 0;
    std::vector<Index> k_values;
    std::vector<Index> n_values;
    double scale = 1.0;
  };
  std::optional<RandomSweep> random;
  std::vector<std::string> files;
  std::optional<double> tolerance;
};

SuiteConfig load_suite_config(const std::string& path);

struct SuiteResult {
  std::vector<VerificationRow> rows;
  double tolerance = 0.0;
  int violation_count = 0;
  int solver_error_count = 0;
};

// Runs every instance in the config. Instance ids (f%04d_<stem> for files,
// s%04d_k<k>_n<n> for seeds) are zero-padded so lexicographic order equals
// generation order; rows come back already in that order.
// The random sweep derives per-seed shapes as k = k_values[s mod |k|],
// n = n_values[(s / |k|) mod |n|].
SuiteResult run_suite(const SuiteConfig& config, double tol);

// Fixed-format rendering shared by the CLI and the golden files. All numeric
// fields are reproducible bit-for-bit across runs; elapsed_ms (the final CSV
// column) is wall time and is exempt from the byte-identity guarantee.
std::string format_double(double v);
std::string render_csv(const std::vector<VerificationRow>& rows);
nlohmann::ordered_json row_to_json(const VerificationRow& row);
nlohmann::ordered_json suite_summary(const SuiteResult& result);

// Writes results.csv and summary.json under out_dir, creating it if needed.
void write_suite_outputs(const SuiteResult& result, const std::string& out_dir);

}  // namespace qpb
