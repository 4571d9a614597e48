#include "qpb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "qpb/errors.hpp"
#include "qpb/polynomial_io.hpp"
#include "qpb/random_polynomial.hpp"

namespace qpb {

namespace {

std::size_t bound_slot(BoundName name) {
  for (std::size_t i = 0; i < kRowBounds.size(); ++i)
    if (kRowBounds[i] == name) return i;
  throw ParameterError(std::string("no row slot for bound ") + to_string(name));
}

std::string format_ms(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

VerificationRow verify_instance(const MatrixPolynomial& p, double tol) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRow row;
  row.k = p.degree();
  row.n = p.block_size();

  try {
    row.rho_r = polynomial_right_spectrum(p).radius;
    row.have_radius = true;
  } catch (const Error& e) {
    row.solver_error = e.what();
  }

  const BoundSet set = all_bounds(p);
  row.tightest = set.tightest;
  for (const BoundReport& r : set.reports) {
    BoundOutcome& out = row.bounds[bound_slot(r.name)];
    out.computed = r.computed;
    out.skip_reason = r.skip_reason;
    if (!r.computed) continue;
    out.value = r.value;
    if (row.have_radius) {
      out.slack = r.value - row.rho_r;
      if (row.rho_r > r.value + tol * std::max(1.0, r.value))
        row.violations.emplace_back(to_string(r.name));
    }
  }

  row.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

double resolve_tolerance(std::optional<double> configured) {
  if (const char* env = std::getenv("QBOUND_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
      throw ParameterError(std::string("QBOUND_TOL=\"") + env +
                           "\" is not a positive number");
    return v;
  }
  if (configured) {
    if (!(*configured > 0.0) || !std::isfinite(*configured))
      throw ParameterError("configured tolerance must be a positive number");
    return *configured;
  }
  return 1e-8;
}

SuiteConfig load_suite_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(path + ": suite config must be a JSON object");

  SuiteConfig config;
  if (j.contains("random")) {
    const nlohmann::json& r = j["random"];
    SuiteConfig::RandomSweep sweep;
    if (!r.is_object() || !r.contains("seeds") || !r["seeds"].is_object())
      throw ParseError(path + ": \"random\" needs a \"seeds\" object");
    sweep.seed_start = r["seeds"].value("start", std::uint64_t{0});
    if (!r["seeds"].contains("count")) throw ParseError(path + ": \"seeds\" needs a count");
    sweep.seed_count = r["seeds"]["count"].get<std::uint64_t>();
    if (!r.contains("k") || !r["k"].is_array() || r["k"].empty())
      throw ParseError(path + ": \"random\" needs a nonempty \"k\" array");
    if (!r.contains("n") || !r["n"].is_array() || r["n"].empty())
      throw ParseError(path + ": \"random\" needs a nonempty \"n\" array");
    for (const auto& v : r["k"]) sweep.k_values.push_back(v.get<Index>());
    for (const auto& v : r["n"]) sweep.n_values.push_back(v.get<Index>());
    sweep.scale = r.value("scale", 1.0);
    config.random = std::move(sweep);
  }
  if (j.contains("files")) {
    if (!j["files"].is_array()) throw ParseError(path + ": \"files\" must be an array");
    for (const auto& f : j["files"]) config.files.push_back(f.get<std::string>());
  }
  if (j.contains("tolerance")) config.tolerance = j["tolerance"].get<double>();
  return config;
}

SuiteResult run_suite(const SuiteConfig& config, double tol) {
  SuiteResult result;
  result.tolerance = tol;

  for (std::size_t i = 0; i < config.files.size(); ++i) {
    const std::string& path = config.files[i];
    const MatrixPolynomial p = load_polynomial(path);
    VerificationRow row = verify_instance(p, tol);
    char prefix[16];
    std::snprintf(prefix, sizeof prefix, "f%04zu_", i);
    row.id = prefix + std::filesystem::path(path).stem().string();
    result.rows.push_back(std::move(row));
  }
  if (config.random) {
    const SuiteConfig::RandomSweep& sweep = *config.random;
    const std::size_t nk = sweep.k_values.size(), nn = sweep.n_values.size();
    for (std::uint64_t s = sweep.seed_start; s < sweep.seed_start + sweep.seed_count; ++s) {
      const Index k = sweep.k_values[static_cast<std::size_t>(s % nk)];
      const Index n = sweep.n_values[static_cast<std::size_t>((s / nk) % nn)];
      VerificationRow row = verify_instance(random_polynomial(k, n, s, sweep.scale), tol);
      char id[64];
      std::snprintf(id, sizeof id, "s%04llu_k%lld_n%lld", static_cast<unsigned long long>(s),
                    static_cast<long long>(k), static_cast<long long>(n));
      row.id = id;
      result.rows.push_back(std::move(row));
    }
  }

  for (const VerificationRow& row : result.rows) {
    result.violation_count += static_cast<int>(row.violations.size());
    if (!row.solver_error.empty()) ++result.solver_error_count;
  }
  return result;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string render_csv(const std::vector<VerificationRow>& rows) {
  std::string out =
      "id,k,n,rho_r,thm35,thm36,thm37,b1,tightest,slack_thm35,slack_thm36,slack_thm37,"
      "slack_b1,elapsed_ms\n";
  for (const VerificationRow& row : rows) {
    out += row.id;
    out += ',';
    out += std::to_string(row.k);
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += row.have_radius ? format_double(row.rho_r) : "NA";
    for (const BoundOutcome& b : row.bounds) {
      out += ',';
      out += b.computed ? format_double(b.value) : "NA";
    }
    out += ',';
    out += row.tightest ? to_string(*row.tightest) : "NA";
    for (const BoundOutcome& b : row.bounds) {
      out += ',';
      out += (b.computed && row.have_radius) ? format_double(b.slack) : "NA";
    }
    out += ',';
    out += format_ms(row.elapsed_ms);
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json row_to_json(const VerificationRow& row) {
  nlohmann::ordered_json j;
  j["id"] = row.id;
  j["k"] = row.k;
  j["n"] = row.n;
  if (row.have_radius)
    j["rho_r"] = row.rho_r;
  else
    j["rho_r"] = nullptr;
  nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < kRowBounds.size(); ++i) {
    const BoundOutcome& b = row.bounds[i];
    nlohmann::ordered_json e;
    if (b.computed) {
      e["value"] = b.value;
      if (row.have_radius) e["slack"] = b.slack;
    } else {
      e["skipped"] = b.skip_reason;
    }
    bounds[to_string(kRowBounds[i])] = std::move(e);
  }
  j["bounds"] = std::move(bounds);
  j["tightest"] = row.tightest ? nlohmann::ordered_json(to_string(*row.tightest))
                               : nlohmann::ordered_json(nullptr);
  j["violations"] = row.violations;
  if (!row.solver_error.empty()) j["solver_error"] = row.solver_error;
  j["elapsed_ms"] = row.elapsed_ms;
  return j;
}

nlohmann::ordered_json suite_summary(const SuiteResult& result) {
  nlohmann::ordered_json j;
  j["instances"] = result.rows.size();
  j["violations"] = result.violation_count;
  j["solver_errors"] = result.solver_error_count;
  j["tolerance"] = result.tolerance;

  std::size_t rows_with_tightest = 0;
  for (const VerificationRow& row : result.rows)
    if (row.tightest) ++rows_with_tightest;

  nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < kRowBounds.size(); ++i) {
    std::vector<double> slacks;
    std::size_t computed = 0, wins = 0;
    for (const VerificationRow& row : result.rows) {
      const BoundOutcome& b = row.bounds[i];
      if (b.computed) {
        ++computed;
        if (row.have_radius) slacks.push_back(b.slack);
      }
      if (row.tightest && *row.tightest == kRowBounds[i]) ++wins;
    }
    nlohmann::ordered_json e;
    e["computed"] = computed;
    e["wins"] = wins;
    e["win_rate"] =
        rows_with_tightest == 0 ? 0.0 : static_cast<double>(wins) / static_cast<double>(rows_with_tightest);
    if (slacks.empty()) {
      e["mean_slack"] = nullptr;
      e["median_slack"] = nullptr;
    } else {
      double sum = 0.0;
      for (double s : slacks) sum += s;
      e["mean_slack"] = sum / static_cast<double>(slacks.size());
      std::sort(slacks.begin(), slacks.end());
      const std::size_t mid = slacks.size() / 2;
      e["median_slack"] =
          slacks.size() % 2 == 1 ? slacks[mid] : 0.5 * (slacks[mid - 1] + slacks[mid]);
    }
    bounds[to_string(kRowBounds[i])] = std::move(e);
  }
  j["bounds"] = std::move(bounds);
  return j;
}

void write_suite_outputs(const SuiteResult& result, const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());

  const std::string csv_path = out_dir + "/results.csv";
  std::ofstream csv(csv_path);
  if (!csv) throw IoError("cannot write " + csv_path);
  csv << render_csv(result.rows);
  if (!csv) throw IoError("write failed for " + csv_path);

  const std::string summary_path = out_dir + "/summary.json";
  std::ofstream summary(summary_path);
  if (!summary) throw IoError("cannot write " + summary_path);
  summary << suite_summary(result).dump(2) << "\n";
  if (!summary) throw IoError("write failed for " + summary_path);
}

}  // namespace qpb
