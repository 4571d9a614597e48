#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpb/bounds.hpp"
#include "qpb/errors.hpp"
#include "qpb/polynomial_io.hpp"
#include "qpb/random_polynomial.hpp"
#include "qpb/verify.hpp"

namespace {

nlohmann::ordered_json report_to_json(const qpb::BoundReport& r) {
  nlohmann::ordered_json j;
  j["bound"] = qpb::to_string(r.name);
  j["k"] = r.degree;
  j["n"] = r.block_size;
  if (r.computed) {
    j["value"] = r.value;
    nlohmann::ordered_json inter = nlohmann::ordered_json::object();
    for (const auto& [key, v] : r.intermediates) inter[key] = v;
    j["intermediates"] = std::move(inter);
  } else {
    j["skipped"] = r.skip_reason;
  }
  return j;
}

std::vector<std::string> split_csv_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Right-eigenvalue bounds for monic quaternionic matrix polynomials"};
  app.require_subcommand(1);

  // bound
  std::string bound_file;
  std::string bound_selection;
  CLI::App* bound_cmd = app.add_subcommand("bound", "Radius bounds for a polynomial file");
  bound_cmd->add_option("file", bound_file, "Polynomial JSON file")->required();
  bound_cmd->add_option("--bounds", bound_selection,
                        "Comma-separated subset of thm35,thm36,thm37,b1 (default all)");

  // zeros
  std::string zeros_file;
  CLI::App* zeros_cmd = app.add_subcommand("zeros", "Zero-modulus bounds for a scalar polynomial");
  zeros_cmd->add_option("--coeffs", zeros_file, "Scalar coefficient JSON file")->required();

  // random
  std::int64_t rand_k = 0, rand_n = 0;
  std::uint64_t rand_seed = 0;
  double rand_scale = 1.0;
  std::string rand_out;
  CLI::App* random_cmd = app.add_subcommand("random", "Generate a seeded random polynomial");
  random_cmd->add_option("--k", rand_k, "Degree")->required();
  random_cmd->add_option("--n", rand_n, "Coefficient block size")->required();
  random_cmd->add_option("--seed", rand_seed, "Seed")->required();
  random_cmd->add_option("--scale", rand_scale, "Component range half-width (default 1)");
  random_cmd->add_option("--out", rand_out, "Output file (stdout when absent)");

  // verify
  std::string verify_file;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check every bound against the computed right spectrum");
  verify_cmd->add_option("file", verify_file, "Polynomial JSON file")->required();

  // suite
  std::string suite_config_path, suite_out_dir;
  CLI::App* suite_cmd = app.add_subcommand("suite", "Run a verification sweep");
  suite_cmd->add_option("--config", suite_config_path, "Suite config JSON file")->required();
  suite_cmd->add_option("--out-dir", suite_out_dir, "Directory for results.csv and summary.json")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (*bound_cmd) {
    const qpb::MatrixPolynomial p = qpb::load_polynomial(bound_file);
    std::vector<std::string> wanted = split_csv_list(bound_selection);
    if (wanted.empty()) wanted = {"thm35", "thm36", "thm37", "b1"};
    const qpb::BoundSet set = qpb::all_bounds(p);
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const std::string& name : wanted) {
      bool found = false;
      for (const qpb::BoundReport& r : set.reports)
        if (name == qpb::to_string(r.name)) {
          out.push_back(report_to_json(r));
          found = true;
          break;
        }
      if (!found)
        throw qpb::ParameterError("unknown bound \"" + name +
                                  "\", expected thm35, thm36, thm37, or b1");
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (*zeros_cmd) {
    const std::vector<qpb::Quaterniond> coeffs = qpb::load_scalar_coeffs(zeros_file);
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (qpb::BoundName which : {qpb::BoundName::cor35_scalar, qpb::BoundName::cor36_scalar,
                                 qpb::BoundName::cor37_scalar}) {
      try {
        out.push_back(report_to_json(qpb::scalar_bound(coeffs, which)));
      } catch (const qpb::DegreeError& e) {
        nlohmann::ordered_json j;
        j["bound"] = qpb::to_string(which);
        j["k"] = coeffs.size();
        j["n"] = 1;
        j["skipped"] = e.what();
        out.push_back(std::move(j));
      }
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (*random_cmd) {
    const qpb::MatrixPolynomial p =
        qpb::random_polynomial(rand_k, rand_n, rand_seed, rand_scale);
    if (rand_out.empty())
      std::cout << qpb::polynomial_to_json(p).dump(2) << "\n";
    else
      qpb::save_polynomial(rand_out, p);
    return 0;
  }

  if (*verify_cmd) {
    const double tol = qpb::resolve_tolerance(std::nullopt);
    const qpb::MatrixPolynomial p = qpb::load_polynomial(verify_file);
    qpb::VerificationRow row = qpb::verify_instance(p, tol);
    row.id = std::filesystem::path(verify_file).stem().string();
    std::cout << qpb::row_to_json(row).dump(2) << "\n";
    return (row.violations.empty() && row.solver_error.empty()) ? 0 : 1;
  }

  if (*suite_cmd) {
    const qpb::SuiteConfig config = qpb::load_suite_config(suite_config_path);
    const double tol = qpb::resolve_tolerance(config.tolerance);
    const qpb::SuiteResult result = qpb::run_suite(config, tol);
    qpb::write_suite_outputs(result, suite_out_dir);
    std::cout << qpb::suite_summary(result).dump(2) << "\n";
    return (result.violation_count == 0 && result.solver_error_count == 0) ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qpb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
