#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qpb/errors.hpp"
#include "qpb/polynomial_io.hpp"
#include "qpb/random_polynomial.hpp"
#include "qpb/verify.hpp"
#include "test_support.hpp"

using qpb::BoundName;
using qpb::Index;
using qpb::MatrixPolynomial;
using qpb::QMatrix;
using qpb::Quaterniond;
using qpb::SplitMix64;

namespace {

std::filesystem::path tmp_dir() {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "qpb_harness_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const std::filesystem::path p = tmp_dir() / name;
  std::ofstream out(p);
  out << text;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(bool(in));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Comparison helper for reruns: every CSV column is reproducible except the
// trailing wall-time one.
std::string drop_last_field(const std::string& csv) {
  std::istringstream ss(csv);
  std::string out, line;
  while (std::getline(ss, line)) {
    out += line.substr(0, line.rfind(','));
    out += '\n';
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

TEST_CASE("generator reference outputs, seed zero") {
  SplitMix64 a(0);
  CHECK(a.next() == 0xe220a8397b1dcdafULL);
  CHECK(a.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(a.next() == 0x06c45d188009454fULL);
  CHECK(a.next() == 0xf88bb8a8724c81ecULL);

  SplitMix64 b(0);
  CHECK(b.next_double() == 0.8833108082136426);
  CHECK(b.next_double() == 0.43152799704850997);
  CHECK(b.next_double() == 0.026433771592597743);
  CHECK(b.next_double() == 0.9708819781538285);

  SplitMix64 c(0);
  CHECK(c.uniform(-1.0, 1.0) == 0.7666216164272852);
  CHECK(c.uniform(-1.0, 1.0) == -0.13694400590298006);
  CHECK(c.uniform(-1.0, 1.0) == -0.9471324568148045);
  CHECK(c.uniform(-1.0, 1.0) == 0.941763956307657);
}

TEST_CASE("generator reference outputs, seed forty-two") {
  SplitMix64 a(42);
  CHECK(a.next() == 0xbdd732262feb6e95ULL);
  SplitMix64 b(42);
  CHECK(b.next_double() == 0.7415648787718233);
  CHECK(b.next_double() == 0.1599103928769201);
  CHECK(b.next_double() == 0.27860113025513866);
  CHECK(b.next_double() == 0.34419071652363753);
}

TEST_CASE("random polynomial determinism and draw order") {
  const MatrixPolynomial p = qpb::random_polynomial(3, 2, 77, 1.0);
  const MatrixPolynomial q = qpb::random_polynomial(3, 2, 77, 1.0);
  REQUIRE(p.degree() == q.degree());
  for (Index i = 0; i < p.degree(); ++i) CHECK(p.coeff(i) == q.coeff(i));

  // The very first entry consumes the first four uniform draws as w, x, y, z.
  const MatrixPolynomial one = qpb::random_polynomial(1, 1, 0, 1.0);
  CHECK(one.coeff(0)(0, 0) ==
        Quaterniond{0.7666216164272852, -0.13694400590298006, -0.9471324568148045,
                    0.941763956307657});

  const MatrixPolynomial other = qpb::random_polynomial(3, 2, 78, 1.0);
  bool any_diff = false;
  for (Index i = 0; i < 3; ++i)
    if (!(p.coeff(i) == other.coeff(i))) any_diff = true;
  CHECK(any_diff);

  CHECK_THROWS_AS((void)qpb::random_polynomial(0, 1, 1, 1.0), qpb::ParameterError);
  CHECK_THROWS_AS((void)qpb::random_polynomial(2, 0, 1, 1.0), qpb::ParameterError);
  CHECK_THROWS_AS((void)qpb::random_polynomial(2, 1, 1, 0.0), qpb::ParameterError);
}

TEST_CASE("polynomial json round trip is exact") {
  const MatrixPolynomial p = qpb::random_polynomial(4, 3, 9, 2.5);
  const MatrixPolynomial back = qpb::polynomial_from_json(qpb::polynomial_to_json(p));
  REQUIRE(back.degree() == p.degree());
  REQUIRE(back.block_size() == p.block_size());
  for (Index i = 0; i < p.degree(); ++i) CHECK(back.coeff(i) == p.coeff(i));

  const std::string path = write_file("roundtrip.json", "");
  qpb::save_polynomial(path, p);
  const MatrixPolynomial loaded = qpb::load_polynomial(path);
  for (Index i = 0; i < p.degree(); ++i) CHECK(loaded.coeff(i) == p.coeff(i));
}

TEST_CASE("polynomial json parsing") {
  const auto parse = [](const char* text) {
    return qpb::polynomial_from_json(nlohmann::json::parse(text));
  };

  SUBCASE("documented quadratic example") {
    const MatrixPolynomial p =
        parse(R"({"n": 1, "k": 2, "coeffs": [[[[1, 0, 0, 0]]], [[[0, 1, 0, 0]]]]})");
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0)(0, 0) == Quaterniond{1});
    CHECK(p.coeff(1)(0, 0) == Quaterniond::i());
  }
  SUBCASE("explicit identity leading coefficient is accepted") {
    const MatrixPolynomial p = parse(
        R"({"n": 1, "k": 2, "coeffs": [[[[1, 0, 0, 0]]], [[[0, 1, 0, 0]]], [[[1, 0, 0, 0]]]]})");
    CHECK(p.degree() == 2);
  }
  SUBCASE("non-identity leading coefficient is refused") {
    CHECK_THROWS_AS(
        (void)parse(
            R"({"n": 1, "k": 2, "coeffs": [[[[1, 0, 0, 0]]], [[[0, 1, 0, 0]]], [[[2, 0, 0, 0]]]]})"),
        qpb::MonicityError);
  }
  SUBCASE("schema errors") {
    CHECK_THROWS_AS((void)parse(R"({"n": 1, "k": 0, "coeffs": []})"), qpb::DegreeError);
    CHECK_THROWS_AS((void)parse(R"({"k": 2, "coeffs": []})"), qpb::ParseError);
    CHECK_THROWS_AS((void)parse(R"({"n": 1.5, "k": 2, "coeffs": []})"), qpb::ParseError);
    CHECK_THROWS_AS((void)parse(R"({"n": 1, "k": 2, "coeffs": [[[[1, 0, 0, 0]]]]})"),
                    qpb::ShapeError);
    CHECK_THROWS_AS((void)parse(R"({"n": 2, "k": 1, "coeffs": [[[[1, 0, 0, 0]]]]})"),
                    qpb::ShapeError);
    CHECK_THROWS_AS((void)parse(R"({"n": 1, "k": 1, "coeffs": [[[[1, 0, 0]]]]})"),
                    qpb::ParseError);
    CHECK_THROWS_AS((void)parse(R"({"n": 1, "k": 1, "coeffs": [[[[1, 0, 0, "x"]]]]})"),
                    qpb::ParseError);
  }
  SUBCASE("file level errors") {
    CHECK_THROWS_AS((void)qpb::load_polynomial(
                        (tmp_dir() / "definitely_not_here.json").string()),
                    qpb::IoError);
    const std::string bad = write_file("bad.json", "{ not json");
    CHECK_THROWS_AS((void)qpb::load_polynomial(bad), qpb::ParseError);
  }
}

TEST_CASE("scalar coefficient files") {
  const std::string path =
      write_file("scalar.json", R"({"coeffs": [[1, 0, 0, 0], [0, 1, 0, 0]]})");
  const std::vector<Quaterniond> coeffs = qpb::load_scalar_coeffs(path);
  REQUIRE(coeffs.size() == 2);
  CHECK(coeffs[0] == Quaterniond{1});
  CHECK(coeffs[1] == Quaterniond::i());

  CHECK_THROWS_AS((void)qpb::scalar_coeffs_from_json(nlohmann::json::parse(R"({"coeffs": []})")),
                  qpb::DegreeError);
  CHECK_THROWS_AS((void)qpb::scalar_coeffs_from_json(nlohmann::json::parse(R"({"k": 2})")),
                  qpb::ParseError);
}

TEST_CASE("single instance verification") {
  SUBCASE("zero degree-five polynomial") {
    const MatrixPolynomial p(std::vector<QMatrix>(5, QMatrix::Zero(1, 1)));
    const qpb::VerificationRow row = qpb::verify_instance(p, 1e-8);
    CHECK(row.k == 5);
    CHECK(row.n == 1);
    CHECK(row.have_radius);
    CHECK(row.rho_r <= 1e-10);
    CHECK(row.solver_error.empty());
    CHECK(row.violations.empty());
    REQUIRE(row.tightest.has_value());
    CHECK(*row.tightest == BoundName::thm35);
    for (const qpb::BoundOutcome& b : row.bounds) CHECK(b.computed);
    CHECK(row.bounds[0].value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(row.bounds[0].slack == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("quadratic keeps only the baseline bound") {
    const MatrixPolynomial p = MatrixPolynomial::from_scalar({Quaterniond{1}, Quaterniond{}});
    const qpb::VerificationRow row = qpb::verify_instance(p, 1e-8);
    CHECK(row.have_radius);
    CHECK(row.rho_r == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_FALSE(row.bounds[0].computed);
    CHECK_FALSE(row.bounds[1].computed);
    CHECK_FALSE(row.bounds[2].computed);
    CHECK_FALSE(row.bounds[0].skip_reason.empty());
    CHECK(row.bounds[3].computed);
    CHECK(row.bounds[3].value == doctest::Approx(0.5 * (1.0 + std::sqrt(5.0))).epsilon(1e-12));
    REQUIRE(row.tightest.has_value());
    CHECK(*row.tightest == BoundName::b1);
    CHECK(row.violations.empty());
  }
}

TEST_CASE("tolerance resolution") {
  unsetenv("QBOUND_TOL");
  CHECK(qpb::resolve_tolerance(std::nullopt) == 1e-8);
  CHECK(qpb::resolve_tolerance(1e-6) == 1e-6);
  CHECK_THROWS_AS((void)qpb::resolve_tolerance(-1.0), qpb::ParameterError);

  setenv("QBOUND_TOL", "1e-4", 1);
  CHECK(qpb::resolve_tolerance(1e-6) == 1e-4);

  setenv("QBOUND_TOL", "banana", 1);
  CHECK_THROWS_AS((void)qpb::resolve_tolerance(std::nullopt), qpb::ParameterError);
  setenv("QBOUND_TOL", "-2", 1);
  CHECK_THROWS_AS((void)qpb::resolve_tolerance(std::nullopt), qpb::ParameterError);
  setenv("QBOUND_TOL", "1e-8junk", 1);
  CHECK_THROWS_AS((void)qpb::resolve_tolerance(std::nullopt), qpb::ParameterError);
  unsetenv("QBOUND_TOL");
}

TEST_CASE("suite configuration loading") {
  SUBCASE("full config") {
    const std::string path = write_file("suite_full.json", R"({
      "random": {"seeds": {"start": 5, "count": 4}, "k": [3, 4], "n": [1, 2], "scale": 0.5},
      "files": ["a.json"],
      "tolerance": 1e-7
    })");
    const qpb::SuiteConfig config = qpb::load_suite_config(path);
    REQUIRE(config.random.has_value());
    CHECK(config.random->seed_start == 5);
    CHECK(config.random->seed_count == 4);
    CHECK(config.random->k_values == std::vector<Index>{3, 4});
    CHECK(config.random->n_values == std::vector<Index>{1, 2});
    CHECK(config.random->scale == 0.5);
    CHECK(config.files == std::vector<std::string>{"a.json"});
    CHECK(config.tolerance == 1e-7);
  }
  SUBCASE("defaults") {
    const std::string path = write_file(
        "suite_defaults.json", R"({"random": {"seeds": {"count": 2}, "k": [5], "n": [1]}})");
    const qpb::SuiteConfig config = qpb::load_suite_config(path);
    CHECK(config.random->seed_start == 0);
    CHECK(config.random->scale == 1.0);
    CHECK_FALSE(config.tolerance.has_value());
    CHECK(config.files.empty());
  }
  SUBCASE("schema errors") {
    const std::string no_count = write_file(
        "suite_no_count.json", R"({"random": {"seeds": {"start": 1}, "k": [5], "n": [1]}})");
    CHECK_THROWS_AS((void)qpb::load_suite_config(no_count), qpb::ParseError);
    const std::string empty_k = write_file(
        "suite_empty_k.json", R"({"random": {"seeds": {"count": 1}, "k": [], "n": [1]}})");
    CHECK_THROWS_AS((void)qpb::load_suite_config(empty_k), qpb::ParseError);
    const std::string not_obj = write_file("suite_not_obj.json", "[1, 2]");
    CHECK_THROWS_AS((void)qpb::load_suite_config(not_obj), qpb::ParseError);
    const std::string bad = write_file("suite_bad.json", "{");
    CHECK_THROWS_AS((void)qpb::load_suite_config(bad), qpb::ParseError);
    CHECK_THROWS_AS((void)qpb::load_suite_config((tmp_dir() / "missing_suite.json").string()),
                    qpb::IoError);
  }
}

TEST_CASE("suite runs") {
  qpb::SuiteConfig config;
  qpb::SuiteConfig::RandomSweep sweep;
  sweep.seed_start = 5;
  sweep.seed_count = 4;
  sweep.k_values = {3, 4};
  sweep.n_values = {1, 2};
  config.random = sweep;

  const qpb::SuiteResult result = qpb::run_suite(config, 1e-8);
  REQUIRE(result.rows.size() == 4);
  // Shape indices walk k fastest, then n: (s % |k|, (s / |k|) % |n|).
  CHECK(result.rows[0].id == "s0005_k4_n1");
  CHECK(result.rows[1].id == "s0006_k3_n2");
  CHECK(result.rows[2].id == "s0007_k4_n2");
  CHECK(result.rows[3].id == "s0008_k3_n1");
  CHECK(result.violation_count == 0);
  CHECK(result.solver_error_count == 0);

  SUBCASE("rerun is identical apart from wall time") {
    const qpb::SuiteResult again = qpb::run_suite(config, 1e-8);
    CHECK(drop_last_field(qpb::render_csv(result.rows)) ==
          drop_last_field(qpb::render_csv(again.rows)));
  }

  SUBCASE("csv layout") {
    const std::string csv = qpb::render_csv(result.rows);
    std::istringstream ss(csv);
    std::string header;
    std::getline(ss, header);
    CHECK(header ==
          "id,k,n,rho_r,thm35,thm36,thm37,b1,tightest,slack_thm35,slack_thm36,slack_thm37,"
          "slack_b1,elapsed_ms");
    std::string line;
    int rows = 0;
    while (std::getline(ss, line)) {
      ++rows;
      const std::vector<std::string> fields = split_csv_line(line);
      REQUIRE(fields.size() == 14);
      if (fields[1] == "3") {
        // Degree three: the three high-degree bounds have no value.
        CHECK(fields[4] == "NA");
        CHECK(fields[6] == "NA");
        CHECK(fields[9] == "NA");
        CHECK(fields[8] == "b1");
      } else {
        CHECK(fields[6] == "NA");  // degree four still misses the cube root route
        CHECK(fields[4] != "NA");
      }
    }
    CHECK(rows == 4);
  }

  SUBCASE("summary fields") {
    const nlohmann::ordered_json summary = qpb::suite_summary(result);
    CHECK(summary["instances"] == 4);
    CHECK(summary["violations"] == 0);
    CHECK(summary["solver_errors"] == 0);
    CHECK(summary["tolerance"] == 1e-8);
    CHECK(summary["bounds"]["b1"]["computed"] == 4);
    CHECK(summary["bounds"]["thm37"]["computed"] == 0);
    CHECK(summary["bounds"]["thm37"]["mean_slack"].is_null());
    double wins = 0;
    for (const char* name : {"thm35", "thm36", "thm37", "b1"})
      wins += summary["bounds"][name]["wins"].get<double>();
    CHECK(wins == 4);
  }
}

TEST_CASE("suite file instances") {
  const MatrixPolynomial p = qpb::random_polynomial(5, 2, 123, 1.0);
  const std::string path = write_file("pfile_check.json", "");
  qpb::save_polynomial(path, p);

  qpb::SuiteConfig config;
  config.files = {path};
  const qpb::SuiteResult result = qpb::run_suite(config, 1e-8);
  REQUIRE(result.rows.size() == 1);
  CHECK(result.rows[0].id == "f0000_pfile_check");
  CHECK(result.rows[0].k == 5);
  CHECK(result.rows[0].n == 2);
  CHECK(result.rows[0].have_radius);

  const nlohmann::ordered_json j = qpb::row_to_json(result.rows[0]);
  CHECK(j["id"] == "f0000_pfile_check");
  CHECK(j["bounds"]["thm35"].contains("value"));
  CHECK(j["violations"].is_array());
}

TEST_CASE("suite outputs on disk") {
  qpb::SuiteConfig config;
  qpb::SuiteConfig::RandomSweep sweep;
  sweep.seed_count = 2;
  sweep.k_values = {5};
  sweep.n_values = {1};
  config.random = sweep;

  const std::string out_dir = (tmp_dir() / "suite_out").string();
  std::filesystem::remove_all(out_dir);
  const qpb::SuiteResult result = qpb::run_suite(config, 1e-8);
  qpb::write_suite_outputs(result, out_dir);

  const std::string csv = read_file(out_dir + "/results.csv");
  CHECK(csv == qpb::render_csv(result.rows));
  const nlohmann::ordered_json summary =
      nlohmann::ordered_json::parse(read_file(out_dir + "/summary.json"));
  CHECK(summary == qpb::suite_summary(result));
}

TEST_CASE("golden suite outputs") {
  // Committed reference outputs pin the whole reporting pipeline: any change
  // to number formatting, column layout, ids, or the generator contract shows
  // up as a diff here.
  const std::string data_dir = QPB_DATA_DIR;
  const qpb::SuiteConfig config = qpb::load_suite_config(data_dir + "/suite_small.json");
  const qpb::SuiteResult result = qpb::run_suite(config, 1e-8);

  const std::string expected_csv = read_file(data_dir + "/golden/results.csv");
  CHECK(drop_last_field(qpb::render_csv(result.rows)) == drop_last_field(expected_csv));

  const nlohmann::ordered_json expected =
      nlohmann::ordered_json::parse(read_file(data_dir + "/golden/summary.json"));
  CHECK(qpb::suite_summary(result) == expected);
}
