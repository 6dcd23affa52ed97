#include "app.hpp"
#include "commands.hpp"
#include "problem_file.hpp"

#include "cflp/legendre.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cflp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string problem(const std::string& name) { return std::string(CFLP_PROBLEM_DIR) + "/" + name; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Values in a "# name" section of a solve report, second column.
std::vector<double> section(const std::string& report, const std::string& name) {
  std::vector<double> values;
  bool inside = false;
  bool header = false;
  for (const auto& line : lines(report)) {
    if (line.rfind("# ", 0) == 0) {
      inside = line == "# " + name;
      header = inside;
      continue;
    }
    if (!inside || line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    values.push_back(std::stod(line.substr(line.find(',') + 1)));
  }
  return values;
}

}  // namespace

TEST_CASE("eval") {
  CHECK(cli({"eval", "--n", "2", "--alpha", "1", "--x", "1"}).out == "1\n");
  CHECK(cli({"eval", "--n", "2", "--x", "0.5"}).out == "-0.125\n");
  CHECK(cli({"eval", "--shifted", "--n", "1", "--alpha", "1/2", "--x", "0.25"}).out == "0\n");
  const auto bad = cli({"eval", "--n", "2", "--alpha", "1/x", "--x", "1"});
  CHECK(bad.code == cflp::cli::kExitParse);
  CHECK(bad.err.find("--alpha") != std::string::npos);
  CHECK(cli({"eval", "--n", "2", "--alpha", "3/2", "--x", "1"}).code == cflp::cli::kExitParse);
  CHECK(cli({"eval", "--n", "1", "--alpha", "1/2", "--x", "-1"}).code == cflp::cli::kExitSolver);
}

TEST_CASE("table") {
  const auto r = cli({"table", "--n-max", "3", "--alpha", "1/2"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "n,exponent,coeff_num,coeff_den");
  CHECK(rows[1] == "0,0,1,1");
  CHECK(rows[2] == "1,1/2,1,1");
  CHECK(rows[3] == "2,1,3,2");
  CHECK(rows[4] == "2,0,-1,2");
  CHECK(rows[5] == "3,3/2,5,2");
  CHECK(rows[6] == "3,1/2,-3,2");
  CHECK(cli({"table", "--n-max", "65"}).code == cflp::cli::kExitParse);
}

TEST_CASE("table round trip reconstructs every polynomial") {
  for (const std::string a : {"1", "1/3", "2/3"}) {
    const auto r = cli({"table", "--n-max", "20", "--alpha", a});
    REQUIRE(r.code == 0);
    std::vector<std::vector<cflp::Term>> terms(21);
    const auto rows = lines(r.out);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      std::istringstream row(rows[i]);
      std::string n, e, num, den;
      std::getline(row, n, ',');
      std::getline(row, e, ',');
      std::getline(row, num, ',');
      std::getline(row, den, ',');
      terms[std::stoul(n)].push_back(
          cflp::Term{cflp::Rational::parse(e), cflp::Rational::parse(num + "/" + den)});
    }
    const cflp::Alpha alpha(cflp::Rational::parse(a));
    for (unsigned n = 0; n <= 20; ++n) CHECK(cflp::FracPoly(terms[n]) == cflp::cflp(n, alpha));
  }
}

TEST_CASE("output is deterministic") {
  CHECK(cli({"table", "--n-max", "12", "--alpha", "2/3"}).out ==
        cli({"table", "--n-max", "12", "--alpha", "2/3"}).out);
  CHECK(cli({"solve", problem("example2.problem")}).out ==
        cli({"solve", problem("example2.problem")}).out);
}

TEST_CASE("table to a file") {
  const auto path = std::filesystem::temp_directory_path() / "cflp_table_test.csv";
  REQUIRE(cli({"table", "--n-max", "1", "--out", path.string()}).code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "n,exponent,coeff_num,coeff_den\n0,0,1,1\n1,1,1,1\n");
  std::filesystem::remove(path);
  CHECK(cli({"table", "--n-max", "1", "--out", "/nonexistent/dir/t.csv"}).code ==
        cflp::cli::kExitIo);
}

TEST_CASE("roots") {
  const auto r = cli({"roots", "--k", "1", "--alpha", "1/2"});
  CHECK(r.out == "i,root\n0,0.25\n");
  CHECK(cli({"roots", "--k", "0"}).code == cflp::cli::kExitParse);
}

TEST_CASE("solve problem files") {
  const auto bt = cli({"solve", problem("bagley_torvik.problem")});
  REQUIRE(bt.code == 0);
  const auto a = section(bt.out, "coefficients");
  REQUIRE(a.size() == 3);
  CHECK(std::abs(a[0] - 1.5) < 1e-9);
  CHECK(std::abs(a[1] - 0.5) < 1e-9);
  CHECK(std::abs(a[2]) < 1e-9);
  CHECK(section(bt.out, "collocation_points") == std::vector<double>{0.5});
  for (const double r : section(bt.out, "residuals")) CHECK(std::abs(r) < 1e-9);

  const auto e3 = section(cli({"solve", problem("example3.problem")}).out, "coefficients");
  REQUIRE(e3.size() == 2);
  CHECK(std::abs(e3[0] - 1.0) < 1e-12);
  CHECK(std::abs(e3[1] - 1.0) < 1e-12);

  const auto e2 = section(cli({"solve", problem("example2.problem")}).out, "coefficients");
  REQUIRE(e2.size() == 3);
  CHECK(std::abs(e2[0] - 1.0 / 3.0) < 1e-9);
  CHECK(std::abs(e2[1] - 0.5) < 1e-9);
  CHECK(std::abs(e2[2] - 1.0 / 6.0) < 1e-9);
}

TEST_CASE("solve errors") {
  const auto bad = cli({"solve", problem("bad_alpha.problem")});
  CHECK(bad.code == cflp::cli::kExitParse);
  CHECK(bad.err.find("alpha") != std::string::npos);
  CHECK(cli({"solve", problem("missing.problem")}).code == cflp::cli::kExitParse);
}

TEST_CASE("problem parsing names the offending field") {
  const auto field_of = [](const std::string& text) {
    try {
      cflp::cli::parse_problem(text);
    } catch (const cflp::cli::ProblemParseError& e) {
      return e.field();
    }
    return std::string("<none>");
  };
  const std::string tail = R"("rhs": [{"exponent": "0", "coeff": 1}], "initial_conditions": [0], "m": 1})";
  CHECK(field_of(R"({"alpha": "2/0", "gamma": "1/2", )" + tail) == "alpha");
  CHECK(field_of(R"({"alpha": "3/2", "gamma": "1/2", )" + tail) == "alpha");
  CHECK(field_of(R"({"gamma": "1/2", )" + tail) == "alpha");
  CHECK(field_of(R"({"alpha": "1", "gamma": "-1", )" + tail) == "gamma");
  CHECK(field_of(R"({"alpha": "1", "gamma": "1/2", "terms": [{"order": "a"}], )" + tail) ==
        "terms[0].order");
  CHECK(field_of(R"({"alpha": "1", "gamma": "1/2", "terms": [{"order": "1/4"}], )" + tail) ==
        "terms[0]");
  CHECK(field_of(R"({"alpha": "1", "gamma": "1/2", "rhs": {"builtin": "tan"}, "initial_conditions": [0], "m": 1})") ==
        "rhs.builtin");
  CHECK(field_of(R"({"alpha": "1", "gamma": "1/2", "rhs": [{"exponent": "0"}], "initial_conditions": [0], "m": 1})") ==
        "rhs[0].coeff");
  CHECK(field_of(R"({"alpha": "1", "gamma": "1/2", "rhs": [], "initial_conditions": [0], "m": -1})") == "m");
  CHECK(field_of(R"({"alpha": "1", "gamma": "3/2", )" + tail) == "problem");
  CHECK(field_of("{\"alpha\": \n \"1\",,}") == "syntax");
  CHECK(field_of(R"({"alpha": "1", "gamma": "1/2", )" + tail) == "<none>");
}

TEST_CASE("builtin right-hand side") {
  // y' + y = e^x with y(0) = 1/2 has y = e^x / 2.
  const auto p = cflp::cli::parse_problem(
      R"({"alpha": "1", "gamma": "1", "zero_order_coeff": 1, "rhs": {"builtin": "exp"},
          "initial_conditions": [0.5], "m": 8})");
  const auto report = cflp::solve(p);
  CHECK(std::abs(cflp::eval(report.solution, 0.7) - std::exp(0.7) / 2.0) < 1e-6);
}

TEST_CASE("verify") {
  const auto r = cli({"verify", "--n-max", "5", "--alpha", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const auto third = cli({"verify", "--n-max", "5", "--alpha", "1/3"});
  CHECK(third.code == 0);
  CHECK(third.out.find("PASS parity n=5 alpha=1/3") != std::string::npos);
  const auto trivial = cli({"verify", "--n-max", "0", "--alpha", "1/2"});
  CHECK(trivial.code == 0);
  CHECK(lines(trivial.out).size() == 8);
  CHECK(cli({"verify", "--n-max", "21"}).code == cflp::cli::kExitParse);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == cflp::cli::kExitParse);
  CHECK(cli({"bogus"}).code == cflp::cli::kExitParse);
  CHECK(cli({"--help"}).code == 0);
}
