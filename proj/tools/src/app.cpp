#include "app.hpp"

#include "commands.hpp"
#include "problem_file.hpp"

#include "cflp/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

namespace cflp::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Alpha parse_alpha(const std::string& text) {
  try {
    return Alpha(Rational::parse(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--alpha: ") + e.what());
  } catch (const DomainError& e) {
    throw UsageError(std::string("--alpha: ") + e.what());
  }
}

// Sends output to --out when given, stdout otherwise.
class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (path.empty()) return;
    file_.emplace(path);
    if (!*file_) throw std::ios_base::failure("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_ ? static_cast<std::ostream&>(*file_) : fallback_; }
  void finish() {
    if (file_) {
      file_->close();
      if (!*file_) throw std::ios_base::failure("write failed");
    }
  }

private:
  std::ostream& fallback_;
  std::optional<std::ofstream> file_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conformable fractional Legendre polynomials and collocation solver", "cflp"};
  app.require_subcommand(1);

  unsigned n = 0;
  unsigned k = 1;
  unsigned n_max = 5;
  double x = 0.0;
  bool shifted = false;
  std::string alpha_text = "1";
  std::vector<std::string> alpha_list;
  std::string problem_path;
  std::string out_path;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate P_{alpha n}(x), or the shifted form");
  eval_cmd->add_option("--n", n, "degree")->required();
  eval_cmd->add_option("--alpha", alpha_text, "order in (0, 1] as p/q")->capture_default_str();
  eval_cmd->add_option("--x", x, "argument")->required();
  eval_cmd->add_flag("--shifted", shifted, "use the shifted polynomial on [0, 1]");

  auto* table_cmd = app.add_subcommand("table", "Exact coefficients as CSV");
  table_cmd->add_option("--n-max", n_max, "highest degree")->required()->check(
      CLI::Range(0U, kMaxTableDegree));
  table_cmd->add_option("--alpha", alpha_text, "order in (0, 1] as p/q")->capture_default_str();
  table_cmd->add_flag("--shifted", shifted, "tabulate the shifted polynomials");
  table_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* roots_cmd = app.add_subcommand("roots", "Roots of the shifted polynomial of degree k");
  roots_cmd->add_option("--k", k, "degree")->required()->check(CLI::Range(1U, 256U));
  roots_cmd->add_option("--alpha", alpha_text, "order in (0, 1] as p/q")->capture_default_str();

  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem file by collocation");
  solve_cmd->add_option("problem", problem_path, "problem file (JSON)")->required();
  solve_cmd->add_option("--out", out_path, "report file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Check exact identities for every (n, alpha)");
  verify_cmd->add_option("--n-max", n_max, "highest degree")->check(
      CLI::Range(0U, kMaxVerifyDegree))->capture_default_str();
  verify_cmd->add_option("--alpha", alpha_list, "orders to check (default 1 1/2 1/3)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out;
    std::ostringstream cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*eval_cmd) {
      cmd_eval(out, n, parse_alpha(alpha_text), x, shifted);
    } else if (*table_cmd) {
      const Alpha alpha = parse_alpha(alpha_text);
      Sink sink(out_path, out);
      cmd_table(sink.stream(), n_max, alpha, shifted);
      sink.finish();
    } else if (*roots_cmd) {
      cmd_roots(out, k, parse_alpha(alpha_text));
    } else if (*solve_cmd) {
      const FdeProblem problem = load_problem(problem_path);
      const SolveReport report = solve(problem);
      Sink sink(out_path, out);
      write_report(sink.stream(), report);
      sink.finish();
    } else if (*verify_cmd) {
      if (alpha_list.empty()) alpha_list = {"1", "1/2", "1/3"};
      std::vector<Alpha> alphas;
      std::transform(alpha_list.begin(), alpha_list.end(), std::back_inserter(alphas),
                     parse_alpha);
      if (!cmd_verify(out, n_max, alphas)) return kExitVerify;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ProblemParseError& e) {
    err << "error: " << problem_path << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace cflp::cli
