#include "commands.hpp"

#include "cflp/invariants.hpp"
#include "cflp/legendre.hpp"
#include "cflp/shifted.hpp"

#include <iomanip>
#include <sstream>

namespace cflp::cli {

void print_real(std::ostream& os, double value) {
  std::ostringstream s;
  s << std::setprecision(15) << (value == 0.0 ? 0.0 : value);  // no "-0"

  os << s.str();
}

void cmd_eval(std::ostream& out, unsigned n, const Alpha& alpha, double x, bool shifted) {
  print_real(out, eval(shifted ? sclp(n, alpha) : cflp(n, alpha), x));
  out << '\n';
}

void cmd_table(std::ostream& out, unsigned n_max, const Alpha& alpha, bool shifted) {
  out << "n,exponent,coeff_num,coeff_den\n";
  for (unsigned n = 0; n <= n_max; ++n) {
    const FracPoly p = shifted ? sclp(n, alpha) : cflp(n, alpha);
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      out << n << ',' << it->exponent.str() << ',' << it->coeff.numerator().get_str() << ','
          << it->coeff.denominator().get_str() << '\n';
    }
  }
}

void cmd_roots(std::ostream& out, unsigned k, const Alpha& alpha) {
  const RootSet set = sclp_roots(k, alpha);
  out << "i,root\n";
  for (std::size_t i = 0; i < set.roots.size(); ++i) {
    out << i << ',';
    print_real(out, set.roots[i]);
    out << '\n';
  }
}

void write_report(std::ostream& out, const SolveReport& report) {
  out << "# coefficients\ni,a\n";
  for (std::size_t i = 0; i < report.coefficients.size(); ++i) {
    out << i << ',';
    print_real(out, report.coefficients[i]);
    out << '\n';
  }
  out << "\n# solution\nexponent,coeff\n";
  const auto& terms = report.solution.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    out << it->exponent.str() << ',';
    print_real(out, it->coeff.to_double());
    out << '\n';
  }
  out << "\n# collocation_points\np,x\n";
  for (std::size_t p = 0; p < report.collocation_points.size(); ++p) {
    out << p << ',';
    print_real(out, report.collocation_points[p]);
    out << '\n';
  }
  out << "\n# residuals\nx,residual\n";
  for (const auto& s : report.residual_samples) {
    print_real(out, s.x);
    out << ',';
    print_real(out, s.residual);
    out << '\n';
  }
  out << "\n# condition_estimate\nvalue\n";
  print_real(out, report.matrix_condition_estimate);
  out << '\n';
}

bool cmd_verify(std::ostream& out, unsigned n_max, const std::vector<Alpha>& alphas) {
  std::size_t total = 0;
  std::size_t failed = 0;
  for (const Alpha& alpha : alphas) {
    for (unsigned n = 0; n <= n_max; ++n) {
      for (const auto& r : check_invariants(n, alpha)) {
        ++total;
        if (!r.pass) ++failed;
        out << (r.pass ? "PASS " : "FAIL ") << r.name << " n=" << n
            << " alpha=" << alpha.value().str() << '\n';
      }
    }
  }
  out << total << " checks, " << failed << " failed\n";
  return failed == 0;
}

}  // namespace cflp::cli
