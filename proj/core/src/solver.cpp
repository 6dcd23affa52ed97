#include "cflp/solver.hpp"

#include "cflp/calculus.hpp"
#include "cflp/errors.hpp"
#include "cflp/shifted.hpp"

#include <cmath>
#include <string>
#include <type_traits>

namespace cflp {

namespace {

double power(double x, const Rational& e) {
  if (e.is_zero()) return 1.0;
  if (x == 0.0 && e.sign() < 0) throw IllPosed("negative power x^(" + e.str() + ") at x = 0");
  return std::pow(x, e.to_double());
}

}  // namespace

double Coefficient::at(double x) const {
  return std::visit(
      [x](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return v;
        } else if constexpr (std::is_same_v<T, FracPoly>) {
          return eval(v, x);
        } else {
          return v(x);
        }
      },
      value_);
}

double evaluate_rhs(const RightHandSide& rhs, double x) {
  if (const auto* poly = std::get_if<FracPoly>(&rhs)) return eval(*poly, x);
  return std::get<PointFunction>(rhs)(x);
}

unsigned FdeProblem::ic_count() const { return static_cast<unsigned>(gamma.ceil().get_ui()); }

void FdeProblem::validate() const {
  if (gamma.sign() <= 0) throw DomainError("gamma must be positive");
  Rational prev(0);
  for (const auto& t : lower_terms) {
    if (t.order <= prev) throw DomainError("lower-term orders must be positive and increasing");
    if (t.order >= gamma) throw DomainError("lower-term order " + t.order.str() + " >= gamma");
    prev = t.order;
  }
  if (initial_conditions.size() != ic_count()) {
    throw DomainError("expected " + std::to_string(ic_count()) + " initial conditions, got " +
                      std::to_string(initial_conditions.size()));
  }
  if (m + 1 < ic_count()) throw DomainError("m + 1 must be at least ceil(gamma)");
}

double DerivCoeffs::value(unsigned i, double x) const {
  double sum = 0.0;
  for (const auto& e : entries.at(i)) {
    if (e.coeff.is_zero()) continue;
    sum += e.coeff.to_double() * power(x, e.exponent);
  }
  return sum;
}

DerivCoeffs deriv_coeffs(unsigned m, const Alpha& alpha, const Rational& gamma) {
  if (gamma.sign() <= 0) throw DomainError("derivative order must be positive");
  DerivCoeffs out;
  out.m = m;
  out.alpha = alpha;
  out.gamma = gamma;
  out.entries.resize(m + 1);
  for (unsigned i = 0; i <= m; ++i) {
    const auto table = sclp_coeffs(i);
    out.entries[i].reserve(i + 1);
    for (unsigned s = 0; s <= i; ++s) {
      const Rational power_s = alpha.value() * Rational(static_cast<std::int64_t>(s));
      // The falling product already vanishes when s alpha is an integer below gamma.
      out.entries[i].push_back(
          DerivEntry{table.b[s] * sequential_factor(power_s, gamma), power_s - gamma});
    }
  }
  return out;
}

LinearSystem assemble(const FdeProblem& problem) {
  problem.validate();
  const unsigned m = problem.m;
  const unsigned n_ic = problem.ic_count();
  const unsigned n_col = m + 1 - n_ic;
  const Alpha& alpha = problem.alpha;

  for (unsigned j = 1; j < n_ic; ++j) {
    for (unsigned s = 1; s <= m; ++s) {
      const Rational e = alpha.value() * Rational(static_cast<std::int64_t>(s));
      if (!e.is_integer() && e <= Rational(static_cast<std::int64_t>(j))) {
        throw FractionalIC("y^(" + std::to_string(j) + ")(0) is undefined: basis contains x^(" +
                           e.str() + ")");
      }
    }
  }

  LinearSystem sys;
  sys.matrix = Matrix(m + 1, m + 1);
  sys.rhs.assign(m + 1, 0.0);
  if (n_col > 0) sys.collocation_points = sclp_roots(n_col, alpha).roots;

  const DerivCoeffs lead = deriv_coeffs(m, alpha, problem.gamma);
  std::vector<DerivCoeffs> lower;
  lower.reserve(problem.lower_terms.size());
  for (const auto& t : problem.lower_terms) lower.push_back(deriv_coeffs(m, alpha, t.order));

  std::vector<FracPoly> basis;
  basis.reserve(m + 1);
  for (unsigned i = 0; i <= m; ++i) basis.push_back(sclp(i, alpha));

  for (unsigned p = 0; p < n_col; ++p) {
    const double x = sys.collocation_points[p];
    std::vector<double> lower_coeff;
    lower_coeff.reserve(lower.size());
    for (const auto& t : problem.lower_terms) lower_coeff.push_back(t.coeff.at(x));
    const double zero_coeff = problem.zero_order_coeff.at(x);
    for (unsigned i = 0; i <= m; ++i) {
      double v = lead.value(i, x);
      for (std::size_t r = 0; r < lower.size(); ++r) v += lower_coeff[r] * lower[r].value(i, x);
      v += zero_coeff * eval(basis[i], x);
      sys.matrix(p, i) = v;
    }
    sys.rhs[p] = problem.rhs_scale * evaluate_rhs(problem.rhs, x);
  }

  for (unsigned j = 0; j < n_ic; ++j) {
    const Rational jfact(factorial(j), mpz_class(1));
    const Rational ej(static_cast<std::int64_t>(j));
    for (unsigned i = 0; i <= m; ++i) {
      sys.matrix(n_col + j, i) = (jfact * basis[i].coefficient(ej)).to_double();
    }
    sys.rhs[n_col + j] = problem.initial_conditions[j];
  }
  return sys;
}

double equation_residual(const FdeProblem& problem, const FracPoly& y, double x) {
  double lhs = eval(sequential_derivative(y, problem.gamma), x);
  for (const auto& t : problem.lower_terms) {
    lhs += t.coeff.at(x) * eval(sequential_derivative(y, t.order), x);
  }
  lhs += problem.zero_order_coeff.at(x) * eval(y, x);
  return lhs - problem.rhs_scale * evaluate_rhs(problem.rhs, x);
}

SolveReport solve(const FdeProblem& problem) {
  const LinearSystem sys = assemble(problem);
  const DenseSolution dense = solve_dense(sys.matrix, sys.rhs);

  SolveReport report;
  report.coefficients = dense.x;
  report.collocation_points = sys.collocation_points;
  report.matrix_condition_estimate = dense.condition_estimate;
  for (unsigned i = 0; i <= problem.m; ++i) {
    report.solution += sclp(i, problem.alpha) * Rational::from_double(dense.x[i]);
  }

  std::vector<double> sample_points;
  for (int k = 0; k < 10; ++k) sample_points.push_back((k + 0.5) / 10.0);
  sample_points.insert(sample_points.end(), sys.collocation_points.begin(),
                       sys.collocation_points.end());
  for (const double x : sample_points) {
    report.residual_samples.push_back(
        ResidualSample{x, equation_residual(problem, report.solution, x)});
  }
  return report;
}

}  // namespace cflp
