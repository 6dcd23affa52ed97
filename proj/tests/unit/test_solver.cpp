#include "cflp/calculus.hpp"
#include "cflp/errors.hpp"
#include "cflp/shifted.hpp"
#include "cflp/solver.hpp"

#include <doctest.h>

#include <cmath>

using cflp::Alpha;
using cflp::FdeProblem;
using cflp::FracPoly;
using cflp::Rational;

namespace {

FracPoly mono(std::int64_t num, std::int64_t den, std::int64_t c) {
  return FracPoly::monomial(Rational(num, den), Rational(c));
}

// D^2 y + D^{3/2} y + y = 1 + x, y(0) = y'(0) = 1.
FdeProblem bagley_torvik(unsigned m) {
  FdeProblem p;
  p.gamma = Rational(2);
  p.lower_terms = {{1.0, Rational(3, 2)}};
  p.zero_order_coeff = 1.0;
  p.rhs = mono(0, 1, 1) + mono(1, 1, 1);
  p.initial_conditions = {1.0, 1.0};
  p.m = m;
  return p;
}

// D^{3/2} y + 2 D y + 3 sqrt(x) D^{1/2} y + (1 - x) y = 2 sqrt(x) + 4x + 7x^2 - x^3.
FdeProblem variable_coefficient() {
  FdeProblem p;
  p.gamma = Rational(3, 2);
  p.lower_terms = {{cflp::Coefficient(mono(1, 2, 3)), Rational(1, 2)}, {2.0, Rational(1)}};
  p.zero_order_coeff = cflp::Coefficient(mono(0, 1, 1) - mono(1, 1, 1));
  p.rhs = mono(1, 2, 2) + mono(1, 1, 4) + mono(2, 1, 7) - mono(3, 1, 1);
  p.initial_conditions = {0.0, 0.0};
  p.m = 2;
  return p;
}

// D^{1/2} y + sqrt(x) y = 1 + 2x, y(0) = 0, basis in x^{1/2}.
FdeProblem fractional_basis() {
  FdeProblem p;
  p.gamma = Rational(1, 2);
  p.zero_order_coeff = cflp::Coefficient(
      cflp::PointFunction([](double x) { return std::sqrt(x); }));
  p.rhs = mono(0, 1, 1) + mono(1, 1, 2);
  p.initial_conditions = {0.0};
  p.m = 1;
  p.alpha = Alpha(Rational(1, 2));
  return p;
}

}  // namespace

TEST_CASE("derivative coefficient table") {
  const auto c = cflp::deriv_coeffs(2, Alpha(Rational(1)), Rational(3, 2));
  REQUIRE(c.entries.size() == 3);
  CHECK(c.entries[2][2].coeff == Rational(12));
  CHECK(c.entries[2][2].exponent == Rational(1, 2));
  CHECK(c.entries[1][1].coeff.is_zero());
  CHECK(c.entries[0][0].coeff.is_zero());

  const auto h = cflp::deriv_coeffs(1, Alpha(Rational(1, 2)), Rational(1, 2));
  CHECK(h.entries[1][1].coeff == Rational(1));
  CHECK(h.entries[1][1].exponent.is_zero());

  CHECK_THROWS_AS(cflp::deriv_coeffs(1, Alpha(Rational(1)), Rational(0)), cflp::DomainError);
}

TEST_CASE("derivative coefficients reproduce the sequential derivative") {
  for (const Rational& a : {Rational(1), Rational(1, 2), Rational(1, 3), Rational(2, 3)}) {
    const Alpha alpha(a);
    for (const Rational& g : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                              Rational(5, 2), Rational(3)}) {
      const auto c = cflp::deriv_coeffs(8, alpha, g);
      for (unsigned i = 0; i <= 8; ++i) {
        std::vector<cflp::Term> terms;
        for (const auto& e : c.entries[i]) terms.push_back(cflp::Term{e.exponent, e.coeff});
        CHECK(FracPoly(terms) == cflp::sequential_derivative(cflp::sclp(i, alpha), g));
        for (unsigned s = 0; s <= i; ++s) {
          const Rational sa = a * Rational(static_cast<std::int64_t>(s));
          if (sa.is_integer() && sa < g) CHECK(c.entries[i][s].coeff.is_zero());
        }
      }
    }
  }
}

TEST_CASE("problem validation") {
  FdeProblem p = bagley_torvik(2);
  CHECK_NOTHROW(p.validate());
  p.initial_conditions = {1.0};
  CHECK_THROWS_AS(p.validate(), cflp::DomainError);
  p = bagley_torvik(2);
  p.lower_terms = {{1.0, Rational(2)}};
  CHECK_THROWS_AS(p.validate(), cflp::DomainError);
  p = bagley_torvik(2);
  p.lower_terms = {{1.0, Rational(3, 2)}, {1.0, Rational(1, 2)}};
  CHECK_THROWS_AS(p.validate(), cflp::DomainError);
  p = bagley_torvik(0);
  CHECK_THROWS_AS(p.validate(), cflp::DomainError);
}

TEST_CASE("constant-coefficient problem with integer order") {
  const auto sys = cflp::assemble(bagley_torvik(2));
  REQUIRE(sys.collocation_points.size() == 1);
  CHECK(sys.collocation_points[0] == 0.5);
  CHECK(std::abs(sys.matrix(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(sys.matrix(0, 1)) < 1e-12);
  CHECK(std::abs(sys.matrix(0, 2) - 19.985281374238571) < 1e-12);
  CHECK(std::abs(sys.rhs[0] - 1.5) < 1e-12);
  // a0 - a1 + a2 = 1 and 2a1 - 6a2 = 1.
  CHECK(sys.matrix(1, 0) == 1.0);
  CHECK(sys.matrix(1, 1) == -1.0);
  CHECK(sys.matrix(1, 2) == 1.0);
  CHECK(sys.rhs[1] == 1.0);
  CHECK(sys.matrix(2, 0) == 0.0);
  CHECK(sys.matrix(2, 1) == 2.0);
  CHECK(sys.matrix(2, 2) == -6.0);
  CHECK(sys.rhs[2] == 1.0);

  const auto report = cflp::solve(bagley_torvik(2));
  REQUIRE(report.coefficients.size() == 3);
  CHECK(std::abs(report.coefficients[0] - 1.5) < 1e-9);
  CHECK(std::abs(report.coefficients[1] - 0.5) < 1e-9);
  CHECK(std::abs(report.coefficients[2]) < 1e-9);
  CHECK(report.residual_samples.size() == 11);
  for (const auto& s : report.residual_samples) CHECK(std::abs(s.residual) < 1e-9);
  for (const auto& t : report.solution.terms()) {
    if (t.exponent == Rational(0) || t.exponent == Rational(1)) {
      CHECK(std::abs(t.coeff.to_double() - 1.0) < 1e-9);
    } else {
      CHECK(std::abs(t.coeff.to_double()) < 1e-9);
    }
  }
}

TEST_CASE("variable-coefficient problem") {
  const auto sys = cflp::assemble(variable_coefficient());
  REQUIRE(sys.collocation_points.size() == 1);
  CHECK(std::abs(sys.matrix(0, 0) - 0.5) < 1e-12);
  CHECK(std::abs(sys.matrix(0, 1) - 7.0) < 1e-12);
  CHECK(std::abs(sys.matrix(0, 2) - 8.235281374238571) < 1e-12);
  CHECK(std::abs(sys.rhs[0] - 5.039213562373095) < 1e-12);

  const auto report = cflp::solve(variable_coefficient());
  CHECK(std::abs(report.coefficients[0] - 1.0 / 3.0) < 1e-9);
  CHECK(std::abs(report.coefficients[1] - 0.5) < 1e-9);
  CHECK(std::abs(report.coefficients[2] - 1.0 / 6.0) < 1e-9);
  for (const auto& s : report.residual_samples) CHECK(std::abs(s.residual) < 1e-9);
}

TEST_CASE("fractional basis problem") {
  const auto sys = cflp::assemble(fractional_basis());
  REQUIRE(sys.collocation_points.size() == 1);
  CHECK(std::abs(sys.collocation_points[0] - 0.25) < 1e-14);
  CHECK(std::abs(sys.matrix(0, 0) - 0.5) < 1e-12);
  CHECK(std::abs(sys.matrix(0, 1) - 1.0) < 1e-12);
  CHECK(std::abs(sys.rhs[0] - 1.5) < 1e-12);

  const auto report = cflp::solve(fractional_basis());
  CHECK(std::abs(report.coefficients[0] - 1.0) < 1e-12);
  CHECK(std::abs(report.coefficients[1] - 1.0) < 1e-12);
  CHECK(std::abs(cflp::eval(report.solution, 0.64) - 1.6) < 1e-12);
}

TEST_CASE("initial conditions of integer order on a fractional basis") {
  FdeProblem p = bagley_torvik(4);
  p.alpha = Alpha(Rational(1, 2));
  CHECK_THROWS_AS(cflp::assemble(p), cflp::FractionalIC);
  // y(0) alone is always defined.
  FdeProblem q = fractional_basis();
  q.m = 4;
  CHECK_NOTHROW(cflp::assemble(q));
}

TEST_CASE("singular systems are reported") {
  // Collocation row at 1/4 is [-1, 1], proportional to the IC row [1, -1].
  FdeProblem p;
  p.gamma = Rational(1, 2);
  p.m = 1;
  p.alpha = Alpha(Rational(1, 2));
  p.initial_conditions = {0.0};
  p.zero_order_coeff = -1.0;
  CHECK_THROWS_AS(cflp::solve(p), cflp::SingularSystem);
}

TEST_CASE("solution and row evaluation agree at collocation points") {
  for (const FdeProblem& p : {bagley_torvik(4), variable_coefficient(), fractional_basis()}) {
    const auto sys = cflp::assemble(p);
    const auto report = cflp::solve(p);
    for (std::size_t r = 0; r < sys.collocation_points.size(); ++r) {
      double row = 0.0;
      for (unsigned i = 0; i <= p.m; ++i) row += sys.matrix(r, i) * report.coefficients[i];
      const double x = sys.collocation_points[r];
      const double direct = cflp::equation_residual(p, report.solution, x) +
                            p.rhs_scale * cflp::evaluate_rhs(p.rhs, x);
      CHECK(std::abs(row - direct) < 1e-10);
    }
    for (unsigned j = 0; j < p.ic_count(); ++j) {
      double row = 0.0;
      for (unsigned i = 0; i <= p.m; ++i) {
        row += sys.matrix(sys.collocation_points.size() + j, i) * report.coefficients[i];
      }
      CHECK(std::abs(row - p.initial_conditions[j]) < 1e-10);
    }
  }
}

TEST_CASE("extra basis functions stay unused when the solution is captured") {
  for (unsigned m : {3U, 4U}) {
    const auto report = cflp::solve(bagley_torvik(m));
    CHECK(std::abs(report.coefficients[0] - 1.5) < 1e-8);
    CHECK(std::abs(report.coefficients[1] - 0.5) < 1e-8);
    for (unsigned i = 2; i <= m; ++i) CHECK(std::abs(report.coefficients[i]) < 1e-8);
    for (const auto& s : report.residual_samples) CHECK(std::abs(s.residual) < 1e-8);
  }
}

TEST_CASE("property: manufactured solutions are recovered") {
  // Pick y in the basis span, derive g from the operator, and solve back.
  for (const Rational& a : {Rational(1), Rational(1, 2), Rational(1, 3)}) {
    const Alpha alpha(a);
    for (unsigned m = 1; m <= 6; ++m) {
      FracPoly y;
      std::vector<double> exact;
      for (unsigned i = 0; i <= m; ++i) {
        const Rational c(static_cast<std::int64_t>((i * 7 + 3) % 5) - 2, 3);
        exact.push_back(c.to_double());
        y += cflp::sclp(i, alpha) * c;
      }
      FdeProblem p;
      p.gamma = a;
      p.alpha = alpha;
      p.m = m;
      p.zero_order_coeff = cflp::Coefficient(mono(0, 1, 2) + FracPoly::monomial(a, Rational(1)));
      p.rhs = cflp::conformable_derivative(y, a) +
              (mono(0, 1, 2) + FracPoly::monomial(a, Rational(1))) * y;
      p.initial_conditions = {cflp::eval(y, 0.0)};
      const auto report = cflp::solve(p);
      for (unsigned i = 0; i <= m; ++i) CHECK(std::abs(report.coefficients[i] - exact[i]) < 1e-9);
    }
  }
}
