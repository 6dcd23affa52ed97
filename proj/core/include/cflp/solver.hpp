#pragma once

#include "cflp/alpha.hpp"
#include "cflp/fracpoly.hpp"
#include "cflp/linalg.hpp"
#include "cflp/rational.hpp"

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace cflp {

using PointFunction = std::function<double(double)>;

/// Coefficient of one operator term: a constant, an exact fractional
/// polynomial, or an arbitrary pointwise function of x.
class Coefficient {
public:
  Coefficient(double constant = 0.0) : value_(constant) {}  // NOLINT
  Coefficient(FracPoly poly) : value_(std::move(poly)) {}   // NOLINT
  Coefficient(PointFunction fn) : value_(std::move(fn)) {}  // NOLINT

  double at(double x) const;

private:
  std::variant<double, FracPoly, PointFunction> value_;
};

/// A_r D^{gamma_r} y with 0 < gamma_r < gamma.
struct LowerTerm {
  Coefficient coeff;
  Rational order;
};

using RightHandSide = std::variant<FracPoly, PointFunction>;

double evaluate_rhs(const RightHandSide& rhs, double x);

/// D^gamma y + sum_r A_r(x) D^{gamma_r} y + A_{k+1}(x) y = A_{k+2} g(x) on
/// [0, 1] with y^(j)(0) = d_j, j < ceil(gamma), solved in span{P*_{alpha i}}
/// for i <= m.
struct FdeProblem {
  Rational gamma{1};
  std::vector<LowerTerm> lower_terms;
  Coefficient zero_order_coeff{0.0};
  double rhs_scale = 1.0;
  RightHandSide rhs{FracPoly{}};
  std::vector<double> initial_conditions;
  unsigned m = 0;
  Alpha alpha{Rational(1)};

  /// ceil(gamma).
  unsigned ic_count() const;
  /// Throws DomainError naming the violated invariant.
  void validate() const;
};

struct DerivEntry {
  Rational coeff;     // R_{i,s}
  Rational exponent;  // s alpha - gamma
};

/// D^gamma P*_{alpha i} = sum_s R_{i,s} x^(s alpha - gamma) for i <= m.
struct DerivCoeffs {
  unsigned m = 0;
  Alpha alpha{Rational(1)};
  Rational gamma{1};
  std::vector<std::vector<DerivEntry>> entries;  // entries[i][s], s <= i

  /// sum_s R_{i,s} x^(s alpha - gamma), skipping vanishing entries.
  double value(unsigned i, double x) const;
};

DerivCoeffs deriv_coeffs(unsigned m, const Alpha& alpha, const Rational& gamma);

struct LinearSystem {
  Matrix matrix;
  std::vector<double> rhs;
  std::vector<double> collocation_points;
};

/// Collocation rows at the roots of P*_{alpha (m+1-ceil(gamma))} followed by
/// ceil(gamma) initial-condition rows. Row j of the latter holds
/// j! [x^j] P*_{alpha i}. Throws FractionalIC when j >= 1 while the basis has
/// a non-integer exponent <= j, and IllPosed if a negative power would be
/// evaluated at 0.
LinearSystem assemble(const FdeProblem& problem);

struct ResidualSample {
  double x = 0.0;
  double residual = 0.0;
};

struct SolveReport {
  std::vector<double> coefficients;
  /// sum a_i P*_{alpha i}, each a_i converted exactly from its double value.
  FracPoly solution;
  std::vector<double> collocation_points;
  double matrix_condition_estimate = 1.0;
  std::vector<ResidualSample> residual_samples;
};

/// Left-hand side of the equation applied to y at x, minus A_{k+2} g(x).
double equation_residual(const FdeProblem& problem, const FracPoly& y, double x);

SolveReport solve(const FdeProblem& problem);

}  // namespace cflp
