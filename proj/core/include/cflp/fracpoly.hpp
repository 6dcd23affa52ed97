#pragma once

#include "cflp/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cflp {

struct Term {
  Rational exponent;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite sum of c_i x^(b_i) with exact rational exponents and coefficients.
///
/// Terms are kept in canonical form: strictly increasing exponents and no zero
/// coefficients, so two values are equal iff their term lists are equal.
/// Exponents are normally non-negative; negative exponents appear only as
/// formal results of differentiation.
class FracPoly {
public:
  FracPoly() = default;
  /// Accepts terms in any order; merges duplicates and drops zeros.
  explicit FracPoly(std::vector<Term> terms);

  static FracPoly constant(const Rational& c);
  static FracPoly monomial(const Rational& exponent, const Rational& coeff = Rational(1));

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of x^exponent (zero when absent).
  Rational coefficient(const Rational& exponent) const;
  std::optional<Rational> leading_exponent() const;

  FracPoly& operator+=(const FracPoly& rhs);
  FracPoly& operator-=(const FracPoly& rhs);
  FracPoly& operator*=(const FracPoly& rhs);
  FracPoly& operator*=(const Rational& scalar);

  friend FracPoly operator+(FracPoly a, const FracPoly& b) { return a += b; }
  friend FracPoly operator-(FracPoly a, const FracPoly& b) { return a -= b; }
  friend FracPoly operator*(const FracPoly& a, const FracPoly& b);
  friend FracPoly operator*(FracPoly p, const Rational& s) { return p *= s; }
  friend FracPoly operator*(const Rational& s, FracPoly p) { return p *= s; }
  FracPoly operator-() const;

  friend bool operator==(const FracPoly&, const FracPoly&) = default;

  std::string str() const;

private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const FracPoly& p);

FracPoly pow(const FracPoly& p, unsigned k);

/// Evaluates p at x. For x < 0 each exponent s/q (lowest terms) must have odd
/// q and x^(s/q) = sign(x)^s |x|^(s/q); otherwise throws NegativeBaseEvenRoot.
double eval(const FracPoly& p, double x);

/// p(-x). Throws NegativeBaseEvenRoot when some exponent has an even
/// denominator.
FracPoly reflect(const FracPoly& p);

/// p(q(x)) for p with non-negative integer exponents. Throws DomainError
/// otherwise.
FracPoly substitute(const FracPoly& p, const FracPoly& q);

}  // namespace cflp
