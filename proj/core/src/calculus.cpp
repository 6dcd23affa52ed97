#include "cflp/calculus.hpp"

#include "cflp/errors.hpp"

#include <vector>

namespace cflp {

namespace {

void require_unit_order(const Rational& gamma) {
  if (gamma.sign() <= 0 || gamma > Rational(1)) {
    throw DomainError("order must lie in (0, 1], got " + gamma.str());
  }
}

}  // namespace

FracPoly conformable_derivative(const FracPoly& p, const Rational& gamma) {
  require_unit_order(gamma);
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    if (t.exponent.is_zero()) continue;
    out.push_back(Term{t.exponent - gamma, t.coeff * t.exponent});
  }
  return FracPoly(std::move(out));
}

Rational sequential_factor(const Rational& b, const Rational& gamma) {
  if (gamma.sign() <= 0) throw DomainError("derivative order must be positive");
  const unsigned whole = static_cast<unsigned>(gamma.floor().get_ui());
  const unsigned factors = gamma.is_integer() ? whole : whole + 1;
  return falling_product(b, factors);
}

FracPoly sequential_derivative(const FracPoly& p, const Rational& gamma) {
  if (gamma.sign() <= 0) throw DomainError("derivative order must be positive");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    out.push_back(Term{t.exponent - gamma, t.coeff * sequential_factor(t.exponent, gamma)});
  }
  return FracPoly(std::move(out));
}

FracPoly conformable_integral(const FracPoly& p, const Rational& gamma) {
  require_unit_order(gamma);
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    const Rational e = t.exponent + gamma;
    if (e.is_zero()) throw DomainError("conformable integral of x^(-gamma) diverges");
    out.push_back(Term{e, t.coeff / e});
  }
  return FracPoly(std::move(out));
}

}  // namespace cflp
