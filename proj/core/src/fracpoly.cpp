#include "cflp/fracpoly.hpp"

#include "cflp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace cflp {

namespace {

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().exponent == t.exponent) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  terms = std::move(merged);
}

bool odd_denominator(const Rational& r) {
  return mpz_odd_p(r.denominator().get_mpz_t()) != 0;
}

}  // namespace

FracPoly::FracPoly(std::vector<Term> terms) : terms_(std::move(terms)) { canonicalize(terms_); }

FracPoly FracPoly::constant(const Rational& c) { return monomial(Rational(0), c); }

FracPoly FracPoly::monomial(const Rational& exponent, const Rational& coeff) {
  return FracPoly({Term{exponent, coeff}});
}

Rational FracPoly::coefficient(const Rational& exponent) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const Term& t, const Rational& e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return Rational(0);
}

std::optional<Rational> FracPoly::leading_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().exponent;
}

FracPoly& FracPoly::operator+=(const FracPoly& rhs) {
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  canonicalize(terms_);
  return *this;
}

FracPoly& FracPoly::operator-=(const FracPoly& rhs) { return *this += -rhs; }

FracPoly& FracPoly::operator*=(const FracPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

FracPoly& FracPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

FracPoly operator*(const FracPoly& a, const FracPoly& b) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      out.push_back(Term{s.exponent + t.exponent, s.coeff * t.coeff});
    }
  }
  return FracPoly(std::move(out));
}

FracPoly FracPoly::operator-() const {
  FracPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

std::string FracPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->coeff;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    c = abs(c);
    const bool unit = c == Rational(1);
    if (it->exponent.is_zero()) {
      os << c;
    } else {
      if (!unit) os << c << "*";
      os << "x";
      if (it->exponent != Rational(1)) os << "^(" << it->exponent << ")";
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FracPoly& p) { return os << p.str(); }

FracPoly pow(const FracPoly& p, unsigned k) {
  FracPoly result = FracPoly::constant(Rational(1));
  FracPoly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

double eval(const FracPoly& p, double x) {
  // Extended-precision accumulation limits cancellation between large terms.
  long double sum = 0.0L;
  for (const auto& t : p.terms()) {
    long double power = 1.0L;
    if (!t.exponent.is_zero()) {
      const long double e = t.exponent.to_double();
      if (x < 0.0) {
        if (!odd_denominator(t.exponent)) {
          throw NegativeBaseEvenRoot("x^(" + t.exponent.str() + ") undefined for x < 0");
        }
        const bool odd_numerator = mpz_odd_p(t.exponent.numerator().get_mpz_t()) != 0;
        power = std::pow(static_cast<long double>(-x), e);
        if (odd_numerator) power = -power;
      } else {
        power = std::pow(static_cast<long double>(x), e);
      }
    }
    sum += static_cast<long double>(t.coeff.to_double()) * power;
  }
  return static_cast<double>(sum);
}

FracPoly reflect(const FracPoly& p) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    if (!odd_denominator(t.exponent)) {
      throw NegativeBaseEvenRoot("cannot reflect x^(" + t.exponent.str() + ")");
    }
    const bool odd_numerator = mpz_odd_p(t.exponent.numerator().get_mpz_t()) != 0;
    out.push_back(Term{t.exponent, odd_numerator ? -t.coeff : t.coeff});
  }
  return FracPoly(std::move(out));
}

FracPoly substitute(const FracPoly& p, const FracPoly& q) {
  for (const auto& t : p.terms()) {
    if (!t.exponent.is_integer() || t.exponent.sign() < 0) {
      throw DomainError("substitute needs non-negative integer exponents, got " +
                        t.exponent.str());
    }
  }
  if (p.is_zero()) return p;
  // Horner from the leading degree down.
  const unsigned degree = static_cast<unsigned>(p.terms().back().exponent.numerator().get_ui());
  FracPoly acc;
  for (unsigned d = degree + 1; d-- > 0;) {
    acc = acc * q + FracPoly::constant(p.coefficient(Rational(static_cast<std::int64_t>(d))));
  }
  return acc;
}

}  // namespace cflp
