#include "cflp/shifted.hpp"

#include "cflp/calculus.hpp"
#include "cflp/errors.hpp"
#include "cflp/legendre.hpp"
#include "cflp/quad.hpp"

#include <cmath>

namespace cflp {

namespace {

Rational fact(unsigned n) { return Rational(factorial(n), mpz_class(1)); }

Rational binomial(unsigned n, unsigned k) { return fact(n) / (fact(k) * fact(n - k)); }

FracPoly repeated_conformable_derivative(FracPoly p, unsigned times, const Rational& order) {
  for (unsigned i = 0; i < times; ++i) p = conformable_derivative(p, order);
  return p;
}

}  // namespace

SclpCoeffTable sclp_coeffs(unsigned n) {
  SclpCoeffTable table;
  table.n = n;
  table.b.reserve(n + 1);
  for (unsigned s = 0; s <= n; ++s) {
    const Rational sign = ((n + s) % 2 == 0) ? Rational(1) : Rational(-1);
    table.b.push_back(sign * fact(n + s) / (fact(n - s) * fact(s) * fact(s)));
  }
  return table;
}

FracPoly sclp(unsigned n, const Alpha& alpha) {
  const auto table = sclp_coeffs(n);
  std::vector<Term> terms;
  terms.reserve(n + 1);
  for (unsigned s = 0; s <= n; ++s) {
    terms.push_back(Term{alpha.value() * Rational(static_cast<std::int64_t>(s)), table.b[s]});
  }
  return FracPoly(std::move(terms));
}

FracPoly sclp_recurrence(unsigned n, const Alpha& alpha) {
  FracPoly prev = FracPoly::constant(Rational(1));
  if (n == 0) return prev;
  const FracPoly shift = alpha_power(1, alpha) * Rational(2) - FracPoly::constant(Rational(1));
  FracPoly curr = shift;
  for (unsigned j = 1; j < n; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    FracPoly next = (Rational(2 * jj + 1) * (shift * curr) - Rational(jj) * prev) *
                    inverse(Rational(jj + 1));
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

FracPoly sclp_rodrigues(unsigned n, const Alpha& alpha) {
  // x^(a n) (x^a - 1)^n = sum_i (-1)^i C(n,i) x^(a(2n - i))
  std::vector<Term> kernel;
  for (unsigned i = 0; i <= n; ++i) {
    const Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
    kernel.push_back(
        Term{alpha.value() * Rational(static_cast<std::int64_t>(2 * n - i)), sign * binomial(n, i)});
  }
  const FracPoly d = repeated_conformable_derivative(FracPoly(std::move(kernel)), n, alpha.value());
  return d * inverse(pow(alpha.value(), n) * fact(n));
}

FracPoly cflp_rodrigues(unsigned n, const Alpha& alpha) {
  const FracPoly kernel = pow(alpha_power(2, alpha) - FracPoly::constant(Rational(1)), n);
  const FracPoly d = repeated_conformable_derivative(kernel, n, alpha.value());
  return d * inverse(pow(alpha.value(), n) * pow(Rational(2), n) * fact(n));
}

double shifted_legendre_value(unsigned n, double u) { return legendre_value(n, 2.0 * u - 1.0); }

RootSet sclp_roots(unsigned k, const Alpha& alpha, double tol) {
  if (k == 0) throw DomainError("sclp_roots needs k >= 1");
  if (!(tol > 0.0)) throw DomainError("sclp_roots needs tol > 0");
  RootSet set;
  set.k = k;
  set.alpha = alpha;
  set.roots.reserve(k);
  const double inv = 1.0 / alpha.to_double();
  for (const double z : legendre_roots(k, tol)) {
    const double u = (1.0 + z) / 2.0;
    set.roots.push_back(alpha.value() == Rational(1) ? u : std::pow(u, inv));
  }
  return set;
}

Rational sclp_inner_product(unsigned n, unsigned m, const Alpha& alpha) {
  return inner_product(sclp(n, alpha), sclp(m, alpha), alpha, Interval::Unit);
}

std::vector<double> project(const std::function<double(double)>& f, unsigned m,
                            const Alpha& alpha, unsigned quad_points) {
  if (quad_points < 16) throw DomainError("project needs at least 16 quadrature points");
  const QuadRule rule = gauss_legendre(quad_points);
  const double inv = 1.0 / alpha.to_double();
  std::vector<double> fx(rule.order);
  for (unsigned j = 0; j < rule.order; ++j) fx[j] = f(std::pow(rule.nodes[j], inv));

  std::vector<double> coeffs(m + 1, 0.0);
  for (unsigned i = 0; i <= m; ++i) {
    double sum = 0.0;
    for (unsigned j = 0; j < rule.order; ++j) {
      sum += rule.weights[j] * shifted_legendre_value(i, rule.nodes[j]) * fx[j];
    }
    coeffs[i] = (2.0 * i + 1.0) * sum;
  }
  return coeffs;
}

}  // namespace cflp
