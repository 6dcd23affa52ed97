#include "cflp/invariants.hpp"

#include "cflp/calculus.hpp"
#include "cflp/legendre.hpp"
#include "cflp/shifted.hpp"

namespace cflp {

namespace {

FracPoly d(const FracPoly& p, const Alpha& a) { return conformable_derivative(p, a.value()); }

FracPoly x_alpha(const Alpha& a, const Rational& c = Rational(1)) {
  return FracPoly::monomial(a.value(), c);
}

bool constructions(unsigned n, const Alpha& a) {
  const FracPoly reference = cflp(n, a);
  for (const auto form : kAllCflpForms) {
    if (cflp_via(form, n, a) != reference) return false;
  }
  return true;
}

bool ode_residual(unsigned n, const Alpha& a) {
  // (1 - x^2a) D^a D^a y - 2a x^a D^a y + a^2 n(n+1) y = 0
  const Rational& al = a.value();
  const auto nn = static_cast<std::int64_t>(n);
  const FracPoly y = cflp(n, a);
  const FracPoly residual =
      (FracPoly::constant(Rational(1)) - FracPoly::monomial(al * Rational(2), Rational(1))) *
          d(d(y, a), a) -
      x_alpha(a, Rational(2) * al) * d(y, a) + y * (al * al * Rational(nn * (nn + 1)));
  return residual.is_zero();
}

bool recurrences(unsigned n, const Alpha& a) {
  const Rational& al = a.value();
  const auto nn = static_cast<std::int64_t>(n);
  const FracPoly pm = n == 0 ? FracPoly{} : cflp(n - 1, a);
  const FracPoly p = cflp(n, a);
  const FracPoly pp = cflp(n + 1, a);
  const FracPoly x = x_alpha(a);
  return (pp * Rational(nn + 1) - x * p * Rational(2 * nn + 1) + pm * Rational(nn)).is_zero() &&
         (d(pp, a) - p * (Rational(nn + 1) * al) - x * d(p, a)).is_zero() &&
         (x * d(p, a) - p * (Rational(nn) * al) - d(pm, a)).is_zero() &&
         d(pp, a) - d(pm, a) == p * (Rational(2 * nn + 1) * al);
}

bool orthogonality(unsigned n, const Alpha& a) {
  const auto nn = static_cast<std::int64_t>(n);
  const Rational unit_norm = inverse(a.value() * Rational(2 * nn + 1));
  if (sclp_inner_product(n, n, a) != unit_norm) return false;
  for (unsigned m = 0; m < n; ++m) {
    if (!sclp_inner_product(n, m, a).is_zero()) return false;
  }
  if (!a.odd_reciprocal()) return true;
  const FracPoly p = cflp(n, a);
  if (inner_product(p, p, a, Interval::Symmetric) != unit_norm * Rational(2)) return false;
  for (unsigned m = 0; m < n; ++m) {
    if (!inner_product(p, cflp(m, a), a, Interval::Symmetric).is_zero()) return false;
  }
  return true;
}

bool rodrigues(unsigned n, const Alpha& a) {
  return cflp_rodrigues(n, a) == cflp(n, a) && sclp_rodrigues(n, a) == sclp(n, a);
}

bool monomial_expansion(unsigned n, const Alpha& a) {
  FracPoly sum;
  for (const auto& t : expand_monomial(n, a)) sum += cflp(t.degree, a) * t.coeff;
  return sum == alpha_power(n, a);
}

bool shifted(unsigned n, const Alpha& a) {
  // Recurrence route, shift of the classical polynomial, and the shifted equation
  // x^a (1 - x^a) D^a D^a y - a (2x^a - 1) D^a y + a^2 n(n+1) y = 0.
  const FracPoly y = sclp(n, a);
  const FracPoly shift = x_alpha(a, Rational(2)) - FracPoly::constant(Rational(1));
  if (sclp_recurrence(n, a) != y) return false;
  if (substitute(cflp(n, Alpha(Rational(1))), shift) != y) return false;
  const Rational& al = a.value();
  const auto nn = static_cast<std::int64_t>(n);
  const FracPoly residual =
      x_alpha(a) * (FracPoly::constant(Rational(1)) - x_alpha(a)) * d(d(y, a), a) -
      shift * al * d(y, a) + y * (al * al * Rational(nn * (nn + 1)));
  return residual.is_zero();
}

bool parity(unsigned n, const Alpha& a) {
  const FracPoly p = cflp(n, a);
  return reflect(p) == (n % 2 == 0 ? p : -p);
}

}  // namespace

std::vector<InvariantResult> check_invariants(unsigned n, const Alpha& alpha) {
  std::vector<InvariantResult> out;
  const auto add = [&](const char* name, bool pass) {
    out.push_back(InvariantResult{name, n, alpha, pass});
  };
  add("constructions", constructions(n, alpha));
  add("ode_residual", ode_residual(n, alpha));
  add("recurrences", recurrences(n, alpha));
  add("orthogonality", orthogonality(n, alpha));
  add("rodrigues", rodrigues(n, alpha));
  add("monomial_expansion", monomial_expansion(n, alpha));
  add("shifted", shifted(n, alpha));
  if (alpha.odd_reciprocal()) add("parity", parity(n, alpha));
  return out;
}

}  // namespace cflp
