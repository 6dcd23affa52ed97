#include "cflp/legendre.hpp"

#include "cflp/errors.hpp"
#include "cflp/hypergeometric.hpp"

#include <cmath>
#include <numbers>

namespace cflp {

namespace {

Rational fact(unsigned n) { return Rational(factorial(n), mpz_class(1)); }

Rational r(std::int64_t v) { return Rational(v); }

Rational sign_power(unsigned k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

// Explicit-sum coefficient of x^(alpha (n - 2k)).
Rational explicit_coeff(unsigned n, unsigned k) {
  return sign_power(k) * fact(2 * n - 2 * k) /
         (pow(Rational(2), n) * fact(k) * fact(n - k) * fact(n - 2 * k));
}

FracPoly by_recurrence(unsigned n, const Alpha& alpha) {
  FracPoly prev = FracPoly::constant(r(1));
  if (n == 0) return prev;
  FracPoly curr = alpha_power(1, alpha);
  const FracPoly x = curr;
  for (unsigned j = 1; j < n; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    FracPoly next = (Rational(2 * jj + 1) * (x * curr) - Rational(jj) * prev) *
                    inverse(Rational(jj + 1));
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

// Power series in T = t^alpha whose coefficients are fractional polynomials
// in x, truncated after degree `order`.
using Series = std::vector<FracPoly>;

Series series_mul(const Series& a, const Series& b, unsigned order) {
  Series out(order + 1);
  for (unsigned i = 0; i <= order && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= order && j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

FracPoly by_generating_function(unsigned n, const Alpha& alpha) {
  // (1 - w)^(-1/2) = sum_k (1/2)_k / k! w^k with w = 2 x^a T - T^2; w^k
  // starts at T^k so k <= n suffices.
  Series w(n + 1);
  if (n >= 1) w[1] = FracPoly::monomial(alpha.value(), r(2));
  if (n >= 2) w[2] = FracPoly::constant(r(-1));

  FracPoly coefficient;
  Series wk(n + 1);
  wk[0] = FracPoly::constant(r(1));
  for (unsigned k = 0; k <= n; ++k) {
    coefficient += wk[n] * (pochhammer(Rational(1, 2), k) / fact(k));
    if (k < n) wk = series_mul(wk, w, n);
  }
  return coefficient;
}

FracPoly by_odd_half_expansion(unsigned n, const Alpha& alpha) {
  const FracPoly x2m1 = alpha_power(2, alpha) - FracPoly::constant(r(1));
  FracPoly sum;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const Rational c =
        pochhammer(Rational(1, 2), k) * fact(n) / (fact(2 * k) * fact(k) * fact(n - 2 * k));
    sum += (alpha_power(n - 2 * k, alpha) * pow(x2m1, k)) * c;
  }
  return sum;
}

FracPoly by_shifted_argument(unsigned n, const Alpha& alpha) {
  const FracPoly half_shift =
      (alpha_power(1, alpha) + FracPoly::constant(r(1))) * Rational(1, 2);
  FracPoly sum;
  FracPoly power = FracPoly::constant(r(1));
  for (unsigned k = 0; k <= n; ++k) {
    const Rational c = sign_power(n + k) * fact(n + k) / (fact(k) * fact(k) * fact(n - k));
    sum += power * c;
    power *= half_shift;
  }
  return sum;
}

// x^alpha evaluated with the negative-base rule.
double alpha_pow(const Alpha& alpha, double x) {
  return eval(FracPoly::monomial(alpha.value()), x);
}

}  // namespace

FracPoly alpha_power(unsigned k, const Alpha& alpha) {
  return FracPoly::monomial(alpha.value() * Rational(static_cast<std::int64_t>(k)));
}

FracPoly cflp(unsigned n, const Alpha& alpha) {
  std::vector<Term> terms;
  terms.reserve(n / 2 + 1);
  for (unsigned k = 0; 2 * k <= n; ++k) {
    terms.push_back(Term{alpha.value() * Rational(static_cast<std::int64_t>(n - 2 * k)),
                         explicit_coeff(n, k)});
  }
  return FracPoly(std::move(terms));
}

const char* to_string(CflpForm form) {
  switch (form) {
    case CflpForm::ExplicitSum: return "explicit_sum";
    case CflpForm::Recurrence: return "recurrence";
    case CflpForm::GenFunSeries: return "generating_function";
    case CflpForm::OddHalfExpansion: return "odd_half_expansion";
    case CflpForm::ShiftedArgExpansion: return "shifted_arg_expansion";
  }
  return "unknown";
}

FracPoly cflp_via(CflpForm form, unsigned n, const Alpha& alpha) {
  switch (form) {
    case CflpForm::ExplicitSum: return cflp(n, alpha);
    case CflpForm::Recurrence: return by_recurrence(n, alpha);
    case CflpForm::GenFunSeries: return by_generating_function(n, alpha);
    case CflpForm::OddHalfExpansion: return by_odd_half_expansion(n, alpha);
    case CflpForm::ShiftedArgExpansion: return by_shifted_argument(n, alpha);
  }
  throw DomainError("unknown CFLP form");
}

const char* to_string(HypForm form) {
  switch (form) {
    case HypForm::AtOneMinusX: return "one_minus_x";
    case HypForm::AtInverseSquare: return "inverse_square";
    case HypForm::AtShiftedSquare: return "shifted_square";
  }
  return "unknown";
}

double cflp_hyp(unsigned n, const Alpha& alpha, double x, HypForm form) {
  const double xa = alpha_pow(alpha, x);
  const auto nn = static_cast<std::int64_t>(n);
  const Rational half_n(-nn, 2);
  const Rational half_n_plus(1 - nn, 2);
  switch (form) {
    case HypForm::AtOneMinusX:
      return hyp2f1_terminating(-static_cast<long>(n), Rational(nn + 1), Rational(1),
                                (1.0 - xa) / 2.0);
    case HypForm::AtInverseSquare: {
      if (xa == 0.0) throw DomainError("inverse-square form needs x^alpha != 0");
      const double scale = (pochhammer(Rational(1, 2), n) / fact(n)).to_double() *
                           std::pow(2.0 * xa, static_cast<double>(n));
      return scale *
             hyp2f1_series(half_n, half_n_plus, Rational(1, 2) - Rational(nn), 1.0 / (xa * xa));
    }
    case HypForm::AtShiftedSquare: {
      if (xa == 0.0) throw DomainError("shifted-square form needs x^alpha != 0");
      return std::pow(xa, static_cast<double>(n)) *
             hyp2f1_series(half_n, half_n_plus, Rational(1), (xa * xa - 1.0) / (xa * xa));
    }
  }
  throw DomainError("unknown hypergeometric form");
}

double laplace_integral(unsigned n, const Alpha& alpha, double x, unsigned quad_points) {
  if (quad_points < 8) throw DomainError("laplace_integral needs at least 8 panels");
  const double xa = alpha_pow(alpha, x);
  if (!(xa >= 1.0)) throw DomainError("laplace_integral needs x^alpha >= 1");
  const long double u = xa;
  const long double root = std::sqrt(u * u - 1.0L);
  const auto integrand = [&](long double phi) {
    return std::pow(u + root * std::cos(phi), static_cast<long double>(n));
  };
  const long double h = std::numbers::pi_v<long double> / quad_points;
  long double sum = 0.0L;
  for (unsigned i = 0; i < quad_points; ++i) {
    const long double a = i * h;
    sum += integrand(a) + 4.0L * integrand(a + h / 2) + integrand(a + h);
  }
  return static_cast<double>(sum * h / 6.0L / std::numbers::pi_v<long double>);
}

GenFunValues genfun_check(double x, double t, const Alpha& alpha, unsigned N,
                          const Rational& c) {
  const double xa = alpha_pow(alpha, x);
  const double ta = alpha_pow(alpha, t);
  if (std::abs(ta) > 0.5 || std::abs(xa) > 1.5) {
    throw DomainError("generating function checked only for |t^a| <= 0.5, |x^a| <= 1.5");
  }
  const double radicand = 1.0 - 2.0 * xa * ta + ta * ta;
  if (!(radicand > 0.0)) throw DomainError("non-positive radicand 1 - 2x^a t^a + t^2a");

  const double base = 1.0 - xa * ta;
  const double z = (xa * xa - 1.0) * ta * ta / (base * base);
  GenFunValues out;
  out.closed = std::pow(base, -c.to_double()) *
               hyp2f1_series(c * Rational(1, 2), c * Rational(1, 2) + Rational(1, 2), Rational(1), z);

  double tn = 1.0;
  for (unsigned n = 0; n <= N; ++n) {
    const Rational weight = pochhammer(c, n) / fact(n);
    if (!weight.is_zero()) out.partial += weight.to_double() * eval(cflp(n, alpha), x) * tn;
    tn *= ta;
  }
  return out;
}

std::vector<ExpansionTerm> expand_monomial(unsigned n, const Alpha& /*alpha*/) {
  std::vector<ExpansionTerm> out;
  const Rational scale = fact(n) / pow(Rational(2), n);
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const auto nn = static_cast<std::int64_t>(n);
    const auto kk = static_cast<std::int64_t>(k);
    const Rational c =
        scale * Rational(2 * nn - 4 * kk + 1) / (fact(k) * pochhammer(Rational(3, 2), n - k));
    out.push_back(ExpansionTerm{n - 2 * k, c});
  }
  return out;
}

Rational inner_product(const FracPoly& p, const FracPoly& q, const Alpha& alpha,
                       Interval interval) {
  if (interval == Interval::Symmetric && !alpha.odd_reciprocal()) {
    throw DomainError("[-1, 1] needs alpha = 1/(2j+1), got " + alpha.value().str());
  }
  Rational total(0);
  const FracPoly product = p * q;
  for (const auto& t : product.terms()) {
    const Rational j = t.exponent / alpha.value();
    if (!j.is_integer() || j.sign() < 0) {
      throw NonCommensurate("exponent " + t.exponent.str() + " is not a multiple of " +
                            alpha.value().str());
    }
    // int u^j du over [0,1] or [-1,1].
    const Rational jp1 = j + Rational(1);
    Rational u_integral = inverse(jp1);
    if (interval == Interval::Symmetric) {
      const bool even = mpz_even_p(j.numerator().get_mpz_t()) != 0;
      u_integral = even ? u_integral * Rational(2) : Rational(0);
    }
    total += t.coeff * u_integral;
  }
  return total / alpha.value();
}

FracPoly cflp_integral(unsigned n, const Alpha& alpha, const Rational& gamma) {
  if (gamma.sign() <= 0 || gamma > Rational(1)) {
    throw DomainError("integral order must lie in (0, 1]");
  }
  std::vector<Term> terms;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const Rational e =
        alpha.value() * Rational(static_cast<std::int64_t>(n - 2 * k)) + gamma;
    terms.push_back(Term{e, explicit_coeff(n, k) / e});
  }
  return FracPoly(std::move(terms));
}

double legendre_value(unsigned n, double u) {
  double prev = 1.0;
  if (n == 0) return prev;
  double curr = u;
  for (unsigned j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0) * u * curr - j * prev) / (j + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace cflp
