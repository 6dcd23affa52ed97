#pragma once

#include "cflp/alpha.hpp"
#include "cflp/fracpoly.hpp"
#include "cflp/rational.hpp"

#include <vector>

namespace cflp {

/// x^(k * alpha) with unit coefficient.
FracPoly alpha_power(unsigned k, const Alpha& alpha);

/// Conformable fractional Legendre polynomial P_{alpha n} from its explicit
/// sum over x^(alpha (n - 2k)), k = 0..floor(n/2).
FracPoly cflp(unsigned n, const Alpha& alpha);

/// Independent constructions of P_{alpha n}. Each must reproduce cflp()
/// exactly.
enum class CflpForm {
  ExplicitSum,
  Recurrence,          // (n+1)P_{n+1} = (2n+1) x^a P_n - n P_{n-1}
  GenFunSeries,        // coefficient of t^(a n) in (1 - 2x^a t^a + t^(2a))^(-1/2)
  OddHalfExpansion,    // sum over x^(a(n-2k)) (x^(2a) - 1)^k
  ShiftedArgExpansion  // sum over ((x^a + 1)/2)^k
};

inline constexpr CflpForm kAllCflpForms[] = {CflpForm::ExplicitSum, CflpForm::Recurrence,
                                             CflpForm::GenFunSeries, CflpForm::OddHalfExpansion,
                                             CflpForm::ShiftedArgExpansion};

const char* to_string(CflpForm form);

FracPoly cflp_via(CflpForm form, unsigned n, const Alpha& alpha);

/// Hypergeometric representations of P_{alpha n}(x).
enum class HypForm {
  AtOneMinusX,     // 2F1(-n, n+1; 1; (1 - x^a)/2)
  AtInverseSquare, // (1/2)_n (2x^a)^n / n! 2F1(-n/2, -n/2+1/2; 1/2-n; x^(-2a))
  AtShiftedSquare  // x^(a n) 2F1(-n/2, -n/2+1/2; 1; (x^(2a) - 1)/x^(2a))
};

inline constexpr HypForm kAllHypForms[] = {HypForm::AtOneMinusX, HypForm::AtInverseSquare,
                                           HypForm::AtShiftedSquare};

const char* to_string(HypForm form);

/// P_{alpha n}(x) through a hypergeometric identity. The last two forms
/// require x^alpha != 0 (DomainError).
double cflp_hyp(unsigned n, const Alpha& alpha, double x, HypForm form);

/// Laplace's first integral (1/pi) int_0^pi (x^a + sqrt(x^(2a) - 1) cos phi)^n dphi
/// by composite Simpson with quad_points panels. Requires x^alpha >= 1 and
/// quad_points >= 8 (DomainError).
double laplace_integral(unsigned n, const Alpha& alpha, double x, unsigned quad_points);

struct GenFunValues {
  double closed = 0.0;   // (1 - x^a t^a)^(-c) 2F1(c/2, c/2+1/2; 1; z)
  double partial = 0.0;  // sum_{n<=N} (c)_n / n! P_{alpha n}(x) t^(alpha n)
};

/// Compares the c-parameter generating function with its truncated series.
/// Enforces |t^alpha| <= 0.5, |x^alpha| <= 1.5, a positive radicand
/// 1 - 2x^a t^a + t^(2a), and a convergent 2F1 argument; DomainError otherwise.
GenFunValues genfun_check(double x, double t, const Alpha& alpha, unsigned N, const Rational& c);

struct ExpansionTerm {
  unsigned degree = 0;
  Rational coeff;

  friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
};

/// x^(alpha n) = sum coeff * P_{alpha degree}, degrees n, n-2, ..., in that
/// order.
std::vector<ExpansionTerm> expand_monomial(unsigned n, const Alpha& alpha);

enum class Interval {
  Symmetric,  // [-1, 1]; needs an odd-reciprocal order
  Unit        // [0, 1]
};

/// Exact int p q x^(alpha - 1) dx over the interval via u = x^alpha.
/// Throws DomainError for [-1, 1] with a non odd-reciprocal alpha and
/// NonCommensurate when some exponent of p q is not a non-negative integer
/// multiple of alpha.
Rational inner_product(const FracPoly& p, const FracPoly& q, const Alpha& alpha,
                       Interval interval);

/// I_gamma P_{alpha n}, built term by term from the closed form.
FracPoly cflp_integral(unsigned n, const Alpha& alpha, const Rational& gamma);

/// Classical Legendre P_n(u) by the three-term recurrence.
double legendre_value(unsigned n, double u);

}  // namespace cflp
