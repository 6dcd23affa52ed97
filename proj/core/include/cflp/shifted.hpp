#pragma once

#include "cflp/alpha.hpp"
#include "cflp/fracpoly.hpp"
#include "cflp/rational.hpp"

#include <functional>
#include <vector>

namespace cflp {

/// b_{s,n} = (-1)^(n+s) (n+s)! / ((n-s)! (s!)^2), s = 0..n: the coefficient
/// of x^(alpha s) in the shifted polynomial P*_{alpha n}.
struct SclpCoeffTable {
  unsigned n = 0;
  std::vector<Rational> b;
};

SclpCoeffTable sclp_coeffs(unsigned n);

/// Shifted polynomial P*_{alpha n} on [0, 1] from its analytic form.
FracPoly sclp(unsigned n, const Alpha& alpha);

/// P*_{alpha n} by the three-term recurrence in (2x^alpha - 1).
FracPoly sclp_recurrence(unsigned n, const Alpha& alpha);

/// (1/(alpha^n n!)) D^(alpha n) [x^(alpha n) (x^alpha - 1)^n], with D^(alpha n)
/// the n-fold conformable derivative.
FracPoly sclp_rodrigues(unsigned n, const Alpha& alpha);

/// (1/(alpha^n 2^n n!)) D^(alpha n) (x^(2 alpha) - 1)^n.
FracPoly cflp_rodrigues(unsigned n, const Alpha& alpha);

/// Classical shifted Legendre P*_n(u) on [0, 1] by recurrence; P*_{alpha n}(x)
/// equals this at u = x^alpha.
double shifted_legendre_value(unsigned n, double u);

struct RootSet {
  unsigned k = 0;
  Alpha alpha{Rational(1)};
  std::vector<double> roots;  // ascending, in (0, 1)
};

inline constexpr double kDefaultRootTol = 1e-14;

/// Roots of P*_{alpha k}: roots u_i of the classical shifted polynomial mapped
/// through u -> u^(1/alpha). Throws DomainError for k == 0 or tol <= 0.
RootSet sclp_roots(unsigned k, const Alpha& alpha, double tol = kDefaultRootTol);

/// Exact int_0^1 P*_{alpha n} P*_{alpha m} x^(alpha-1) dx.
Rational sclp_inner_product(unsigned n, unsigned m, const Alpha& alpha);

/// Spectral coefficients a_0..a_m of f in the shifted basis,
/// a_i = (2i+1) int_0^1 P*_i(u) f(u^(1/alpha)) du, by Gauss-Legendre in u.
/// Requires quad_points >= 16 (DomainError).
std::vector<double> project(const std::function<double(double)>& f, unsigned m,
                            const Alpha& alpha, unsigned quad_points);

}  // namespace cflp
