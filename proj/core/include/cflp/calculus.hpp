#pragma once

#include "cflp/fracpoly.hpp"
#include "cflp/rational.hpp"

namespace cflp {

/// Conformable derivative of order gamma in (0, 1]: x^b -> b x^(b - gamma).
/// Constant terms vanish. Throws DomainError for gamma outside (0, 1].
FracPoly conformable_derivative(const FracPoly& p, const Rational& gamma);

/// Sequential derivative of order gamma > 0.
///
/// Non-integer gamma: floor(gamma) classical derivatives followed by a
/// conformable derivative of order gamma - floor(gamma), i.e. the falling
/// product b(b-1)...(b-floor(gamma)) with floor(gamma)+1 factors.
/// Integer gamma: the classical gamma-fold derivative, b(b-1)...(b-gamma+1).
FracPoly sequential_derivative(const FracPoly& p, const Rational& gamma);

/// Coefficient multiplying x^(b - gamma) when D^gamma acts on x^b, using the
/// same integer / non-integer split as sequential_derivative.
Rational sequential_factor(const Rational& b, const Rational& gamma);

/// Conformable integral I_gamma with lower limit 0: x^b -> x^(b+gamma)/(b+gamma).
FracPoly conformable_integral(const FracPoly& p, const Rational& gamma);

}  // namespace cflp
