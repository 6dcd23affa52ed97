#pragma once

#include "cflp/rational.hpp"

namespace cflp {

/// Terminating Gauss series 2F1(neg_n, b; c; z) with neg_n <= 0.
///
/// Term coefficients (neg_n)_k (b)_k / ((c)_k k!) are exact rationals; each is
/// rounded to double only when multiplied by z^k. Throws PochhammerPole when
/// (c)_k vanishes before the series terminates and DomainError when neg_n > 0.
double hyp2f1_terminating(long neg_n, const Rational& b, const Rational& c, double z);

/// Gauss series 2F1(a, b; c; z) summed until terms fall below machine
/// precision relative to the partial sum. Requires |z| < 1 unless the series
/// terminates; throws DomainError otherwise and NoConvergence if the term cap
/// is reached.
double hyp2f1_series(const Rational& a, const Rational& b, const Rational& c, double z);

}  // namespace cflp
