#include "cflp/hypergeometric.hpp"

#include "cflp/errors.hpp"

#include <cmath>
#include <string>

namespace cflp {

namespace {

bool nonpositive_integer(const Rational& r) { return r.is_integer() && r.sign() <= 0; }

}  // namespace

double hyp2f1_terminating(long neg_n, const Rational& b, const Rational& c, double z) {
  if (neg_n > 0) throw DomainError("terminating 2F1 needs a non-positive first parameter");
  const unsigned terms = static_cast<unsigned>(-neg_n);
  const Rational a(static_cast<std::int64_t>(neg_n));

  // Extended-precision accumulation: terms can be far larger than the result.
  long double sum = 1.0L;
  long double zk = 1.0L;
  Rational coeff(1);
  for (unsigned k = 0; k < terms; ++k) {
    const Rational ck = c + Rational(static_cast<std::int64_t>(k));
    if (ck.is_zero()) {
      throw PochhammerPole("(c)_" + std::to_string(k + 1) + " vanishes for c = " + c.str());
    }
    coeff *= (a + Rational(static_cast<std::int64_t>(k))) *
             (b + Rational(static_cast<std::int64_t>(k))) /
             (ck * Rational(static_cast<std::int64_t>(k + 1)));
    zk *= z;
    sum += static_cast<long double>(coeff.to_double()) * zk;
  }
  return static_cast<double>(sum);
}

double hyp2f1_series(const Rational& a, const Rational& b, const Rational& c, double z) {
  if (nonpositive_integer(a)) {
    return hyp2f1_terminating(a.floor().get_si(), b, c, z);
  }
  if (nonpositive_integer(b)) {
    return hyp2f1_terminating(b.floor().get_si(), a, c, z);
  }
  if (nonpositive_integer(c)) throw PochhammerPole("2F1 lower parameter " + c.str());
  if (!(std::abs(z) < 1.0)) throw DomainError("2F1 series diverges for |z| >= 1");

  constexpr int kMaxTerms = 100000;
  const double ad = a.to_double();
  const double bd = b.to_double();
  const double cd = c.to_double();
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (ad + k) * (bd + k) / ((cd + k) * (k + 1)) * z;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && k > 2) return sum;
    if (term == 0.0) return sum;
  }
  throw NoConvergence("2F1 series did not converge");
}

}  // namespace cflp
