#include "cflp/alpha.hpp"

#include "cflp/errors.hpp"

#include <stdexcept>
#include <string>

namespace cflp {

Alpha::Alpha(Rational value) : value_(std::move(value)) {
  if (value_.sign() <= 0 || value_ > Rational(1)) {
    throw DomainError("fractional order must lie in (0, 1], got " + value_.str());
  }
  odd_reciprocal_ = value_.numerator() == 1 && mpz_odd_p(value_.denominator().get_mpz_t()) != 0;
}

Alpha Alpha::parse(std::string_view text) { return Alpha(Rational::parse(text)); }

}  // namespace cflp
