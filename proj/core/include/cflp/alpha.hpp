#pragma once

#include "cflp/rational.hpp"

#include <string_view>

namespace cflp {

/// Fractional order in (0, 1]. When the value is 1/(2j+1) the power x^alpha
/// is real for negative x and the flag odd_reciprocal() is set.
class Alpha {
public:
  /// Throws DomainError unless 0 < value <= 1.
  explicit Alpha(Rational value);

  static Alpha parse(std::string_view text);

  const Rational& value() const { return value_; }
  bool odd_reciprocal() const { return odd_reciprocal_; }
  double to_double() const { return value_.to_double(); }

  friend bool operator==(const Alpha&, const Alpha&) = default;

private:
  Rational value_;
  bool odd_reciprocal_ = false;
};

}  // namespace cflp
