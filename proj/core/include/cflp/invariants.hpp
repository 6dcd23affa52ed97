#pragma once

#include "cflp/alpha.hpp"

#include <string>
#include <vector>

namespace cflp {

/// Outcome of one exact identity check for a single (n, alpha).
struct InvariantResult {
  std::string name;
  unsigned n = 0;
  Alpha alpha{Rational(1)};
  bool pass = false;
};

/// Runs every exact identity that applies to degree n and order alpha:
/// construction routes, the conformable Legendre equation, recurrences,
/// orthogonality, Rodrigues formulas, monomial expansion, the shifted
/// family, and parity when alpha = 1/(2j+1).
std::vector<InvariantResult> check_invariants(unsigned n, const Alpha& alpha);

}  // namespace cflp
