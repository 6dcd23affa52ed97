#pragma once

#include "cflp/alpha.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace cflp {

/// Quadrature rule on [0, 1]: nodes strictly increasing, weights summing to 1.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  unsigned order = 0;

  /// sum_i w_i f(node_i)
  double integrate(const std::function<double(double)>& f) const;
};

inline constexpr unsigned kDefaultQuadOrder = 64;

/// P_n(z) and P_n'(z) for the classical Legendre polynomial on [-1, 1].
std::pair<double, double> legendre_with_derivative(unsigned n, double z);

/// Roots of P_n on (-1, 1) in ascending order by Newton iteration from
/// Chebyshev-type initial guesses, stopping when |dz| < tol. Throws
/// NoConvergence after 100 iterations for any root.
std::vector<double> legendre_roots(unsigned n, double tol);

/// Gauss-Legendre rule with `order` points mapped to [0, 1]; exact for
/// polynomials of degree <= 2 order - 1. Supports 1 <= order <= 256
/// (DomainError outside).
QuadRule gauss_legendre(unsigned order);

/// int_a^b f(x) x^(alpha-1) dx computed as (1/alpha) int_{a^alpha}^{b^alpha}
/// f(u^(1/alpha)) du with a Gauss-Legendre rule in u.
double conformable_quad(const std::function<double(double)>& f, double a, double b,
                        const Alpha& alpha, unsigned order = kDefaultQuadOrder);

}  // namespace cflp
