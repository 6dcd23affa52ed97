#include "cflp/quad.hpp"

#include "cflp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace cflp {

double QuadRule::integrate(const std::function<double(double)>& f) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
  return sum;
}

std::pair<double, double> legendre_with_derivative(unsigned n, double z) {
  if (n == 0) return {1.0, 0.0};
  double prev = 1.0;
  double curr = z;
  for (unsigned j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0) * z * curr - j * prev) / (j + 1.0);
    prev = curr;
    curr = next;
  }
  // (1 - z^2) P_n' = n (P_{n-1} - z P_n); only used away from z = +-1.
  const double deriv = n * (prev - z * curr) / (1.0 - z * z);
  return {curr, deriv};
}

std::vector<double> legendre_roots(unsigned n, double tol) {
  constexpr int kMaxIter = 100;
  std::vector<double> roots;
  roots.reserve(n);
  for (unsigned i = 1; i <= n; ++i) {
    double z = std::cos(std::numbers::pi * (4.0 * i - 1.0) / (4.0 * n + 2.0));
    bool converged = false;
    for (int it = 0; it < kMaxIter; ++it) {
      const auto [p, dp] = legendre_with_derivative(n, z);
      const double dz = p / dp;
      z -= dz;
      if (std::abs(dz) < tol) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw NoConvergence("Legendre root " + std::to_string(i) + " of degree " +
                          std::to_string(n) + " did not converge");
    }
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

QuadRule gauss_legendre(unsigned order) {
  if (order < 1 || order > 256) {
    throw DomainError("Gauss-Legendre order must be in [1, 256], got " + std::to_string(order));
  }
  QuadRule rule;
  rule.order = order;
  const auto roots = legendre_roots(order, 1e-15);
  rule.nodes.reserve(order);
  rule.weights.reserve(order);
  for (const double z : roots) {
    const double dp = legendre_with_derivative(order, z).second;
    // Weight on [-1, 1] is 2 / ((1 - z^2) P'^2); the affine map halves it.
    rule.nodes.push_back((1.0 + z) / 2.0);
    rule.weights.push_back(1.0 / ((1.0 - z * z) * dp * dp));
  }
  return rule;
}

double conformable_quad(const std::function<double(double)>& f, double a, double b,
                        const Alpha& alpha, unsigned order) {
  if (a < 0.0 || !(b > a)) throw DomainError("conformable_quad needs 0 <= a < b");
  const double inv = 1.0 / alpha.to_double();
  const double ua = std::pow(a, alpha.to_double());
  const double ub = std::pow(b, alpha.to_double());
  const QuadRule rule = gauss_legendre(order);
  const double width = ub - ua;
  const double integral =
      rule.integrate([&](double s) { return f(std::pow(ua + width * s, inv)); });
  return integral * width * inv;
}

}  // namespace cflp
