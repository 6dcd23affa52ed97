#include "cflp/linalg.hpp"

#include "cflp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace cflp {

std::vector<double> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

DenseSolution solve_dense(const Matrix& a, const std::vector<double>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw SingularSystem("system must be square");

  Matrix m = a;
  std::vector<double> rhs = b;
  std::vector<double> row_scale(n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) row_scale[r] = std::max(row_scale[r], std::abs(m(r, c)));
  }

  double max_pivot = 0.0;
  double min_pivot = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(m(r, k)) > std::abs(m(p, k))) p = r;
    }
    const double pivot = std::abs(m(p, k));
    if (pivot == 0.0 || pivot < 1e-12 * row_scale[p]) {
      throw SingularSystem("pivot " + std::to_string(pivot) + " in column " + std::to_string(k));
    }
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      std::swap(rhs[k], rhs[p]);
      std::swap(row_scale[k], row_scale[p]);
    }
    max_pivot = std::max(max_pivot, pivot);
    min_pivot = std::min(min_pivot, pivot);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = m(r, k) / m(k, k);
      if (f == 0.0) continue;
      for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
      rhs[r] -= f * rhs[k];
    }
  }

  DenseSolution out;
  out.x.assign(n, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    double s = rhs[k];
    for (std::size_t c = k + 1; c < n; ++c) s -= m(k, c) * out.x[c];
    out.x[k] = s / m(k, k);
  }
  out.condition_estimate = n == 0 ? 1.0 : max_pivot / min_pivot;
  return out;
}

}  // namespace cflp
