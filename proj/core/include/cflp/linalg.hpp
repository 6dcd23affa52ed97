#pragma once

#include <cstddef>
#include <vector>

namespace cflp {

/// Dense row-major matrix for the small collocation systems.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<double> row(std::size_t r) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct DenseSolution {
  std::vector<double> x;
  /// max |pivot| / min |pivot| from the elimination.
  double condition_estimate = 1.0;
};

/// Gaussian elimination with partial pivoting. Throws SingularSystem when a
/// pivot falls below 1e-12 times the largest entry of its original row.
DenseSolution solve_dense(const Matrix& a, const std::vector<double>& b);

}  // namespace cflp
