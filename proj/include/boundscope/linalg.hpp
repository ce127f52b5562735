#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace boundscope {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  [[nodiscard]] std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  [[nodiscard]] double max_asymmetry() const;
  [[nodiscard]] double frobenius_norm() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

std::vector<double> multiply(const Matrix& a, std::span<const double> x);

struct SymmetricEigen {
  /// Ascending eigenvalues.
  std::vector<double> values;
  /// Column k is the unit eigenvector for values[k].
  Matrix vectors;
};

/// Full eigendecomposition of a symmetric matrix by Householder
/// tridiagonalization followed by implicit-shift QL iteration.
/// Only the lower triangle is read.
SymmetricEigen symmetric_eigen(const Matrix& a);

/// Lower-triangular L with B = L L^T. Throws ConditioningError when a pivot
/// is not safely positive.
Matrix cholesky(const Matrix& b);

/// Euclidean norm.
double norm2(std::span<const double> x);

}  // namespace boundscope
