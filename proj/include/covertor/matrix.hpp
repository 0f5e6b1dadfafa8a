#pragma once

#include <string>
#include <vector>

#include "covertor/rational.hpp"

namespace covertor {

/// Row-major matrix over a value type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  Matrix(int rows, int cols, const T& fill)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(IntMatrix m);

/// Cokernel of an integer matrix, Z^rows / image, as invariant factors
/// d_1 | d_2 | ... (each >= 2) plus a free rank.
struct AbelianGroupSNF {
  std::vector<Integer> factors;
  int free_rank = 0;

  bool is_finite() const noexcept { return free_rank == 0; }
  /// Group order, or 0 when the group is infinite.
  Integer order() const;
  std::string to_string() const;
  friend bool operator==(const AbelianGroupSNF&, const AbelianGroupSNF&) = default;
};

AbelianGroupSNF smith_normal_form(IntMatrix m);

}  // namespace covertor
