#pragma once

#include <vector>

#include "momentmap/rational.hpp"

namespace momentmap {

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& rhs) const;
  bool operator==(const RatMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
  }

  /// Leading principal submatrix of the given order (order 0 allowed).
  RatMatrix leading_principal(std::size_t order) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Exact determinant. Denominators are cleared row-wise, then the integer
/// matrix is reduced by fraction-free (Bareiss) elimination; the empty
/// 0x0 determinant is 1.
Rat det_exact(const RatMatrix& m);

}  // namespace momentmap
