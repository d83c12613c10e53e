#pragma once

#include <cstddef>
#include <vector>

#include "egs/execution.hpp"
#include "egs/rings.hpp"

namespace egs {

/// Dense row-major matrix over one ring. Zero-row and zero-column shapes are
/// allowed.
class Matrix {
 public:
  Matrix(RingDescriptor ring, std::size_t rows, std::size_t cols);
  static Matrix identity(const RingDescriptor& ring, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingDescriptor& ring() const { return ring_; }

  RingElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RingElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<RingElement> column(std::size_t c) const;
  void swap_columns(std::size_t a, std::size_t b);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  RingDescriptor ring_;
  std::size_t rows_, cols_;
  std::vector<RingElement> data_;
};

/// Fraction-free (Bareiss) determinant; every division is exact. The parallel
/// path distributes the row updates of each elimination step.
RingElement determinant(const Matrix& m, Execution exec = Execution::parallel);

/// Laplace expansion along the first column. Exponential; reference route for
/// small matrices.
RingElement laplace_determinant(const Matrix& m);

}  // namespace egs
