#include "egs/matrix.hpp"

#include <stdexcept>

namespace egs {

Matrix::Matrix(RingDescriptor ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, RingElement::zero(ring_)) {}

Matrix Matrix::identity(const RingDescriptor& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RingElement::one(ring);
  return m;
}

std::vector<RingElement> Matrix::column(std::size_t c) const {
  std::vector<RingElement> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

void Matrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RingElement determinant(const Matrix& input, Execution exec) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  const auto& ring = input.ring();
  if (n == 0) return RingElement::one(ring);

  Matrix m = input;
  RingElement prev = RingElement::one(ring);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return RingElement::zero(ring);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      negate = !negate;
    }
    // m(i,j) <- (m(k,k) m(i,j) - m(i,k) m(k,j)) / prev; the division is exact.
    auto update_row = [&](std::size_t i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      m(i, k) = RingElement::zero(ring);
    };
    if (exec == Execution::serial) {
      for (std::size_t i = k + 1; i < n; ++i) update_row(i);
    } else {
      ExceptionSlot slot;
      const long first = static_cast<long>(k + 1), last = static_cast<long>(n);
#pragma omp parallel for schedule(static)
      for (long i = first; i < last; ++i) slot.run([&] { update_row(static_cast<std::size_t>(i)); });
      slot.rethrow();
    }
    prev = m(k, k);
  }
  RingElement det = m(n - 1, n - 1);
  return negate ? -det : det;
}

namespace {

RingElement laplace(const Matrix& m, std::vector<std::size_t>& rows, std::size_t col) {
  const std::size_t n = m.cols();
  if (col == n) return RingElement::one(m.ring());
  RingElement sum = RingElement::zero(m.ring());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::size_t r = rows[k];
    if (m(r, col).is_zero()) continue;
    rows.erase(rows.begin() + static_cast<long>(k));
    RingElement term = m(r, col) * laplace(m, rows, col + 1);
    rows.insert(rows.begin() + static_cast<long>(k), r);
    if (k % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

}  // namespace

RingElement laplace_determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return laplace(m, rows, 0);
}

}  // namespace egs
