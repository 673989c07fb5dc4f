#ifndef HYPTORSION_MATRIX_HPP
#define HYPTORSION_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hyptorsion/errors.hpp"
#include "hyptorsion/exactnum.hpp"

namespace hyptorsion {

// Row-major dense matrix over any exact ring.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

// Fraction-free elimination; every division is exact.
template <class T>
T determinant(Matrix<T> m) {
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() != n) throw DomainError("determinant of a non-square or empty matrix");
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const T zero = m(0, 0) - m(0, 0);
  bool negate = false;
  T prev = T();
  bool have_prev = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t r = k + 1;
      while (r < n && is_zero(m(r, k))) ++r;
      if (r == n) return zero;
      m.swap_rows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = have_prev ? exact_quotient(v, prev) : std::move(v);
      }
      m(i, k) = zero;
    }
    prev = m(k, k);
    have_prev = true;
  }
  return negate ? zero - m(n - 1, n - 1) : m(n - 1, n - 1);
}

// Rank over a field by Gaussian elimination.
template <class K>
std::size_t rank(Matrix<K> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    K inv = inverse(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      K f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace hyptorsion

#endif
