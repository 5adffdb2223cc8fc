#ifndef PUREBETTI_LINALG_HPP
#define PUREBETTI_LINALG_HPP

#include <cstddef>
#include <vector>

#include "purebetti/rational.hpp"

namespace purebetti {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/*
 * In-place reduction to reduced row echelon form, scanning columns left to
 * right. Within a column the pivot row is the candidate with the smallest
 * |numerator| (ties: smallest denominator, then lowest row), which keeps
 * coefficient growth down on the sparse 0/1 matrices the oracle produces.
 * Returns the pivot column of each of the first rank() rows.
 */
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of the right null space {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> null_space(Matrix m);

}  // namespace purebetti

#endif
