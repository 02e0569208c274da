#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "charpoly/rational.hpp"

namespace charpoly {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t r0, std::size_t r1);

  friend RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs);
  friend RationalMatrix operator+(const RationalMatrix& lhs, const RationalMatrix& rhs);
  friend RationalMatrix operator-(const RationalMatrix& lhs, const RationalMatrix& rhs);
  friend bool operator==(const RationalMatrix& lhs, const RationalMatrix& rhs) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled to integers by the lcm of its denominators; the
/// integer determinant is then computed with exact divisions only, and the
/// scaling is divided back out. The 0x0 determinant is 1. Singular input
/// returns 0. Throws DomainError for non-square input.
Rational exact_determinant(const RationalMatrix& m);

}  // namespace charpoly
