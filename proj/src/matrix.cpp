#include "charpoly/matrix.hpp"

#include <utility>

#include "charpoly/error.hpp"

namespace charpoly {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

void RationalMatrix::swap_rows(std::size_t r0, std::size_t r1) {
  if (r0 == r1) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(r0, c), (*this)(r1, c));
}

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw DomainError("matrix product shape mismatch");
  RationalMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Rational& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw DomainError("matrix sum shape mismatch");
  RationalMatrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw DomainError("matrix difference shape mismatch");
  RationalMatrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Rational exact_determinant(const RationalMatrix& m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  // Clear denominators row by row: det(m) = det(ints) / prod(scale).
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& q = m(r, c).raw();
      a[r * n + c] = q.get_num() * (row_lcm / q.get_den());
    }
    scale *= row_lcm;
  }

  int sign = 1;
  mpz_class prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return Rational(0);
      for (std::size_t c = k; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
    }
    const mpz_class& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class& x = a[i * n + j];
        x = x * pivot - a[i * n + k] * a[k * n + j];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev_pivot = pivot;
  }
  mpq_class det(a[(n - 1) * n + (n - 1)] * sign, scale);
  det.canonicalize();
  return Rational(std::move(det));
}

}  // namespace charpoly
