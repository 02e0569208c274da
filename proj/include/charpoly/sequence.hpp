#pragma once

#include <cstddef>
#include <vector>

#include "charpoly/rational.hpp"

namespace charpoly {

/// One geometric component coef * ratio^j of an ExpSequence.
struct GeometricTerm {
  Rational coef;
  Rational ratio;
};

/// A one-sided sequence (x_j)_{j>=0} with
///   x_j = head[j] (0 past the end of head) + sum_t coef_t * ratio_t^j.
///
/// This is the exact coefficient shape of every rational function that is
/// analytic in a disc: a finite polynomial correction plus one geometric
/// series per simple pole. Hankel operators built from such sequences have
/// finite rank, which is what makes the Fredholm tail determinants exact.
class ExpSequence {
 public:
  ExpSequence() = default;
  ExpSequence(std::vector<Rational> head, std::vector<GeometricTerm> terms);

  static ExpSequence geometric(Rational coef, Rational ratio);
  static ExpSequence unit(std::size_t index, Rational value = Rational(1));

  const std::vector<Rational>& head() const { return head_; }
  const std::vector<GeometricTerm>& terms() const { return terms_; }

  Rational at(std::size_t j) const;

  /// (x_{j+s})_j.
  ExpSequence shifted(std::size_t s) const;
  /// x_j for j >= n, 0 below n (the action of Q_n on a column).
  ExpSequence zero_below(std::size_t n) const;

  ExpSequence operator*(const Rational& s) const;
  ExpSequence operator+(const ExpSequence& rhs) const;

 private:
  std::vector<Rational> head_;
  std::vector<GeometricTerm> terms_;
};

/// sum_{j >= from} x_j y_j in closed form. Geometric cross terms need
/// |ratio_x * ratio_y| < 1; otherwise DomainError (divergent tail).
Rational tail_inner_product(const ExpSequence& x, const ExpSequence& y, std::size_t from = 0);

}  // namespace charpoly
