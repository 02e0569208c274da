#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace charpoly {

/// Exact rational number in canonical form (den > 0, gcd(|num|, den) = 1).
///
/// Backed by GMP's mpq_class. Every constructor and operator leaves the value
/// canonical, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  /// Parses "p/q" or "p" (optional leading sign, decimal digits only).
  /// Non-canonical input such as "2/4" is accepted and reduced.
  static Rational parse(std::string_view text);

  /// Canonical "p/q", or "p" when the denominator is 1.
  std::string str() const;

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }

  Rational abs() const;
  Rational inverse() const;
  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long exponent) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.q_ == rhs.q_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.q_, rhs.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Comma-separated list of rationals ("1/2,-1/3"); empty text gives an empty list.
std::vector<Rational> parse_rational_list(std::string_view text);

std::string to_string(const std::vector<Rational>& values);

Rational product(const std::vector<Rational>& values);

/// |x| < 1, decided exactly.
inline bool inside_unit_disc(const Rational& x) { return x.abs() < Rational(1); }

}  // namespace charpoly
