#include "charpoly/ratios.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "charpoly/error.hpp"

namespace charpoly {

namespace {

const Rational kOne(1);

// prod_{a,b} (1 - ab); these are the reciprocals of the Z-functions and stay
// finite (possibly zero) where a Z-function would have a pole.
Rational pair_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational p(1);
  for (const auto& x : a) {
    for (const auto& y : b) p *= kOne - x * y;
  }
  return p;
}

Rational triangle_product(const std::vector<Rational>& a, bool with_diagonal) {
  Rational p(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = with_diagonal ? i : i + 1; j < a.size(); ++j) p *= kOne - a[i] * a[j];
  }
  return p;
}

Rational invert_checked(const Rational& denominator, const char* what) {
  if (denominator.is_zero()) throw DomainError(std::string("vanishing denominator in ") + what);
  return denominator.inverse();
}

// Z_S(A;C) and Z_O(A;C) in reciprocal-safe form.
Rational zs_poles(const std::vector<Rational>& a, const std::vector<Rational>& c) {
  return pair_product(a, c) *
         invert_checked(triangle_product(a, true) * triangle_product(c, false), "Z_S(A;C)");
}

Rational zo_poles(const std::vector<Rational>& a, const std::vector<Rational>& c) {
  return pair_product(a, c) *
         invert_checked(triangle_product(a, false) * triangle_product(c, true), "Z_O(A;C)");
}

Rational z4(const std::vector<Rational>& a, const std::vector<Rational>& b,
            const std::vector<Rational>& c, const std::vector<Rational>& d) {
  return pair_product(a, d) * pair_product(b, c) *
         invert_checked(pair_product(a, b) * pair_product(c, d), "Z(A,B;C,D)");
}

void check_distinct(const std::vector<Rational>& xs, const char* name) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (xs[i] == xs[j]) {
        throw DomainError(std::string("coincident parameters ") + xs[i].str() + " in " + name);
      }
    }
  }
}

void check_no_unit_products(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                            const char* what) {
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      if (x * y == kOne) throw DomainError(std::string(what) + ": " + x.str() + " * " + y.str() + " = 1");
    }
  }
}

void check_poles(const std::vector<Rational>& c, const char* name) {
  check_distinct(c, name);
  for (const auto& x : c) {
    if (!inside_unit_disc(x)) throw DomainError(std::string("pole ") + x.str() + " in " + name + " has |.| >= 1");
  }
}

void check_zeros(const std::vector<Rational>& a, std::size_t cap, const char* name) {
  if (a.size() > cap) {
    throw SizeLimitError(std::string("|") + name + "| = " + std::to_string(a.size()) +
                         " exceeds the subset-sum cap of " + std::to_string(cap));
  }
  check_distinct(a, name);
}

bool contains_zero(const std::vector<Rational>& a, std::uint32_t mask) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((mask >> i & 1u) && a[i].is_zero()) return true;
  }
  return false;
}

bool has_zero(const std::vector<Rational>& a) { return contains_zero(a, (1u << a.size()) - 1u); }

Rational subset_power(const std::vector<Rational>& a, std::uint32_t mask, int n) {
  Rational p(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mask >> i & 1u) p *= a[i].pow(n);
  }
  return p;
}

void validate_symmetric(const std::vector<Rational>& a, const std::vector<Rational>& c, int n) {
  if (n < 0) throw DomainError("negative matrix size");
  check_zeros(a, kMaxSwapSet, "A");
  check_no_unit_products(a, a, "A");
  check_poles(c, "C");
  if (n == 0 && has_zero(a)) throw DomainError("N = 0 with a zero parameter in A (swap term 0^0 / 1/0)");
}

template <typename ZFn>
std::vector<SwapTerm> symmetric_sum(const std::vector<Rational>& a, const std::vector<Rational>& c,
                                    int n, bool alternating, ZFn zfn) {
  std::vector<SwapTerm> terms;
  const std::uint32_t count = 1u << a.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (n >= 1 && contains_zero(a, mask)) continue;
    SwapTerm t;
    t.mask_a = mask;
    t.sign = alternating && (std::popcount(mask) % 2 == 1) ? -1 : 1;
    t.swap_factor = subset_power(a, mask, n);
    t.z_value = zfn(swap_subset(a, mask), c);
    t.term = t.swap_factor * t.z_value;
    if (t.sign < 0) t.term = -t.term;
    terms.push_back(std::move(t));
  }
  return terms;
}

Rational sum_terms(const std::vector<SwapTerm>& terms) {
  Rational s(0);
  for (const auto& t : terms) s += t.term;
  return s;
}

}  // namespace

Rational z_pair(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return invert_checked(pair_product(a, b), "Z(A,B)");
}

Rational z_four(const std::vector<Rational>& a, const std::vector<Rational>& b,
                const std::vector<Rational>& c, const std::vector<Rational>& d) {
  return z_pair(a, b) * z_pair(c, d) / (z_pair(a, d) * z_pair(b, c));
}

Rational z_symplectic(const std::vector<Rational>& a) {
  return invert_checked(triangle_product(a, true), "Z_S(A)");
}

Rational z_orthogonal(const std::vector<Rational>& a) {
  return invert_checked(triangle_product(a, false), "Z_O(A)");
}

Rational z_s_with_poles(const std::vector<Rational>& a, const std::vector<Rational>& c) {
  return z_symplectic(a) * z_orthogonal(c) / z_pair(a, c);
}

Rational z_o_with_poles(const std::vector<Rational>& a, const std::vector<Rational>& c) {
  return z_orthogonal(a) * z_symplectic(c) / z_pair(a, c);
}

std::vector<Rational> swap_subset(const std::vector<Rational>& a, std::uint32_t mask) {
  std::vector<Rational> kept, inverted;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mask >> i & 1u) {
      inverted.push_back(a[i].inverse());
    } else {
      kept.push_back(a[i]);
    }
  }
  kept.insert(kept.end(), inverted.begin(), inverted.end());
  return kept;
}

std::vector<SwapTerm> symplectic_terms(const std::vector<Rational>& a, const std::vector<Rational>& c,
                                       int n) {
  if (n % 2 != 0) throw DomainError("USp(N) needs even N, got " + std::to_string(n));
  validate_symmetric(a, c, n);
  return symmetric_sum(a, c, n, false, zs_poles);
}

Rational ratio_symplectic(const std::vector<Rational>& a, const std::vector<Rational>& c, int n) {
  return sum_terms(symplectic_terms(a, c, n));
}

std::vector<SwapTerm> orthogonal_terms(const std::vector<Rational>& a, const std::vector<Rational>& c,
                                       int n, OrthogonalSign sign) {
  if (n < 1) throw DomainError("orthogonal subset sums are defined for N >= 1");
  validate_symmetric(a, c, n);
  const bool odd = n % 2 == 1;
  const bool alternating = (sign == OrthogonalSign::plus) == odd;
  return symmetric_sum(a, c, n, alternating, zo_poles);
}

Rational ratio_orthogonal(const std::vector<Rational>& a, const std::vector<Rational>& c, int n,
                          OrthogonalSign sign) {
  return sum_terms(orthogonal_terms(a, c, n, sign));
}

std::vector<SwapTerm> unitary_terms(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                    const std::vector<Rational>& c, const std::vector<Rational>& d,
                                    int n) {
  if (n < 0) throw DomainError("negative matrix size");
  check_zeros(a, kMaxUnitarySwapSet, "A");
  check_zeros(b, kMaxUnitarySwapSet, "B");
  check_no_unit_products(a, b, "A x B");
  check_poles(c, "C");
  check_poles(d, "D");
  if (n == 0 && (has_zero(a) || has_zero(b))) {
    throw DomainError("N = 0 with a zero parameter (swap term 0^0 / 1/0)");
  }

  std::vector<SwapTerm> terms;
  const std::uint32_t count_a = 1u << a.size();
  const std::uint32_t count_b = 1u << b.size();
  for (std::uint32_t s = 0; s < count_a; ++s) {
    if (n >= 1 && contains_zero(a, s)) continue;
    for (std::uint32_t t = 0; t < count_b; ++t) {
      if (std::popcount(s) != std::popcount(t)) continue;
      if (n >= 1 && contains_zero(b, t)) continue;
      // A - S + T^{-1} and B - T + S^{-1}.
      std::vector<Rational> a_swapped, b_swapped;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (s >> i & 1u) {
          b_swapped.push_back(a[i].inverse());
        } else {
          a_swapped.push_back(a[i]);
        }
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (t >> i & 1u) {
          a_swapped.push_back(b[i].inverse());
        } else {
          b_swapped.push_back(b[i]);
        }
      }
      SwapTerm term;
      term.mask_a = s;
      term.mask_b = t;
      term.swap_factor = subset_power(a, s, n) * subset_power(b, t, n);
      term.z_value = z4(a_swapped, b_swapped, c, d);
      term.term = term.swap_factor * term.z_value;
      terms.push_back(std::move(term));
    }
  }
  return terms;
}

Rational ratio_unitary(const std::vector<Rational>& a, const std::vector<Rational>& b,
                       const std::vector<Rational>& c, const std::vector<Rational>& d, int n) {
  return sum_terms(unitary_terms(a, b, c, d, n));
}

int symplectic_min_size(std::size_t na, std::size_t nc) {
  return std::max(0, static_cast<int>(nc) - static_cast<int>(na) - 1);
}

int orthogonal_min_size(std::size_t na, std::size_t nc) {
  return std::max(1, static_cast<int>(nc) - static_cast<int>(na) + 1);
}

int unitary_min_size(std::size_t na, std::size_t nb, std::size_t nc, std::size_t nd) {
  const int excess = std::max(static_cast<int>(nc) - static_cast<int>(na), static_cast<int>(nd) - static_cast<int>(nb));
  return std::max(0, excess);
}

}  // namespace charpoly
