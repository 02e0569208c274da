#pragma once

#include <cstdint>
#include <vector>

#include "charpoly/rational.hpp"

namespace charpoly {

/// Z(A,B) = prod_{a,b} (1 - ab)^{-1}.
Rational z_pair(const std::vector<Rational>& a, const std::vector<Rational>& b);
/// Z(A,B;C,D) = Z(A,B) Z(C,D) / (Z(A,D) Z(B,C)).
Rational z_four(const std::vector<Rational>& a, const std::vector<Rational>& b,
                const std::vector<Rational>& c, const std::vector<Rational>& d);
/// prod_{i<=j} (1 - a_i a_j)^{-1}.
Rational z_symplectic(const std::vector<Rational>& a);
/// prod_{i<j} (1 - a_i a_j)^{-1}.
Rational z_orthogonal(const std::vector<Rational>& a);
/// Z_S(A;C) = Z_S(A) Z_O(C) / Z(A,C).
Rational z_s_with_poles(const std::vector<Rational>& a, const std::vector<Rational>& c);
/// Z_O(A;C) = Z_O(A) Z_S(C) / Z(A,C).
Rational z_o_with_poles(const std::vector<Rational>& a, const std::vector<Rational>& c);

/// A - U + U^{-1}: members selected by `mask` are replaced by their inverses.
std::vector<Rational> swap_subset(const std::vector<Rational>& a, std::uint32_t mask);

enum class OrthogonalSign { plus, minus };

/// One summand of a subset sum. For the symmetric sums mask_b is 0.
struct SwapTerm {
  std::uint32_t mask_a = 0;
  std::uint32_t mask_b = 0;
  int sign = 1;          ///< (-1)^{|U|} where the case calls for it
  Rational swap_factor;  ///< U^N (or S^N T^N)
  Rational z_value;      ///< the Z-function of the swapped sets
  Rational term;         ///< sign * swap_factor * z_value
};

/// Subset caps: 2^12 subsets for the symmetric sums, |A|, |B| <= 8 for the
/// unitary double sum.
inline constexpr std::size_t kMaxSwapSet = 12;
inline constexpr std::size_t kMaxUnitarySwapSet = 8;

/// USp(N): sum_{U subset A} U^N Z_S(A - U + U^{-1}; C), N even.
std::vector<SwapTerm> symplectic_terms(const std::vector<Rational>& a, const std::vector<Rational>& c,
                                       int n);
Rational ratio_symplectic(const std::vector<Rational>& a, const std::vector<Rational>& c, int n);

/// O+(N) / O-(N): sum_{U subset A} (+-1)^{|U|} U^N Z_O(A - U + U^{-1}; C).
/// The alternating sign is used for O+(odd) and O-(even). N >= 1.
std::vector<SwapTerm> orthogonal_terms(const std::vector<Rational>& a, const std::vector<Rational>& c,
                                       int n, OrthogonalSign sign);
Rational ratio_orthogonal(const std::vector<Rational>& a, const std::vector<Rational>& c, int n,
                          OrthogonalSign sign);

/// U(N): sum over S subset A, T subset B with |S| = |T| of
/// S^N T^N Z(A - S + T^{-1}, B - T + S^{-1}; C, D).
std::vector<SwapTerm> unitary_terms(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                    const std::vector<Rational>& c, const std::vector<Rational>& d,
                                    int n);
Rational ratio_unitary(const std::vector<Rational>& a, const std::vector<Rational>& b,
                       const std::vector<Rational>& c, const std::vector<Rational>& d, int n);

/// The sums equal the group averages only from a minimum size on:
///   USp  N >= |C| - |A| - 1
///   O+-  N >= |C| - |A| + 1
///   U    N >= max(|C| - |A|, |D| - |B|)
/// Below it the subset sum is still returned, but it is not the average.
int symplectic_min_size(std::size_t na, std::size_t nc);
int orthogonal_min_size(std::size_t na, std::size_t nc);
int unitary_min_size(std::size_t na, std::size_t nb, std::size_t nc, std::size_t nd);

}  // namespace charpoly
