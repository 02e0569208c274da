#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "charpoly/matrix.hpp"
#include "charpoly/rational.hpp"
#include "charpoly/sequence.hpp"
#include "charpoly/structured.hpp"
#include "charpoly/symbol.hpp"

namespace charpoly {

/// Finite-rank operator on l^2(N): K_{jk} = sum_t left_t(j) right_t(k).
struct LowRankOperator {
  std::vector<ExpSequence> left;
  std::vector<ExpSequence> right;

  std::size_t rank() const { return left.size(); }
  LowRankOperator operator*(const Rational& s) const;
};

/// H_{jk} = coeffs(j + k + offset), one rank-one piece per geometric term
/// plus one per live row of the polynomial head.
LowRankOperator hankel_operator(const ExpSequence& coeffs, std::size_t offset);

/// Operator product lhs * rhs (inner sums over all of N).
LowRankOperator compose(const LowRankOperator& lhs, const LowRankOperator& rhs);

/// k x k matrix R with det(I - R) = det(I - Q_n K Q_n), k = rank(K),
/// R_{st} = <Q_n right_s, Q_n left_t>.
struct FredholmReduction {
  std::size_t rank = 0;
  RationalMatrix reduced;
  std::size_t offset = 0;

  Rational determinant() const;
};

FredholmReduction reduce_tail(const LowRankOperator& k, std::size_t n);

/// Widom's constant E(phi) = exp(sum_k k (log phi)_k (log phi)_{-k}) in closed
/// product form prod (1 - xy)^{+-1}.
Rational widom_constant(const SymbolSpec& spec);

/// prod_{i,j} (1 - a_i c_j) / (prod_{i<=j} (1 - a_i a_j) prod_{i<j} (1 - c_i c_j)).
Rational symplectic_widom_constant(const Generator& g);

/// exp(tr(M(beta) - T(beta)) + 1/2 tr H(beta)^2) for phi = exp(beta) symmetric.
/// The trace series are summed as log(1 - x) patterns and exponentiated
/// exactly; half-integer exponents cancel for this symbol class.
Rational case_constant(const SymbolSpec& spec, THCase c);

/// Kernels of the Fredholm tails, as finite-rank operators.
///   unitary: H(phi_- phi_+^{-1}) H(phi~_-^{-1} phi~_+), used as det(I - Q_n K Q_n)
///   I: H(phi~_+/phi_+)   II: -H(phi~_+/phi_+)   III: -H(z^{-1} phi~_+/phi_+)
///   IV: H(z phi_+^{-1}) Q_1 T(phi_+), all used as det(I + Q_m K Q_m)
LowRankOperator unitary_kernel(const SymbolSpec& spec);
LowRankOperator th_kernel(const SymbolSpec& spec, THCase c);

FredholmReduction unitary_reduction(const SymbolSpec& spec, std::size_t n);
FredholmReduction th_reduction(const SymbolSpec& spec, std::size_t m, THCase c);

/// det(I - Q_n H(phi_- phi_+^{-1}) H(phi~_-^{-1} phi~_+) Q_n).
Rational fredholm_tail_det_unitary(const SymbolSpec& spec, std::size_t n);
/// det(I + Q_m K Q_m) for the case kernel.
Rational fredholm_tail_det_th(const SymbolSpec& spec, std::size_t m, THCase c);

/// P_m M(phi) P_m with M the operator of the case. Equals th_matrix except in
/// case IV, where column 0 carries phi_j instead of 2 phi_j.
RationalMatrix operator_section(const SymbolSpec& spec, std::size_t m, THCase c);

struct IdentityReport {
  std::string identity;
  std::string inputs;
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

/// D_n(phi) == E(phi) det(I - Q_n K Q_n)   (G(phi) = 1 for this symbol class).
IdentityReport verify_bocg(const SymbolSpec& spec, std::size_t n);

/// det th_matrix(m) == f E_case det(I + Q_m K Q_m), with f = 2 for case IV
/// when m >= 1 (the column-0 doubling) and 1 otherwise.
IdentityReport verify_basor_ehrhardt(const SymbolSpec& spec, std::size_t m, THCase c);

/// N = 2m:   I_U(N)(g g~) == (g(1) g(-1))^{-1} I_O+(N+1)(g) I_O-(N+1)(g)
/// N = 2m+1: I_U(N)(g g~) == I_USp(N-1)(g) I_O+(N+1)(g)
IdentityReport verify_factorization(const Generator& g, int n);

/// |D_n / E - 1| for n = 1..n_max, exact then rounded to double.
std::vector<double> szego_decay_probe(const SymbolSpec& spec, std::size_t n_max);

/// Explicit kernel entries K(offset + i, offset + j), i, j < window, built
/// straight from Fourier coefficients (cases I-III) or from the residue form
/// sum_{g,h} beta_g alpha_h b_g^j a_h^k / (1 - b_g a_h) (unitary, shifted).
RationalMatrix explicit_th_kernel(const SymbolSpec& spec, THCase c, std::size_t offset, std::size_t window);
RationalMatrix explicit_unitary_kernel(const SymbolSpec& spec, std::size_t offset, std::size_t window);

/// Order-l term of the Fredholm expansion restricted to the window:
/// (1/l!) sum over index tuples of det K(i_j, i_h) = sum of principal l x l minors.
Rational expansion_term(const RationalMatrix& window, std::size_t order);

}  // namespace charpoly
