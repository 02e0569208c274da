#pragma once

#include <utility>
#include <vector>

#include "charpoly/rational.hpp"
#include "charpoly/sequence.hpp"

namespace charpoly {

/// Rational Laurent symbol on the unit circle,
///
///   phi(z) = prod_a (1 - a/z) prod_b (1 - b z) / ( prod_c (1 - c/z) prod_d (1 - d z) ).
///
/// Restrictions: real rational parameters, |c|, |d| < 1, and poles distinct
/// within C and within D. Every factor has constant term 1, so phi has winding
/// number zero and geometric mean 1; nothing further is checked analytically.
/// Zeros may repeat. Build through make_symbol / make_symmetric.
struct SymbolSpec {
  std::vector<Rational> a;  ///< zeros attached to z^{-1}
  std::vector<Rational> b;  ///< zeros attached to z
  std::vector<Rational> c;  ///< poles attached to z^{-1}
  std::vector<Rational> d;  ///< poles attached to z

  /// B == A and D == C (same order), i.e. phi = g * g~ with g = prod (1 - a z)/(1 - c z).
  bool symmetric() const { return a == b && c == d; }

  friend bool operator==(const SymbolSpec&, const SymbolSpec&) = default;
};

SymbolSpec make_symbol(std::vector<Rational> a, std::vector<Rational> b, std::vector<Rational> c,
                       std::vector<Rational> d);

/// phi = g g~ with g = prod (1 - a z) / prod (1 - c z).
SymbolSpec make_symmetric(std::vector<Rational> a, std::vector<Rational> c);

/// phi~(z) = phi(1/z).
SymbolSpec reflect(const SymbolSpec& spec);

enum class Orientation { plus, minus };

/// One Wiener-Hopf factor prod (1 - zero w) / prod (1 - pole w), with w = z
/// (plus) or w = 1/z (minus).
struct HalfSpec {
  std::vector<Rational> zeros;
  std::vector<Rational> poles;
  Orientation orientation = Orientation::plus;

  friend bool operator==(const HalfSpec&, const HalfSpec&) = default;
};

struct WienerHopf {
  HalfSpec plus;   ///< zeros B, poles D, series in z
  HalfSpec minus;  ///< zeros A, poles C, series in 1/z
};

WienerHopf wiener_hopf_split(const SymbolSpec& spec);

/// Value of the factor at w (its own variable), by direct substitution.
Rational evaluate(const HalfSpec& half, const Rational& w);

/// Value of g at z = +1 or z = -1.
Rational boundary_value(const HalfSpec& half, int point);

/// Power-series coefficients of the factor in its own variable, exactly:
/// polynomial correction in the head, one geometric term per nonzero pole.
ExpSequence half_series(const HalfSpec& half);

/// (phi_l)_{l >= 0}.
ExpSequence positive_coefficients(const SymbolSpec& spec);
/// (phi_{-l})_{l >= 0}.
ExpSequence negative_coefficients(const SymbolSpec& spec);

/// phi_k, exact closed form (no truncation).
Rational fourier_coefficient(const SymbolSpec& spec, long k);

/// phi_k for k in [-radius, radius], indexed by k + radius.
std::vector<Rational> fourier_window(const SymbolSpec& spec, long radius);

/// (log phi)_k for k != 0. (log phi)_0 = 0 for this symbol class.
Rational log_coefficient(const SymbolSpec& spec, long k);

/// Residue coefficients of the reflected quotients.
///
/// alpha_j: the positive Fourier coefficients of phi~_-^{-1} phi~_+ are
/// sum_j alpha_j a_j^{l-1} (l >= 1); for a symmetric spec this quotient is
/// phi~_+ / phi_+. beta_j: likewise sum_j beta_j b_j^{l-1} for
/// phi_- phi_+^{-1}. Requires |C| <= |A| and |D| <= |B| (no residue at
/// infinity; when unbalanced each weight picks up a_j^{|A|-|C|}), pairwise
/// distinct nonzero zeros, and no vanishing 1 - d_i a_j, 1 - c_i b_j.
struct ResidueCoefficients {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
};

ResidueCoefficients reflected_coefficients(const SymbolSpec& spec);

}  // namespace charpoly
