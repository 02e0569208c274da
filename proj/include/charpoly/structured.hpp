#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "charpoly/matrix.hpp"
#include "charpoly/rational.hpp"
#include "charpoly/symbol.hpp"

namespace charpoly {

/// Toeplitz-plus-Hankel entry patterns:
///   I   phi_{j-k} + phi_{j+k+1}
///   II  phi_{j-k} - phi_{j+k+1}
///   III phi_{j-k} - phi_{j+k+2}
///   IV  phi_{j-k} + phi_{j+k}
enum class THCase { I, II, III, IV };

enum class Family { U, USp, OPlus, OMinus };

enum class Route { determinant, ratios, monte_carlo };

struct GroupTarget {
  Family family = Family::U;
  int size = 0;
};

/// Generating data of g = prod (1 - a z) / prod (1 - c z) for the
/// symplectic and orthogonal averages (phi = g g~).
struct Generator {
  std::vector<Rational> a;
  std::vector<Rational> c;

  SymbolSpec symbol() const { return make_symmetric(a, c); }
  HalfSpec half() const { return HalfSpec{a, c, Orientation::plus}; }
};

struct AverageResult {
  GroupTarget target;
  Rational value;
  Route route = Route::determinant;
  /// Order of the structured matrix whose determinant was taken (0 when the
  /// value was fixed by convention or did not come from a determinant).
  std::size_t matrix_size = 0;
};

/// Exact determinants above this order are refused with SizeLimitError.
inline constexpr std::size_t kMaxExactOrder = 64;

std::string to_string(THCase c);
std::string to_string(Family f);
std::string to_string(Route r);
Family parse_family(const std::string& text);
Route parse_route(const std::string& text);

RationalMatrix toeplitz_matrix(const SymbolSpec& spec, std::size_t n);
RationalMatrix th_matrix(const SymbolSpec& spec, std::size_t m, THCase c);

/// D_n(phi) = det T_n(phi).
Rational toeplitz_determinant(const SymbolSpec& spec, std::size_t n);
Rational th_determinant(const SymbolSpec& spec, std::size_t m, THCase c);

/// Unitary average of det phi(U) over U(N): D_N(phi). Any valid spec.
AverageResult group_average(GroupTarget target, const SymbolSpec& spec);

/// Average of det g(U) over USp(N), O+(N), O-(N) (or U(N) with phi = g g~),
/// reduced to one finite structured determinant:
///   USp(2m)    det [III]_m
///   O+(2m)     1/2 det [IV]_m                     (O+(0) = 1)
///   O-(2m)     g(1) g(-1) det [III]_{m-1}          (O-(0) rejected)
///   O+(2m+1)   g(1) det [II]_m
///   O-(2m+1)   g(-1) det [I]_m
AverageResult group_average(GroupTarget target, const Generator& g);

}  // namespace charpoly
