#pragma once

#include <vector>

#include "charpoly/rational.hpp"
#include "charpoly/structured.hpp"
#include "charpoly/symbol.hpp"

namespace charpoly {

/// Default verification grids. Parameters come from fixed small rational sets;
/// every entry passes the genericity filters of the routes it is used with.

/// A, C drawn from {+-1/2, +-1/3, 1/5, 1/7}: |A| <= 3, |C| <= 2, A and C disjoint.
std::vector<Generator> default_generators();

/// Non-symmetric specs for the unitary identity: |A| = |B| = k <= 3 with
/// parameters in (-1/2, 1/2), plus a few pole patterns.
std::vector<SymbolSpec> bocg_grid();

/// Symmetric specs for the Toeplitz+Hankel identities, same parameter range.
std::vector<SymbolSpec> be_grid();

/// Specs with all parameters of modulus <= 1/2 for the decay probe.
std::vector<SymbolSpec> decay_grid();

/// All subsets of `pool` of size lo..hi, in lexicographic index order.
std::vector<std::vector<Rational>> subsets(const std::vector<Rational>& pool, std::size_t lo,
                                           std::size_t hi);

}  // namespace charpoly
