#pragma once

#include <cstddef>
#include <string>

namespace charpoly::kernels {

enum class Isa { scalar, avx2 };

/// out[i] = prod_z (1 - z w_i) / prod_p (1 - p w_i) for complex w_i = re[i] + i im[i],
/// real zeros/poles. Split (SoA) complex storage.
using SymbolFactorsFn = void (*)(const double* re, const double* im, std::size_t n,
                                 const double* zeros, std::size_t nz, const double* poles,
                                 std::size_t np, double* out_re, double* out_im);

/// prod_i (re[i] + i im[i]) in a fixed 4-lane blocked order.
using ComplexProductFn = void (*)(const double* re, const double* im, std::size_t n,
                                  double* out_re, double* out_im);

struct Table {
  Isa isa;
  SymbolFactorsFn symbol_factors;
  ComplexProductFn complex_product;
};

const Table& scalar_table();
/// nullptr when the build has no AVX2 variant.
const Table* avx2_table();

/// Best variant the CPU supports; CHARPOLY_SIMD=scalar forces the reference path.
const Table& active();

std::string to_string(Isa isa);

}  // namespace charpoly::kernels
