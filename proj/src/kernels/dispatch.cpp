#include <cstdlib>
#include <string_view>

#include "charpoly/kernels.hpp"

namespace charpoly::kernels {

#ifndef CHARPOLY_HAVE_AVX2
const Table* avx2_table() { return nullptr; }
#endif

namespace {

const Table& pick() {
  const char* env = std::getenv("CHARPOLY_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return scalar_table();
#if defined(CHARPOLY_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  if (__builtin_cpu_supports("avx2") && avx2_table() != nullptr) return *avx2_table();
#endif
  return scalar_table();
}

}  // namespace

const Table& active() {
  static const Table& t = pick();
  return t;
}

std::string to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

}  // namespace charpoly::kernels
