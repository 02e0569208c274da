#include <immintrin.h>

#include "charpoly/kernels.hpp"

// Same operation order as scalar.cpp, four eigenvalues per register. Built
// with -mavx2 only: an FMA would change rounding and break equivalence.

namespace charpoly::kernels {

namespace {

void symbol_factors(const double* re, const double* im, std::size_t n, const double* zeros,
                    std::size_t nz, const double* poles, std::size_t np, double* out_re,
                    double* out_im) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d neg = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d wr = _mm256_loadu_pd(re + i);
    const __m256d wi = _mm256_loadu_pd(im + i);
    __m256d fr = one;
    __m256d fi = _mm256_setzero_pd();
    for (std::size_t k = 0; k < nz; ++k) {
      const __m256d z = _mm256_set1_pd(zeros[k]);
      const __m256d tr = _mm256_sub_pd(one, _mm256_mul_pd(z, wr));
      const __m256d ti = _mm256_xor_pd(_mm256_mul_pd(z, wi), neg);
      const __m256d r = _mm256_sub_pd(_mm256_mul_pd(fr, tr), _mm256_mul_pd(fi, ti));
      fi = _mm256_add_pd(_mm256_mul_pd(fr, ti), _mm256_mul_pd(fi, tr));
      fr = r;
    }
    for (std::size_t k = 0; k < np; ++k) {
      const __m256d p = _mm256_set1_pd(poles[k]);
      const __m256d dr = _mm256_sub_pd(one, _mm256_mul_pd(p, wr));
      const __m256d di = _mm256_xor_pd(_mm256_mul_pd(p, wi), neg);
      const __m256d nr = _mm256_add_pd(_mm256_mul_pd(fr, dr), _mm256_mul_pd(fi, di));
      const __m256d ni = _mm256_sub_pd(_mm256_mul_pd(fi, dr), _mm256_mul_pd(fr, di));
      const __m256d m = _mm256_add_pd(_mm256_mul_pd(dr, dr), _mm256_mul_pd(di, di));
      fr = _mm256_div_pd(nr, m);
      fi = _mm256_div_pd(ni, m);
    }
    _mm256_storeu_pd(out_re + i, fr);
    _mm256_storeu_pd(out_im + i, fi);
  }
  if (i < n) {
    scalar_table().symbol_factors(re + i, im + i, n - i, zeros, nz, poles, np, out_re + i,
                                  out_im + i);
  }
}

void complex_product(const double* re, const double* im, std::size_t n, double* out_re,
                     double* out_im) {
  __m256d lr = _mm256_set1_pd(1.0);
  __m256d li = _mm256_setzero_pd();
  const std::size_t n4 = n - n % 4;
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d xr = _mm256_loadu_pd(re + i);
    const __m256d xi = _mm256_loadu_pd(im + i);
    const __m256d r = _mm256_sub_pd(_mm256_mul_pd(lr, xr), _mm256_mul_pd(li, xi));
    li = _mm256_add_pd(_mm256_mul_pd(lr, xi), _mm256_mul_pd(li, xr));
    lr = r;
  }
  alignas(32) double ar[4], ai[4];
  _mm256_store_pd(ar, lr);
  _mm256_store_pd(ai, li);
  double pr = ar[0], pi = ai[0];
  for (std::size_t l = 1; l < 4; ++l) {
    const double r = pr * ar[l] - pi * ai[l];
    pi = pr * ai[l] + pi * ar[l];
    pr = r;
  }
  for (std::size_t i = n4; i < n; ++i) {
    const double r = pr * re[i] - pi * im[i];
    pi = pr * im[i] + pi * re[i];
    pr = r;
  }
  *out_re = pr;
  *out_im = pi;
}

}  // namespace

const Table* avx2_table() {
  static const Table t{Isa::avx2, symbol_factors, complex_product};
  return &t;
}

}  // namespace charpoly::kernels
