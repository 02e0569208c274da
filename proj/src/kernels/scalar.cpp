#include "charpoly/kernels.hpp"

namespace charpoly::kernels {

namespace {

void symbol_factors(const double* re, const double* im, std::size_t n, const double* zeros,
                    std::size_t nz, const double* poles, std::size_t np, double* out_re,
                    double* out_im) {
  for (std::size_t i = 0; i < n; ++i) {
    double fr = 1.0, fi = 0.0;
    for (std::size_t k = 0; k < nz; ++k) {
      const double tr = 1.0 - zeros[k] * re[i];
      const double ti = -(zeros[k] * im[i]);
      const double r = fr * tr - fi * ti;
      fi = fr * ti + fi * tr;
      fr = r;
    }
    for (std::size_t k = 0; k < np; ++k) {
      const double dr = 1.0 - poles[k] * re[i];
      const double di = -(poles[k] * im[i]);
      const double nr = fr * dr + fi * di;
      const double ni = fi * dr - fr * di;
      const double m = dr * dr + di * di;
      fr = nr / m;
      fi = ni / m;
    }
    out_re[i] = fr;
    out_im[i] = fi;
  }
}

void complex_product(const double* re, const double* im, std::size_t n, double* out_re,
                     double* out_im) {
  double lr[4] = {1.0, 1.0, 1.0, 1.0};
  double li[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n4 = n - n % 4;
  for (std::size_t i = 0; i < n4; i += 4) {
    for (std::size_t l = 0; l < 4; ++l) {
      const double r = lr[l] * re[i + l] - li[l] * im[i + l];
      li[l] = lr[l] * im[i + l] + li[l] * re[i + l];
      lr[l] = r;
    }
  }
  double pr = lr[0], pi = li[0];
  for (std::size_t l = 1; l < 4; ++l) {
    const double r = pr * lr[l] - pi * li[l];
    pi = pr * li[l] + pi * lr[l];
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

const Table& scalar_table() {
  static const Table t{Isa::scalar, symbol_factors, complex_product};
  return t;
}

}  // namespace charpoly::kernels
