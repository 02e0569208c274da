#include "charpoly/structured.hpp"

#include <algorithm>

#include "charpoly/error.hpp"

namespace charpoly {

namespace {

void check_order(std::size_t n) {
  if (n > kMaxExactOrder) {
    throw SizeLimitError("exact determinant of order " + std::to_string(n) + " exceeds the limit of " +
                         std::to_string(kMaxExactOrder));
  }
}

long hankel_offset(THCase c) {
  switch (c) {
    case THCase::I:
    case THCase::II:
      return 1;
    case THCase::III:
      return 2;
    case THCase::IV:
      return 0;
  }
  return 0;
}

bool hankel_subtracts(THCase c) { return c == THCase::II || c == THCase::III; }

}  // namespace

std::string to_string(THCase c) {
  switch (c) {
    case THCase::I: return "I";
    case THCase::II: return "II";
    case THCase::III: return "III";
    case THCase::IV: return "IV";
  }
  return "?";
}

std::string to_string(Family f) {
  switch (f) {
    case Family::U: return "u";
    case Family::USp: return "usp";
    case Family::OPlus: return "o+";
    case Family::OMinus: return "o-";
  }
  return "?";
}

std::string to_string(Route r) {
  switch (r) {
    case Route::determinant: return "det";
    case Route::ratios: return "ratios";
    case Route::monte_carlo: return "mc";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  if (text == "u") return Family::U;
  if (text == "usp") return Family::USp;
  if (text == "o+") return Family::OPlus;
  if (text == "o-") return Family::OMinus;
  throw ParseError("unknown group '" + text + "' (expected u, usp, o+ or o-)");
}

Route parse_route(const std::string& text) {
  if (text == "det") return Route::determinant;
  if (text == "ratios") return Route::ratios;
  if (text == "mc") return Route::monte_carlo;
  throw ParseError("unknown route '" + text + "' (expected det, ratios or mc)");
}

RationalMatrix toeplitz_matrix(const SymbolSpec& spec, std::size_t n) {
  check_order(n);
  RationalMatrix t(n, n);
  if (n == 0) return t;
  const long r = static_cast<long>(n) - 1;
  const auto coeffs = fourier_window(spec, r);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      t(j, k) = coeffs[static_cast<std::size_t>(static_cast<long>(j) - static_cast<long>(k) + r)];
    }
  }
  return t;
}

RationalMatrix th_matrix(const SymbolSpec& spec, std::size_t m, THCase c) {
  check_order(m);
  RationalMatrix t(m, m);
  if (m == 0) return t;
  const long offset = hankel_offset(c);
  const long r = 2 * static_cast<long>(m) - 2 + offset;
  const auto coeffs = fourier_window(spec, r);
  const auto phi = [&](long k) { return coeffs[static_cast<std::size_t>(k + r)]; };
  const bool minus = hankel_subtracts(c);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      const long jj = static_cast<long>(j), kk = static_cast<long>(k);
      const Rational h = phi(jj + kk + offset);
      t(j, k) = minus ? phi(jj - kk) - h : phi(jj - kk) + h;
    }
  }
  return t;
}

Rational toeplitz_determinant(const SymbolSpec& spec, std::size_t n) {
  return exact_determinant(toeplitz_matrix(spec, n));
}

Rational th_determinant(const SymbolSpec& spec, std::size_t m, THCase c) {
  return exact_determinant(th_matrix(spec, m, c));
}

AverageResult group_average(GroupTarget target, const SymbolSpec& spec) {
  if (target.size < 0) throw DomainError("negative group size");
  if (target.family != Family::U) {
    if (!spec.symmetric()) {
      throw DomainError(to_string(target.family) + " averages need a symmetric symbol g g~");
    }
    return group_average(target, Generator{spec.a, spec.c});
  }
  const auto n = static_cast<std::size_t>(target.size);
  return AverageResult{target, toeplitz_determinant(spec, n), Route::determinant, n};
}

AverageResult group_average(GroupTarget target, const Generator& g) {
  const int n = target.size;
  if (n < 0) throw DomainError("negative group size");
  if (target.family == Family::U) return group_average(target, g.symbol());

  const SymbolSpec spec = g.symbol();
  const HalfSpec half = g.half();
  const auto m = static_cast<std::size_t>(n / 2);
  AverageResult out{target, Rational(1), Route::determinant, 0};

  switch (target.family) {
    case Family::USp:
      if (n % 2 != 0) throw DomainError("USp(N) needs even N, got " + std::to_string(n));
      out.value = th_determinant(spec, m, THCase::III);
      out.matrix_size = m;
      break;
    case Family::OPlus:
      if (n == 0) break;  // trivial group
      if (n % 2 == 0) {
        out.value = th_determinant(spec, m, THCase::IV) / Rational(2);
      } else {
        out.value = boundary_value(half, 1) * th_determinant(spec, m, THCase::II);
      }
      out.matrix_size = m;
      break;
    case Family::OMinus:
      if (n == 0) throw DomainError("O-(0) is empty; no average is defined");
      if (n % 2 == 0) {
        out.value = boundary_value(half, 1) * boundary_value(half, -1) *
                    th_determinant(spec, m - 1, THCase::III);
        out.matrix_size = m - 1;
      } else {
        out.value = boundary_value(half, -1) * th_determinant(spec, m, THCase::I);
        out.matrix_size = m;
      }
      break;
    case Family::U:
      break;
  }
  return out;
}

}  // namespace charpoly
