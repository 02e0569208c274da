#include "charpoly/grid.hpp"

#include <algorithm>

namespace charpoly {

namespace {

bool disjoint(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  for (const auto& v : x) {
    if (std::find(y.begin(), y.end(), v) != y.end()) return false;
  }
  return true;
}

const std::vector<Rational>& inner_pool() {
  static const std::vector<Rational> pool{Rational(1, 3), Rational(-1, 3), Rational(1, 5),
                                          Rational(-1, 5), Rational(1, 7)};
  return pool;
}

}  // namespace

std::vector<std::vector<Rational>> subsets(const std::vector<Rational>& pool, std::size_t lo,
                                           std::size_t hi) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t k = lo; k <= hi && k <= pool.size(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<Rational> s;
      for (auto i : idx) s.push_back(pool[i]);
      out.push_back(std::move(s));
      std::size_t p = k;
      while (p > 0 && idx[p - 1] == pool.size() - k + p - 1) --p;
      if (p == 0) break;
      ++idx[p - 1];
      for (std::size_t q = p; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  return out;
}

std::vector<Generator> default_generators() {
  const std::vector<Rational> pool{Rational(1, 2), Rational(-1, 2), Rational(1, 3),
                                   Rational(-1, 3), Rational(1, 5), Rational(1, 7)};
  std::vector<Generator> out;
  for (const auto& a : subsets(pool, 0, 3)) {
    for (const auto& c : subsets(pool, 0, 2)) {
      if (disjoint(a, c)) out.push_back(Generator{a, c});
    }
  }
  return out;
}

std::vector<SymbolSpec> bocg_grid() {
  const auto& pool = inner_pool();
  const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> poles{
      {{}, {}},
      {{Rational(1, 4)}, {}},
      {{}, {Rational(-1, 6)}},
      {{Rational(1, 4)}, {Rational(-1, 6)}},
      {{Rational(1, 4), Rational(-1, 6)}, {Rational(1, 4)}},
  };
  std::vector<SymbolSpec> out;
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto sets = subsets(pool, k, k);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const auto& a = sets[i];
      const auto& b = sets[(i + 1) % sets.size()];
      for (const auto& [c, d] : poles) out.push_back(make_symbol(a, b, c, d));
    }
  }
  return out;
}

std::vector<SymbolSpec> be_grid() {
  const std::vector<std::vector<Rational>> poles{
      {}, {Rational(1, 4)}, {Rational(1, 4), Rational(-1, 6)}};
  std::vector<SymbolSpec> out;
  for (const auto& a : subsets(inner_pool(), 0, 3)) {
    for (const auto& c : poles) out.push_back(make_symmetric(a, c));
  }
  return out;
}

std::vector<SymbolSpec> decay_grid() {
  const Rational h(1, 2), t(1, 3), f(1, 5);
  return {
      make_symbol({}, {}, {}, {}),
      make_symbol({h}, {h}, {}, {}),
      make_symbol({h}, {t}, {}, {}),
      make_symbol({-h}, {t}, {f}, {}),
      make_symbol({h, t}, {h, -t}, {}, {f}),
      make_symbol({t}, {}, {h}, {-t}),
      make_symmetric({h, -t}, {f}),
      make_symmetric({h, t, -f}, {}),
      make_symmetric({-h}, {t, -f}),
  };
}

}  // namespace charpoly
