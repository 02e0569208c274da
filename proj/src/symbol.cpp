#include "charpoly/symbol.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "charpoly/error.hpp"

namespace charpoly {

namespace {

void check_poles(const std::vector<Rational>& poles, const char* name) {
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (!inside_unit_disc(poles[i])) {
      throw DomainError(std::string("pole ") + poles[i].str() + " in " + name +
                        " violates |pole| < 1");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (poles[i] == poles[j]) {
        throw DomainError(std::string("repeated pole ") + poles[i].str() + " in " + name);
      }
    }
  }
}

std::vector<Rational> nonzero(const std::vector<Rational>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) {
    if (!x.is_zero()) out.push_back(x);
  }
  return out;
}

// Coefficients of prod (1 - r w).
std::vector<Rational> expand_linear_factors(const std::vector<Rational>& roots) {
  std::vector<Rational> poly{Rational(1)};
  for (const auto& r : roots) {
    poly.emplace_back(0);
    for (std::size_t m = poly.size() - 1; m > 0; --m) poly[m] -= r * poly[m - 1];
  }
  return poly;
}

Rational power_sum(const std::vector<Rational>& xs, long k) {
  Rational s(0);
  for (const auto& x : xs) s += x.pow(k);
  return s;
}

}  // namespace

SymbolSpec make_symbol(std::vector<Rational> a, std::vector<Rational> b, std::vector<Rational> c,
                       std::vector<Rational> d) {
  check_poles(c, "C");
  check_poles(d, "D");
  for (const auto& ci : c) {
    for (const auto& dj : d) {
      if (ci * dj == Rational(1)) throw DomainError("c*d = 1 for a pole pair");
    }
  }
  return SymbolSpec{std::move(a), std::move(b), std::move(c), std::move(d)};
}

SymbolSpec make_symmetric(std::vector<Rational> a, std::vector<Rational> c) {
  auto b = a;
  auto d = c;
  return make_symbol(std::move(a), std::move(b), std::move(c), std::move(d));
}

SymbolSpec reflect(const SymbolSpec& spec) { return SymbolSpec{spec.b, spec.a, spec.d, spec.c}; }

WienerHopf wiener_hopf_split(const SymbolSpec& spec) {
  return WienerHopf{HalfSpec{spec.b, spec.d, Orientation::plus},
                    HalfSpec{spec.a, spec.c, Orientation::minus}};
}

Rational evaluate(const HalfSpec& half, const Rational& w) {
  Rational num(1), den(1);
  for (const auto& z : half.zeros) num *= Rational(1) - z * w;
  for (const auto& p : half.poles) den *= Rational(1) - p * w;
  if (den.is_zero()) throw DomainError("factor evaluated at a pole (w = " + w.str() + ")");
  return num / den;
}

Rational boundary_value(const HalfSpec& half, int point) {
  if (point != 1 && point != -1) throw DomainError("boundary point must be +1 or -1");
  // z = +-1 is its own inverse, so the orientation does not matter.
  return evaluate(half, Rational(point));
}

ExpSequence half_series(const HalfSpec& half) {
  const auto zeros = nonzero(half.zeros);
  const auto poles = nonzero(half.poles);
  for (std::size_t i = 0; i < poles.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (poles[i] == poles[j]) throw DomainError("repeated pole " + poles[i].str());
    }
  }

  std::vector<GeometricTerm> terms;
  terms.reserve(poles.size());
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const Rational inv = poles[i].inverse();
    Rational r(1);
    for (const auto& z : zeros) r *= Rational(1) - z * inv;
    for (std::size_t j = 0; j < poles.size(); ++j) {
      if (j != i) r /= Rational(1) - poles[j] * inv;
    }
    terms.push_back({r, poles[i]});
  }

  std::vector<Rational> head;
  const long degree_gap = static_cast<long>(zeros.size()) - static_cast<long>(poles.size());
  if (degree_gap >= 0) {
    const auto num = expand_linear_factors(zeros);
    const auto den = expand_linear_factors(poles);
    std::vector<Rational> series(static_cast<std::size_t>(degree_gap) + 1);
    for (std::size_t m = 0; m < series.size(); ++m) {
      Rational s = m < num.size() ? num[m] : Rational(0);
      for (std::size_t t = 1; t <= std::min(m, den.size() - 1); ++t) s -= den[t] * series[m - t];
      series[m] = s;
    }
    head = series;
    for (std::size_t m = 0; m < head.size(); ++m) {
      for (const auto& t : terms) head[m] -= t.coef * t.ratio.pow(static_cast<long>(m));
    }
  }
  return ExpSequence(std::move(head), std::move(terms));
}

ExpSequence positive_coefficients(const SymbolSpec& spec) {
  const WienerHopf wh = wiener_hopf_split(spec);
  const ExpSequence plus = half_series(wh.plus);
  const ExpSequence minus = half_series(wh.minus);

  // phi_l = sum_{m>=0} plus_{l+m} minus_m.
  const auto& ph = plus.head();
  std::vector<Rational> head(ph.size());
  for (std::size_t l = 0; l < ph.size(); ++l) {
    for (std::size_t m = 0; l + m < ph.size(); ++m) head[l] += ph[l + m] * minus.at(m);
  }
  std::vector<GeometricTerm> terms;
  for (const auto& t : plus.terms()) terms.push_back({t.coef * evaluate(wh.minus, t.ratio), t.ratio});
  return ExpSequence(std::move(head), std::move(terms));
}

ExpSequence negative_coefficients(const SymbolSpec& spec) {
  return positive_coefficients(reflect(spec));
}

Rational fourier_coefficient(const SymbolSpec& spec, long k) {
  if (k >= 0) return positive_coefficients(spec).at(static_cast<std::size_t>(k));
  return negative_coefficients(spec).at(static_cast<std::size_t>(-k));
}

std::vector<Rational> fourier_window(const SymbolSpec& spec, long radius) {
  if (radius < 0) return {};
  const ExpSequence pos = positive_coefficients(spec);
  const ExpSequence neg = spec.symmetric() ? pos : negative_coefficients(spec);
  std::vector<Rational> out(static_cast<std::size_t>(2 * radius + 1));
  for (long k = 0; k <= radius; ++k) {
    out[static_cast<std::size_t>(radius + k)] = pos.at(static_cast<std::size_t>(k));
    out[static_cast<std::size_t>(radius - k)] = neg.at(static_cast<std::size_t>(k));
  }
  return out;
}

Rational log_coefficient(const SymbolSpec& spec, long k) {
  if (k == 0) throw DomainError("log_coefficient: k = 0 is not defined by this operation");
  const long m = std::labs(k);
  if (k > 0) return (power_sum(spec.d, m) - power_sum(spec.b, m)) / Rational(m);
  return (power_sum(spec.c, m) - power_sum(spec.a, m)) / Rational(m);
}

namespace {

// sum_j w_j x_j^{l-1} expansion of prod(1 - u/z)(1 - v z)/((1 - s/z)(1 - x z))
// from the residues at z = 1/x_j; requires no residue at infinity.
std::vector<Rational> residue_weights(const std::vector<Rational>& x,  // z-poles
                                      const std::vector<Rational>& u,  // 1/z-zeros
                                      const std::vector<Rational>& v,  // z-zeros
                                      const std::vector<Rational>& s,  // 1/z-poles
                                      const char* name) {
  if (v.size() > x.size()) {
    throw DomainError(std::string("residue coefficients for ") + name +
                      ": more zeros than poles in z (residue at infinity)");
  }
  std::vector<Rational> w;
  w.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Rational& xj = x[j];
    if (xj.is_zero()) throw DomainError(std::string("zero parameter in ") + name);
    Rational val = xj.pow(static_cast<long>(x.size()) - static_cast<long>(v.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i == j) continue;
      if (x[i] == xj) throw DomainError(std::string("coincident parameters in ") + name);
      val /= xj - x[i];
    }
    for (const auto& ui : u) val *= Rational(1) - ui * xj;
    for (const auto& vi : v) val *= xj - vi;
    for (const auto& si : s) {
      const Rational den = Rational(1) - si * xj;
      if (den.is_zero()) throw DomainError(std::string("pole product equals 1 in ") + name);
      val /= den;
    }
    w.push_back(val);
  }
  return w;
}

}  // namespace

ResidueCoefficients reflected_coefficients(const SymbolSpec& spec) {
  ResidueCoefficients out;
  // phi~_-^{-1} phi~_+ = prod (1 - b/z)(1 - c z) / ((1 - d/z)(1 - a z)).
  out.alpha = residue_weights(spec.a, spec.b, spec.c, spec.d, "A");
  // phi_- phi_+^{-1} = prod (1 - a/z)(1 - d z) / ((1 - c/z)(1 - b z)).
  out.beta = residue_weights(spec.b, spec.a, spec.d, spec.c, "B");
  return out;
}

}  // namespace charpoly
