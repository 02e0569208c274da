#include "charpoly/fredholm.hpp"

#include <map>
#include <sstream>

#include "charpoly/error.hpp"

namespace charpoly {

namespace {

// exp(sum coef * log(1 - base)), accumulated per base and evaluated exactly.
class LogProduct {
 public:
  void add(const Rational& base, const Rational& coef) {
    if (base.is_zero() || coef.is_zero()) return;
    exps_[base] += coef;
  }
  // log(1 - x^2) = log(1 - x) + log(1 + x)
  void add_square(const Rational& x, const Rational& coef) {
    add(x, coef);
    add(-x, coef);
  }

  Rational value() const {
    Rational out(1);
    for (const auto& [base, e] : exps_) {
      if (e.is_zero()) continue;
      if (!e.is_integer()) {
        throw DomainError("constant has non-integer exponent " + e.str() + " at 1 - " + base.str());
      }
      const long k = e.numerator().get_si();
      const Rational factor = Rational(1) - base;
      if (factor.is_zero()) {
        if (k < 0) throw DomainError("constant has a vanishing denominator 1 - " + base.str());
        return Rational(0);
      }
      out *= factor.pow(k);
    }
    return out;
  }

 private:
  std::map<Rational, Rational> exps_;
};

struct Signed {
  Rational x;
  int sigma;
};

// beta = log phi for phi = g g~: beta_m = (sum c^m - sum a^m) / m, m >= 1.
std::vector<Signed> beta_atoms(const SymbolSpec& spec) {
  std::vector<Signed> out;
  for (const auto& c : spec.c) out.push_back({c, 1});
  for (const auto& a : spec.a) out.push_back({a, -1});
  return out;
}

std::string describe(const SymbolSpec& spec) {
  std::ostringstream os;
  os << "A=[" << to_string(spec.a) << "] B=[" << to_string(spec.b) << "] C=[" << to_string(spec.c)
     << "] D=[" << to_string(spec.d) << "]";
  return os.str();
}

void require_symmetric(const SymbolSpec& spec) {
  if (!spec.symmetric()) throw DomainError("symmetric symbol g g~ required");
}

// phi~_+ / phi_+ for phi = g g~.
SymbolSpec th_quotient(const SymbolSpec& spec) { return make_symbol(spec.a, spec.c, spec.c, spec.a); }

// (T(p)^T v)_k = sum_{j >= k} p_{j-k} v_j, where p are the coefficients of `half`.
ExpSequence toeplitz_transpose_apply(const HalfSpec& half, const ExpSequence& v) {
  const ExpSequence p = half_series(half);
  const auto& h = v.head();
  std::vector<Rational> head(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    for (std::size_t j = k; j < h.size(); ++j) {
      if (!h[j].is_zero()) head[k] += p.at(j - k) * h[j];
    }
  }
  std::vector<GeometricTerm> terms;
  for (const auto& t : v.terms()) {
    if (!inside_unit_disc(t.ratio)) throw DomainError("divergent Toeplitz action at " + t.ratio.str());
    for (const auto& pole : half.poles) {
      if (!inside_unit_disc(pole * t.ratio)) throw DomainError("divergent Toeplitz action at " + t.ratio.str());
    }
    terms.push_back({t.coef * evaluate(half, t.ratio), t.ratio});
  }
  return ExpSequence(std::move(head), std::move(terms));
}

}  // namespace

LowRankOperator LowRankOperator::operator*(const Rational& s) const {
  LowRankOperator out{left, {}};
  out.right.reserve(right.size());
  for (const auto& r : right) out.right.push_back(r * s);
  return out;
}

LowRankOperator hankel_operator(const ExpSequence& coeffs, std::size_t offset) {
  LowRankOperator out;
  const auto& h = coeffs.head();
  for (std::size_t j = 0; j + offset < h.size(); ++j) {
    std::vector<Rational> row(h.begin() + static_cast<long>(j + offset), h.end());
    out.left.push_back(ExpSequence::unit(j));
    out.right.emplace_back(std::move(row), std::vector<GeometricTerm>{});
  }
  for (const auto& t : coeffs.terms()) {
    out.left.push_back(ExpSequence::geometric(t.coef * t.ratio.pow(static_cast<long>(offset)), t.ratio));
    out.right.push_back(ExpSequence::geometric(Rational(1), t.ratio));
  }
  return out;
}

LowRankOperator compose(const LowRankOperator& lhs, const LowRankOperator& rhs) {
  LowRankOperator out{lhs.left, {}};
  for (const auto& r : lhs.right) {
    ExpSequence acc;
    for (std::size_t t = 0; t < rhs.rank(); ++t) {
      const Rational w = tail_inner_product(r, rhs.left[t], 0);
      if (!w.is_zero()) acc = acc + rhs.right[t] * w;
    }
    out.right.push_back(std::move(acc));
  }
  return out;
}

Rational FredholmReduction::determinant() const {
  return exact_determinant(RationalMatrix::identity(rank) - reduced);
}

FredholmReduction reduce_tail(const LowRankOperator& k, std::size_t n) {
  FredholmReduction out{k.rank(), RationalMatrix(k.rank(), k.rank()), n};
  for (std::size_t s = 0; s < k.rank(); ++s) {
    for (std::size_t t = 0; t < k.rank(); ++t) {
      out.reduced(s, t) = tail_inner_product(k.right[s], k.left[t], n);
    }
  }
  return out;
}

Rational widom_constant(const SymbolSpec& spec) {
  // (log phi)_k = (sum d^k - sum b^k)/k, (log phi)_{-k} = (sum c^k - sum a^k)/k
  std::vector<Signed> plus, minus;
  for (const auto& d : spec.d) plus.push_back({d, 1});
  for (const auto& b : spec.b) plus.push_back({b, -1});
  for (const auto& c : spec.c) minus.push_back({c, 1});
  for (const auto& a : spec.a) minus.push_back({a, -1});
  LogProduct acc;
  for (const auto& x : plus) {
    for (const auto& y : minus) acc.add(x.x * y.x, Rational(-x.sigma * y.sigma));
  }
  return acc.value();
}

Rational symplectic_widom_constant(const Generator& g) {
  Rational num(1), den(1);
  for (const auto& a : g.a) {
    for (const auto& c : g.c) num *= Rational(1) - a * c;
  }
  for (std::size_t i = 0; i < g.a.size(); ++i) {
    for (std::size_t j = i; j < g.a.size(); ++j) den *= Rational(1) - g.a[i] * g.a[j];
  }
  for (std::size_t i = 0; i < g.c.size(); ++i) {
    for (std::size_t j = i + 1; j < g.c.size(); ++j) den *= Rational(1) - g.c[i] * g.c[j];
  }
  if (den.is_zero()) throw DomainError("symplectic constant has a vanishing denominator");
  return num / den;
}

Rational case_constant(const SymbolSpec& spec, THCase c) {
  require_symmetric(spec);
  const auto atoms = beta_atoms(spec);
  const Rational half(1, 2);
  LogProduct acc;
  // 1/2 tr H(beta)^2 = 1/2 sum_{s,t} sigma_s sigma_t (-log(1 - x_s x_t))
  for (std::size_t s = 0; s < atoms.size(); ++s) {
    for (std::size_t t = 0; t < atoms.size(); ++t) {
      const Rational coef = -half * Rational(atoms[s].sigma * atoms[t].sigma);
      if (s == t) {
        acc.add_square(atoms[s].x, coef);
      } else {
        acc.add(atoms[s].x * atoms[t].x, coef);
      }
    }
  }
  for (const auto& at : atoms) {
    const Rational sg(at.sigma);
    switch (c) {
      case THCase::I:  // + sum beta_odd
      case THCase::II: {
        const Rational dir = c == THCase::I ? Rational(1) : Rational(-1);
        acc.add(at.x, -half * sg * dir);
        acc.add(-at.x, half * sg * dir);
        break;
      }
      case THCase::III:  // - sum_{j>=1} beta_{2j}
        acc.add_square(at.x, half * sg);
        break;
      case THCase::IV:
        acc.add_square(at.x, -half * sg);
        break;
    }
  }
  return acc.value();
}

LowRankOperator unitary_kernel(const SymbolSpec& spec) {
  const SymbolSpec psi1 = make_symbol(spec.a, spec.d, spec.c, spec.b);
  const SymbolSpec psi2 = make_symbol(spec.b, spec.c, spec.d, spec.a);
  return compose(hankel_operator(positive_coefficients(psi1), 1),
                 hankel_operator(positive_coefficients(psi2), 1));
}

LowRankOperator th_kernel(const SymbolSpec& spec, THCase c) {
  require_symmetric(spec);
  switch (c) {
    case THCase::I:
      return hankel_operator(positive_coefficients(th_quotient(spec)), 1);
    case THCase::II:
      return hankel_operator(positive_coefficients(th_quotient(spec)), 1) * Rational(-1);
    case THCase::III:
      return hankel_operator(positive_coefficients(th_quotient(spec)), 2) * Rational(-1);
    case THCase::IV: {
      const HalfSpec g{spec.a, spec.c, Orientation::plus};
      const HalfSpec inv{spec.c, spec.a, Orientation::plus};
      for (std::size_t i = 0; i < spec.a.size(); ++i) {
        if (!inside_unit_disc(spec.a[i])) throw DomainError("tail kernel needs |a| < 1");
        for (std::size_t j = 0; j < i; ++j) {
          if (spec.a[i] == spec.a[j]) throw DomainError("tail kernel needs distinct zeros");
        }
      }
      LowRankOperator k = hankel_operator(half_series(inv), 0);
      for (auto& r : k.right) r = toeplitz_transpose_apply(g, r.zero_below(1));
      return k;
    }
  }
  return {};
}

FredholmReduction unitary_reduction(const SymbolSpec& spec, std::size_t n) {
  return reduce_tail(unitary_kernel(spec), n);
}

FredholmReduction th_reduction(const SymbolSpec& spec, std::size_t m, THCase c) {
  return reduce_tail(th_kernel(spec, c) * Rational(-1), m);
}

Rational fredholm_tail_det_unitary(const SymbolSpec& spec, std::size_t n) {
  return unitary_reduction(spec, n).determinant();
}

Rational fredholm_tail_det_th(const SymbolSpec& spec, std::size_t m, THCase c) {
  return th_reduction(spec, m, c).determinant();
}

RationalMatrix operator_section(const SymbolSpec& spec, std::size_t m, THCase c) {
  RationalMatrix out = th_matrix(spec, m, c);
  if (c == THCase::IV) {
    for (std::size_t j = 0; j < m; ++j) out(j, 0) = out(j, 0) / Rational(2);
  }
  return out;
}

IdentityReport verify_bocg(const SymbolSpec& spec, std::size_t n) {
  IdentityReport r;
  r.identity = "bocg";
  r.inputs = describe(spec) + " n=" + std::to_string(n);
  r.lhs = toeplitz_determinant(spec, n);
  r.rhs = widom_constant(spec) * fredholm_tail_det_unitary(spec, n);
  r.equal = r.lhs == r.rhs;
  return r;
}

IdentityReport verify_basor_ehrhardt(const SymbolSpec& spec, std::size_t m, THCase c) {
  IdentityReport r;
  r.identity = "be-" + to_string(c);
  r.inputs = describe(spec) + " m=" + std::to_string(m);
  r.lhs = th_determinant(spec, m, c);
  const Rational factor = (c == THCase::IV && m >= 1) ? Rational(2) : Rational(1);
  r.rhs = factor * case_constant(spec, c) * fredholm_tail_det_th(spec, m, c);
  r.equal = r.lhs == r.rhs;
  return r;
}

IdentityReport verify_factorization(const Generator& g, int n) {
  if (n < 0) throw DomainError("negative group size");
  IdentityReport r;
  r.identity = "factorization";
  r.inputs = "A=[" + to_string(g.a) + "] C=[" + to_string(g.c) + "] N=" + std::to_string(n);
  r.lhs = group_average({Family::U, n}, g).value;
  const Rational op = group_average({Family::OPlus, n + 1}, g).value;
  if (n % 2 == 0) {
    const HalfSpec h = g.half();
    const Rational om = group_average({Family::OMinus, n + 1}, g).value;
    r.rhs = (boundary_value(h, 1) * boundary_value(h, -1)).inverse() * op * om;
  } else {
    r.rhs = group_average({Family::USp, n - 1}, g).value * op;
  }
  r.equal = r.lhs == r.rhs;
  return r;
}

std::vector<double> szego_decay_probe(const SymbolSpec& spec, std::size_t n_max) {
  const Rational e = widom_constant(spec);
  if (e.is_zero()) throw DomainError("E(phi) = 0");
  std::vector<double> out;
  out.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    out.push_back((toeplitz_determinant(spec, n) / e - Rational(1)).abs().to_double());
  }
  return out;
}

RationalMatrix explicit_th_kernel(const SymbolSpec& spec, THCase c, std::size_t offset,
                                  std::size_t window) {
  require_symmetric(spec);
  if (c == THCase::IV) throw DomainError("no closed entry form for the case IV kernel");
  const SymbolSpec psi = th_quotient(spec);
  const long shift = c == THCase::III ? 2 : 1;
  const Rational sg = c == THCase::I ? Rational(1) : Rational(-1);
  RationalMatrix k(window, window);
  for (std::size_t i = 0; i < window; ++i) {
    for (std::size_t j = 0; j < window; ++j) {
      k(i, j) = sg * fourier_coefficient(psi, static_cast<long>(2 * offset + i + j) + shift);
    }
  }
  return k;
}

RationalMatrix explicit_unitary_kernel(const SymbolSpec& spec, std::size_t offset, std::size_t window) {
  const auto rc = reflected_coefficients(spec);
  RationalMatrix k(window, window);
  for (std::size_t i = 0; i < window; ++i) {
    for (std::size_t j = 0; j < window; ++j) {
      Rational sum(0);
      for (std::size_t g = 0; g < spec.b.size(); ++g) {
        for (std::size_t h = 0; h < spec.a.size(); ++h) {
          const Rational den = Rational(1) - spec.b[g] * spec.a[h];
          if (den.is_zero()) throw DomainError("1 - b a vanishes");
          sum += rc.beta[g] * rc.alpha[h] * spec.b[g].pow(static_cast<long>(offset + i)) *
                 spec.a[h].pow(static_cast<long>(offset + j)) / den;
        }
      }
      k(i, j) = sum;
    }
  }
  return k;
}

Rational expansion_term(const RationalMatrix& window, std::size_t order) {
  const std::size_t n = window.rows();
  if (!window.square()) throw DomainError("window must be square");
  if (order == 0) return Rational(1);
  if (order > n) return Rational(0);
  std::vector<std::size_t> idx(order);
  for (std::size_t i = 0; i < order; ++i) idx[i] = i;
  Rational total(0);
  while (true) {
    RationalMatrix minor(order, order);
    for (std::size_t r = 0; r < order; ++r) {
      for (std::size_t s = 0; s < order; ++s) minor(r, s) = window(idx[r], idx[s]);
    }
    total += exact_determinant(minor);
    std::size_t p = order;
    while (p > 0 && idx[p - 1] == n - order + p - 1) --p;
    if (p == 0) break;
    ++idx[p - 1];
    for (std::size_t q = p; q < order; ++q) idx[q] = idx[q - 1] + 1;
  }
  return total;
}

}  // namespace charpoly
