#include <doctest.h>

#include <cmath>

#include "charpoly/error.hpp"
#include "charpoly/fredholm.hpp"
#include "charpoly/grid.hpp"
#include "charpoly/ratios.hpp"

using namespace charpoly;

namespace {

const Rational h(1, 2), t(1, 3), f(1, 5), s(1, 7);
const THCase kCases[] = {THCase::I, THCase::II, THCase::III, THCase::IV};

double trace_of(const std::vector<std::vector<double>>& m) {
  double tr = 0;
  for (std::size_t i = 0; i < m.size(); ++i) tr += m[i][i];
  return tr;
}

std::vector<std::vector<double>> to_double(const RationalMatrix& m) {
  std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).to_double();
  }
  return out;
}

// e_1 and e_2 of a matrix through traces: e_2 = (tr^2 - tr K^2) / 2.
std::pair<double, double> e1_e2(const std::vector<std::vector<double>>& k) {
  const std::size_t n = k.size();
  double tr2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) tr2 += k[i][j] * k[j][i];
  }
  const double tr = trace_of(k);
  return {tr, (tr * tr - tr2) / 2};
}

}  // namespace

TEST_CASE("widom constant") {
  CHECK(widom_constant(make_symbol({}, {}, {}, {})) == Rational(1));
  CHECK(widom_constant(make_symbol({h}, {h}, {}, {})) == Rational(4, 3));
  CHECK(widom_constant(make_symbol({h}, {h}, {}, {})) == z_pair({h}, {h}));
  // E = Z(A, B; C, D) for the unitary identity
  for (const auto& spec : bocg_grid()) {
    CHECK(widom_constant(spec) == z_four(spec.a, spec.b, spec.c, spec.d));
  }
  const Rational a = h, b = t, c = f, d = s;
  CHECK(widom_constant(make_symbol({a}, {b}, {c}, {d})) ==
        (Rational(1) - a * d) * (Rational(1) - b * c) / ((Rational(1) - c * d) * (Rational(1) - a * b)));
  CHECK(symplectic_widom_constant(Generator{{h, t}, {}}) == Rational(9, 5));
  CHECK(symplectic_widom_constant(Generator{{h, t}, {}}) == z_symplectic({h, t}));
}

TEST_CASE("case constants") {
  const auto one = make_symmetric({}, {});
  for (auto c : kCases) CHECK(case_constant(one, c) == Rational(1));
  CHECK_THROWS_AS(case_constant(make_symbol({h}, {t}, {}, {}), THCase::I), DomainError);

  for (const auto& g : default_generators()) {
    const auto spec = g.symbol();
    // case III: the empty-subset term of the symplectic sum
    CHECK(case_constant(spec, THCase::III) == z_s_with_poles(g.a, g.c));
    CHECK(case_constant(spec, THCase::III) == symplectic_widom_constant(g));
    // case IV: the empty-subset term of the orthogonal sum
    CHECK(case_constant(spec, THCase::IV) == z_o_with_poles(g.a, g.c));
    // III x IV = unitary E
    CHECK(case_constant(spec, THCase::III) * case_constant(spec, THCase::IV) == widom_constant(spec));
    // I and II carry the boundary values: g(-1) E_I = g(1) E_II = Z_O(A; C)
    const auto half = g.half();
    CHECK(boundary_value(half, -1) * case_constant(spec, THCase::I) == z_o_with_poles(g.a, g.c));
    CHECK(boundary_value(half, 1) * case_constant(spec, THCase::II) == z_o_with_poles(g.a, g.c));
  }
}

TEST_CASE("case constants against float trace series") {
  const auto spec = make_symmetric({h, -t}, {f});
  // beta_m = (sum c^m - sum a^m) / m
  auto beta = [&](long m) {
    double v = 0;
    for (const auto& c : spec.c) v += std::pow(c.to_double(), static_cast<double>(m));
    for (const auto& a : spec.a) v -= std::pow(a.to_double(), static_cast<double>(m));
    return v / static_cast<double>(m);
  };
  double tr_h2 = 0, odd = 0, even = 0;
  for (long m = 1; m <= 400; ++m) {
    tr_h2 += static_cast<double>(m) * beta(m) * beta(m);
    if (m % 2 == 1) odd += beta(m);
    else even += beta(m);
  }
  CHECK(std::fabs(std::exp(odd + tr_h2 / 2) - case_constant(spec, THCase::I).to_double()) < 1e-12);
  CHECK(std::fabs(std::exp(-odd + tr_h2 / 2) - case_constant(spec, THCase::II).to_double()) < 1e-12);
  CHECK(std::fabs(std::exp(-even + tr_h2 / 2) - case_constant(spec, THCase::III).to_double()) < 1e-12);
  CHECK(std::fabs(std::exp(even + tr_h2 / 2) - case_constant(spec, THCase::IV).to_double()) < 1e-12);
}

TEST_CASE("unitary tail determinant") {
  const auto one = make_symbol({}, {}, {}, {});
  for (std::size_t n = 0; n <= 5; ++n) CHECK(fredholm_tail_det_unitary(one, n) == Rational(1));
  const auto spec = make_symbol({h}, {h}, {}, {});
  CHECK(fredholm_tail_det_unitary(spec, 2) == Rational(63, 64));
  CHECK(fredholm_tail_det_unitary(spec, 2) == toeplitz_determinant(spec, 2) / widom_constant(spec));
  // tends to 1
  double prev = 1.0;
  for (std::size_t n = 1; n <= 12; ++n) {
    const double gap = std::fabs(1.0 - fredholm_tail_det_unitary(spec, n).to_double());
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 1e-7);
}

TEST_CASE("reduction contract") {
  const auto spec = make_symbol({h, -t}, {f, t}, {Rational(1, 4)}, {});
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto red = unitary_reduction(spec, n);
    CHECK(red.offset == n);
    CHECK(red.reduced.rows() == red.rank);
    CHECK(red.determinant() == exact_determinant(RationalMatrix::identity(red.rank) - red.reduced));
    // det(I - Q_n K Q_n) against the explicit kernel on a 60-wide window (rank 2 => e_3 = 0)
    const auto k = to_double(explicit_unitary_kernel(spec, n, 60));
    const auto [e1, e2] = e1_e2(k);
    CHECK(std::fabs(red.determinant().to_double() - (1 - e1 + e2)) < 1e-12);
  }
}

TEST_CASE("th tail determinants") {
  const auto one = make_symmetric({}, {});
  for (auto c : kCases) {
    for (std::size_t m = 0; m <= 4; ++m) CHECK(fredholm_tail_det_th(one, m, c) == Rational(1));
  }
  // rank one, case III: 1 - alpha a^{2m+1} / (1 - a^2)
  const auto spec = make_symmetric({h}, {t});
  const Rational alpha = reflected_coefficients(spec).alpha[0];
  for (std::size_t m = 0; m <= 6; ++m) {
    const Rational expected = Rational(1) - alpha * h.pow(2 * static_cast<long>(m) + 1) / (Rational(1) - h * h);
    CHECK(fredholm_tail_det_th(spec, m, THCase::III) == expected);
  }
  CHECK(fredholm_tail_det_th(spec, 1, THCase::III) == Rational(39, 40));
  CHECK(case_constant(spec, THCase::III) * fredholm_tail_det_th(spec, 1, THCase::III) ==
        ratio_symplectic({h}, {t}, 2));
  CHECK(ratio_symplectic({h}, {t}, 2) == Rational(13, 12));

  // explicit-window cross-check for I-III at rank 2
  const auto two = make_symmetric({h, -t}, {f});
  for (auto c : {THCase::I, THCase::II, THCase::III}) {
    for (std::size_t m = 0; m <= 3; ++m) {
      const auto k = to_double(explicit_th_kernel(two, c, m, 60));
      const auto [e1, e2] = e1_e2(k);
      CHECK(std::fabs(fredholm_tail_det_th(two, m, c).to_double() - (1 + e1 + e2)) < 1e-12);
    }
  }
}

TEST_CASE("case IV operator section and the factor 2") {
  const auto spec = make_symmetric({h, -t}, {f});
  CHECK(exact_determinant(operator_section(spec, 0, THCase::IV)) == Rational(1));
  for (std::size_t m = 1; m <= 5; ++m) {
    const Rational sec = exact_determinant(operator_section(spec, m, THCase::IV));
    CHECK(th_determinant(spec, m, THCase::IV) == Rational(2) * sec);
    CHECK(sec == case_constant(spec, THCase::IV) * fredholm_tail_det_th(spec, m, THCase::IV));
  }
  for (auto c : {THCase::I, THCase::II, THCase::III}) {
    CHECK(operator_section(spec, 3, c) == th_matrix(spec, 3, c));
  }
}

TEST_CASE("identity reports") {
  const auto one = make_symbol({}, {}, {}, {});
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto r = verify_bocg(one, n);
    CHECK(r.equal);
    CHECK(r.lhs == Rational(1));
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(verify_bocg(make_symbol({h}, {h}, {}, {}), n).equal);
    CHECK(verify_bocg(make_symbol({h, f}, {h, f}, {t, s}, {t, s}), n).equal);
  }
  for (std::size_t m = 1; m <= 5; ++m) CHECK(verify_basor_ehrhardt(make_symmetric({h}, {t}), m, THCase::III).equal);
  for (auto c : kCases) CHECK(verify_basor_ehrhardt(make_symmetric({}, {}), 3, c).equal);
  const auto r = verify_bocg(make_symbol({h}, {t}, {}, {}), 3);
  CHECK(r.identity == "bocg");
  CHECK(r.inputs.find("n=3") != std::string::npos);
}

TEST_CASE("factorization examples") {
  CHECK(verify_factorization(Generator{{h, t}, {}}, 3).equal);
  CHECK(verify_factorization(Generator{{h}, {t}}, 2).equal);
  CHECK(verify_factorization(Generator{{h}, {t}}, 1).equal);
  const Generator g{{h, t}, {}};
  CHECK(group_average({Family::U, 3}, g).value ==
        group_average({Family::USp, 2}, g).value * group_average({Family::OPlus, 4}, g).value);
  CHECK(verify_factorization(Generator{{h}, {t}}, 0).equal);
}

TEST_CASE("product of cases I and II is the unitary tail") {
  for (const auto& spec : be_grid()) {
    for (std::size_t m = 0; m <= 4; ++m) {
      CHECK(fredholm_tail_det_th(spec, m, THCase::I) * fredholm_tail_det_th(spec, m, THCase::II) ==
            fredholm_tail_det_unitary(spec, 2 * m));
    }
  }
}

TEST_CASE("expansion terms vanish beyond the rank") {
  const auto two = make_symmetric({h, -t}, {f});
  for (auto c : {THCase::I, THCase::II, THCase::III}) {
    const auto k = explicit_th_kernel(two, c, 1, 7);
    CHECK(expansion_term(k, 2) != Rational(0));
    CHECK(expansion_term(k, 3) == Rational(0));
    CHECK(expansion_term(k, 4) == Rational(0));
  }
  const auto three = make_symmetric({h, -t, f}, {s});
  const auto k3 = explicit_th_kernel(three, THCase::III, 0, 7);
  CHECK(expansion_term(k3, 3) != Rational(0));
  CHECK(expansion_term(k3, 4) == Rational(0));

  const auto u = make_symbol({h, -t}, {f, t}, {Rational(1, 4)}, {s});
  const auto ku = explicit_unitary_kernel(u, 2, 7);
  CHECK(expansion_term(ku, 2) != Rational(0));
  CHECK(expansion_term(ku, 3) == Rational(0));
  CHECK(expansion_term(ku, 0) == Rational(1));
  CHECK(expansion_term(ku, 1) == [&] {
    Rational tr(0);
    for (std::size_t i = 0; i < 7; ++i) tr += ku(i, i);
    return tr;
  }());
}

TEST_CASE("low-rank operators") {
  // H(psi) for psi_l = 2^{-l} plus a head correction
  const ExpSequence psi({Rational(3), Rational(-1)}, {{Rational(1), h}});
  const auto op = hankel_operator(psi, 1);
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t k = 0; k < 5; ++k) {
      Rational v(0);
      for (std::size_t r = 0; r < op.rank(); ++r) v += op.left[r].at(j) * op.right[r].at(k);
      CHECK(v == psi.at(j + k + 1));
    }
  }
  // composition: (H H)_{jk} = sum_l psi_{j+l+1} psi_{l+k+1}
  const auto sq = compose(op, op);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      Rational v(0);
      for (std::size_t r = 0; r < sq.rank(); ++r) v += sq.left[r].at(j) * sq.right[r].at(k);
      double direct = 0;
      for (std::size_t l = 0; l < 200; ++l) direct += psi.at(j + l + 1).to_double() * psi.at(l + k + 1).to_double();
      CHECK(std::fabs(v.to_double() - direct) < 1e-13);
    }
  }
}

TEST_CASE("divergent tails are rejected") {
  const auto spec = make_symbol({Rational(3, 2)}, {Rational(3, 2)}, {}, {});
  CHECK_THROWS_AS(fredholm_tail_det_unitary(spec, 1), DomainError);
  CHECK_NOTHROW(toeplitz_determinant(spec, 3));
}

TEST_CASE("szego decay probe") {
  for (double v : szego_decay_probe(make_symbol({}, {}, {}, {}), 8)) CHECK(v == 0.0);
  const auto values = szego_decay_probe(make_symbol({h}, {h}, {}, {}), 12);
  for (std::size_t n = 2; n <= 12; ++n) CHECK(values[n - 1] <= std::pow(0.25, static_cast<double>(n - 1)));
}
