#include <doctest.h>

#include <cmath>

#include "charpoly/error.hpp"
#include "charpoly/fredholm.hpp"
#include "charpoly/symbol.hpp"

using namespace charpoly;

namespace {

const Rational h(1, 2), t(1, 3), f(1, 5), s(1, 7);

// Power series of prod (1 - z w) / prod (1 - p w) to `len` terms, by direct
// multiplication of truncated factors.
std::vector<Rational> truncated_series(const std::vector<Rational>& zeros, const std::vector<Rational>& poles,
                                       std::size_t len) {
  std::vector<Rational> out(len);
  out[0] = Rational(1);
  for (const auto& z : zeros) {
    for (std::size_t m = len - 1; m > 0; --m) out[m] -= z * out[m - 1];
  }
  for (const auto& p : poles) {
    // multiply by sum_k p^k w^k: running recurrence out[m] += p out[m-1]
    for (std::size_t m = 1; m < len; ++m) out[m] += p * out[m - 1];
  }
  return out;
}

// phi_k from truncated halves: sum_m plus_{k+m} minus_m (k >= 0).
Rational truncated_coefficient(const SymbolSpec& spec, long k, std::size_t len) {
  const auto plus = truncated_series(spec.b, spec.d, len + static_cast<std::size_t>(std::labs(k)));
  const auto minus = truncated_series(spec.a, spec.c, len + static_cast<std::size_t>(std::labs(k)));
  const auto& p = k >= 0 ? plus : minus;
  const auto& q = k >= 0 ? minus : plus;
  const auto kk = static_cast<std::size_t>(std::labs(k));
  Rational sum(0);
  for (std::size_t m = 0; m < len; ++m) sum += p[kk + m] * q[m];
  return sum;
}

}  // namespace

TEST_CASE("make_symbol validation") {
  CHECK(make_symbol({}, {}, {}, {}) == SymbolSpec{});
  const auto sym = make_symmetric({h}, {t});
  CHECK(sym.a == std::vector<Rational>{h});
  CHECK(sym.b == std::vector<Rational>{h});
  CHECK(sym.c == std::vector<Rational>{t});
  CHECK(sym.d == std::vector<Rational>{t});
  CHECK(sym.symmetric());
  CHECK_THROWS_AS(make_symbol({}, {}, {Rational(3, 2)}, {}), DomainError);
  CHECK_THROWS_AS(make_symbol({}, {}, {}, {Rational(-1)}), DomainError);
  CHECK_THROWS_AS(make_symbol({}, {}, {t, t}, {}), DomainError);
  CHECK_THROWS_AS(make_symbol({}, {}, {}, {f, f}), DomainError);
  // repeated zeros are fine
  CHECK_NOTHROW(make_symbol({h, h}, {h, h}, {}, {}));
}

TEST_CASE("fourier coefficients: examples") {
  const auto one = make_symbol({}, {}, {}, {});
  CHECK(fourier_coefficient(one, 0) == Rational(1));
  for (long k : {-3L, -1L, 1L, 5L}) CHECK(fourier_coefficient(one, k) == Rational(0));

  const auto lp = make_symbol({h}, {h}, {}, {});
  CHECK(fourier_coefficient(lp, 0) == Rational(5, 4));
  CHECK(fourier_coefficient(lp, 1) == Rational(-1, 2));
  CHECK(fourier_coefficient(lp, -1) == Rational(-1, 2));
  for (long k : {-4L, -2L, 2L, 3L}) CHECK(fourier_coefficient(lp, k) == Rational(0));
}

TEST_CASE("fourier coefficients: geometric convolution oracle") {
  const auto p = make_symbol({}, {}, {t}, {t});
  for (long k = -8; k <= 8; ++k) {
    const Rational closed = Rational(9, 8) * t.pow(std::labs(k));
    CHECK(fourier_coefficient(p, k) == closed);
    // 40-term truncation differs from the closed form by exactly its tail
    const Rational approx = truncated_coefficient(p, k, 40);
    const Rational tail = closed - approx;
    CHECK(tail == Rational(9, 8) * t.pow(std::labs(k) + 80));
  }
}

TEST_CASE("fourier coefficients of a general symbol match the truncated convolution") {
  const auto spec = make_symbol({h, -t}, {f}, {Rational(1, 4)}, {-f, s});
  for (long k = -6; k <= 6; ++k) {
    const double exact = fourier_coefficient(spec, k).to_double();
    const double approx = truncated_coefficient(spec, k, 60).to_double();
    CHECK(std::fabs(exact - approx) < 1e-15);
  }
}

TEST_CASE("fourier_window indexing") {
  const auto spec = make_symbol({h}, {t}, {f}, {});
  const auto w = fourier_window(spec, 4);
  REQUIRE(w.size() == 9);
  for (long k = -4; k <= 4; ++k) CHECK(w[static_cast<std::size_t>(k + 4)] == fourier_coefficient(spec, k));
}

TEST_CASE("wiener-hopf split") {
  const auto split = wiener_hopf_split(make_symbol({}, {}, {}, {}));
  CHECK(split.plus.zeros.empty());
  CHECK(split.minus.poles.empty());

  const auto sym = wiener_hopf_split(make_symmetric({h}, {t}));
  CHECK(sym.plus == HalfSpec{{h}, {t}, Orientation::plus});
  CHECK(sym.minus == HalfSpec{{h}, {t}, Orientation::minus});

  // phi = phi_- phi_+: coefficients of the product of the two halves
  const auto spec = make_symbol({h, f}, {-t}, {s}, {Rational(1, 4)});
  const auto wh = wiener_hopf_split(spec);
  const auto plus = half_series(wh.plus);
  const auto minus = half_series(wh.minus);
  for (long k = -6; k <= 6; ++k) {
    // phi_k = sum_m plus_{k+m} minus_m in closed form through the plus-only / minus-only specs
    const SymbolSpec p{{}, wh.plus.zeros, {}, wh.plus.poles};
    const SymbolSpec m{wh.minus.zeros, {}, wh.minus.poles, {}};
    if (k >= 0) {
      CHECK(fourier_coefficient(p, k) == plus.at(static_cast<std::size_t>(k)));
    } else {
      CHECK(fourier_coefficient(m, k) == minus.at(static_cast<std::size_t>(-k)));
      CHECK(fourier_coefficient(p, k) == Rational(0));
    }
    Rational conv(0);
    const std::size_t kk = static_cast<std::size_t>(std::labs(k));
    for (std::size_t j = 0; j < 200; ++j) {
      conv += k >= 0 ? plus.at(kk + j) * minus.at(j) : minus.at(kk + j) * plus.at(j);
    }
    CHECK(std::fabs(conv.to_double() - fourier_coefficient(spec, k).to_double()) < 1e-15);
  }
}

TEST_CASE("evaluate and boundary values") {
  CHECK(boundary_value(HalfSpec{{h}, {}, Orientation::plus}, 1) == h);
  CHECK(boundary_value(HalfSpec{{h}, {}, Orientation::plus}, -1) == Rational(3, 2));
  CHECK(boundary_value(HalfSpec{}, 1) == Rational(1));
  CHECK(boundary_value(HalfSpec{}, -1) == Rational(1));
  CHECK(boundary_value(HalfSpec{{h}, {t}, Orientation::plus}, 1) == Rational(3, 4));
  CHECK(evaluate(HalfSpec{{h}, {t}, Orientation::plus}, Rational(2)) == Rational(0));
}

TEST_CASE("log coefficients") {
  const auto one = make_symbol({}, {}, {}, {});
  for (long k : {-2L, 1L, 3L}) CHECK(log_coefficient(one, k) == Rational(0));
  CHECK(log_coefficient(make_symbol({}, {h}, {}, {}), 2) == Rational(-1, 8));
  CHECK_THROWS_AS(log_coefficient(one, 0), DomainError);
  const auto spec = make_symbol({h}, {t}, {f}, {s});
  CHECK(log_coefficient(spec, 3) == (s.pow(3) - t.pow(3)) / Rational(3));
  CHECK(log_coefficient(spec, -2) == (f.pow(2) - h.pow(2)) / Rational(2));
}

TEST_CASE("E-series partial sums converge to the closed form") {
  const std::vector<SymbolSpec> specs{
      make_symbol({h}, {h}, {}, {}),
      make_symbol({h, -t}, {f}, {Rational(1, 4)}, {-h}),
      make_symmetric({h, t}, {-f}),
  };
  for (const auto& spec : specs) {
    double acc = 0.0;
    for (long k = 1; k <= 200; ++k) {
      acc += static_cast<double>(k) * log_coefficient(spec, k).to_double() * log_coefficient(spec, -k).to_double();
    }
    CHECK(std::fabs(std::exp(acc) - widom_constant(spec).to_double()) < 1e-10);
  }
}

TEST_CASE("symmetric specs have even coefficients") {
  const auto spec = make_symmetric({h, -t, f}, {Rational(1, 4), -s});
  for (long k = 0; k <= 10; ++k) CHECK(fourier_coefficient(spec, k) == fourier_coefficient(spec, -k));
}

TEST_CASE("product of symbols merges parameter lists") {
  const auto x = make_symbol({h}, {}, {f}, {});
  const auto y = make_symbol({}, {t}, {}, {s});
  const auto merged = make_symbol({h}, {t}, {f}, {s});
  for (long k = -6; k <= 6; ++k) {
    double conv_d = 0.0;
    for (long j = -120; j <= 120; ++j) {
      conv_d += fourier_coefficient(x, j).to_double() * fourier_coefficient(y, k - j).to_double();
    }
    CHECK(std::fabs(conv_d - fourier_coefficient(merged, k).to_double()) < 1e-14);
  }
  // exact at k = 0: sum_j x_{-j} y_j
  const auto xm = negative_coefficients(x);
  const auto yp = positive_coefficients(y);
  CHECK(tail_inner_product(xm, yp, 0) == fourier_coefficient(merged, 0));
}

TEST_CASE("reflected coefficients") {
  // k = 1 closed form
  const auto one = reflected_coefficients(make_symmetric({h}, {t}));
  REQUIRE(one.alpha.size() == 1);
  CHECK(one.alpha[0] == Rational(3, 20));
  CHECK(one.alpha[0] == (Rational(1) - h * h) * (h - t) / (Rational(1) - t * h));

  CHECK_THROWS_AS(reflected_coefficients(make_symmetric({h, h}, {})), DomainError);
  CHECK_THROWS_AS(reflected_coefficients(make_symmetric({Rational(0)}, {})), DomainError);

  // sum_j alpha_j a_j^{l-1} is the l-th coefficient of phi~_+ / phi_+
  const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> cases{
      {{h}, {t}}, {{h, -t}, {f}}, {{h, t, -f}, {s, Rational(-1, 4)}}, {{h, -t}, {}}, {{h, f, -s}, {t}}};
  for (const auto& [a, c] : cases) {
    const auto sym = make_symmetric(a, c);
    const auto rc = reflected_coefficients(sym);
    const auto quotient = make_symbol(a, c, c, a);
    for (long l = 1; l <= 8; ++l) {
      Rational sum(0);
      for (std::size_t j = 0; j < a.size(); ++j) sum += rc.alpha[j] * a[j].pow(l - 1);
      CHECK(sum == fourier_coefficient(quotient, l));
    }
  }

  // beta: coefficients of phi_- phi_+^{-1} = Spec(A, D, C, B)
  const auto spec = make_symbol({h, -t}, {f, s}, {Rational(1, 4)}, {-f});
  const auto rc = reflected_coefficients(spec);
  const auto psi1 = make_symbol(spec.a, spec.d, spec.c, spec.b);
  const auto psi2 = make_symbol(spec.b, spec.c, spec.d, spec.a);
  for (long l = 1; l <= 8; ++l) {
    Rational sb(0), sa(0);
    for (std::size_t j = 0; j < spec.b.size(); ++j) sb += rc.beta[j] * spec.b[j].pow(l - 1);
    for (std::size_t j = 0; j < spec.a.size(); ++j) sa += rc.alpha[j] * spec.a[j].pow(l - 1);
    CHECK(sb == fourier_coefficient(psi1, l));
    CHECK(sa == fourier_coefficient(psi2, l));
  }
}
