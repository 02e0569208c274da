#include <doctest.h>

#include <cmath>
#include <random>

#include "charpoly/error.hpp"
#include "charpoly/haar.hpp"
#include "charpoly/kernels.hpp"

using namespace charpoly;

namespace {

Eigen::MatrixXcd symplectic_form(int n) {
  const int m = n / 2;
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(n, n);
  j.block(0, m, m, m).setIdentity();
  j.block(m, 0, m, m) = -Eigen::MatrixXcd::Identity(m, m);
  return j;
}

double unitarity(const Eigen::MatrixXcd& u) {
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).norm();
}

}  // namespace

TEST_CASE("samples lie in their groups") {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint64_t i = 0; i < 5; ++i) {
      const auto u = sample_haar(Family::U, n, 3, i);
      CHECK(unitarity(u) < 1e-10);
      for (auto fam : {Family::OPlus, Family::OMinus}) {
        const auto o = sample_haar(fam, n, 3, i);
        CHECK(unitarity(o) < 1e-10);
        CHECK(o.imag().norm() == 0.0);
        const double det = o.real().determinant();
        CHECK(std::fabs(det - (fam == Family::OPlus ? 1.0 : -1.0)) < 1e-10);
      }
      if (n % 2 == 0) {
        const auto sp = sample_haar(Family::USp, n, 3, i);
        CHECK(unitarity(sp) < 1e-10);
        const auto j = symplectic_form(n);
        CHECK((sp.transpose() * j * sp - j).norm() < 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(sample_haar(Family::USp, 3, 1, 0), DomainError);
  CHECK_THROWS_AS(sample_haar(Family::U, 0, 1, 0), DomainError);
  CHECK_THROWS_AS(sample_haar(Family::U, kMaxMcSize + 1, 1, 0), SizeLimitError);
}

TEST_CASE("small cases") {
  const auto u = sample_haar(Family::U, 1, 9, 0);
  CHECK(std::fabs(std::abs(u(0, 0)) - 1.0) < 1e-12);
  const Eigen::MatrixXd r = sample_haar(Family::OPlus, 2, 9, 1).real();
  CHECK(std::fabs(r.trace()) <= 2.0 + 1e-12);
  CHECK(std::fabs(r(0, 0) - r(1, 1)) < 1e-12);
  CHECK(std::fabs(r(0, 1) + r(1, 0)) < 1e-12);
}

TEST_CASE("eigenvalues sit on the unit circle") {
  for (auto fam : {Family::U, Family::USp, Family::OPlus, Family::OMinus}) {
    for (std::uint64_t i = 0; i < 20; ++i) {
      const auto u = sample_haar(fam, 6, 11, i);
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(u, false);
      REQUIRE(es.info() == Eigen::Success);
      for (int k = 0; k < 6; ++k) CHECK(std::fabs(std::abs(es.eigenvalues()(k)) - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("haar moments") {
  // E tr U = 0 over U(N)
  const int n = 4, count = 20000;
  std::vector<double> re(count), im(count);
  for (int i = 0; i < count; ++i) {
    const auto tr = sample_haar(Family::U, n, 21, static_cast<std::uint64_t>(i)).trace();
    re[static_cast<std::size_t>(i)] = tr.real();
    im[static_cast<std::size_t>(i)] = tr.imag();
  }
  auto mean_se = [&](const std::vector<double>& v) {
    const double m = pairwise_sum(v.data(), v.size()) / count;
    double ss = 0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::pair{m, std::sqrt(ss / (count - 1) / count)};
  };
  const auto [mr, sr] = mean_se(re);
  const auto [mi, si] = mean_se(im);
  CHECK(std::fabs(mr) < 5 * sr);
  CHECK(std::fabs(mi) < 5 * si);

  // det sign of plain O(N) draws splits evenly
  int plus = 0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) {
    if (sample_orthogonal_group(3, 5, static_cast<std::uint64_t>(i)).determinant() > 0) ++plus;
  }
  const double p = static_cast<double>(plus) / trials;
  CHECK(std::fabs(p - 0.5) < 5 * std::sqrt(0.25 / trials));
}

TEST_CASE("mc_average basics") {
  const auto one = make_symmetric({}, {});
  const auto e = mc_average({Family::USp, 4}, one, 200, 1);
  CHECK(e.mean == 1.0);
  CHECK(e.std_error == 0.0);
  CHECK(e.samples == 200);
  CHECK(e.seed == 1);
  CHECK_THROWS_AS(mc_average({Family::U, 2}, one, 99, 1), DomainError);
  CHECK_THROWS_AS(mc_average({Family::USp, 2}, make_symbol({Rational(1, 2)}, {}, {}, {}), 200, 1), DomainError);
  CHECK_THROWS_AS(mc_average({Family::USp, 3}, one, 200, 1), DomainError);
}

TEST_CASE("mc_average is independent of the worker count") {
  const auto spec = make_symmetric({Rational(1, 2), Rational(-1, 3)}, {Rational(1, 5)});
  const auto a = mc_average({Family::OMinus, 5}, spec, 3000, 77, 1);
  const auto b = mc_average({Family::OMinus, 5}, spec, 3000, 77, 3);
  const auto c = mc_average({Family::OMinus, 5}, spec, 3000, 77, 8);
  CHECK(a.mean == b.mean);
  CHECK(a.mean == c.mean);
  CHECK(a.std_error == c.std_error);
  const auto d = mc_average({Family::OMinus, 5}, spec, 3000, 78, 1);
  CHECK(a.mean != d.mean);
}

TEST_CASE("mc_average agrees with exact values") {
  const auto e = mc_average({Family::USp, 2}, make_symmetric({Rational(1, 2), Rational(1, 3)}, {}), 100000, 42);
  CHECK(std::fabs(e.mean - 14.0 / 9.0) < 5 * e.std_error);
  const auto u = mc_average({Family::U, 2}, make_symbol({Rational(1, 2)}, {Rational(1, 2)}, {}, {}), 100000, 42);
  CHECK(std::fabs(u.mean - 21.0 / 16.0) < 5 * u.std_error);
}

TEST_CASE("pairwise sum") {
  std::vector<double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i);
  CHECK(pairwise_sum(v.data(), v.size()) == 499500.0);
  CHECK(pairwise_sum(v.data(), 0) == 0.0);
}

TEST_CASE("simd kernels match the scalar reference bit for bit") {
  const auto* avx = kernels::avx2_table();
  if (avx == nullptr || !__builtin_cpu_supports("avx2")) {
    MESSAGE("no AVX2 variant on this machine; only the scalar path is exercised");
    return;
  }
  const auto& sc = kernels::scalar_table();
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> ang(-3.14159, 3.14159), par(-0.9, 0.9);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 13u, 64u}) {
    std::vector<double> re(n), im(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double th = ang(rng);
      re[i] = std::cos(th);
      im[i] = std::sin(th);
    }
    for (std::size_t nz = 0; nz <= 3; ++nz) {
      for (std::size_t np = 0; np <= 2; ++np) {
        std::vector<double> zeros(nz), poles(np);
        for (auto& z : zeros) z = par(rng);
        for (auto& p : poles) p = par(rng);
        std::vector<double> ar(n), ai(n), br(n), bi(n);
        sc.symbol_factors(re.data(), im.data(), n, zeros.data(), nz, poles.data(), np, ar.data(), ai.data());
        avx->symbol_factors(re.data(), im.data(), n, zeros.data(), nz, poles.data(), np, br.data(), bi.data());
        CHECK(ar == br);
        CHECK(ai == bi);
        double pr0, pi0, pr1, pi1;
        sc.complex_product(ar.data(), ai.data(), n, &pr0, &pi0);
        avx->complex_product(ar.data(), ai.data(), n, &pr1, &pi1);
        CHECK(pr0 == pr1);
        CHECK(pi0 == pi1);
      }
    }
  }
}

TEST_CASE("kernels evaluate the symbol") {
  const auto& k = kernels::active();
  const double re[] = {0.6, -1.0, 0.0};
  const double im[] = {0.8, 0.0, 1.0};
  const double zeros[] = {0.5}, poles[] = {0.25};
  double outr[3], outi[3];
  k.symbol_factors(re, im, 3, zeros, 1, poles, 1, outr, outi);
  for (int i = 0; i < 3; ++i) {
    const std::complex<double> w(re[i], im[i]);
    const auto v = (1.0 - 0.5 * w) / (1.0 - 0.25 * w);
    CHECK(std::fabs(outr[i] - v.real()) < 1e-15);
    CHECK(std::fabs(outi[i] - v.imag()) < 1e-15);
  }
  double pr, pi;
  k.complex_product(outr, outi, 3, &pr, &pi);
  std::complex<double> prod(1.0, 0.0);
  for (int i = 0; i < 3; ++i) prod *= std::complex<double>(outr[i], outi[i]);
  CHECK(std::fabs(pr - prod.real()) < 1e-15);
  CHECK(std::fabs(pi - prod.imag()) < 1e-15);
}
