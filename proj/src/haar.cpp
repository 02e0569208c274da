#include "charpoly/haar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>

#include <Eigen/Eigenvalues>

#include "charpoly/error.hpp"
#include "charpoly/kernels.hpp"

namespace charpoly {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

using Cplx = std::complex<double>;

Eigen::MatrixXcd complex_ginibre(int rows, int cols, SplitMix64& rng) {
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd z(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = nd(rng);
      const double im = nd(rng);
      z(i, j) = Cplx(re, im);
    }
  }
  return z;
}

// Q R with R's diagonal made positive: the Haar-distributed factor.
template <class M>
M haar_qr(const M& z) {
  Eigen::HouseholderQR<M> qr(z);
  M q = qr.householderQ();
  const auto& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < z.cols(); ++j) {
    const auto d = r(j, j);
    const double m = std::abs(d);
    if (m > 0) q.col(j) *= d / m;
  }
  return q;
}

Eigen::MatrixXcd sample_unitary(int n, SplitMix64& rng) { return haar_qr(complex_ginibre(n, n, rng)); }

Eigen::MatrixXd sample_orthogonal(int n, SplitMix64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::MatrixXd z(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) z(i, j) = nd(rng);
  }
  return haar_qr(z);
}

// Partner column of q in USp(2m): -J conj(q) with J = [[0, I], [-I, 0]].
Eigen::VectorXcd symplectic_partner(const Eigen::VectorXcd& q, int m) {
  Eigen::VectorXcd p(2 * m);
  p.head(m) = -q.tail(m).conjugate();
  p.tail(m) = q.head(m).conjugate();
  return p;
}

Eigen::MatrixXcd sample_symplectic(int n, SplitMix64& rng) {
  const int m = n / 2;
  const Eigen::MatrixXcd x = complex_ginibre(m, m, rng);
  const Eigen::MatrixXcd y = complex_ginibre(m, m, rng);
  Eigen::MatrixXcd u(n, n);
  for (int j = 0; j < m; ++j) {
    Eigen::VectorXcd v(n);
    v.head(m) = x.col(j);
    v.tail(m) = -y.col(j).conjugate();
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        v -= u.col(k).dot(v) * u.col(k);
        v -= u.col(k + m).dot(v) * u.col(k + m);
      }
    }
    v /= v.norm();
    u.col(j) = v;
    u.col(j + m) = symplectic_partner(v, m);
  }
  return u;
}

double determinant_sign(const Eigen::MatrixXd& q) { return q.determinant() >= 0 ? 1.0 : -1.0; }

struct DoubleSymbol {
  std::vector<double> a, b, c, d;
};

std::vector<double> as_doubles(const std::vector<Rational>& xs) {
  std::vector<double> out;
  for (const auto& x : xs) out.push_back(x.to_double());
  return out;
}

}  // namespace

SplitMix64::SplitMix64(std::uint64_t seed, std::uint64_t key)
    : state_(mix(seed ^ mix(key + 0x9e3779b97f4a7c15ULL))) {}

SplitMix64::result_type SplitMix64::operator()() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

Eigen::MatrixXcd sample_haar(Family family, int n, std::uint64_t seed, std::uint64_t index) {
  if (n < 1) throw DomainError("Haar sampling needs N >= 1");
  if (n > kMaxMcSize) throw SizeLimitError("Haar sampling is limited to N <= " + std::to_string(kMaxMcSize));
  SplitMix64 rng(seed, index);
  switch (family) {
    case Family::U:
      return sample_unitary(n, rng);
    case Family::USp:
      if (n % 2 != 0) throw DomainError("USp(N) needs even N, got " + std::to_string(n));
      return sample_symplectic(n, rng);
    case Family::OPlus:
    case Family::OMinus: {
      const double want = family == Family::OPlus ? 1.0 : -1.0;
      // P(reject) = 1/2 per draw; the stream is long enough for any practical run.
      while (true) {
        Eigen::MatrixXd q = sample_orthogonal(n, rng);
        if (determinant_sign(q) == want) return q.cast<Cplx>();
      }
    }
  }
  return {};
}

Eigen::MatrixXd sample_orthogonal_group(int n, std::uint64_t seed, std::uint64_t index) {
  if (n < 1) throw DomainError("Haar sampling needs N >= 1");
  if (n > kMaxMcSize) throw SizeLimitError("Haar sampling is limited to N <= " + std::to_string(kMaxMcSize));
  SplitMix64 rng(seed, index);
  return sample_orthogonal(n, rng);
}

double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

unsigned default_workers() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CHARPOLY_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) hw = std::min(hw, static_cast<unsigned>(v));
  }
  return hw;
}

McEstimate mc_average(GroupTarget target, const SymbolSpec& spec, std::size_t samples,
                      std::uint64_t seed, unsigned workers) {
  if (samples < 100) throw DomainError("Monte-Carlo needs at least 100 samples");
  if (target.family != Family::U && !spec.symmetric()) {
    throw DomainError(to_string(target.family) + " averages need a symmetric symbol g g~");
  }
  for (const auto* poles : {&spec.c, &spec.d}) {
    for (const auto& p : *poles) {
      if (!inside_unit_disc(p)) throw DomainError("Monte-Carlo needs pole moduli < 1");
    }
  }
  const int n = target.size;
  if (n < 1) throw DomainError("Monte-Carlo needs N >= 1");
  if (target.family == Family::USp && n % 2 != 0) {
    throw DomainError("USp(N) needs even N, got " + std::to_string(n));
  }
  if (n > kMaxMcSize) throw SizeLimitError("Monte-Carlo is limited to N <= " + std::to_string(kMaxMcSize));

  const DoubleSymbol sym{as_doubles(spec.a), as_doubles(spec.b), as_doubles(spec.c), as_doubles(spec.d)};
  const bool unitary = target.family == Family::U;
  const auto& kern = kernels::active();

  std::vector<double> values(samples);
  std::vector<char> ok(samples, 0);

  auto work = [&](std::size_t begin, std::size_t end) {
    std::vector<double> re(n), im(n), fr(n), fi(n), gr(n), gi(n);
    for (std::size_t s = begin; s < end; ++s) {
      const Eigen::MatrixXcd u = sample_haar(target.family, n, seed, s);
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(u, false);
      if (es.info() != Eigen::Success) continue;
      for (int i = 0; i < n; ++i) {
        re[i] = es.eigenvalues()(i).real();
        im[i] = es.eigenvalues()(i).imag();
      }
      // g(z) = prod (1 - b z)/(1 - d z) for the plus half; symmetric families use (A, C).
      const auto& plus_z = unitary ? sym.b : sym.a;
      const auto& plus_p = unitary ? sym.d : sym.c;
      kern.symbol_factors(re.data(), im.data(), n, plus_z.data(), plus_z.size(), plus_p.data(),
                          plus_p.size(), fr.data(), fi.data());
      double pr = 0, pi = 0;
      kern.complex_product(fr.data(), fi.data(), n, &pr, &pi);
      if (unitary) {
        // phi_-(z) = prod (1 - a/z)/(1 - c/z), and 1/z = conj(z) on the circle
        for (int i = 0; i < n; ++i) im[i] = -im[i];
        kern.symbol_factors(re.data(), im.data(), n, sym.a.data(), sym.a.size(), sym.c.data(),
                            sym.c.size(), gr.data(), gi.data());
        double qr = 0, qi = 0;
        kern.complex_product(gr.data(), gi.data(), n, &qr, &qi);
        pr = pr * qr - pi * qi;
      }
      values[s] = pr;
      ok[s] = 1;
    }
  };

  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, samples));
  if (workers <= 1) {
    work(0, samples);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (samples + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t b = w * chunk, e = std::min(samples, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& t : pool) t.join();
  }

  std::vector<double> good;
  good.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    if (ok[s]) good.push_back(values[s]);
  }
  McEstimate est;
  est.samples = good.size();
  est.seed = seed;
  est.failures = samples - good.size();
  if (good.empty()) throw Error("every Monte-Carlo sample failed");
  est.mean = pairwise_sum(good.data(), good.size()) / static_cast<double>(good.size());
  std::vector<double> dev(good.size());
  for (std::size_t i = 0; i < good.size(); ++i) dev[i] = (good[i] - est.mean) * (good[i] - est.mean);
  const double var = good.size() > 1 ? pairwise_sum(dev.data(), dev.size()) / static_cast<double>(good.size() - 1) : 0.0;
  est.std_error = std::sqrt(var / static_cast<double>(good.size()));
  return est;
}

}  // namespace charpoly
