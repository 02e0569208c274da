#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "charpoly/structured.hpp"
#include "charpoly/symbol.hpp"

namespace charpoly {

/// Counter-based stream: the state is a pure function of (seed, key), so any
/// sample can be regenerated independently of how work is split.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  SplitMix64(std::uint64_t seed, std::uint64_t key);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();

 private:
  std::uint64_t state_;
};

/// Haar sample from U(N), USp(N) (N even), O+(N) or O-(N), keyed by
/// (seed, index). Orthogonal samples are real but returned as complex.
Eigen::MatrixXcd sample_haar(Family family, int n, std::uint64_t seed, std::uint64_t index);

/// Haar sample from the whole of O(N), before any split by determinant sign.
Eigen::MatrixXd sample_orthogonal_group(int n, std::uint64_t seed, std::uint64_t index);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t failures = 0;
};

inline constexpr int kMaxMcSize = 64;

/// Average of det phi(U) (unitary, any spec) or det g(U) (other families,
/// symmetric spec with g = prod (1 - a z)/(1 - c z)) over `samples` Haar draws.
/// Deterministic in (seed, samples) for any worker count.
McEstimate mc_average(GroupTarget target, const SymbolSpec& spec, std::size_t samples,
                      std::uint64_t seed, unsigned workers = 0);

/// Worker count from CHARPOLY_THREADS, capped at the hardware concurrency.
unsigned default_workers();

/// Pairwise (cascade) sum.
double pairwise_sum(const double* x, std::size_t n);

}  // namespace charpoly
