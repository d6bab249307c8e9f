#ifndef STABSIGN_DAC_MODEL_HPP
#define STABSIGN_DAC_MODEL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "stabsign/alpha.hpp"
#include "stabsign/exact_rational.hpp"
#include "stabsign/sign_mc.hpp"
#include "stabsign/sign_vector.hpp"

// Divide and color on {1, 2, 3} = (X_1, S, S_1). Since S and S_1 are
// independent and (-,+,+) is impossible, only the partitions {{1,2},{3}}
// and {{1,3},{2}} can carry weight.

namespace stabsign::dac {

struct PartitionWeights {
  ExactRational with_s;   // {{1,2},{3}}: X_1 shares the colour of S
  ExactRational with_s1;  // {{1,3},{2}}: X_1 shares the colour of S_1

  /// The weights forced by the exchange symmetry S <-> S_1: 1/2 each.
  static PartitionWeights symmetric() { return {ExactRational(1, 2), ExactRational(1, 2)}; }

  void validate() const {
    if (with_s < 0 || with_s > 1 || with_s1 < 0 || with_s1 > 1) {
      throw std::invalid_argument("partition weights must lie in [0, 1]");
    }
    if (with_s + with_s1 != 1) throw std::invalid_argument("partition weights must sum to 1");
  }
};

/// Exact pmf: each two-block partition contributes weight * 2^-2 to each of
/// the four sign vectors constant on its blocks.
inline std::array<ExactRational, 8> dac_pmf_exact(const PartitionWeights& w) {
  w.validate();
  // block[i] = block label of coordinate i.
  struct Partition {
    std::array<int, 3> block;
    ExactRational weight;
  };
  const std::array<Partition, 2> partitions = {Partition{{0, 0, 1}, w.with_s},
                                               Partition{{0, 1, 0}, w.with_s1}};
  std::array<ExactRational, 8> pmf{};
  for (const Partition& p : partitions) {
    const int blocks = *std::max_element(p.block.begin(), p.block.end()) + 1;
    const ExactRational per_vector = p.weight / ExactRational(BigInt(1) << blocks);
    for (std::size_t k = 0; k < 8; ++k) {
      const SignTriple v = sign_triple_at(k);
      bool consistent = true;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
          if (p.block[i] == p.block[j] && v[i] != v[j]) consistent = false;
      if (consistent) pmf[k] += per_vector;
    }
  }
  return pmf;
}

inline SignVectorPmf dac_pmf(const PartitionWeights& w = PartitionWeights::symmetric()) {
  const auto exact = dac_pmf_exact(w);
  SignVectorPmf pmf;
  for (std::size_t k = 0; k < 8; ++k) pmf.probs[k] = to_double(exact[k]);
  return pmf;
}

/// max over outcomes |empirical - exact|.
inline double max_deviation(const SignVectorPmf& empirical, const SignVectorPmf& exact) {
  double d = 0.0;
  for (std::size_t k = 0; k < 8; ++k) d = std::max(d, std::abs(empirical.probs[k] - exact.probs[k]));
  return d;
}

inline constexpr std::uint64_t kMinCompareTrials = 100'000;

struct Comparison {
  double max_deviation = 0.0;
  SignVectorPmf empirical;
  SignVectorPmf exact;
  std::uint64_t forbidden_count = 0;  // (-,+,+) plus (+,-,-)
};

inline Comparison compare(const Alpha& alpha, std::uint64_t trials, std::uint64_t seed,
                          const PartitionWeights& w = PartitionWeights::symmetric(),
                          const McOptions& opt = {}) {
  if (trials < kMinCompareTrials) {
    throw std::invalid_argument("compare_mc_vs_dac needs at least 10^5 trials");
  }
  Comparison c;
  c.exact = dac_pmf(w);
  c.empirical = estimate_sign_vector_pmf(alpha, trials, seed, opt);
  c.max_deviation = max_deviation(c.empirical, c.exact);
  c.forbidden_count = c.empirical.counts[sign_triple_index({-1, 1, 1})] +
                      c.empirical.counts[sign_triple_index({1, -1, -1})];
  return c;
}

inline double compare_mc_vs_dac(const Alpha& alpha, std::uint64_t trials, std::uint64_t seed,
                                const PartitionWeights& w = PartitionWeights::symmetric(),
                                const McOptions& opt = {}) {
  return compare(alpha, trials, seed, w, opt).max_deviation;
}

}  // namespace stabsign::dac

#endif  // STABSIGN_DAC_MODEL_HPP
