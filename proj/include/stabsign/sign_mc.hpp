#ifndef STABSIGN_SIGN_MC_HPP
#define STABSIGN_SIGN_MC_HPP

#include <array>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabsign/alpha.hpp"
#include "stabsign/parallel.hpp"
#include "stabsign/rng.hpp"
#include "stabsign/sign_vector.hpp"
#include "stabsign/stable_sampler.hpp"

namespace stabsign {

/// Output of every Monte Carlo estimator in the library.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// Trials in which some S + S_i came out exactly 0 (sign taken as +1).
  std::uint64_t zero_sign_events = 0;
};

inline constexpr std::uint64_t kMinTrials = 10'000;
inline constexpr std::uint64_t kDefaultChunkSize = std::uint64_t{1} << 16;
inline constexpr std::size_t kMaxProductOrder = 32;

struct McOptions {
  Parallelism parallelism{};
  std::uint64_t chunk_size = kDefaultChunkSize;
};

/// Mean and standard error of a +-1 valued sample given how many were +1.
inline McEstimate product_estimate(std::uint64_t plus, std::uint64_t trials, std::uint64_t seed) {
  const double n = static_cast<double>(trials);
  const double mean = (2.0 * static_cast<double>(plus) - n) / n;
  const double var = trials > 1 ? (1.0 - mean * mean) * n / (n - 1.0) : 0.0;
  return {mean, std::sqrt(std::max(var, 0.0) / n), trials, seed, 0};
}

/// Binomial proportion with standard error sqrt(p(1-p)/n).
inline McEstimate proportion_estimate(std::uint64_t hits, std::uint64_t trials, std::uint64_t seed) {
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  return {p, std::sqrt(p * (1.0 - p) / n), trials, seed, 0};
}

namespace detail {

inline void require_trials(std::uint64_t trials) {
  if (trials < kMinTrials) {
    throw std::invalid_argument("Monte Carlo needs at least 10^4 trials, got " +
                                std::to_string(trials));
  }
}

/// Splits `trials` into fixed-size chunks, chunk c drawing from stream
/// (seed, c), and folds the per-chunk tallies in chunk order.
template <typename Tally, typename ChunkFn>
Tally chunked_tally(std::uint64_t trials, std::uint64_t seed, const McOptions& opt,
                    ChunkFn&& per_chunk) {
  if (opt.chunk_size == 0) throw std::invalid_argument("chunk_size must be > 0");
  const std::uint64_t chunks = (trials + opt.chunk_size - 1) / opt.chunk_size;
  auto parts = map_chunks(static_cast<std::size_t>(chunks), opt.parallelism,
                          [&](std::size_t c) {
                            const std::uint64_t begin = c * opt.chunk_size;
                            const std::uint64_t count = std::min(opt.chunk_size, trials - begin);
                            RngStream rng(seed, c);
                            return per_chunk(rng, count);
                          });
  Tally total{};
  for (const Tally& t : parts) total += t;
  return total;
}

/// Signs of (X_1, ..., X_n) for one trial, written into `signs`.
/// Draw order is S, S_1, ..., S_n.
inline bool draw_signs(const Alpha& alpha, RngStream& rng, std::span<int> signs, double& s_out) {
  const double s = sample_sas(alpha, rng);
  bool zero = false;
  for (int& sg : signs) {
    const double sum = s + sample_sas(alpha, rng);
    if (sum == 0.0) zero = true;
    sg = sum < 0.0 ? -1 : 1;
  }
  s_out = s;
  return zero;
}

}  // namespace detail

/// Joint sign counts of (X_1, X_2); index 0 = '+', 1 = '-'.
struct PairSignCounts {
  std::array<std::array<std::uint64_t, 2>, 2> counts{};
  std::uint64_t trials = 0;
  std::uint64_t zero_sign_events = 0;
  std::uint64_t seed = 0;

  PairSignCounts& operator+=(const PairSignCounts& o) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) counts[i][j] += o.counts[i][j];
    trials += o.trials;
    zero_sign_events += o.zero_sign_events;
    return *this;
  }

  std::uint64_t equal() const { return counts[0][0] + counts[1][1]; }
  std::uint64_t unequal() const { return counts[0][1] + counts[1][0]; }

  /// E[sgn X_1 sgn X_2] = P(equal) - P(unequal).
  McEstimate product() const {
    McEstimate e = product_estimate(equal(), trials, seed);
    e.zero_sign_events = zero_sign_events;
    return e;
  }

  /// P(sgn X_1 = sgn X_2 = +1).
  McEstimate positive_orthant() const {
    McEstimate e = proportion_estimate(counts[0][0], trials, seed);
    e.zero_sign_events = zero_sign_events;
    return e;
  }
};

/// Tally of (sgn X_1, sgn X_2) over `trials` independent threshold vectors with n = 2.
inline PairSignCounts tally_pair_signs(const Alpha& alpha, std::uint64_t trials,
                                       std::uint64_t seed, const McOptions& opt = {}) {
  alpha.require_sampler_valid();
  detail::require_trials(trials);
  PairSignCounts out = detail::chunked_tally<PairSignCounts>(
      trials, seed, opt, [&alpha](RngStream& rng, std::uint64_t count) {
        PairSignCounts t;
        std::array<int, 2> sg{};
        double s = 0.0;
        for (std::uint64_t i = 0; i < count; ++i) {
          if (detail::draw_signs(alpha, rng, sg, s)) ++t.zero_sign_events;
          ++t.counts[sg[0] < 0][sg[1] < 0];
        }
        t.trials = count;
        return t;
      });
  out.seed = seed;
  return out;
}

inline McEstimate estimate_pair_product(const Alpha& alpha, std::uint64_t trials,
                                        std::uint64_t seed, const McOptions& opt = {}) {
  return tally_pair_signs(alpha, trials, seed, opt).product();
}

inline McEstimate estimate_positive_orthant_pair(const Alpha& alpha, std::uint64_t trials,
                                                 std::uint64_t seed, const McOptions& opt = {}) {
  return tally_pair_signs(alpha, trials, seed, opt).positive_orthant();
}

/// Counts of the 8 outcomes of (sgn X_1, sgn S, sgn S_1), indexed by
/// sign_triple_index.
struct SignTripleCounts {
  std::array<std::uint64_t, 8> counts{};
  std::uint64_t trials = 0;
  std::uint64_t zero_sign_events = 0;
  std::uint64_t seed = 0;

  SignTripleCounts& operator+=(const SignTripleCounts& o) {
    for (std::size_t k = 0; k < 8; ++k) counts[k] += o.counts[k];
    trials += o.trials;
    zero_sign_events += o.zero_sign_events;
    return *this;
  }

  std::uint64_t count(const SignTriple& v) const { return counts[sign_triple_index(v)]; }

  SignVectorPmf pmf() const {
    SignVectorPmf out;
    out.counts = counts;
    out.trials = trials;
    for (std::size_t k = 0; k < 8; ++k) {
      out.probs[k] = static_cast<double>(counts[k]) / static_cast<double>(trials);
    }
    return out;
  }

  /// E[sgn X_1 sgn S].
  McEstimate x1_s_product() const {
    std::uint64_t agree = 0;
    for (std::size_t k = 0; k < 8; ++k) {
      const SignTriple v = sign_triple_at(k);
      if (v[0] == v[1]) agree += counts[k];
    }
    McEstimate e = product_estimate(agree, trials, seed);
    e.zero_sign_events = zero_sign_events;
    return e;
  }

  /// P(sgn X_1 = sgn S = +1).
  McEstimate x1_s_positive_orthant() const {
    McEstimate e = proportion_estimate(count({1, 1, 1}) + count({1, 1, -1}), trials, seed);
    e.zero_sign_events = zero_sign_events;
    return e;
  }
};

/// Tally of (sgn X_1, sgn S, sgn S_1) over threshold vectors with n = 1.
inline SignTripleCounts tally_sign_triples(const Alpha& alpha, std::uint64_t trials,
                                           std::uint64_t seed, const McOptions& opt = {}) {
  alpha.require_sampler_valid();
  detail::require_trials(trials);
  SignTripleCounts out = detail::chunked_tally<SignTripleCounts>(
      trials, seed, opt, [&alpha](RngStream& rng, std::uint64_t count) {
        SignTripleCounts t;
        for (std::uint64_t i = 0; i < count; ++i) {
          const double s = sample_sas(alpha, rng);
          const double s1 = sample_sas(alpha, rng);
          const double sum = s + s1;
          if (sum == 0.0) ++t.zero_sign_events;
          const SignTriple v = {sum < 0.0 ? -1 : 1, s < 0.0 ? -1 : 1, s1 < 0.0 ? -1 : 1};
          ++t.counts[sign_triple_index(v)];
        }
        t.trials = count;
        return t;
      });
  out.seed = seed;
  return out;
}

/// Empirical distribution of (sgn X_1, sgn S, sgn S_1).
inline SignVectorPmf estimate_sign_vector_pmf(const Alpha& alpha, std::uint64_t trials,
                                              std::uint64_t seed, const McOptions& opt = {}) {
  return tally_sign_triples(alpha, trials, seed, opt).pmf();
}

/// E[sgn X_1 sgn S]; shares its draws with estimate_sign_vector_pmf for the same seed.
inline McEstimate estimate_x1_s_product(const Alpha& alpha, std::uint64_t trials,
                                        std::uint64_t seed, const McOptions& opt = {}) {
  return tally_sign_triples(alpha, trials, seed, opt).x1_s_product();
}

inline McEstimate estimate_positive_orthant_x1_s(const Alpha& alpha, std::uint64_t trials,
                                                 std::uint64_t seed, const McOptions& opt = {}) {
  return tally_sign_triples(alpha, trials, seed, opt).x1_s_positive_orthant();
}

/// E[sgn(X_1 X_2 ... X_n)], 1 <= n <= 32.
inline McEstimate estimate_n_product(const Alpha& alpha, std::size_t n, std::uint64_t trials,
                                     std::uint64_t seed, const McOptions& opt = {}) {
  if (n == 0 || n > kMaxProductOrder) {
    throw std::invalid_argument("n-fold product needs 1 <= n <= 32, got " + std::to_string(n));
  }
  alpha.require_sampler_valid();
  detail::require_trials(trials);
  struct Tally {
    std::uint64_t plus = 0, trials = 0, zeros = 0;
    Tally& operator+=(const Tally& o) {
      plus += o.plus;
      trials += o.trials;
      zeros += o.zeros;
      return *this;
    }
  };
  const Tally t = detail::chunked_tally<Tally>(
      trials, seed, opt, [&alpha, n](RngStream& rng, std::uint64_t count) {
        Tally local;
        std::vector<int> sg(n);
        double s = 0.0;
        for (std::uint64_t i = 0; i < count; ++i) {
          if (detail::draw_signs(alpha, rng, sg, s)) ++local.zeros;
          int prod = 1;
          for (int v : sg) prod *= v;
          if (prod > 0) ++local.plus;
        }
        local.trials = count;
        return local;
      });
  McEstimate e = product_estimate(t.plus, t.trials, seed);
  e.zero_sign_events = t.zeros;
  return e;
}

/// Combined standard error of two independent estimates.
inline double combined_std_error(const McEstimate& a, const McEstimate& b) {
  return std::hypot(a.std_error, b.std_error);
}

}  // namespace stabsign

#endif  // STABSIGN_SIGN_MC_HPP
