#ifndef STABSIGN_PAINTBOX_HPP
#define STABSIGN_PAINTBOX_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabsign/exact_rational.hpp"
#include "stabsign/parallel.hpp"
#include "stabsign/rng.hpp"
#include "stabsign/sign_mc.hpp"

// The (1/2, 1/4, 1/8, ...) paintbox: element i falls in box j with
// probability 2^-j, each box gets an independent fair colour Z_j, and
// V_i = Z_{box(i)}.

namespace stabsign::paintbox {

inline constexpr unsigned kMaxExactOrder = 200;

/// P(every block of the paintbox partition of {1..n} has even size), for
/// n = 0..n_max, exactly. Conditioning on the k elements that land in the
/// first box (probability C(n,k) 2^-n) and rescaling the rest gives
///   p_n (2^n - 1) = sum_{k even, 2 <= k <= n} C(n,k) p_{n-k},  p_0 = 1,
/// and p_n = 0 for odd n.
inline std::vector<ExactRational> all_even_probabilities(unsigned n_max) {
  if (n_max > kMaxExactOrder) {
    throw std::invalid_argument("all_even_probability supports n <= 200, got " +
                                std::to_string(n_max));
  }
  std::vector<ExactRational> p(n_max + 1);
  p[0] = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n % 2 == 1) {
      p[n] = 0;
      continue;
    }
    ExactRational acc = 0;
    for (unsigned k = 2; k <= n; k += 2) acc += ExactRational(binomial(n, k)) * p[n - k];
    p[n] = acc / ExactRational((BigInt(1) << n) - 1);
  }
  return p;
}

inline ExactRational all_even_probability(unsigned n) { return all_even_probabilities(n)[n]; }

/// Mass sequence of the paintbox. SingleBox puts every element in box 1 and
/// is only used as a negative control.
enum class Kind { Geometric, SingleBox };

struct Sample {
  std::vector<unsigned> box_of;  // 1-based box index j(i) per element
  std::vector<int> colors;       // colors[j-1] = Z_j for j = 1..max box
  std::vector<int> values;       // V_i = Z_{j(i)}

  int color_of_box(unsigned j) const { return colors.at(j - 1); }
};

/// Box index for one element: j = ceil(-log2 U) with U uniform, read off as
/// one plus the number of leading zero bits of a uniform 64-bit word
/// U = w 2^-64. A dyadic U = 2^-j lands in box j, the lower index.
inline unsigned draw_box(RngStream& rng) {
  std::uint64_t w = rng.next_u64();
  while (w == 0) w = rng.next_u64();
  return 1u + static_cast<unsigned>(std::countl_zero(w));
}

inline Sample sample_paintbox(std::size_t n, RngStream& rng, Kind kind = Kind::Geometric) {
  if (n == 0) throw std::invalid_argument("sample_paintbox needs n >= 1");
  Sample out;
  out.box_of.resize(n);
  for (unsigned& j : out.box_of) j = kind == Kind::Geometric ? draw_box(rng) : 1u;
  const unsigned boxes = *std::max_element(out.box_of.begin(), out.box_of.end());
  out.colors.resize(boxes);
  for (int& z : out.colors) z = rng.sign();
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = out.color_of_box(out.box_of[i]);
  return out;
}

inline bool all_blocks_even(const std::vector<unsigned>& box_of) {
  std::vector<unsigned> sorted = box_of;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if ((j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

inline bool all_blocks_even(const Sample& sample) { return all_blocks_even(sample.box_of); }

namespace detail {

struct EvenTally {
  std::uint64_t all_even = 0;
  std::uint64_t product_plus = 0;
  std::uint64_t trials = 0;

  EvenTally& operator+=(const EvenTally& o) {
    all_even += o.all_even;
    product_plus += o.product_plus;
    trials += o.trials;
    return *this;
  }
};

inline EvenTally tally_even(std::size_t n, std::uint64_t trials, std::uint64_t seed,
                            const McOptions& opt) {
  if (n == 0) throw std::invalid_argument("paintbox simulation needs n >= 1");
  stabsign::detail::require_trials(trials);
  return stabsign::detail::chunked_tally<EvenTally>(
      trials, seed, opt, [n](RngStream& rng, std::uint64_t count) {
        EvenTally t;
        for (std::uint64_t i = 0; i < count; ++i) {
          const Sample s = sample_paintbox(n, rng);
          if (all_blocks_even(s)) ++t.all_even;
          int prod = 1;
          for (int v : s.values) prod *= v;
          if (prod > 0) ++t.product_plus;
        }
        t.trials = count;
        return t;
      });
}

}  // namespace detail

/// Fraction of simulated paintbox partitions of {1..n} with only even blocks.
inline McEstimate estimate_all_even_frequency(std::size_t n, std::uint64_t trials,
                                              std::uint64_t seed, const McOptions& opt = {}) {
  const detail::EvenTally t = detail::tally_even(n, trials, seed, opt);
  return proportion_estimate(t.all_even, t.trials, seed);
}

/// E[V_1 ... V_n] from the same simulation (same seed gives the same draws).
inline McEstimate estimate_product_moment(std::size_t n, std::uint64_t trials,
                                          std::uint64_t seed, const McOptions& opt = {}) {
  const detail::EvenTally t = detail::tally_even(n, trials, seed, opt);
  return product_estimate(t.product_plus, t.trials, seed);
}

/// Kolmogorov-Smirnov distance between the empirical law of `values` and
/// Uniform[0, 1]. Sorts a copy.
inline double ks_distance_uniform(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("ks_distance_uniform: empty sample");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = std::clamp(values[i], 0.0, 1.0);
    d = std::max({d, static_cast<double>(i + 1) / n - x, x - static_cast<double>(i) / n});
  }
  return d;
}

inline constexpr std::size_t kReplicatesPerStream = 256;

/// For each replicate, the fraction of +1 among (V_1, ..., V_m). Replicate r
/// draws from stream (seed, r / 256).
inline std::vector<double> mixing_fractions(std::size_t m, std::size_t replicates,
                                            std::uint64_t seed, Kind kind = Kind::Geometric,
                                            Parallelism par = {}) {
  if (m == 0 || replicates == 0) throw std::invalid_argument("mixing_fractions: empty design");
  const std::size_t streams = (replicates + kReplicatesPerStream - 1) / kReplicatesPerStream;
  auto parts = map_chunks(streams, par, [&](std::size_t c) {
    RngStream rng(seed, c);
    const std::size_t begin = c * kReplicatesPerStream;
    const std::size_t end = std::min(replicates, begin + kReplicatesPerStream);
    std::vector<double> out;
    out.reserve(end - begin);
    for (std::size_t r = begin; r < end; ++r) {
      // Box colours are the bits of one word: Z_j = +1 iff bit (j - 1) is set.
      const std::uint64_t colors = rng.next_u64();
      std::size_t plus = 0;
      for (std::size_t i = 0; i < m; ++i) {
        const unsigned j = kind == Kind::Geometric ? draw_box(rng) : 1u;
        plus += (colors >> (j - 1)) & 1u;
      }
      out.push_back(static_cast<double>(plus) / static_cast<double>(m));
    }
    return out;
  });
  std::vector<double> fractions;
  fractions.reserve(replicates);
  for (const auto& part : parts) fractions.insert(fractions.end(), part.begin(), part.end());
  return fractions;
}

/// KS distance of the de Finetti mixing fractions from Uniform[0, 1].
inline double definetti_uniformity_stat(std::size_t m, std::size_t replicates,
                                        std::uint64_t seed, Kind kind = Kind::Geometric,
                                        Parallelism par = {}) {
  if (replicates < 1000) {
    throw std::invalid_argument("definetti_uniformity_stat needs >= 1000 replicates");
  }
  return ks_distance_uniform(mixing_fractions(m, replicates, seed, kind, par));
}

/// Acceptance threshold for m = replicates = 10^4, frozen from an offline
/// run with 10^5 replicates at m = 10^5 (KS ~ 0.003) plus the 99% KS
/// critical value 1.63/sqrt(10^4) and finite-m slack.
inline constexpr double kUniformityThreshold = 0.03;

}  // namespace stabsign::paintbox

#endif  // STABSIGN_PAINTBOX_HPP
