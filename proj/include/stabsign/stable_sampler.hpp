#ifndef STABSIGN_STABLE_SAMPLER_HPP
#define STABSIGN_STABLE_SAMPLER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "stabsign/alpha.hpp"
#include "stabsign/parallel.hpp"
#include "stabsign/rng.hpp"

namespace stabsign {

/// Chambers-Mallows-Stuck transform for the symmetric stable law with
/// characteristic function exp(-|t|^alpha).
///
/// `angle` must lie in (-pi/2, pi/2) and `exponential` must be > 0. At
/// alpha == 1 the transform is exactly tan(angle). For beta = 0 the generic
/// expression is continuous through alpha = 1 (the exponent (1-alpha)/alpha
/// simply goes to zero), so values near one need no special treatment.
/// The product is formed in log space; a result beyond the double range is
/// clamped to +-max().
inline double sas_transform(double alpha, double angle, double exponential) {
  if (alpha == 1.0) return std::tan(angle);
  const double sin_part = std::sin(alpha * angle);
  if (sin_part == 0.0) return 0.0;
  const double log_mag = std::log(std::abs(sin_part)) - std::log(std::cos(angle)) / alpha +
                         (1.0 - alpha) / alpha *
                             (std::log(std::cos((1.0 - alpha) * angle)) - std::log(exponential));
  constexpr double kMaxLog = 709.78;  // log(DBL_MAX)
  const double mag =
      log_mag > kMaxLog ? std::numeric_limits<double>::max() : std::exp(log_mag);
  return std::copysign(mag, sin_part);
}

/// One symmetric alpha-stable draw of scale one.
inline double sample_sas(const Alpha& alpha, RngStream& rng) {
  alpha.require_sampler_valid();
  const double angle = std::numbers::pi * (rng.uniform_open() - 0.5);
  if (alpha.value() == 1.0) return std::tan(angle);
  return sas_transform(alpha.value(), angle, rng.exponential());
}

/// Fills `out` with i.i.d. symmetric alpha-stable draws.
inline void sample_sas(const Alpha& alpha, RngStream& rng, std::span<double> out) {
  alpha.require_sampler_valid();
  for (double& x : out) x = sample_sas(alpha, rng);
}

/// (S; S_1, ..., S_n) with X_i = (S + S_i) / 2^{1/alpha}.
///
/// X_i is only formed on request; the sign of X_i is read off S + S_i, which
/// avoids overflowing 2^{1/alpha} for small alpha.
struct ThresholdVector {
  double s = 0.0;
  std::vector<double> innovations;

  std::size_t n() const noexcept { return innovations.size(); }

  /// X_i for 0-based i.
  double x(std::size_t i, const Alpha& alpha) const {
    return (s + innovations.at(i)) / alpha.threshold_scale();
  }

  /// sgn(X_i) in {-1, +1}. An exact zero, a probability-zero event, maps
  /// to +1; `zero_hits` (if given) is incremented so callers can report it.
  int sign(std::size_t i, std::uint64_t* zero_hits = nullptr) const {
    const double sum = s + innovations[i];
    if (sum == 0.0) {
      if (zero_hits != nullptr) ++*zero_hits;
      return 1;
    }
    return sum > 0.0 ? 1 : -1;
  }
};

/// Draws S first, then S_1..S_n, all from the same stream.
inline ThresholdVector sample_threshold_vector(const Alpha& alpha, std::size_t n, RngStream& rng) {
  if (n == 0) throw std::invalid_argument("threshold vector needs n >= 1");
  alpha.require_sampler_valid();
  ThresholdVector v;
  v.s = sample_sas(alpha, rng);
  v.innovations.resize(n);
  sample_sas(alpha, rng, v.innovations);
  return v;
}

/// Real part of the empirical characteristic function, mean of cos(t x).
inline double empirical_cf(std::span<const double> samples, double t) {
  if (samples.empty()) throw std::invalid_argument("empirical_cf: empty sample");
  if (!std::isfinite(t)) throw std::invalid_argument("empirical_cf: t must be finite");
  double acc = 0.0;
  for (double x : samples) acc += std::cos(t * x);
  return acc / static_cast<double>(samples.size());
}

/// Imaginary part, mean of sin(t x). Zero in law for a symmetric sample.
inline double empirical_cf_sine(std::span<const double> samples, double t) {
  if (samples.empty()) throw std::invalid_argument("empirical_cf_sine: empty sample");
  if (!std::isfinite(t)) throw std::invalid_argument("empirical_cf_sine: t must be finite");
  double acc = 0.0;
  for (double x : samples) acc += std::sin(t * x);
  return acc / static_cast<double>(samples.size());
}

inline constexpr std::size_t kSampleChunk = std::size_t{1} << 16;

/// `count` direct draws; chunk c of 2^16 draws uses stream (seed, c).
inline std::vector<double> sample_sas_many(const Alpha& alpha, std::size_t count,
                                           std::uint64_t seed, Parallelism par = {}) {
  alpha.require_sampler_valid();
  std::vector<double> out(count);
  const std::size_t chunks = (count + kSampleChunk - 1) / kSampleChunk;
  map_chunks(chunks, par, [&](std::size_t c) {
    RngStream rng(seed, c);
    const std::size_t begin = c * kSampleChunk;
    const std::size_t end = std::min(count, begin + kSampleChunk);
    sample_sas(alpha, rng, std::span<double>(out).subspan(begin, end - begin));
    return 0;
  });
  return out;
}

/// `count` draws of X_1 = (S + S_1) / 2^{1/alpha}, one threshold vector each.
inline std::vector<double> sample_threshold_x1_many(const Alpha& alpha, std::size_t count,
                                                    std::uint64_t seed, Parallelism par = {}) {
  alpha.require_sampler_valid();
  std::vector<double> out(count);
  const std::size_t chunks = (count + kSampleChunk - 1) / kSampleChunk;
  map_chunks(chunks, par, [&](std::size_t c) {
    RngStream rng(seed, c);
    const std::size_t end = std::min(count, (c + 1) * kSampleChunk);
    for (std::size_t i = c * kSampleChunk; i < end; ++i) {
      out[i] = sample_threshold_vector(alpha, 1, rng).x(0, alpha);
    }
    return 0;
  });
  return out;
}

/// exp(-|t|^alpha).
inline double stable_cf(double alpha, double t) { return std::exp(-std::pow(std::abs(t), alpha)); }

}  // namespace stabsign

#endif  // STABSIGN_STABLE_SAMPLER_HPP
