#ifndef STABSIGN_RNG_HPP
#define STABSIGN_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace stabsign {

/// A reproducible random stream identified by (seed, stream_index).
///
/// Backed by std::mt19937_64 seeded through std::seed_seq, both of which are
/// fully specified by the standard, and all conversions to floating point are
/// done here bit-exactly, so a given (seed, stream_index) yields the same
/// sequence on every conforming platform. Parallel jobs give each chunk its
/// own stream_index; a stream is a plain value and may be moved across threads.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index)
      : seed_(seed), stream_index_(stream_index), engine_(make_engine(seed, stream_index)) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1), on the grid (k + 1/2) 2^-53.
  double uniform_open() {
    constexpr double kScale = 0x1.0p-53;
    return (static_cast<double>(engine_() >> 11) + 0.5) * kScale;
  }

  /// Standard exponential, always finite and strictly positive.
  double exponential() { return -std::log(uniform_open()); }

  /// Fair +-1.
  int sign() { return (engine_() >> 63) ? 1 : -1; }

 private:
  static std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream_index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_index),
                      static_cast<std::uint32_t>(stream_index >> 32), 0x5ab51u};
    return std::mt19937_64(seq);
  }

  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
};

}  // namespace stabsign

#endif  // STABSIGN_RNG_HPP
