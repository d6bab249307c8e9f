#ifndef STABSIGN_ALPHA_HPP
#define STABSIGN_ALPHA_HPP

#include <cmath>
#include <string>

#include "stabsign/errors.hpp"

namespace stabsign {

/// Stability exponent. Any finite positive value is accepted by the
/// quadrature routines; the samplers additionally require
/// kSamplerAlphaFloor <= alpha <= 2.
class Alpha {
 public:
  static constexpr double kSamplerAlphaFloor = 0.05;
  static constexpr double kSamplerAlphaCeiling = 2.0;

  explicit Alpha(double value) : value_(value) {
    if (!std::isfinite(value) || value <= 0.0) {
      throw DomainError("alpha must be finite and > 0, got " + std::to_string(value));
    }
  }

  /// Constructs and checks the sampler domain in one go.
  static Alpha for_sampler(double value) {
    Alpha a(value);
    a.require_sampler_valid();
    return a;
  }

  double value() const noexcept { return value_; }

  bool sampler_valid() const noexcept {
    return value_ >= kSamplerAlphaFloor && value_ <= kSamplerAlphaCeiling;
  }

  void require_sampler_valid() const {
    if (!sampler_valid()) {
      throw DomainError("sampler requires 0.05 <= alpha <= 2, got " + std::to_string(value_));
    }
  }

  /// 2^{1/alpha}, the normalisation of the threshold construction.
  double threshold_scale() const { return std::exp2(1.0 / value_); }

  friend bool operator==(const Alpha&, const Alpha&) = default;

 private:
  double value_;
};

}  // namespace stabsign

#endif  // STABSIGN_ALPHA_HPP
