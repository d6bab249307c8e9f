#ifndef STABSIGN_SIGN_VECTOR_HPP
#define STABSIGN_SIGN_VECTOR_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace stabsign {

/// A point of {-1,+1}^3, ordered (sgn X_1, sgn S, sgn S_1).
using SignTriple = std::array<int, 3>;

/// Outcome index: lexicographic with +1 before -1, i.e. (+,+,+) -> 0,
/// (+,+,-) -> 1, ..., (-,-,-) -> 7.
constexpr std::size_t sign_triple_index(const SignTriple& v) {
  return (v[0] < 0 ? 4u : 0u) + (v[1] < 0 ? 2u : 0u) + (v[2] < 0 ? 1u : 0u);
}

constexpr SignTriple sign_triple_at(std::size_t index) {
  return {(index & 4u) ? -1 : 1, (index & 2u) ? -1 : 1, (index & 1u) ? -1 : 1};
}

inline std::string sign_triple_label(std::size_t index) {
  const SignTriple v = sign_triple_at(index);
  std::string out = "(";
  for (std::size_t i = 0; i < 3; ++i) {
    out += v[i] > 0 ? "+1" : "-1";
    out += i < 2 ? "," : ")";
  }
  return out;
}

/// Distribution of (sgn X_1, sgn S, sgn S_1) over the 8 outcomes.
struct SignVectorPmf {
  std::array<double, 8> probs{};
  std::array<std::uint64_t, 8> counts{};  // populated when estimated
  std::uint64_t trials = 0;               // 0 for an exact pmf

  double operator[](const SignTriple& v) const { return probs[sign_triple_index(v)]; }

  double total() const {
    double t = 0.0;
    for (double p : probs) t += p;
    return t;
  }

  /// E[v_i v_j] for 0-based coordinates.
  double covariance(std::size_t i, std::size_t j) const {
    if (i > 2 || j > 2) throw std::out_of_range("SignVectorPmf::covariance");
    double acc = 0.0;
    for (std::size_t k = 0; k < 8; ++k) {
      const SignTriple v = sign_triple_at(k);
      acc += probs[k] * v[i] * v[j];
    }
    return acc;
  }
};

}  // namespace stabsign

#endif  // STABSIGN_SIGN_VECTOR_HPP
