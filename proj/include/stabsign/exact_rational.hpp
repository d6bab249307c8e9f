#ifndef STABSIGN_EXACT_RATIONAL_HPP
#define STABSIGN_EXACT_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stabsign {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
using ExactRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline ExactRational make_rational(long long num, long long den) { return ExactRational(num, den); }

/// "p/q", or "p" when q == 1.
inline std::string to_string(const ExactRational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const ExactRational& r) { return r.convert_to<double>(); }

/// C(n, k) exactly.
inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

}  // namespace stabsign

#endif  // STABSIGN_EXACT_RATIONAL_HPP
