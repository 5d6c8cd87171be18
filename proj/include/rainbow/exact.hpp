#ifndef RAINBOW_EXACT_HPP
#define RAINBOW_EXACT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rainbow {

/// Subgraph and tuple counts. All counting is done in 64 bits with
/// overflow-checked arithmetic; anything that squares or cubes a count is
/// promoted to BigInt first.
using Count = std::uint64_t;

/// Arbitrary precision integer. Small values live inline, so products that
/// fit in 128 bits never touch the heap.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("count overflow in addition");
  }
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("count overflow in multiplication");
  }
  return r;
}

/// n choose k, exact.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Serializes as "p/q" with q > 0 and gcd(p, q) = 1; integers become "p/1".
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

double to_double(const Rational& r);

/// Integer power, exact.
BigInt ipow(const BigInt& base, unsigned exponent);

}  // namespace rainbow

#endif  // RAINBOW_EXACT_HPP
