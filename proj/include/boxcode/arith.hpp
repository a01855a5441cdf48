#ifndef BOXCODE_ARITH_HPP
#define BOXCODE_ARITH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace boxcode {

/// Exact lengths: average norms are ratios of protected-symbol counts to code size.
using Rational = boost::rational<std::int64_t>;
using BigInt = boost::multiprecision::cpp_int;

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw std::overflow_error("integer overflow");
  return a + b;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw std::overflow_error("integer overflow");
  return a * b;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // r * (n-k+i) / i stays integral at every step
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(i));
    r = checked_mul(r / g, num / (i / g));
  }
  return r;
}

inline BigInt big_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline BigInt big_pow(std::uint64_t base, std::size_t exp) {
  BigInt r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Smallest k with base^k >= value (value >= 1, base >= 2).
inline std::size_t ceil_log(std::uint64_t value, std::uint64_t base) {
  if (value == 0 || base < 2) throw std::invalid_argument("ceil_log: need value >= 1 and base >= 2");
  std::size_t k = 0;
  BigInt p = 1;
  while (p < value) {
    p *= base;
    ++k;
  }
  return k;
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace boxcode

#endif  // BOXCODE_ARITH_HPP
