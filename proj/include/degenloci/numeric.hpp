#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace degenloci {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient with the convention binom(n, k) = 0 whenever k < 0,
// k > n or n < 0.
BigInt binomial(long long n, long long k);

BigInt factorial(long long n);

// Decimal rendering helpers used by the JSON codecs.
std::string to_decimal(const BigInt& x);
BigInt parse_bigint(const std::string& text);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

// Word-size modular arithmetic; the modulus must be below 2^63.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

}  // namespace degenloci
