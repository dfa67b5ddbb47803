#include "degenloci/numeric.hpp"

#include <stdexcept>

namespace degenloci {

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string to_decimal(const BigInt& x) { return x.str(); }

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("malformed integer: " + text);
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw std::invalid_argument("malformed integer: " + text);
  }
  BigInt r(text.substr(i));
  return text[0] == '-' ? BigInt(-r) : r;
}

std::string to_string(const Rational& q) {
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(text));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + text);
  BigInt num = parse_bigint(text.substr(0, slash));
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero");
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element is not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace degenloci
