#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "degenloci/numeric.hpp"

namespace degenloci {

// Raised when two scalars from different fields meet in one operation.
class FieldMismatch : public std::invalid_argument {
 public:
  explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Descriptor of Q, F_p or F_{p^k} (k <= 6). Descriptors are interned: two
// scalars live in the same field iff their descriptor pointers coincide.
class Field {
 public:
  enum class Kind { kRational, kPrime, kExtension };
  static constexpr int kMaxDegree = 6;

  static const Field& rationals();
  // p must be an odd prime below 2^62.
  static const Field& prime(std::uint64_t p);
  // F_{p^k} realised as F_p[x]/(f) where f is the smallest monic irreducible
  // of degree k, comparing coefficient vectors (c_{k-1}, ..., c_0)
  // lexicographically. k = 1 returns the prime field itself.
  static const Field& extension(std::uint64_t p, int degree);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ != Kind::kRational; }
  // 0 for Q.
  std::uint64_t characteristic() const { return p_; }
  int degree() const { return degree_; }
  // Coefficients c_0..c_k of the monic modulus (c_k = 1); {0, 1} for prime fields.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  // Number of elements; throws for Q.
  BigInt order() const;
  const Field& prime_subfield() const;
  std::string name() const;

 private:
  Field(Kind kind, std::uint64_t p, int degree, std::vector<std::uint64_t> modulus)
      : kind_(kind), p_(p), degree_(degree), modulus_(std::move(modulus)) {}
  static const Field& intern(std::uint64_t p, int degree);

  Kind kind_;
  std::uint64_t p_;
  int degree_;
  std::vector<std::uint64_t> modulus_;
};

// Smallest monic irreducible polynomial of the given degree over F_p, as
// coefficients c_0..c_k.
std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, int degree);
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& f, std::uint64_t p);

// An exact element of a Field.
class Scalar {
 public:
  using Residues = std::array<std::uint64_t, Field::kMaxDegree>;

  explicit Scalar(const Field& f);

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long long value);
  static Scalar from_bigint(const Field& f, const BigInt& value);
  // For finite fields the denominator must be a unit.
  static Scalar from_rational(const Field& f, const Rational& value);
  // Polynomial-basis coordinates c_0 + c_1 x + ...; entries reduced mod p.
  static Scalar from_coordinates(const Field& f, const std::vector<std::uint64_t>& coords);
  // Image of the generator x of F_p[x]/(f).
  static Scalar generator(const Field& f);
  // Inverse of to_string().
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return *field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  // Throws std::domain_error on zero.
  Scalar inverse() const;
  // Negative exponents invert first.
  Scalar pow(const BigInt& e) const;
  // x -> x^p on finite fields, identity on Q.
  Scalar frobenius() const;

  // Embedding of F_p into F_{p^k} (or identity when the fields agree).
  Scalar embed(const Field& target) const;
  bool in_prime_subfield() const;
  // Restriction of a prime-subfield element of F_{p^k} back to F_p.
  Scalar restrict_to_prime() const;

  // Prime-field residue (prime fields, or extension elements lying in F_p).
  std::uint64_t residue() const;
  std::vector<std::uint64_t> coordinates() const;
  const Rational& rational() const;

  // Equality is false across different fields.
  bool operator==(const Scalar& o) const;
  // Canonical total order within one field (used for deterministic sorting).
  std::strong_ordering operator<=>(const Scalar& o) const;

  std::string to_string() const;

 private:
  void require_same(const Scalar& o) const;

  const Field* field_;
  std::variant<Residues, Rational> value_;
};

// Square root in a finite field of odd characteristic (Tonelli-Shanks), or in
// Q when the argument is a rational square. Empty when no root exists.
std::optional<Scalar> sqrt(const Scalar& a);

}  // namespace degenloci
