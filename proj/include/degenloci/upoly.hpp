#pragma once

#include <utility>
#include <vector>

#include "degenloci/field.hpp"

namespace degenloci {

// Dense univariate polynomial with coefficients in one Field, lowest degree
// first, trailing zeros trimmed.
class UPoly {
 public:
  explicit UPoly(const Field& f) : field_(&f) {}
  UPoly(const Field& f, std::vector<Scalar> coeffs);

  static UPoly x(const Field& f);
  static UPoly constant(const Scalar& c);

  const Field& field() const { return *field_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(int i) const;
  const std::vector<Scalar>& coeffs() const { return c_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const Scalar& s) const;
  UPoly monic() const;
  Scalar eval(const Scalar& t) const;

  bool operator==(const UPoly& o) const { return field_ == o.field_ && c_ == o.c_; }

 private:
  void trim();

  const Field* field_;
  std::vector<Scalar> c_;
};

// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Monic gcd (zero when both inputs vanish).
UPoly gcd(UPoly a, UPoly b);
UPoly powmod(const UPoly& base, const BigInt& e, const UPoly& mod);

// Distinct roots lying in the (finite, odd characteristic) coefficient field,
// in ascending canonical order. Cantor-Zassenhaus with a deterministic shift
// sequence, so results are reproducible.
std::vector<Scalar> roots_in_field(const UPoly& f);

// Polynomial of degree < xs.size() through the points (xs[i], ys[i]); the
// abscissae must be distinct.
UPoly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

// Sylvester resultant of f and g read with formal degrees df >= deg f and
// dg >= deg g. Vanishes when f, g share a root or both formal leading
// coefficients vanish.
Scalar resultant(const UPoly& f, const UPoly& g, int df, int dg);

}  // namespace degenloci
