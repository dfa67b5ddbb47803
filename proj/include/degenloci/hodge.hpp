#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "degenloci/numeric.hpp"

namespace degenloci {

// Integer polynomial in (u, v), stored sparsely by exponent pair.
class HodgePoly {
 public:
  HodgePoly() = default;
  static HodgePoly constant(const BigInt& c);
  static HodgePoly monomial(int p, int q, const BigInt& c = 1);
  // sum h^{p,q} (-u)^p (-v)^q for h indexed as hodge[p][q].
  static HodgePoly from_hodge_numbers(const std::vector<std::vector<BigInt>>& hodge);

  BigInt coeff(int p, int q) const;
  void set(int p, int q, const BigInt& c);
  const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Largest p + q with a nonzero coefficient; -1 for zero.
  int degree() const;

  HodgePoly operator+(const HodgePoly& o) const;
  HodgePoly operator-(const HodgePoly& o) const;
  HodgePoly operator*(const HodgePoly& o) const;
  HodgePoly scaled(const BigInt& c) const;
  bool operator==(const HodgePoly& o) const { return terms_ == o.terms_; }

  // Value at u = v = 1.
  BigInt euler() const;
  bool symmetric() const;
  // h^{p,q} = (-1)^{p+q} coeff(p, q).
  BigInt hodge_number(int p, int q) const;
  // Positive and negative parts, f = plus - minus.
  std::pair<HodgePoly, HodgePoly> split_signs() const;

  std::string to_string() const;
  // {"epoly": [[p, q, "coeff"], ...]} in ascending (p, q) order.
  std::string to_json() const;
  static HodgePoly from_json(const std::string& text);
  // Hodge diamond with h^{d,d} on top, rows of constant p + q.
  std::string diamond(int dim) const;

 private:
  std::map<std::pair<int, int>, BigInt> terms_;
};

// Power series in q with HodgePoly coefficients, truncated after q^order.
class QSeries {
 public:
  explicit QSeries(int order = 3);
  static QSeries one(int order = 3);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const HodgePoly& operator[](int k) const { return c_.at(k); }
  HodgePoly& operator[](int k) { return c_.at(k); }

  QSeries operator*(const QSeries& o) const;
  bool operator==(const QSeries& o) const { return c_ == o.c_; }

  // q -> u^a v^b q^n.
  QSeries substitute(int n, int a, int b) const;

 private:
  std::vector<HodgePoly> c_;
};

// (1 - q)^{-f} = prod (1 - u^i v^j q)^{-p_ij}, with negative p_ij giving
// polynomial factors.
QSeries power_exp(const HodgePoly& f, int order = 3);

// Coefficient of q^2 in prod_{n>0} (1 - (uv)^{n-1} q^n)^{-E}.
HodgePoly hilb2_epoly_surface(const HodgePoly& e);

// Coefficient of q^2 in (1 - q)^{-E} (1 - q^2)^{-(uv + u^2 v^2) E}.
HodgePoly hilb2_epoly_threefold(const HodgePoly& e);

// (e^2 + e)/2 + (d - 1) e, the Euler number of the Hilbert square of a
// d-dimensional variety with Euler number e.
BigInt hilb2_euler_closed_form(const BigInt& e, int d);

}  // namespace degenloci
