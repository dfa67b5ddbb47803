#pragma once

#include <array>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "degenloci/numeric.hpp"

namespace degenloci {

// Weakly decreasing positive parts; trailing zeros are stripped.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
Partition normalized(Partition p);
int weight(const Partition& p);
Partition transpose(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);

// Littlewood-Richardson coefficient c^nu_{lambda mu}, by counting LR tableaux.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Partitions in the rows x cols box, ordered by weight, then lexicographically.
std::vector<Partition> partitions_in_box(int rows, int cols);

// Schubert basis of H^*(Gr(k, N)) with a precomputed product table.
class Grassmannian {
 public:
  Grassmannian(int k, int N);
  int k() const { return k_; }
  int N() const { return N_; }
  int dim() const { return k_ * (N_ - k_); }
  const std::vector<Partition>& basis() const { return basis_; }
  int size() const { return static_cast<int>(basis_.size()); }
  // -1 when the partition does not fit in the box.
  int index_of(const Partition& p) const;
  int weight_of(int i) const { return weights_[i]; }
  int complement(int i) const { return complement_[i]; }
  int point() const { return size() - 1; }
  // sigma_i sigma_j as (index, coefficient) pairs.
  const std::vector<std::pair<int, long long>>& product(int i, int j) const { return table_[i * size() + j]; }

 private:
  int k_, N_;
  std::vector<Partition> basis_;
  std::vector<int> weights_, complement_;
  std::map<Partition, int> index_;
  std::vector<std::vector<std::pair<int, long long>>> table_;
};

// Gr(2,n) x Gr(2,s+1) x Gr(n+m-2, n+m).
class Ambient {
 public:
  Ambient(std::array<std::pair<int, int>, 3> factors);
  static std::shared_ptr<const Ambient> for_triple(int n, int s, int m);
  const Grassmannian& factor(int i) const { return factors_[i]; }
  int dim() const;
  std::array<std::pair<int, int>, 3> spec() const;
  bool same_as(const Ambient& o) const { return spec() == o.spec(); }

 private:
  std::vector<Grassmannian> factors_;
};

using SchubertKey = std::array<int, 3>;

class ProductClass {
 public:
  explicit ProductClass(std::shared_ptr<const Ambient> ambient);
  static ProductClass unit(std::shared_ptr<const Ambient> ambient);
  static ProductClass schubert(std::shared_ptr<const Ambient> ambient, const Partition& a, const Partition& b,
                               const Partition& c, const BigInt& coeff = 1);

  const Ambient& ambient() const { return *ambient_; }
  const std::shared_ptr<const Ambient>& ambient_ptr() const { return ambient_; }
  const std::map<SchubertKey, BigInt>& terms() const { return terms_; }
  BigInt coeff(const Partition& a, const Partition& b, const Partition& c) const;
  BigInt coeff(const SchubertKey& key) const;
  void add(const SchubertKey& key, const BigInt& c);
  int degree_of(const SchubertKey& key) const;
  bool is_zero() const { return terms_.empty(); }

  ProductClass operator+(const ProductClass& o) const;
  ProductClass operator-(const ProductClass& o) const;
  ProductClass scaled(const BigInt& c) const;
  bool operator==(const ProductClass& o) const;
  // Terms of degree exactly d, or at most d.
  ProductClass homogeneous(int d) const;
  ProductClass truncated(int d) const;

 private:
  void check_ambient(const ProductClass& o) const;
  std::shared_ptr<const Ambient> ambient_;
  std::map<SchubertKey, BigInt> terms_;
};

// Factorwise Littlewood-Richardson product; terms above max_degree are dropped
// (negative: no extra truncation).
ProductClass lr_multiply(const ProductClass& x, const ProductClass& y, int max_degree = -1);
// Inverse of a class with constant term 1, truncated at max_degree.
ProductClass inverse_truncated(const ProductClass& x, int max_degree);

// Coefficient of the point class.
BigInt integrate(const ProductClass& x);

struct TensorChern {
  ProductClass total, top;
  int rank = 0;
};

// Chern classes of U1^v (x) U2^v (x) U3^v on the ambient of (n, s, m).
TensorChern chern_of_tensor_bundle(int n, int s, int m);
ProductClass tangent_chern(int n, int s, int m);

struct ZEuler {
  int n = 0, s = 0, m = 0;
  int dim_G = 0, rank_E = 0, dim_Z = 0;
  BigInt euler;
};

// e(Z) = int_G c_top(E) [c(TG)/c(E)]_{dim Z}, in the Schubert basis.
ZEuler euler_of_Z(int n, int s, int m);
// Same integral by root polynomials and Vandermonde coefficient extraction.
BigInt euler_of_Z_roots(int n, int s, int m);

// Dense polynomial with nonnegative exponents capped per variable (and
// optionally in total degree); monomials beyond the caps are dropped.
class BoxPoly {
 public:
  explicit BoxPoly(std::vector<int> caps, int total_cap = -1);
  static BoxPoly one(std::vector<int> caps, int total_cap = -1);

  int vars() const { return static_cast<int>(caps_.size()); }
  const std::vector<int>& caps() const { return caps_; }
  std::size_t size() const { return c_.size(); }
  BigInt coeff(const std::vector<int>& exps) const;
  void set(const std::vector<int>& exps, const BigInt& c);
  const BigInt& at(std::size_t index) const { return c_[index]; }
  std::vector<int> exponents(std::size_t index) const;
  int degree_at(std::size_t index) const { return deg_[index]; }

  // Multiply or divide by c0 + sum c_v x_v; division needs c0 = +-1.
  void mul_linear(const BigInt& c0, const std::vector<std::pair<int, BigInt>>& terms);
  void div_linear(const BigInt& c0, const std::vector<std::pair<int, BigInt>>& terms);
  BoxPoly homogeneous(int d) const;
  BoxPoly operator*(const BoxPoly& o) const;
  BoxPoly operator+(const BoxPoly& o) const;
  bool operator==(const BoxPoly& o) const { return caps_ == o.caps_ && c_ == o.c_; }

 private:
  std::vector<int> caps_;
  int total_cap_;
  std::vector<std::size_t> stride_;
  std::vector<int> deg_;
  std::vector<BigInt> c_;
};

}  // namespace degenloci
