#pragma once

#include <vector>

#include "degenloci/numeric.hpp"

namespace degenloci {

// Z[H]/(H^{cap+1}) or Z[H1,H2]/(H1^{cap1+1}, H2^{cap2+1}).
class TruncPoly {
 public:
  TruncPoly(int cap1, int cap2 = 0);
  static TruncPoly constant(int cap1, int cap2, const BigInt& c);
  // 1 + sum of the given linear coefficients times H1, H2.
  static TruncPoly linear(int cap1, int cap2, const BigInt& c0, const BigInt& c1, const BigInt& c2 = 0);

  int cap1() const { return cap1_; }
  int cap2() const { return cap2_; }
  BigInt coeff(int i, int j = 0) const;
  void set(int i, int j, const BigInt& c);

  TruncPoly operator+(const TruncPoly& o) const;
  TruncPoly operator-(const TruncPoly& o) const;
  TruncPoly operator*(const TruncPoly& o) const;
  bool operator==(const TruncPoly& o) const;
  TruncPoly scaled(const BigInt& k) const;
  // Needs constant term +1 or -1.
  TruncPoly inverse() const;
  // Negative exponents go through inverse().
  TruncPoly pow(long long e) const;

 private:
  void check_shape(const TruncPoly& o) const;
  int cap1_, cap2_;
  std::vector<BigInt> c_;
};

// Coefficients s_0..s_s of the signed Segre classes, s_i = (-1)^i [(1+H)^{-n}]_i.
std::vector<BigInt> segre_classes(int n, int s);

struct SchurValues {
  BigInt s21, s31, s211;
};

// Expanded forms in the s_i.
SchurValues schur_polys(const std::vector<BigInt>& s);
// Jacobi-Trudi determinant det(s_{lambda_i - i + j}), with s_k = 0 outside range.
BigInt schur_determinant(const std::vector<int>& partition, const std::vector<BigInt>& s);

// Euler numbers of the degeneracy surface in P^4 and curve in P^3 cut out by
// maximal minors of an n x (n+1) matrix of linear forms.
BigInt pragacz_euler_surface(int n);
BigInt pragacz_euler_surface_closed(int n);
BigInt pragacz_euler_curve(int n);
BigInt pragacz_euler_curve_closed(int n);

struct GenusDegree {
  BigInt genus, degree;
};
GenusDegree genus_degree_curve(int n);

// chi(O) from the Eagon-Northcott resolution 0 -> O(-n-1)^n -> O(-n)^{n+1} -> O.
BigInt en_chi_curve(int n);
BigInt en_chi_surface(int n);
BigInt geometric_genus_surface(int n);
// 1 + p_g (irregularity zero).
BigInt chi_O_surface(int n);

// Euler number of r general (1,1) divisors in P^a x P^b.
BigInt ci_euler_bidegree(int a, int b, int r);

}  // namespace degenloci
