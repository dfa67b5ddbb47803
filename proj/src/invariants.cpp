#include "degenloci/invariants.hpp"

#include <stdexcept>

namespace degenloci {

TruncPoly::TruncPoly(int cap1, int cap2) : cap1_(cap1), cap2_(cap2) {
  if (cap1 < 0 || cap2 < 0) throw std::invalid_argument("negative truncation degree");
  c_.assign(static_cast<std::size_t>(cap1 + 1) * (cap2 + 1), 0);
}

TruncPoly TruncPoly::constant(int cap1, int cap2, const BigInt& c) {
  TruncPoly p(cap1, cap2);
  p.c_[0] = c;
  return p;
}

TruncPoly TruncPoly::linear(int cap1, int cap2, const BigInt& c0, const BigInt& c1, const BigInt& c2) {
  TruncPoly p = constant(cap1, cap2, c0);
  if (cap1 >= 1) p.set(1, 0, c1);
  if (cap2 >= 1) p.set(0, 1, c2);
  return p;
}

BigInt TruncPoly::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i > cap1_ || j > cap2_) return 0;
  return c_[i * (cap2_ + 1) + j];
}

void TruncPoly::set(int i, int j, const BigInt& c) {
  if (i < 0 || j < 0 || i > cap1_ || j > cap2_) throw std::out_of_range("monomial beyond truncation");
  c_[i * (cap2_ + 1) + j] = c;
}

void TruncPoly::check_shape(const TruncPoly& o) const {
  if (cap1_ != o.cap1_ || cap2_ != o.cap2_) throw std::invalid_argument("truncation degrees differ");
}

TruncPoly TruncPoly::operator+(const TruncPoly& o) const {
  check_shape(o);
  TruncPoly r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

TruncPoly TruncPoly::operator-(const TruncPoly& o) const {
  check_shape(o);
  TruncPoly r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

TruncPoly TruncPoly::operator*(const TruncPoly& o) const {
  check_shape(o);
  TruncPoly r(cap1_, cap2_);
  for (int i1 = 0; i1 <= cap1_; ++i1) {
    for (int j1 = 0; j1 <= cap2_; ++j1) {
      const BigInt& a = c_[i1 * (cap2_ + 1) + j1];
      if (a == 0) continue;
      for (int i2 = 0; i1 + i2 <= cap1_; ++i2) {
        for (int j2 = 0; j1 + j2 <= cap2_; ++j2) {
          r.c_[(i1 + i2) * (cap2_ + 1) + j1 + j2] += a * o.c_[i2 * (cap2_ + 1) + j2];
        }
      }
    }
  }
  return r;
}

bool TruncPoly::operator==(const TruncPoly& o) const {
  return cap1_ == o.cap1_ && cap2_ == o.cap2_ && c_ == o.c_;
}

TruncPoly TruncPoly::inverse() const {
  const BigInt u = c_[0];
  if (u != 1 && u != -1) throw std::domain_error("constant term is not a unit");
  // f = u(1 - x) with x nilpotent, so f^{-1} = u (1 + x + x^2 + ...).
  TruncPoly one = constant(cap1_, cap2_, 1);
  TruncPoly x = one - scaled(u);
  TruncPoly sum = one, term = one;
  for (int k = 1; k <= cap1_ + cap2_; ++k) {
    term = term * x;
    sum = sum + term;
  }
  return sum.scaled(u);
}

TruncPoly TruncPoly::scaled(const BigInt& k) const {
  TruncPoly r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

TruncPoly TruncPoly::pow(long long e) const {
  TruncPoly base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  TruncPoly r = constant(cap1_, cap2_, 1);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

std::vector<BigInt> segre_classes(int n, int s) {
  if (n < 1 || s < 0) throw std::invalid_argument("segre_classes needs n >= 1, s >= 0");
  TruncPoly tilde = TruncPoly::linear(s, 0, 1, 1).pow(-n);
  std::vector<BigInt> out;
  for (int i = 0; i <= s; ++i) out.push_back(i % 2 ? BigInt(-tilde.coeff(i)) : tilde.coeff(i));
  return out;
}

namespace {

BigInt at(const std::vector<BigInt>& s, int k) {
  if (k < 0 || k >= static_cast<int>(s.size())) return 0;
  return s[k];
}

BigInt det(std::vector<std::vector<BigInt>> a) {
  // Fraction-free Bareiss elimination.
  const int n = static_cast<int>(a.size());
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return n == 0 ? BigInt(1) : BigInt(sign * a[n - 1][n - 1]);
}

}  // namespace

SchurValues schur_polys(const std::vector<BigInt>& s) {
  if (s.size() < 5) throw std::invalid_argument("schur_polys needs s_0..s_4");
  SchurValues v;
  v.s21 = s[2] * s[1] - s[3];
  v.s31 = s[3] * s[1] - s[4];
  v.s211 = s[2] * (s[1] * s[1] - s[2]) - (s[1] * s[3] - s[4]);
  return v;
}

BigInt schur_determinant(const std::vector<int>& partition, const std::vector<BigInt>& s) {
  const int l = static_cast<int>(partition.size());
  std::vector<std::vector<BigInt>> a(l, std::vector<BigInt>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) a[i][j] = at(s, partition[i] - i + j);
  }
  return det(a);
}

namespace {

// Segre classes s_0..s_4 with c_1, c_2 of P^dim.
struct PragaczInputs {
  std::vector<BigInt> s;
  BigInt c1, c2;
};

PragaczInputs pragacz_inputs(int n, int dim) {
  if (n < 2) throw std::invalid_argument("pragacz formulas need n >= 2");
  PragaczInputs in;
  in.s = segre_classes(n, 4);
  TruncPoly c = TruncPoly::linear(dim, 0, 1, 1).pow(dim + 1);
  in.c1 = c.coeff(1);
  in.c2 = c.coeff(2);
  return in;
}

}  // namespace

BigInt pragacz_euler_surface(int n) {
  PragaczInputs in = pragacz_inputs(n, 4);
  const auto& s = in.s;
  const BigInt s21 = schur_determinant({2, 1}, s);
  const BigInt s31 = schur_determinant({3, 1}, s);
  const BigInt s211 = schur_determinant({2, 1, 1}, s);
  return s[2] * in.c2 - (s21 + 2 * s[3]) * in.c1 + s211 + 3 * s31 + 3 * s[4];
}

BigInt pragacz_euler_surface_closed(int n) {
  if (n < 2) throw std::invalid_argument("pragacz formulas need n >= 2");
  const BigInt N = n;
  return N * N * (10 - 10 * N + 3 * N * N) + binomial(n, 2) * (-10 + 15 * N - 6 * N * N) +
         binomial(n, 3) * (4 * N - 5) - binomial(n, 4);
}

BigInt pragacz_euler_curve(int n) {
  PragaczInputs in = pragacz_inputs(n, 3);
  const auto& s = in.s;
  return s[2] * in.c1 - schur_determinant({2, 1}, s) - 2 * s[3];
}

BigInt pragacz_euler_curve_closed(int n) {
  if (n < 2) throw std::invalid_argument("pragacz formulas need n >= 2");
  const BigInt N = n;
  return 4 * N * N - 2 * N * N * N + (3 * N - 4) * binomial(n, 2) - binomial(n, 3);
}

GenusDegree genus_degree_curve(int n) {
  if (n < 2) throw std::invalid_argument("genus_degree_curve needs n >= 2");
  return {n * binomial(n, 3) - (n + 1) * binomial(n - 1, 3), binomial(n + 1, 2)};
}

namespace {

// Hilbert polynomial of O_{P^dim}(d), valid for all integers d.
BigInt chi_projective(int dim, long long d) {
  BigInt num = 1;
  for (int i = 1; i <= dim; ++i) num *= d + i;
  return num / factorial(dim);
}

BigInt en_chi(int n, int dim) {
  if (n < 2) throw std::invalid_argument("Eagon-Northcott chi needs n >= 2");
  return chi_projective(dim, 0) - (n + 1) * chi_projective(dim, -n) + n * chi_projective(dim, -n - 1);
}

}  // namespace

BigInt en_chi_curve(int n) { return en_chi(n, 3); }
BigInt en_chi_surface(int n) { return en_chi(n, 4); }

BigInt geometric_genus_surface(int n) {
  if (n < 2) throw std::invalid_argument("geometric_genus_surface needs n >= 2");
  return n * binomial(n, 4) - (n + 1) * binomial(n - 1, 4);
}

BigInt chi_O_surface(int n) { return 1 + geometric_genus_surface(n); }

BigInt ci_euler_bidegree(int a, int b, int r) {
  if (a < 0 || b < 0 || r < 0 || r > a + b) throw std::invalid_argument("ci_euler_bidegree needs 0 <= r <= a+b");
  TruncPoly tangent = TruncPoly::linear(a, b, 1, 1, 0).pow(a + 1) * TruncPoly::linear(a, b, 1, 0, 1).pow(b + 1);
  TruncPoly divisor = TruncPoly::linear(a, b, 0, 1, 1);
  TruncPoly normal_inv = TruncPoly::linear(a, b, 1, 1, 1).pow(-r);
  TruncPoly total = tangent * normal_inv * divisor.pow(r);
  return total.coeff(a, b);
}

}  // namespace degenloci
