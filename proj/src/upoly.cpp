#include "degenloci/upoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "degenloci/linalg.hpp"

namespace degenloci {

UPoly::UPoly(const Field& f, std::vector<Scalar> coeffs) : field_(&f), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (&c.field() != field_) throw FieldMismatch("polynomial coefficient from " + c.field().name());
  }
  trim();
}

UPoly UPoly::x(const Field& f) { return UPoly(f, {Scalar::zero(f), Scalar::one(f)}); }

UPoly UPoly::constant(const Scalar& c) { return UPoly(c.field(), {c}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar::zero(*field_);
  return c_[i];
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar::zero(*field_));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return UPoly(*field_, std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar::zero(*field_));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return UPoly(*field_, std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (field_ != o.field_) throw FieldMismatch("polynomials over different fields");
  if (is_zero() || o.is_zero()) return UPoly(*field_);
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar::zero(*field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(*field_, std::move(r));
}

UPoly UPoly::scaled(const Scalar& s) const {
  std::vector<Scalar> r;
  for (const auto& c : c_) r.push_back(c * s);
  return UPoly(*field_, std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(c_.back().inverse());
}

Scalar UPoly::eval(const Scalar& t) const {
  Scalar r = Scalar::zero(*field_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
  return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(f), a};
  std::vector<Scalar> q(a.degree() - db + 1, Scalar::zero(f));
  const Scalar lead_inv = b.coeffs().back().inverse();
  for (int i = a.degree(); i >= db; --i) {
    Scalar c = rem[i] * lead_inv;
    q[i - db] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
  }
  return {UPoly(f, std::move(q)), UPoly(f, std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly powmod(const UPoly& base, const BigInt& e, const UPoly& mod) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  UPoly r = divmod(UPoly::constant(Scalar::one(base.field())), mod).second;
  UPoly b = divmod(base, mod).second;
  if (e == 0) return r;
  const std::size_t bits = boost::multiprecision::msb(e) + 1;
  for (std::size_t i = 0; i < bits; ++i) {
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r = divmod(r * b, mod).second;
    if (i + 1 < bits) b = divmod(b * b, mod).second;
  }
  return r;
}

namespace {

// g is monic and a product of distinct linear factors.
void split_linear(const UPoly& g, const BigInt& half, std::vector<Scalar>& out) {
  const Field& f = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0));
    return;
  }
  const UPoly one = UPoly::constant(Scalar::one(f));
  std::vector<std::uint64_t> digits(f.degree(), 0);
  while (true) {
    Scalar a = Scalar::from_coordinates(f, digits);
    UPoly h = powmod(UPoly::x(f) + UPoly::constant(a), half, g);
    UPoly d = gcd(g, h - one);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, half, out);
      split_linear(divmod(g, d).first.monic(), half, out);
      return;
    }
    int i = 0;
    while (i < f.degree() && ++digits[i] == f.characteristic()) digits[i++] = 0;
    if (i == f.degree()) throw std::logic_error("equal-degree splitting failed");
  }
}

}  // namespace

std::vector<Scalar> roots_in_field(const UPoly& poly) {
  const Field& f = poly.field();
  if (!f.is_finite() || f.characteristic() == 2) throw std::domain_error("root finding needs a finite field of odd characteristic");
  if (poly.is_zero()) throw std::invalid_argument("the zero polynomial has every element as a root");
  if (poly.degree() == 0) return {};
  const BigInt q = f.order();
  UPoly m = poly.monic();
  UPoly xq = powmod(UPoly::x(f), q, m);
  UPoly g = gcd(m, xq - UPoly::x(f));
  std::vector<Scalar> roots;
  split_linear(g, (q - 1) / 2, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

UPoly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolate needs matching nonempty inputs");
  const Field& f = xs[0].field();
  const std::size_t n = xs.size();
  // Newton divided differences.
  std::vector<Scalar> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  UPoly result = UPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * (UPoly::x(f) - UPoly::constant(xs[i])) + UPoly::constant(dd[i]);
  }
  return result;
}

Scalar resultant(const UPoly& f, const UPoly& g, int df, int dg) {
  if (f.degree() > df || g.degree() > dg) throw std::invalid_argument("formal degree below actual degree");
  const Field& fld = f.field();
  const int n = df + dg;
  if (n == 0) return Scalar::one(fld);
  DenseMatrix s(fld, n, n);
  for (int r = 0; r < dg; ++r) {
    for (int i = 0; i <= df; ++i) s(r, r + i) = f.coeff(df - i);
  }
  for (int r = 0; r < df; ++r) {
    for (int i = 0; i <= dg; ++i) s(dg + r, r + i) = g.coeff(dg - i);
  }
  return determinant(s);
}

}  // namespace degenloci
