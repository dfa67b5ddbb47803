#include "degenloci/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

namespace degenloci {

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
  trim(a);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

// Returns (quotient, remainder); b must be nonzero after trimming.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  std::uint64_t lead_inv = invmod(b.back(), p);
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    std::uint64_t c = mulmod(a[i], lead_inv, p);
    q[i - b.size() + 1] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = i - b.size() + 1 + j;
      a[k] = submod(a[k], mulmod(c, b[j], p), p);
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  return poly_divmod(poly_mul(a, b, p), f, p).second;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = poly_divmod(base, f, p).second;
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Inverse of a modulo f via the extended Euclidean algorithm.
Poly poly_invmod(const Poly& a, const Poly& f, std::uint64_t p) {
  Poly r0 = f, r1 = a, s0 = {}, s1 = {1};
  trim(r1);
  if (r1.empty()) throw std::domain_error("inverse of zero");
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1, p);
    Poly s = poly_sub(s0, poly_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw std::domain_error("element is not invertible");
  std::uint64_t c = invmod(r0[0], p);
  for (auto& x : s0) x = mulmod(x, c, p);
  return s0;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& f_in, std::uint64_t p) {
  Poly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  int k = static_cast<int>(f.size()) - 1;
  if (k == 1) return true;
  Poly x{0, 1};
  Poly h = x;
  for (int i = 1; i <= k / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly g = poly_gcd(f, poly_sub(h, x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  Poly f(degree + 1, 0);
  f[degree] = 1;
  while (true) {
    if (is_irreducible_mod_p(f, p)) return f;
    int i = 0;
    while (i < degree && ++f[i] == p) f[i++] = 0;
    if (i == degree) throw std::logic_error("no irreducible polynomial found");
  }
}

const Field& Field::rationals() {
  static const Field q(Kind::kRational, 0, 1, {});
  return q;
}

const Field& Field::intern(std::uint64_t p, int degree) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, degree}];
  if (!slot) {
    if (degree == 1) {
      slot.reset(new Field(Kind::kPrime, p, 1, {0, 1}));
    } else {
      slot.reset(new Field(Kind::kExtension, p, degree, smallest_irreducible(p, degree)));
    }
  }
  return *slot;
}

const Field& Field::prime(std::uint64_t p) {
  if (p == 2 || !is_prime(p) || p >= (1ULL << 62)) {
    throw std::invalid_argument("field characteristic must be an odd prime below 2^62, got " + std::to_string(p));
  }
  return intern(p, 1);
}

const Field& Field::extension(std::uint64_t p, int degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("extension degree must lie in 1..6, got " + std::to_string(degree));
  }
  prime(p);
  return intern(p, degree);
}

BigInt Field::order() const {
  if (!is_finite()) throw std::logic_error("Q has no finite order");
  BigInt q = 1;
  for (int i = 0; i < degree_; ++i) q *= p_;
  return q;
}

const Field& Field::prime_subfield() const {
  if (kind_ == Kind::kExtension) return prime(p_);
  return *this;
}

std::string Field::name() const {
  if (kind_ == Kind::kRational) return "Q";
  if (kind_ == Kind::kPrime) return "F_" + std::to_string(p_);
  return "F_" + std::to_string(p_) + "^" + std::to_string(degree_);
}

Scalar::Scalar(const Field& f) : field_(&f) {
  if (f.is_finite()) {
    value_ = Residues{};
  } else {
    value_ = Rational(0);
  }
}

Scalar Scalar::from_int(const Field& f, long long value) { return from_bigint(f, BigInt(value)); }

Scalar Scalar::from_bigint(const Field& f, const BigInt& value) {
  Scalar s(f);
  if (!f.is_finite()) {
    s.value_ = Rational(value);
    return s;
  }
  BigInt r = value % f.characteristic();
  if (r < 0) r += f.characteristic();
  std::get<Residues>(s.value_)[0] = static_cast<std::uint64_t>(r);
  return s;
}

Scalar Scalar::from_rational(const Field& f, const Rational& value) {
  if (!f.is_finite()) {
    Scalar s(f);
    s.value_ = value;
    return s;
  }
  Scalar num = from_bigint(f, boost::multiprecision::numerator(value));
  Scalar den = from_bigint(f, boost::multiprecision::denominator(value));
  return num / den;
}

Scalar Scalar::from_coordinates(const Field& f, const std::vector<std::uint64_t>& coords) {
  if (!f.is_finite()) throw std::invalid_argument("coordinates require a finite field");
  if (static_cast<int>(coords.size()) > f.degree()) throw std::invalid_argument("too many coordinates");
  Scalar s(f);
  auto& r = std::get<Residues>(s.value_);
  for (std::size_t i = 0; i < coords.size(); ++i) r[i] = coords[i] % f.characteristic();
  return s;
}

Scalar Scalar::generator(const Field& f) {
  if (f.kind() != Field::Kind::kExtension) throw std::invalid_argument("generator requires an extension field");
  return from_coordinates(f, {0, 1});
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  if (!f.is_finite()) return from_rational(f, parse_rational(text));
  if (f.kind() == Field::Kind::kPrime) return from_bigint(f, parse_bigint(text));
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("extension element must look like [c0,c1,...]: " + text);
  }
  std::vector<std::uint64_t> coords;
  std::stringstream ss(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    BigInt v = parse_bigint(item) % f.characteristic();
    if (v < 0) v += f.characteristic();
    coords.push_back(static_cast<std::uint64_t>(v));
  }
  return from_coordinates(f, coords);
}

void Scalar::require_same(const Scalar& o) const {
  if (field_ != o.field_) throw FieldMismatch("operands from " + field_->name() + " and " + o.field_->name());
}

bool Scalar::is_zero() const {
  if (!field_->is_finite()) return std::get<Rational>(value_) == 0;
  const auto& r = std::get<Residues>(value_);
  for (int i = 0; i < field_->degree(); ++i) {
    if (r[i]) return false;
  }
  return true;
}

bool Scalar::is_one() const {
  if (!field_->is_finite()) return std::get<Rational>(value_) == 1;
  const auto& r = std::get<Residues>(value_);
  if (r[0] != 1) return false;
  for (int i = 1; i < field_->degree(); ++i) {
    if (r[i]) return false;
  }
  return true;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  Scalar s(*field_);
  if (!field_->is_finite()) {
    s.value_ = std::get<Rational>(value_) + std::get<Rational>(o.value_);
    return s;
  }
  const auto& a = std::get<Residues>(value_);
  const auto& b = std::get<Residues>(o.value_);
  auto& r = std::get<Residues>(s.value_);
  for (int i = 0; i < field_->degree(); ++i) r[i] = addmod(a[i], b[i], field_->characteristic());
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(o);
  Scalar s(*field_);
  if (!field_->is_finite()) {
    s.value_ = std::get<Rational>(value_) - std::get<Rational>(o.value_);
    return s;
  }
  const auto& a = std::get<Residues>(value_);
  const auto& b = std::get<Residues>(o.value_);
  auto& r = std::get<Residues>(s.value_);
  for (int i = 0; i < field_->degree(); ++i) r[i] = submod(a[i], b[i], field_->characteristic());
  return s;
}

Scalar Scalar::operator-() const { return Scalar(*field_) - *this; }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  Scalar s(*field_);
  if (!field_->is_finite()) {
    s.value_ = std::get<Rational>(value_) * std::get<Rational>(o.value_);
    return s;
  }
  const std::uint64_t p = field_->characteristic();
  const auto& a = std::get<Residues>(value_);
  const auto& b = std::get<Residues>(o.value_);
  auto& r = std::get<Residues>(s.value_);
  const int k = field_->degree();
  if (k == 1) {
    r[0] = mulmod(a[0], b[0], p);
    return s;
  }
  std::array<std::uint64_t, 2 * Field::kMaxDegree> t{};
  for (int i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < k; ++j) t[i + j] = addmod(t[i + j], mulmod(a[i], b[j], p), p);
  }
  const auto& f = field_->modulus();
  for (int i = 2 * k - 2; i >= k; --i) {
    std::uint64_t c = t[i];
    if (c == 0) continue;
    for (int j = 0; j < k; ++j) t[i - k + j] = submod(t[i - k + j], mulmod(c, f[j], p), p);
  }
  for (int i = 0; i < k; ++i) r[i] = t[i];
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in " + field_->name());
  Scalar s(*field_);
  if (!field_->is_finite()) {
    s.value_ = Rational(1) / std::get<Rational>(value_);
    return s;
  }
  const std::uint64_t p = field_->characteristic();
  const auto& a = std::get<Residues>(value_);
  auto& r = std::get<Residues>(s.value_);
  if (field_->degree() == 1) {
    r[0] = invmod(a[0], p);
    return s;
  }
  Poly ap(a.begin(), a.begin() + field_->degree());
  Poly inv = poly_invmod(ap, field_->modulus(), p);
  for (std::size_t i = 0; i < inv.size(); ++i) r[i] = inv[i];
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same(o);
  return *this * o.inverse();
}

Scalar Scalar::pow(const BigInt& e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = one(*field_);
  if (e == 0) return r;
  Scalar base = *this;
  const std::size_t bits = boost::multiprecision::msb(e) + 1;
  for (std::size_t i = 0; i < bits; ++i) {
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r *= base;
    if (i + 1 < bits) base *= base;
  }
  return r;
}

Scalar Scalar::frobenius() const {
  if (!field_->is_finite() || field_->degree() == 1) return *this;
  return pow(BigInt(field_->characteristic()));
}

Scalar Scalar::embed(const Field& target) const {
  if (&target == field_) return *this;
  if (field_->kind() == Field::Kind::kPrime && target.is_finite() &&
      target.characteristic() == field_->characteristic()) {
    Scalar s(target);
    std::get<Residues>(s.value_)[0] = std::get<Residues>(value_)[0];
    return s;
  }
  throw FieldMismatch("cannot embed " + field_->name() + " into " + target.name());
}

bool Scalar::in_prime_subfield() const {
  if (!field_->is_finite()) return true;
  const auto& r = std::get<Residues>(value_);
  for (int i = 1; i < field_->degree(); ++i) {
    if (r[i]) return false;
  }
  return true;
}

Scalar Scalar::restrict_to_prime() const {
  if (field_->kind() != Field::Kind::kExtension) return *this;
  if (!in_prime_subfield()) throw std::domain_error("element does not lie in the prime subfield");
  return from_bigint(field_->prime_subfield(), BigInt(std::get<Residues>(value_)[0]));
}

std::uint64_t Scalar::residue() const {
  if (!field_->is_finite() || !in_prime_subfield()) throw std::domain_error("no prime-field residue");
  return std::get<Residues>(value_)[0];
}

std::vector<std::uint64_t> Scalar::coordinates() const {
  if (!field_->is_finite()) throw std::domain_error("Q elements have no coordinates");
  const auto& r = std::get<Residues>(value_);
  return std::vector<std::uint64_t>(r.begin(), r.begin() + field_->degree());
}

const Rational& Scalar::rational() const {
  if (field_->is_finite()) throw std::domain_error("not a rational scalar");
  return std::get<Rational>(value_);
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  if (!field_->is_finite()) return std::get<Rational>(value_) == std::get<Rational>(o.value_);
  return std::get<Residues>(value_) == std::get<Residues>(o.value_);
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  require_same(o);
  if (!field_->is_finite()) {
    const auto& a = std::get<Rational>(value_);
    const auto& b = std::get<Rational>(o.value_);
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  return std::get<Residues>(value_) <=> std::get<Residues>(o.value_);
}

std::string Scalar::to_string() const {
  if (!field_->is_finite()) return degenloci::to_string(std::get<Rational>(value_));
  const auto& r = std::get<Residues>(value_);
  if (field_->degree() == 1) return std::to_string(r[0]);
  std::string out = "[";
  for (int i = 0; i < field_->degree(); ++i) {
    if (i) out += ",";
    out += std::to_string(r[i]);
  }
  return out + "]";
}

std::optional<Scalar> sqrt(const Scalar& a) {
  const Field& f = a.field();
  if (a.is_zero()) return a;
  if (!f.is_finite()) {
    const Rational& q = a.rational();
    if (q < 0) return std::nullopt;
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt rn = boost::multiprecision::sqrt(num);
    BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Scalar::from_rational(f, Rational(rn, rd));
  }
  const BigInt q = f.order();
  const Scalar one = Scalar::one(f);
  if (!(a.pow((q - 1) / 2) == one)) return std::nullopt;
  BigInt t = q - 1;
  int e = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++e;
  }
  // Deterministic search for a non-residue over base-p digit vectors.
  const std::uint64_t p = f.characteristic();
  std::vector<std::uint64_t> digits(f.degree(), 0);
  std::optional<Scalar> z;
  const Scalar minus_one = -one;
  while (!z) {
    int i = 0;
    while (i < f.degree() && ++digits[i] == p) digits[i++] = 0;
    Scalar cand = Scalar::from_coordinates(f, digits);
    if (cand.pow((q - 1) / 2) == minus_one) z = cand;
  }
  int m = e;
  Scalar c = z->pow(t);
  Scalar tt = a.pow(t);
  Scalar r = a.pow((t + 1) / 2);
  while (!tt.is_one()) {
    int i = 0;
    Scalar t2 = tt;
    while (!t2.is_one()) {
      t2 *= t2;
      ++i;
      if (i == m) return std::nullopt;
    }
    Scalar b = c;
    for (int j = 0; j < m - i - 1; ++j) b *= b;
    m = i;
    c = b * b;
    tt *= c;
    r *= b;
  }
  return r;
}

}  // namespace degenloci
