#include "degenloci/schubert.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace degenloci {

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition normalized(Partition p) {
  if (!is_partition(p)) throw std::invalid_argument("not a partition");
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int weight(const Partition& p) {
  int w = 0;
  for (int x : p) w += x;
  return w;
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int c = 0; c < p[0]; ++c) {
    int len = 0;
    while (len < static_cast<int>(p.size()) && p[len] > c) ++len;
    t.push_back(len);
  }
  return t;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

namespace {

// Fills the skew shape nu/lambda row by row; rows are weakly increasing,
// columns strictly increasing, and the reverse row reading word is checked
// to be a lattice word when each row is complete.
class LrCounter {
 public:
  LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu) : mu_(mu), nu_(nu) {
    lambda_ = lambda;
    lambda_.resize(nu.size(), 0);
    rows_.resize(nu.size());
    for (std::size_t r = 0; r < nu.size(); ++r) rows_[r].assign(nu[r], 0);
    used_.assign(mu.size() + 1, 0);
    seen_.assign(mu.size() + 2, 0);
  }

  long long count() { return fill(0, lambda_.empty() ? 0 : lambda_[0]); }

 private:
  long long fill(std::size_t r, int c) {
    if (r == nu_.size()) return 1;
    if (c == nu_[r]) {
      // Reading word of row r from right to left.
      std::vector<int> added;
      bool ok = true;
      for (int j = nu_[r] - 1; j >= lambda_[r]; --j) {
        const int v = rows_[r][j];
        ++seen_[v];
        added.push_back(v);
        if (v > 1 && seen_[v] > seen_[v - 1]) {
          ok = false;
          break;
        }
      }
      long long total = 0;
      if (ok) {
        const std::size_t next = r + 1;
        total = fill(next, next < nu_.size() ? lambda_[next] : 0);
      }
      for (int v : added) --seen_[v];
      return total;
    }
    int lo = 1;
    if (c > lambda_[r]) lo = rows_[r][c - 1];
    if (r > 0 && c >= lambda_[r - 1]) lo = std::max(lo, rows_[r - 1][c] + 1);
    const int hi = std::min<int>(static_cast<int>(mu_.size()), static_cast<int>(r) + 1);
    long long total = 0;
    for (int v = lo; v <= hi; ++v) {
      if (used_[v] >= mu_[v - 1]) continue;
      ++used_[v];
      rows_[r][c] = v;
      total += fill(r, c + 1);
      --used_[v];
    }
    rows_[r][c] = 0;
    return total;
  }

  Partition lambda_, mu_, nu_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> used_, seen_;
};

}  // namespace

long long lr_coefficient(const Partition& lambda_in, const Partition& mu_in, const Partition& nu_in) {
  const Partition lambda = normalized(lambda_in), mu = normalized(mu_in), nu = normalized(nu_in);
  if (weight(nu) != weight(lambda) + weight(mu)) return 0;
  if (!contains(nu, lambda) || !contains(nu, mu)) return 0;
  if (mu.empty()) return 1;
  return LrCounter(lambda, mu, nu).count();
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative box");
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int row, int max_part) -> void {
    if (row == rows) {
      out.push_back(normalized(cur));
      return;
    }
    for (int v = 0; v <= max_part; ++v) {
      cur.push_back(v);
      self(self, row + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 0, cols);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    const int wa = weight(a), wb = weight(b);
    return wa != wb ? wa < wb : a < b;
  });
  return out;
}

Grassmannian::Grassmannian(int k, int N) : k_(k), N_(N) {
  if (k < 1 || k > N) throw std::invalid_argument("Grassmannian needs 1 <= k <= N");
  basis_ = partitions_in_box(k, N - k);
  const int sz = size();
  for (int i = 0; i < sz; ++i) {
    index_[basis_[i]] = i;
    weights_.push_back(weight(basis_[i]));
  }
  for (int i = 0; i < sz; ++i) {
    Partition p = basis_[i];
    p.resize(k, 0);
    Partition c(k);
    for (int r = 0; r < k; ++r) c[r] = (N - k) - p[k - 1 - r];
    complement_.push_back(index_.at(normalized(c)));
  }
  table_.resize(static_cast<std::size_t>(sz) * sz);
  for (int i = 0; i < sz; ++i) {
    for (int j = i; j < sz; ++j) {
      std::vector<std::pair<int, long long>> terms;
      const int w = weights_[i] + weights_[j];
      for (int l = 0; l < sz; ++l) {
        if (weights_[l] != w) continue;
        const long long c = lr_coefficient(basis_[i], basis_[j], basis_[l]);
        if (c) terms.push_back({l, c});
      }
      table_[i * sz + j] = terms;
      table_[j * sz + i] = terms;
    }
  }
}

int Grassmannian::index_of(const Partition& p) const {
  auto it = index_.find(normalized(p));
  return it == index_.end() ? -1 : it->second;
}

Ambient::Ambient(std::array<std::pair<int, int>, 3> factors) {
  for (const auto& [k, N] : factors) factors_.emplace_back(k, N);
}

std::shared_ptr<const Ambient> Ambient::for_triple(int n, int s, int m) {
  if (n < 2 || s < 1 || m < 0 || n + m - 2 < 1) throw std::invalid_argument("ambient needs n >= 2, s >= 1, n+m >= 3");
  static std::mutex mu;
  static std::map<std::array<int, 3>, std::shared_ptr<const Ambient>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, s, m}];
  if (!slot) slot = std::make_shared<const Ambient>(std::array<std::pair<int, int>, 3>{{{2, n}, {2, s + 1}, {n + m - 2, n + m}}});
  return slot;
}

int Ambient::dim() const {
  int d = 0;
  for (const auto& f : factors_) d += f.dim();
  return d;
}

std::array<std::pair<int, int>, 3> Ambient::spec() const {
  return {{{factors_[0].k(), factors_[0].N()}, {factors_[1].k(), factors_[1].N()}, {factors_[2].k(), factors_[2].N()}}};
}

ProductClass::ProductClass(std::shared_ptr<const Ambient> ambient) : ambient_(std::move(ambient)) {
  if (!ambient_) throw std::invalid_argument("null ambient");
}

ProductClass ProductClass::unit(std::shared_ptr<const Ambient> ambient) {
  ProductClass x(std::move(ambient));
  x.add({0, 0, 0}, 1);
  return x;
}

ProductClass ProductClass::schubert(std::shared_ptr<const Ambient> ambient, const Partition& a, const Partition& b,
                                    const Partition& c, const BigInt& coeff) {
  ProductClass x(std::move(ambient));
  SchubertKey key{x.ambient().factor(0).index_of(a), x.ambient().factor(1).index_of(b), x.ambient().factor(2).index_of(c)};
  for (int i : key) {
    if (i < 0) throw std::invalid_argument("partition outside its box");
  }
  x.add(key, coeff);
  return x;
}

BigInt ProductClass::coeff(const SchubertKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt ProductClass::coeff(const Partition& a, const Partition& b, const Partition& c) const {
  SchubertKey key{ambient().factor(0).index_of(a), ambient().factor(1).index_of(b), ambient().factor(2).index_of(c)};
  for (int i : key) {
    if (i < 0) return 0;
  }
  return coeff(key);
}

void ProductClass::add(const SchubertKey& key, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int ProductClass::degree_of(const SchubertKey& key) const {
  return ambient().factor(0).weight_of(key[0]) + ambient().factor(1).weight_of(key[1]) +
         ambient().factor(2).weight_of(key[2]);
}

void ProductClass::check_ambient(const ProductClass& o) const {
  if (ambient_ != o.ambient_ && !ambient_->same_as(*o.ambient_)) throw std::invalid_argument("ambient mismatch");
}

ProductClass ProductClass::operator+(const ProductClass& o) const {
  check_ambient(o);
  ProductClass r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, c);
  return r;
}

ProductClass ProductClass::operator-(const ProductClass& o) const { return *this + o.scaled(-1); }

ProductClass ProductClass::scaled(const BigInt& c) const {
  ProductClass r(ambient_);
  for (const auto& [k, x] : terms_) r.add(k, x * c);
  return r;
}

bool ProductClass::operator==(const ProductClass& o) const {
  return ambient_->same_as(*o.ambient_) && terms_ == o.terms_;
}

ProductClass ProductClass::homogeneous(int d) const {
  ProductClass r(ambient_);
  for (const auto& [k, c] : terms_) {
    if (degree_of(k) == d) r.terms_.emplace(k, c);
  }
  return r;
}

ProductClass ProductClass::truncated(int d) const {
  ProductClass r(ambient_);
  for (const auto& [k, c] : terms_) {
    if (degree_of(k) <= d) r.terms_.emplace(k, c);
  }
  return r;
}

ProductClass lr_multiply(const ProductClass& x, const ProductClass& y, int max_degree) {
  if (!x.ambient().same_as(y.ambient())) throw std::invalid_argument("ambient mismatch");
  const Ambient& amb = x.ambient();
  const int cap = max_degree < 0 ? amb.dim() : std::min(max_degree, amb.dim());
  std::map<SchubertKey, BigInt> acc;
  for (const auto& [kx, cx] : x.terms()) {
    const int dx = x.degree_of(kx);
    for (const auto& [ky, cy] : y.terms()) {
      if (dx + y.degree_of(ky) > cap) continue;
      const auto& p0 = amb.factor(0).product(kx[0], ky[0]);
      if (p0.empty()) continue;
      const auto& p1 = amb.factor(1).product(kx[1], ky[1]);
      if (p1.empty()) continue;
      const auto& p2 = amb.factor(2).product(kx[2], ky[2]);
      if (p2.empty()) continue;
      const BigInt c = cx * cy;
      for (const auto& [i0, c0] : p0) {
        for (const auto& [i1, c1] : p1) {
          for (const auto& [i2, c2] : p2) acc[{i0, i1, i2}] += c * (c0 * c1 * c2);
        }
      }
    }
  }
  ProductClass r(x.ambient_ptr());
  for (const auto& [k, c] : acc) r.add(k, c);
  return r;
}

ProductClass inverse_truncated(const ProductClass& x, int max_degree) {
  if (x.coeff(SchubertKey{0, 0, 0}) != 1) throw std::domain_error("constant term must be 1");
  const ProductClass one = ProductClass::unit(x.ambient_ptr());
  const ProductClass rest = x.truncated(max_degree) - one;
  ProductClass inv = one, power = one;
  for (int k = 1; k <= max_degree; ++k) {
    power = lr_multiply(power, rest, max_degree).scaled(-1);
    if (power.is_zero()) break;
    inv = inv + power;
  }
  return inv;
}

BigInt integrate(const ProductClass& x) {
  const Ambient& a = x.ambient();
  return x.coeff(SchubertKey{a.factor(0).point(), a.factor(1).point(), a.factor(2).point()});
}

BoxPoly::BoxPoly(std::vector<int> caps, int total_cap) : caps_(std::move(caps)), total_cap_(total_cap) {
  std::size_t sz = 1;
  stride_.assign(caps_.size(), 1);
  for (int v = vars() - 1; v >= 0; --v) {
    if (caps_[v] < 0) throw std::invalid_argument("negative cap");
    stride_[v] = sz;
    sz *= static_cast<std::size_t>(caps_[v] + 1);
  }
  c_.assign(sz, 0);
  deg_.assign(sz, 0);
  for (std::size_t i = 0; i < sz; ++i) {
    int d = 0;
    for (int v = 0; v < vars(); ++v) d += static_cast<int>((i / stride_[v]) % (caps_[v] + 1));
    deg_[i] = d;
  }
}

BoxPoly BoxPoly::one(std::vector<int> caps, int total_cap) {
  BoxPoly p(std::move(caps), total_cap);
  p.c_[0] = 1;
  return p;
}

std::vector<int> BoxPoly::exponents(std::size_t index) const {
  std::vector<int> e(vars());
  for (int v = 0; v < vars(); ++v) e[v] = static_cast<int>((index / stride_[v]) % (caps_[v] + 1));
  return e;
}

BigInt BoxPoly::coeff(const std::vector<int>& exps) const {
  if (static_cast<int>(exps.size()) != vars()) throw std::invalid_argument("exponent length");
  std::size_t idx = 0;
  for (int v = 0; v < vars(); ++v) {
    if (exps[v] < 0 || exps[v] > caps_[v]) return 0;
    idx += exps[v] * stride_[v];
  }
  return c_[idx];
}

void BoxPoly::set(const std::vector<int>& exps, const BigInt& c) {
  if (static_cast<int>(exps.size()) != vars()) throw std::invalid_argument("exponent length");
  std::size_t idx = 0;
  for (int v = 0; v < vars(); ++v) {
    if (exps[v] < 0 || exps[v] > caps_[v]) throw std::out_of_range("exponent beyond cap");
    idx += exps[v] * stride_[v];
  }
  if (total_cap_ >= 0 && deg_[idx] > total_cap_) throw std::out_of_range("degree beyond cap");
  c_[idx] = c;
}

void BoxPoly::mul_linear(const BigInt& c0, const std::vector<std::pair<int, BigInt>>& terms) {
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (total_cap_ >= 0 && deg_[i] > total_cap_) continue;
    BigInt acc = c_[i] * c0;
    for (const auto& [v, cv] : terms) {
      if ((i / stride_[v]) % (caps_[v] + 1) == 0) continue;
      acc += cv * c_[i - stride_[v]];
    }
    c_[i] = std::move(acc);
  }
}

void BoxPoly::div_linear(const BigInt& c0, const std::vector<std::pair<int, BigInt>>& terms) {
  if (c0 != 1 && c0 != -1) throw std::domain_error("division needs a unit constant term");
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (total_cap_ >= 0 && deg_[i] > total_cap_) continue;
    BigInt acc = c_[i];
    for (const auto& [v, cv] : terms) {
      if ((i / stride_[v]) % (caps_[v] + 1) == 0) continue;
      acc -= cv * c_[i - stride_[v]];
    }
    c_[i] = acc * c0;
  }
}

BoxPoly BoxPoly::homogeneous(int d) const {
  BoxPoly r(caps_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (deg_[i] == d) r.c_[i] = c_[i];
  }
  return r;
}

BoxPoly BoxPoly::operator+(const BoxPoly& o) const {
  if (caps_ != o.caps_) throw std::invalid_argument("caps differ");
  BoxPoly r(caps_, total_cap_ < 0 || o.total_cap_ < 0 ? -1 : std::max(total_cap_, o.total_cap_));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

BoxPoly BoxPoly::operator*(const BoxPoly& o) const {
  if (caps_ != o.caps_) throw std::invalid_argument("caps differ");
  const int cap = total_cap_ < 0 ? o.total_cap_ : (o.total_cap_ < 0 ? total_cap_ : std::min(total_cap_, o.total_cap_));
  BoxPoly r(caps_, cap);
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < o.c_.size(); ++j) {
    if (o.c_[j] != 0) nz.push_back(j);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const std::vector<int> ei = exponents(i);
    for (std::size_t j : nz) {
      if (cap >= 0 && deg_[i] + o.deg_[j] > cap) continue;
      bool fits = true;
      std::size_t idx = 0;
      for (int v = 0; v < vars() && fits; ++v) {
        const int e = ei[v] + static_cast<int>((j / stride_[v]) % (caps_[v] + 1));
        if (e > caps_[v]) fits = false;
        idx += e * stride_[v];
      }
      if (fits) r.c_[idx] += c_[i] * o.c_[j];
    }
  }
  return r;
}

namespace {

// Variables x1, x2, y1, y2, w1, w2: roots of U1^v, U2^v and Q3^v.
constexpr int kX = 0, kY = 2, kW = 4;

std::vector<int> root_caps(int n, int s, int m) { return {n - 1, n - 1, s, s, n + m - 1, n + m - 1}; }

using Lin = std::vector<std::pair<int, BigInt>>;

// c(E) = prod (1 + x_i + y_j)^N / prod (1 + x_i + y_j + w_k).
void apply_tensor_chern(BoxPoly& p, int N) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int r = 0; r < N; ++r) p.mul_linear(1, Lin{{kX + i, 1}, {kY + j, 1}});
      for (int k = 0; k < 2; ++k) p.div_linear(1, Lin{{kX + i, 1}, {kY + j, 1}, {kW + k, 1}});
    }
  }
}

void apply_inverse_tensor_chern(BoxPoly& p, int N) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) p.mul_linear(1, Lin{{kX + i, 1}, {kY + j, 1}, {kW + k, 1}});
      for (int r = 0; r < N; ++r) p.div_linear(1, Lin{{kX + i, 1}, {kY + j, 1}});
    }
  }
}

// c(T Gr(2, dim)) = prod (1 + sign a_i)^dim / (1 - (a_1 - a_2)^2) for the
// alphabet a at offset base; sign -1 for roots of the dual quotient.
void apply_tangent_factor(BoxPoly& p, int base, int dim, int sign) {
  for (int i = 0; i < 2; ++i) {
    for (int r = 0; r < dim; ++r) p.mul_linear(1, Lin{{base + i, sign}});
  }
  p.div_linear(1, Lin{{base, 1}, {base + 1, -1}});
  p.div_linear(1, Lin{{base, -1}, {base + 1, 1}});
}

void apply_tangent(BoxPoly& p, int n, int s, int m) {
  apply_tangent_factor(p, kX, n, 1);
  apply_tangent_factor(p, kY, s + 1, 1);
  apply_tangent_factor(p, kW, n + m, -1);
}

BoxPoly tensor_chern_roots(int n, int s, int m) {
  BoxPoly p = BoxPoly::one(root_caps(n, s, m));
  apply_tensor_chern(p, n + m);
  return p;
}

// Symmetric root polynomial to the Schubert basis: the coefficient of s_(a,b)
// in f is that of a_1^{a+1} a_2^b in f (a_1 - a_2).
ProductClass from_roots(const std::shared_ptr<const Ambient>& amb, BoxPoly f) {
  for (int base : {kX, kY, kW}) f.mul_linear(0, Lin{{base, 1}, {base + 1, -1}});
  ProductClass out(amb);
  const Grassmannian& g0 = amb->factor(0);
  const Grassmannian& g1 = amb->factor(1);
  const Grassmannian& g2 = amb->factor(2);
  auto two_rows = [](Partition p) {
    p.resize(2, 0);
    return p;
  };
  for (int i = 0; i < g0.size(); ++i) {
    const Partition a = two_rows(g0.basis()[i]);
    for (int j = 0; j < g1.size(); ++j) {
      const Partition b = two_rows(g1.basis()[j]);
      for (int l = 0; l < g2.size(); ++l) {
        // s_delta(w) = (-1)^{|delta|} sigma_{delta'} on Gr(K, N).
        const Partition d = two_rows(transpose(g2.basis()[l]));
        BigInt c = f.coeff({a[0] + 1, a[1], b[0] + 1, b[1], d[0] + 1, d[1]});
        if (c == 0) continue;
        if ((d[0] + d[1]) % 2) c = -c;
        out.add({i, j, l}, c);
      }
    }
  }
  return out;
}

void check_triple(int n, int s, int m) {
  if (n < 3 || m < 0 || s < m + 2 || s > 2 * m + 3) {
    throw std::invalid_argument("euler_of_Z needs n >= 3, m >= 0, m+2 <= s <= 2m+3");
  }
}

}  // namespace

TensorChern chern_of_tensor_bundle(int n, int s, int m) {
  auto amb = Ambient::for_triple(n, s, m);
  TensorChern t{ProductClass(amb), ProductClass(amb), 4 * (n + m - 2)};
  t.total = from_roots(amb, tensor_chern_roots(n, s, m));
  t.top = t.total.homogeneous(t.rank);
  return t;
}

ProductClass tangent_chern(int n, int s, int m) {
  auto amb = Ambient::for_triple(n, s, m);
  BoxPoly p = BoxPoly::one(root_caps(n, s, m));
  apply_tangent(p, n, s, m);
  return from_roots(amb, p);
}

ZEuler euler_of_Z(int n, int s, int m) {
  check_triple(n, s, m);
  auto amb = Ambient::for_triple(n, s, m);
  ZEuler z;
  z.n = n;
  z.s = s;
  z.m = m;
  z.dim_G = amb->dim();
  z.rank_E = 4 * (n + m - 2);
  z.dim_Z = z.dim_G - z.rank_E;
  const TensorChern e = chern_of_tensor_bundle(n, s, m);
  const ProductClass tangent = tangent_chern(n, s, m).truncated(z.dim_Z);
  const ProductClass inv = inverse_truncated(e.total.truncated(z.dim_Z), z.dim_Z);
  const ProductClass virt = lr_multiply(tangent, inv, z.dim_Z).homogeneous(z.dim_Z);
  z.euler = integrate(lr_multiply(e.top, virt));
  return z;
}

BigInt euler_of_Z_roots(int n, int s, int m) {
  check_triple(n, s, m);
  const int N = n + m;
  const int dim_z = 2 * (s - m - 1);
  const std::vector<int> caps = root_caps(n, s, m);
  const BoxPoly top = tensor_chern_roots(n, s, m).homogeneous(4 * (N - 2));

  BoxPoly virt = BoxPoly::one(caps, dim_z);
  apply_tangent(virt, n, s, m);
  apply_inverse_tensor_chern(virt, N);
  BoxPoly g = virt.homogeneous(dim_z);
  // int_{Gr(2,d)} f = -(1/2) [a_1^{d-1} a_2^{d-1}] f (a_1 - a_2)^2.
  for (int base : {kX, kY, kW}) {
    for (int r = 0; r < 2; ++r) g.mul_linear(0, Lin{{base, 1}, {base + 1, -1}});
  }
  BigInt sum = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.at(i) == 0) continue;
    std::vector<int> e = g.exponents(i);
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = caps[v] - e[v];
    sum += g.at(i) * top.coeff(e);
  }
  if (sum % 8 != 0) throw std::logic_error("root integral is not integral");
  return -sum / 8;
}

}  // namespace degenloci
