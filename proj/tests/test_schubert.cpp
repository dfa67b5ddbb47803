#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "degenloci/census.hpp"
#include "degenloci/hodge.hpp"
#include "degenloci/invariants.hpp"
#include "degenloci/schubert.hpp"

using namespace degenloci;

namespace {

// sigma_r sigma_lambda by the Pieri rule: add a horizontal strip of size r.
std::map<Partition, long long> pieri(const Partition& lambda, int r, int k, int cols) {
  std::map<Partition, long long> out;
  Partition base = lambda;
  base.resize(k, 0);
  Partition cur = base;
  auto rec = [&](auto&& self, int row, int left) -> void {
    if (row == k) {
      if (left == 0) out[normalized(cur)] += 1;
      return;
    }
    const int limit = row == 0 ? cols : base[row - 1];
    for (int add = 0; add <= left && base[row] + add <= limit; ++add) {
      cur[row] = base[row] + add;
      self(self, row + 1, left - add);
    }
    cur[row] = base[row];
  };
  rec(rec, 0, r);
  return out;
}

// sigma_lambda sigma_mu through the Jacobi-Trudi expansion of sigma_lambda in
// special classes, each applied by Pieri.
std::map<Partition, long long> pieri_product(const Partition& lambda_in, const Partition& mu, int k, int cols) {
  Partition lambda = lambda_in;
  lambda.resize(k, 0);
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Partition, long long> total;
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    }
    std::vector<int> parts;
    bool zero = false;
    for (int i = 0; i < k; ++i) {
      const int a = lambda[i] - i + perm[i];
      if (a < 0) zero = true;
      if (a > 0) parts.push_back(a);
    }
    if (zero) continue;
    std::map<Partition, long long> cur{{normalized(mu), 1}};
    for (int a : parts) {
      std::map<Partition, long long> next;
      for (const auto& [p, c] : cur) {
        for (const auto& [q, d] : pieri(p, a, k, cols)) next[q] += c * d;
      }
      cur = std::move(next);
    }
    for (const auto& [p, c] : cur) total[p] += inversions % 2 ? -c : c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto it = total.begin(); it != total.end();) it = it->second == 0 ? total.erase(it) : std::next(it);
  return total;
}

std::map<Partition, long long> table_product(const Grassmannian& g, int i, int j) {
  std::map<Partition, long long> out;
  for (const auto& [l, c] : g.product(i, j)) out[g.basis()[l]] = c;
  return out;
}

ProductClass random_class(std::mt19937_64& rng, const std::shared_ptr<const Ambient>& amb, int terms) {
  ProductClass x(amb);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int t = 0; t < terms; ++t) {
    SchubertKey key{};
    for (int f = 0; f < 3; ++f) key[f] = std::uniform_int_distribution<int>(0, amb->factor(f).size() - 1)(rng);
    x.add(key, coef(rng));
  }
  return x;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Torus-fixed-point localization: sum over coordinate subspaces of
// c_top(E) [c(T)/c(E)]_{dim Z} / e(T), with fixed integer weights.
Rational bott_euler_of_Z(int n, int s, int m) {
  const int N = n + m, K = N - 2, dim_z = 2 * (s - m - 1);
  auto weights = [](int count, int shift) {
    std::vector<long long> w;
    for (int i = 0; i < count; ++i) w.push_back(static_cast<long long>(i) * i + 7 * i + shift);
    return w;
  };
  const auto t1 = weights(n, 1), t2 = weights(s + 1, 101), t3 = weights(N, 1009);
  auto tangent = [](const std::vector<long long>& t, const std::vector<int>& sub, std::vector<long long>& out) {
    for (int i : sub) {
      for (int j = 0; j < static_cast<int>(t.size()); ++j) {
        if (std::find(sub.begin(), sub.end(), j) == sub.end()) out.push_back(t[j] - t[i]);
      }
    }
  };
  Rational total = 0;
  for (const auto& a : subsets(n, 2)) {
    for (const auto& b : subsets(s + 1, 2)) {
      for (const auto& c : subsets(N, K)) {
        std::vector<long long> chi, eta;
        tangent(t1, a, chi);
        tangent(t2, b, chi);
        tangent(t3, c, chi);
        for (int i : a) {
          for (int j : b) {
            for (int l : c) eta.push_back(-(t1[i] + t2[j] + t3[l]));
          }
        }
        Rational top = 1, euler = 1;
        for (auto e : eta) top *= e;
        if (top == 0) continue;
        for (auto x : chi) euler *= x;
        std::vector<Rational> series(dim_z + 1, 0);
        series[0] = 1;
        for (auto x : chi) {
          for (int d = dim_z; d >= 1; --d) series[d] += series[d - 1] * x;
        }
        for (auto e : eta) {
          for (int d = 1; d <= dim_z; ++d) series[d] -= series[d - 1] * e;
        }
        total += top * series[dim_z] / euler;
      }
    }
  }
  return total;
}

// The same integral with the K roots of U3^v on Gr(K, N), no dualization.
BigInt k_root_euler_of_Z(int n, int s, int m) {
  const int N = n + m, K = N - 2, dim_z = 2 * (s - m - 1);
  std::vector<int> caps{n - 1, n - 1, s, s};
  for (int k = 0; k < K; ++k) caps.push_back(N - 1);
  using Lin = std::vector<std::pair<int, BigInt>>;
  BoxPoly ce = BoxPoly::one(caps);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < K; ++k) ce.mul_linear(1, Lin{{i, 1}, {2 + j, 1}, {4 + k, 1}});
    }
  }
  const BoxPoly top = ce.homogeneous(4 * K);
  BoxPoly virt = BoxPoly::one(caps, dim_z);
  auto tangent = [&](int base, int count, int dim) {
    for (int i = 0; i < count; ++i) {
      for (int r = 0; r < dim; ++r) virt.mul_linear(1, Lin{{base + i, 1}});
      for (int j = 0; j < count; ++j) {
        if (i != j) virt.div_linear(1, Lin{{base + i, 1}, {base + j, -1}});
      }
    }
  };
  tangent(0, 2, n);
  tangent(2, 2, s + 1);
  tangent(4, K, N);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < K; ++k) virt.div_linear(1, Lin{{i, 1}, {2 + j, 1}, {4 + k, 1}});
    }
  }
  BoxPoly g = virt.homogeneous(dim_z);
  auto vandermonde_squared = [&](int base, int count) {
    for (int i = 0; i < count; ++i) {
      for (int j = i + 1; j < count; ++j) {
        g.mul_linear(0, Lin{{base + i, 1}, {base + j, -1}});
        g.mul_linear(0, Lin{{base + i, 1}, {base + j, -1}});
      }
    }
  };
  vandermonde_squared(0, 2);
  vandermonde_squared(2, 2);
  vandermonde_squared(4, K);
  BigInt sum = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.at(i) == 0) continue;
    std::vector<int> e = g.exponents(i);
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = caps[v] - e[v];
    sum += g.at(i) * top.coeff(e);
  }
  // (-1)^{binom(k,2)} / k! per factor.
  BigInt denom = 2 * 2 * factorial(K);
  const int sign_exp = 1 + 1 + K * (K - 1) / 2;
  if (sign_exp % 2) sum = -sum;
  REQUIRE(sum % denom == 0);
  return sum / denom;
}

}  // namespace

TEST_CASE("partitions and LR coefficients") {
  CHECK(transpose({3, 1}) == Partition{2, 1, 1});
  CHECK(transpose(transpose({4, 4, 2, 1})) == Partition{4, 4, 2, 1});
  CHECK(normalized({2, 1, 0, 0}) == Partition{2, 1});
  CHECK_THROWS(normalized({1, 2}));
  CHECK(partitions_in_box(2, 2).size() == 6);
  CHECK(partitions_in_box(3, 4).size() == 35);
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
  CHECK(lr_coefficient({1}, {1}, {2}) == 1);
  CHECK(lr_coefficient({1}, {1}, {1, 1}) == 1);
  CHECK(lr_coefficient({2, 1}, {1}, {3}) == 0);

  auto all = partitions_in_box(4, 4);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 1500; ++trial) {
    const Partition& a = all[pick(rng)];
    const Partition& b = all[pick(rng)];
    const Partition& c = all[pick(rng)];
    const long long x = lr_coefficient(a, b, c);
    CHECK(x >= 0);
    CHECK(x == lr_coefficient(b, a, c));
    CHECK(x == lr_coefficient(transpose(a), transpose(b), transpose(c)));
  }
}

TEST_CASE("Grassmannian products against the Pieri oracle") {
  Grassmannian g24(2, 4);
  const int s1 = g24.index_of({1});
  CHECK(table_product(g24, s1, s1) == std::map<Partition, long long>{{{2}, 1}, {{1, 1}, 1}});

  for (auto [k, N] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 7}, {4, 7}, {5, 7}, {1, 5}}) {
    Grassmannian g(k, N);
    for (int i = 0; i < g.size(); ++i) {
      for (int j = 0; j < g.size(); ++j) {
        CHECK(table_product(g, i, j) == pieri_product(g.basis()[i], g.basis()[j], k, N - k));
      }
    }
  }
}

TEST_CASE("Poincare duality in every box up to size 12") {
  for (int k = 1; k <= 12; ++k) {
    for (int N = k + 1; k * (N - k) <= 12; ++N) {
      Grassmannian g(k, N);
      for (int i = 0; i < g.size(); ++i) {
        for (int j = 0; j < g.size(); ++j) {
          long long point = 0;
          for (const auto& [l, c] : g.product(i, j)) {
            if (l == g.point()) point = c;
          }
          CHECK(point == (j == g.complement(i) ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("product classes: ring axioms, grading and integration") {
  auto amb = Ambient::for_triple(3, 3, 1);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    ProductClass x = random_class(rng, amb, 4), y = random_class(rng, amb, 4), z = random_class(rng, amb, 4);
    CHECK(lr_multiply(lr_multiply(x, y), z) == lr_multiply(x, lr_multiply(y, z)));
    CHECK(lr_multiply(x, y) == lr_multiply(y, x));
    CHECK(lr_multiply(x, y + z) == lr_multiply(x, y) + lr_multiply(x, z));
    const ProductClass xy = lr_multiply(x.homogeneous(2), y.homogeneous(3));
    for (const auto& [k, c] : xy.terms()) {
      CHECK(amb->factor(0).weight_of(k[0]) + amb->factor(1).weight_of(k[1]) + amb->factor(2).weight_of(k[2]) == 5);
    }
  }
  auto g24 = std::make_shared<const Ambient>(std::array<std::pair<int, int>, 3>{{{2, 4}, {1, 1}, {1, 1}}});
  ProductClass s1 = ProductClass::schubert(g24, {1}, {}, {});
  ProductClass p = ProductClass::unit(g24);
  for (int i = 0; i < 4; ++i) p = lr_multiply(p, s1);
  CHECK(integrate(p) == 2);
  CHECK(integrate(lr_multiply(s1, s1)) == 0);

  auto amb2 = Ambient::for_triple(4, 4, 1);
  CHECK(integrate(ProductClass::schubert(amb2, {2, 2}, {3, 3}, {2, 2, 2})) == 1);
  for (int i = 0; i < amb2->factor(0).size(); ++i) {
    for (int j = 0; j < amb2->factor(1).size(); ++j) {
      for (int l = 0; l < amb2->factor(2).size(); ++l) {
        ProductClass a(amb2), b(amb2);
        a.add({i, j, l}, 1);
        b.add({amb2->factor(0).complement(i), amb2->factor(1).complement(j), amb2->factor(2).complement(l)}, 1);
        CHECK(integrate(lr_multiply(a, b)) == 1);
      }
    }
  }
  CHECK_THROWS(lr_multiply(ProductClass::unit(amb), ProductClass::unit(amb2)));
  CHECK_THROWS(Ambient::for_triple(2, 2, 0));
}

TEST_CASE("Chern classes of the tensor bundle and the tangent bundle") {
  for (auto [n, s, m] : std::vector<std::array<int, 3>>{{3, 3, 1}, {4, 4, 1}, {3, 4, 1}, {4, 5, 2}}) {
    const int K = n + m - 2;
    auto amb = Ambient::for_triple(n, s, m);
    TensorChern e = chern_of_tensor_bundle(n, s, m);
    CHECK(e.rank == 4 * K);
    CHECK(amb->dim() - e.rank == 2 * (s - m - 1));
    ProductClass c1 = ProductClass::schubert(amb, {1}, {}, {}, 2 * K) + ProductClass::schubert(amb, {}, {1}, {}, 2 * K) +
                      ProductClass::schubert(amb, {}, {}, {1}, 4);
    CHECK(e.total.homogeneous(1) == c1);
    CHECK(e.total.coeff({}, {}, {}) == 1);
    CHECK(e.total.homogeneous(e.rank + 1).is_zero());

    ProductClass t = tangent_chern(n, s, m);
    CHECK(t.coeff({}, {}, {}) == 1);
    ProductClass t1 = ProductClass::schubert(amb, {1}, {}, {}, n) + ProductClass::schubert(amb, {}, {1}, {}, s + 1) +
                      ProductClass::schubert(amb, {}, {}, {1}, n + m);
    CHECK(t.homogeneous(1) == t1);
    const BigInt cells = BigInt(amb->factor(0).size()) * amb->factor(1).size() * amb->factor(2).size();
    CHECK(integrate(t) == cells);
  }
  // Factorwise: c(T Gr(2,4)) has c_1 = 4 sigma_1 and Euler number 6.
  ProductClass t = tangent_chern(4, 3, 0);
  CHECK(t.coeff({1}, {}, {}) == 4);
  CHECK(t.coeff({2, 2}, {}, {}) == 6);
}

TEST_CASE("Euler numbers of Z") {
  const std::vector<std::pair<std::array<int, 3>, long long>> cases{
      {{3, 3, 1}, 6}, {{3, 4, 1}, 94}, {{4, 4, 1}, 1595}, {{5, 5, 1}, 46158}, {{6, 5, 1}, 593502}, {{3, 3, 0}, 33}};
  for (const auto& [t, e] : cases) {
    ZEuler z = euler_of_Z(t[0], t[1], t[2]);
    CHECK(z.euler == e);
    CHECK(z.dim_Z == 2 * (t[1] - t[2] - 1));
    CHECK(euler_of_Z_roots(t[0], t[1], t[2]) == e);
  }
  CHECK_THROWS(euler_of_Z(3, 6, 1));
}

TEST_CASE("Schubert and root routes agree across the smooth range") {
  for (int m = 0; m <= 2; ++m) {
    for (int s = m + 2; s <= 2 * m + 3; ++s) {
      for (int n = 3; n <= 6; ++n) {
        if ((n + m) * (s + 1) > 48) continue;
        CHECK(euler_of_Z(n, s, m).euler == euler_of_Z_roots(n, s, m));
      }
    }
  }
}

TEST_CASE("localization oracle") {
  for (auto [n, s, m] : std::vector<std::array<int, 3>>{{3, 3, 1}, {3, 3, 0}, {4, 4, 1}, {3, 4, 1}, {4, 2, 0}, {6, 5, 1}}) {
    const Rational bott = bott_euler_of_Z(n, s, m);
    CHECK(denominator(bott) == 1);
    CHECK(numerator(bott) == euler_of_Z(n, s, m).euler);
  }
}

TEST_CASE("K-root route on Gr(K, N)") {
  CHECK(k_root_euler_of_Z(4, 4, 1) == 1595);
  CHECK(k_root_euler_of_Z(3, 3, 1) == 6);
  CHECK(k_root_euler_of_Z(3, 4, 1) == 94);
}

TEST_CASE("associated triples share Z") {
  CHECK(euler_of_Z(4, 4, 1).euler == euler_of_Z(5, 3, 0).euler);
  CHECK(euler_of_Z(3, 3, 1).euler == euler_of_Z(4, 2, 0).euler);
}

TEST_CASE("Euler numbers of Z against Hilbert squares") {
  // Good range: e(Z) = e(Hilb^2 S) with e(S) from the complete intersection.
  for (auto [n, s, m] : std::vector<std::array<int, 3>>{{3, 3, 1}, {4, 4, 1}, {6, 5, 1}, {4, 5, 2}, {5, 3, 0}, {4, 3, 0}}) {
    REQUIRE(n > 2 * s - 2 * m - 3);
    const BigInt e_s = ci_euler_bidegree(s, n - 1, n + m);
    CHECK(euler_of_Z(n, s, m).euler == hilb2_euler_closed_form(e_s, s - m - 1));
  }
  CHECK(euler_of_Z(4, 5, 2).euler == 5994);
  // Boundary n = 2s-2m-3 with m = 1.
  for (int s : {4, 5}) {
    const int n = 2 * s - 5;
    const BigInt hilb = hilb2_euler_closed_form(ci_euler_bidegree(s, n - 1, n + 1), s - 2);
    CHECK(hilb - euler_of_Z(n, s, 1).euler == conjecture_delta(1, s));
  }
}
