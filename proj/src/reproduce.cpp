#include "degenloci/reproduce.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "degenloci/census.hpp"
#include "degenloci/correspondence.hpp"
#include "degenloci/hodge.hpp"
#include "degenloci/invariants.hpp"
#include "degenloci/linalg.hpp"
#include "degenloci/random.hpp"
#include "degenloci/schubert.hpp"

namespace degenloci {

namespace {

class Tally {
 public:
  explicit Tally(CheckResult& r) : r_(r) {}

  void expect(bool ok, const std::string& label) {
    ++r_.checks;
    if (!ok) {
      ++r_.failures;
      r_.lines.push_back("FAIL " + label);
    }
  }

  template <class T, class U>
  void equal(const std::string& label, const T& got, const U& want) {
    ++r_.checks;
    std::ostringstream os;
    os << label << " = " << got;
    if (got == want) {
      r_.lines.push_back(os.str());
    } else {
      ++r_.failures;
      os << " (expected " << want << ")";
      r_.lines.push_back("FAIL " + os.str());
    }
  }

  void note(const std::string& line) { r_.lines.push_back(line); }

 private:
  CheckResult& r_;
};

TripleParams triple(int n, int s, int m, const Field& f) {
  TripleParams t;
  t.n = n;
  t.s = s;
  t.m = m;
  t.field = &f;
  return t;
}

std::string triple_name(int n, int s, int m) {
  return "(" + std::to_string(n) + "," + std::to_string(s) + "," + std::to_string(m) + ")";
}

HodgePoly symmetric_pair(int p, int q, const BigInt& c) {
  HodgePoly h = HodgePoly::monomial(p, q, c);
  if (p != q) h = h + HodgePoly::monomial(q, p, c);
  return h;
}

// Threefold with h^{1,0} = h^{2,0} = 0 and h^{1,1} = 2.
HodgePoly threefold_epoly(const BigInt& h30, const BigInt& h21) {
  HodgePoly h = HodgePoly::constant(1) + HodgePoly::monomial(1, 1, 2) + HodgePoly::monomial(2, 2, 2) +
                HodgePoly::monomial(3, 3);
  return h - symmetric_pair(3, 0, h30) - symmetric_pair(2, 1, h21);
}

void formula_table(Tally& t) {
  GenusDegree c3 = genus_degree_curve(3), c2 = genus_degree_curve(2);
  t.equal("genus n=3", c3.genus, 3);
  t.equal("degree n=3", c3.degree, 6);
  t.equal("genus n=2", c2.genus, 0);
  t.equal("degree n=2", c2.degree, 3);
  t.equal("p_g n=4", geometric_genus_surface(4), 4);
  t.equal("e curve n=3", pragacz_euler_curve(3), -4);
  t.equal("e surface n=4", pragacz_euler_surface(4), 55);
  t.equal("e surface n=3", pragacz_euler_surface(3), 13);
  // Second route: closed forms and the complete-intersection model in P^s x P^{n-1}.
  t.expect(pragacz_euler_curve_closed(3) == -4, "closed-form curve n=3");
  t.expect(pragacz_euler_surface_closed(4) == 55, "closed-form surface n=4");
  t.expect(pragacz_euler_surface_closed(3) == 13, "closed-form surface n=3");
  t.expect(ci_euler_bidegree(3, 2, 4) == -4, "bidegree curve n=3");
  t.expect(ci_euler_bidegree(4, 3, 5) == 55, "bidegree surface n=4");
  t.expect(ci_euler_bidegree(4, 2, 4) == 13, "bidegree surface n=3");
  t.expect(BigInt(2 - 2 * c3.genus) == pragacz_euler_curve(3), "2 - 2g = e for n=3");
}

void hilbert_surface(Tally& t) {
  const BigInt e = pragacz_euler_surface(4), pg = geometric_genus_surface(4);
  HodgePoly s4 = HodgePoly::constant(1) + symmetric_pair(2, 0, pg) + HodgePoly::monomial(1, 1, e - 2 - 2 * pg) +
                 HodgePoly::monomial(2, 2);
  t.note("E(S) = " + s4.to_string());
  const std::vector<std::tuple<int, int, long long>> expected{
      {0, 0, 1},    {1, 1, 46}, {2, 0, 4},   {0, 2, 4},  {2, 2, 1097}, {1, 3, 184}, {3, 1, 184},
      {4, 0, 10},   {0, 4, 10}, {3, 3, 46},  {4, 2, 4},  {2, 4, 4},    {4, 4, 1}};
  HodgePoly want;
  for (const auto& [p, q, c] : expected) want.set(p, q, c);
  HodgePoly h = hilb2_epoly_surface(s4);
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; q <= 4; ++q) {
      t.expect(h.coeff(p, q) == want.coeff(p, q), "coefficient u^" + std::to_string(p) + " v^" + std::to_string(q));
    }
  }
  t.note("E(Hilb2) = " + h.to_string());
  t.equal("e(Hilb2)", h.euler(), 1595);
  t.expect(hilb2_euler_closed_form(e, 2) == 1595, "closed form");
}

void hilbert_threefolds(Tally& t) {
  struct Case {
    int n, s, m;
    long long h30, h21, hilb;
  };
  for (const Case& c : {Case{5, 5, 1, 5, 151, 46053}, Case{6, 5, 1, 29, 520, 593502}}) {
    HodgePoly e = threefold_epoly(c.h30, c.h21);
    const std::string name = triple_name(c.n, c.s, c.m);
    t.expect(e.euler() == ci_euler_bidegree(c.s, c.n - 1, c.n + c.m), "e(S) of " + name + " against the bidegree model");
    HodgePoly h = hilb2_epoly_threefold(e);
    t.equal("e(Hilb2 S" + name + ")", h.euler(), c.hilb);
    t.expect(h.symmetric(), "Hodge symmetry " + name);
    t.expect(hilb2_euler_closed_form(e.euler(), 3) == c.hilb, "closed form " + name);
  }
}

void schubert_engine(Tally& t) {
  struct Case {
    int n, s, m;
    long long want;
  };
  for (const Case& c : {Case{3, 3, 1, 6}, Case{3, 4, 1, 94}, Case{4, 4, 1, 1595}, Case{5, 5, 1, 46158},
                        Case{6, 5, 1, 593502}, Case{3, 3, 0, 33}}) {
    const std::string name = triple_name(c.n, c.s, c.m);
    BigInt e = euler_of_Z(c.n, c.s, c.m).euler;
    t.equal("e(Z" + name + ")", e, c.want);
    t.expect(euler_of_Z_roots(c.n, c.s, c.m) == e, "root route " + name);
  }
  // The cubic surface: six exceptional lines and fifteen strict transforms.
  const BigInt b = white_blowup_count(0);
  const BigInt hilb = hilb2_euler_closed_form(ci_euler_bidegree(3, 2, 3), 2);
  t.equal("e(Hilb2) - e(Z) for (3,3,0)", hilb - euler_of_Z(3, 3, 0).euler, b + b * (b - 1) / 2);
}

void conjecture_evidence(Tally& t) {
  for (auto [m, s] : {std::pair{1, 5}, std::pair{1, 4}}) {
    const int n = 2 * s - 2 * m - 3, d = s - m - 1;
    const BigInt e_s = ci_euler_bidegree(s, n - 1, n + m);
    const BigInt hilb = hilb2_euler_closed_form(e_s, d);
    const BigInt z = euler_of_Z(n, s, m).euler;
    const std::string name = "(m,s)=(" + std::to_string(m) + "," + std::to_string(s) + ")";
    t.note(name + ": e(S) = " + to_decimal(e_s) + ", e(Hilb2) = " + to_decimal(hilb) + ", e(Z) = " + to_decimal(z));
    t.equal("delta " + name, hilb - z, conjecture_delta(m, s));
  }
  t.expect(conjecture_delta(1, 5) == -105, "delta (1,5) = -105");
  t.expect(conjecture_delta(1, 4) == 10, "delta (1,4) = +10");
}

void counting_formulas(Tally& t) {
  t.equal("c(1,5)", special_count_c(1, 5), 105);
  t.equal("c(2,6)", special_count_c(2, 6), 196);
  t.equal("c(2,7)", special_count_c(2, 7), 2520);
  t.equal("blow-up m=0", white_blowup_count(0), 6);
  t.equal("blow-up m=1", white_blowup_count(1), 10);
  for (int m = 0; m <= 20; ++m) {
    t.expect(special_count_c(m, m + 3) == white_blowup_count(m), "coincidence m=" + std::to_string(m));
  }
  t.note("coincidence c(m, m+3) = binom(m+4, 2) for m = 0..20");
}

void roundtrip_check(Tally& t, const ReproduceOptions& o) {
  const Field& f = Field::prime(o.prime);
  int stream = 0;
  for (auto [n, s, m] : {std::tuple{3, 3, 1}, std::tuple{4, 4, 1}, std::tuple{6, 5, 1}}) {
    RoundTripReport r = run_roundtrip(triple(n, s, m, f), o.pairs, derive_seed(o.seed, 70 + stream++));
    const std::string name = triple_name(n, s, m);
    t.note(name + " over F_" + std::to_string(o.prime) + ": " + std::to_string(r.recovered) + "/" +
           std::to_string(r.pairs_tested) + " recovered, case a " + std::to_string(r.cases[0]) + ", sampler " +
           r.sampler);
    t.expect(r.pairs_tested >= o.pairs, name + " tested pairs");
    t.expect(r.degenerate_pairs == 0, name + " degenerate pairs");
    t.expect(r.cases[0] == r.pairs_tested, name + " all case a");
    t.expect(r.recovered == r.pairs_tested, name + " all recovered");
  }
}

void case_c_check(Tally& t, const ReproduceOptions& o) {
  TangentReport r = run_tangent_points(triple(4, 4, 1, Field::prime(o.prime)), o.tangent_points,
                                       derive_seed(o.seed, 80));
  t.note("(4,4,1): built " + std::to_string(r.built) + ", case c " + std::to_string(r.case_c) + ", witness " +
         std::to_string(r.witness_ok) + ", skipped directions " + std::to_string(r.skipped));
  t.expect(r.built >= 20, "at least 20 tangent points");
  t.expect(r.case_c == r.built, "all case c");
  t.expect(r.witness_ok == r.built, "all witnesses");
}

void census_check(Tally& t, const ReproduceOptions& o) {
  const Field& f = Field::prime(5);
  for (int m : {0, 1}) {
    SplitWhiteInstance w = split_white_instance(f, m, derive_seed(o.seed, 90 + m));
    std::vector<std::uint64_t> counts;
    std::string row;
    for (int k = 1; k <= 4; ++k) {
      counts.push_back(empirical_stratum_census(w.matrix, k).rank_deficient);
      row += (k > 1 ? ", " : "") + std::to_string(counts.back());
    }
    const std::string name = triple_name(3, m + 3, m);
    t.note(name + " over F_5^k, k = 1..4: " + row);
    auto v = stabilized_value(counts);
    t.equal("stable count " + name, v ? static_cast<long long>(*v) : -1LL,
            static_cast<long long>(white_blowup_count(m)));
  }
}

// Property suites.

HodgePoly random_hodge(Rng& rng) {
  HodgePoly h;
  const int terms = static_cast<int>(rng.between(1, 4));
  for (int i = 0; i < terms; ++i) {
    const int p = static_cast<int>(rng.between(0, 2)), q = static_cast<int>(rng.between(0, 2));
    h.set(p, q, h.coeff(p, q) + rng.between(-6, 6));
  }
  return h;
}

std::vector<BigInt> lr_product(const Grassmannian& g, const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  std::vector<BigInt> out(g.size(), 0);
  for (int i = 0; i < g.size(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < g.size(); ++j) {
      if (y[j] == 0) continue;
      for (const auto& [k, c] : g.product(i, j)) out[k] += x[i] * y[j] * c;
    }
  }
  return out;
}

std::vector<BigInt> random_class(Rng& rng, const Grassmannian& g) {
  std::vector<BigInt> x(g.size(), 0);
  for (int i = 0; i < 3; ++i) x[rng.below(g.size())] += rng.between(-4, 4);
  return x;
}

DenseMatrix random_low_rank(Rng& rng, const Field& f) {
  const std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6), inner = 1 + rng.below(6);
  return rng.matrix(f, rows, inner) * rng.matrix(f, inner, cols);
}

void property_suites(Tally& t, const ReproduceOptions& o) {
  const std::uint64_t per = (o.property_checks + 4) / 5;
  Rng rng(derive_seed(o.seed, 100));
  const Field& f = Field::prime(o.prime);
  std::map<std::string, std::uint64_t> counts;
  auto run = [&](const std::string& suite, const std::function<void()>& body) {
    while (counts[suite] < per) body();
  };
  auto check = [&](const std::string& suite, bool ok, const std::string& label) {
    ++counts[suite];
    t.expect(ok, suite + ": " + label);
  };

  LinearFormMatrix w = generate_instance(triple(3, 3, 1, f), derive_seed(o.seed, 101));
  run("omega trilinearity", [&] {
    Vec a = rng.vector(f, 3), a2 = rng.vector(f, 3), u = rng.vector(f, 4), u2 = rng.vector(f, 4);
    Vec b = rng.vector(f, 4), b2 = rng.vector(f, 4);
    Scalar c = rng.element(f);
    check("omega trilinearity", w.omega(a + c * a2, u, b) == w.omega(a, u, b) + c * w.omega(a2, u, b), "first slot");
    check("omega trilinearity", w.omega(a, u + c * u2, b) == w.omega(a, u, b) + c * w.omega(a, u2, b), "second slot");
    check("omega trilinearity", w.omega(a, u, b + c * b2) == w.omega(a, u, b) + c * w.omega(a, u, b2), "third slot");
  });

  run("power structure additivity", [&] {
    HodgePoly x = random_hodge(rng), y = random_hodge(rng);
    check("power structure additivity", power_exp(x + y) == power_exp(x) * power_exp(y), "exp(f+g)");
  });

  const Grassmannian g(3, 7);
  run("LR associativity and duality", [&] {
    auto x = random_class(rng, g), y = random_class(rng, g), z = random_class(rng, g);
    check("LR associativity and duality", lr_product(g, lr_product(g, x, y), z) == lr_product(g, x, lr_product(g, y, z)),
          "associativity");
    check("LR associativity and duality", lr_product(g, x, y) == lr_product(g, y, x), "commutativity");
    const int i = static_cast<int>(rng.below(g.size()));
    const int j = static_cast<int>(rng.below(g.size()));
    if (g.weight_of(i) + g.weight_of(j) == g.dim()) {
      long long top = 0;
      for (const auto& [k, c] : g.product(i, j)) {
        if (k == g.point()) top = c;
      }
      check("LR associativity and duality", top == (j == g.complement(i) ? 1 : 0), "duality pairing");
    }
  });

  run("kernel exactness", [&] {
    DenseMatrix a = random_low_rank(rng, f);
    RankKernel rk = rank_and_kernel(a);
    check("kernel exactness", rk.rank + rk.kernel.size() == a.cols(), "rank-nullity");
    bool zero = true;
    for (const auto& v : rk.kernel) zero = zero && is_zero(a * v);
    check("kernel exactness", zero, "A k = 0");
    if (!rk.kernel.empty()) {
      check("kernel exactness", rank(DenseMatrix::from_rows(f, rk.kernel, a.cols())) == rk.kernel.size(),
            "independent kernel");
    }
    std::vector<Vec> left = left_kernel(a);
    bool left_zero = true;
    for (const auto& v : left) left_zero = left_zero && is_zero(a.transpose() * v);
    check("kernel exactness", left_zero && left.size() + rk.rank == a.rows(), "left kernel");
  });

  run("canonical form idempotence", [&] {
    DenseMatrix a = random_low_rank(rng, f);
    Echelon e = rref(a);
    check("canonical form idempotence", rref(e.reduced).reduced == e.reduced, "rref");
    Subspace s = Subspace::span(f, a.cols(), a.row_vectors());
    check("canonical form idempotence", Subspace::span(f, a.cols(), s.basis()) == s, "subspace basis");
    Vec v = rng.nonzero_vector(f, a.cols());
    ProjPoint p = ProjPoint::from(v);
    check("canonical form idempotence",
          ProjPoint::from(p.coords()) == p && ProjPoint::from(rng.nonzero_element(f) * v) == p, "projective point");
    Partition part;
    for (int i = 0; i < 4; ++i) part.push_back(static_cast<int>(rng.between(0, 5)));
    std::sort(part.rbegin(), part.rend());
    check("canonical form idempotence", normalized(normalized(part)) == normalized(part), "partition");
  });

  std::uint64_t total = 0;
  for (const auto& [suite, n] : counts) {
    t.note(suite + ": " + std::to_string(n) + " checks");
    total += n;
  }
  t.note("total randomized checks: " + std::to_string(total));
  t.expect(total >= o.property_checks, "randomized check count");
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> table{
      {1, "formula-table", "invariants"},       {2, "hilb2-surface", "invariants"},
      {3, "hilb2-threefolds", "invariants"},    {4, "schubert-engine", "schubert"},
      {5, "conjecture-evidence", "schubert"},   {6, "counting-formulas", "census"},
      {7, "roundtrip", "correspondence"},       {8, "case-c", "correspondence"},
      {9, "census", "census"},                  {10, "properties", "properties"}};
  return table;
}

std::vector<int> select_criteria(const std::vector<std::string>& only) {
  std::vector<int> ids;
  for (const auto& c : criteria()) {
    if (only.empty()) ids.push_back(c.id);
  }
  if (only.empty()) return ids;
  std::vector<bool> chosen(criteria().size() + 1, false);
  for (const auto& token : only) {
    bool matched = false;
    for (const auto& c : criteria()) {
      if (token == std::to_string(c.id) || token == c.name || token == c.group) {
        chosen[c.id] = true;
        matched = true;
      }
    }
    if (!matched) throw std::invalid_argument("unknown check selector: " + token);
  }
  for (const auto& c : criteria()) {
    if (chosen[c.id]) ids.push_back(c.id);
  }
  return ids;
}

CheckResult run_criterion(int id, const ReproduceOptions& options) {
  auto it = std::find_if(criteria().begin(), criteria().end(), [&](const CriterionInfo& c) { return c.id == id; });
  if (it == criteria().end()) throw std::invalid_argument("unknown criterion " + std::to_string(id));
  CheckResult r;
  r.id = id;
  r.name = it->name;
  r.group = it->group;
  Tally t(r);
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: formula_table(t); break;
      case 2: hilbert_surface(t); break;
      case 3: hilbert_threefolds(t); break;
      case 4: schubert_engine(t); break;
      case 5: conjecture_evidence(t); break;
      case 6: counting_formulas(t); break;
      case 7: roundtrip_check(t, options); break;
      case 8: case_c_check(t, options); break;
      case 9: census_check(t, options); break;
      case 10: property_suites(t, options); break;
    }
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = r.failures == 0 && r.checks > 0;
  return r;
}

std::vector<CheckResult> run_reproduction(const ReproduceOptions& options) {
  const std::vector<int> ids = select_criteria(options.only);
  std::vector<CheckResult> results(ids.size());
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(ids.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) results[i] = run_criterion(ids[i], options);
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

RoundTripReport run_roundtrip(const TripleParams& t, std::size_t pairs, std::uint64_t seed, std::uint64_t budget) {
  RoundTripReport r;
  r.params = t;
  r.seed = seed;
  r.pairs_requested = pairs;
  LinearFormMatrix m = generate_instance(t, seed);
  SampleOptions so;
  so.budget = budget;
  SampleStats stats;
  std::size_t count = 2;
  while (count * (count - 1) / 2 < pairs) ++count;
  auto pts = sample_points_on_S(m, count, derive_seed(seed, 1), so, &stats);
  r.sampler = stats.strategy;
  for (std::size_t i = 0; i < pts.size() && r.pairs_tested < pairs; ++i) {
    for (std::size_t j = i + 1; j < pts.size() && r.pairs_tested < pairs; ++j) {
      ++r.pairs_tested;
      std::optional<ZPoint> z;
      try {
        z = build_point(m, pts[i], pts[j]);
      } catch (const DegeneratePair&) {
        ++r.degenerate_pairs;
        continue;
      }
      Classification c;
      try {
        c = classify(m, *z);
      } catch (const DegenerateInstance&) {
        ++r.cases[static_cast<int>(ZCase::kNotInZ)];
        continue;
      }
      ++r.cases[static_cast<int>(c.label)];
      if (c.label != ZCase::kA) continue;
      std::array<SPoint, 2> expected{std::min(pts[i], pts[j]), std::max(pts[i], pts[j])};
      if (recover_pair(m, *z) == expected) ++r.recovered;
    }
  }
  return r;
}

TangentReport run_tangent_points(const TripleParams& t, std::size_t count, std::uint64_t seed) {
  TangentReport r;
  LinearFormMatrix m = generate_instance(t, seed);
  const Field& f = m.field();
  const std::size_t dim = static_cast<std::size_t>(t.vars());
  Rng rng(derive_seed(seed, 2));
  std::uint64_t round = 0;
  while (r.built < count) {
    if (round > 8) break;
    auto pts = sample_points_on_S(m, count, derive_seed(seed, 10 + round++));
    for (const auto& p : pts) {
      if (r.built >= count) break;
      Subspace tan = tangent_space_at(m, p);
      Vec dir = zero_vector(f, dim);
      for (const auto& b : tan.basis()) dir = dir + rng.element(f) * b;
      if (Subspace::span(f, dim, {dir, p.v.coords()}).dim() != 2) {
        ++r.skipped;
        continue;
      }
      std::optional<ZPoint> z;
      try {
        z = tangent_z_point(m, p, dir);
      } catch (const DegeneratePair&) {
        ++r.skipped;
        continue;
      }
      ++r.built;
      Classification c = classify(m, *z);
      if (c.label != ZCase::kC) continue;
      ++r.case_c;
      if (c.witnesses.size() == 1 && c.witnesses[0] == p) ++r.witness_ok;
    }
  }
  return r;
}

}  // namespace degenloci
