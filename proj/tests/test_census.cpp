#include <doctest.h>

#include <set>

#include "degenloci/census.hpp"
#include "degenloci/random.hpp"

using namespace degenloci;

namespace {

TripleParams triple(int n, int s, int m, const Field& f) {
  TripleParams t;
  t.n = n;
  t.s = s;
  t.m = m;
  t.field = &f;
  return t;
}

}  // namespace

TEST_CASE("codimension of rank strata") {
  for (int n = 3; n <= 6; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (int s = m + 2; s <= 2 * m + 3; ++s) {
        if (s > n + m) continue;
        CHECK(codim_rank_stratum(n, s, m, s) == n + m - s);
        CHECK(codim_rank_stratum(n, s, m, s - 1) == 2 * (n + m - s + 1));
        if (s >= 2) CHECK(codim_rank_stratum(n, s, m, s - 2) == 3 * (n + m - s + 2));
        for (int k = 1; k <= std::min(n + m, s + 1); ++k) {
          CHECK(codim_rank_stratum(n, s, m, k - 1) > codim_rank_stratum(n, s, m, k));
        }
      }
    }
  }
  CHECK_THROWS(codim_rank_stratum(3, 3, 0, 5));
}

TEST_CASE("special line counts") {
  CHECK(special_count_c(1, 5) == 105);
  CHECK(special_count_c(2, 6) == 196);
  CHECK(special_count_c(2, 7) == 2520);
  CHECK(white_blowup_count(0) == 6);
  CHECK(white_blowup_count(1) == 10);
  CHECK(white_blowup_count(2) == 15);
  for (int m = 0; m <= 20; ++m) CHECK(special_count_c(m, m + 3) == white_blowup_count(m));
  CHECK_THROWS(special_count_c(1, 3));
  CHECK(conjecture_delta(1, 5) == -105);
  CHECK(conjecture_delta(1, 4) == 10);
  CHECK(conjecture_delta(2, 6) == -196);
  CHECK_THROWS(conjecture_delta(1, 6));
}

TEST_CASE("projective point enumeration") {
  const Field& f = Field::extension(3, 2);
  CHECK(projective_point_count(f, 3) == 91);
  std::set<ProjPoint> seen;
  for (int i = 0; i < 91; ++i) seen.insert(ProjPoint::from(projective_point(f, 3, i)));
  CHECK(seen.size() == 91);
  CHECK(projective_point(f, 3, 0)[0].is_one());
  CHECK(projective_point(f, 3, 90)[2].is_one());
  CHECK_THROWS(projective_point(f, 3, 91));
}

TEST_CASE("exhaustive census matches a direct rank oracle") {
  for (std::uint64_t p : {5ULL, 7ULL}) {
    const Field& f = Field::prime(p);
    for (auto t : {triple(4, 4, 1, f), triple(3, 3, 0, f), triple(3, 4, 1, f)}) {
      LinearFormMatrix m = generate_instance(t, 31);
      for (int ext : {1, 2}) {
        if (ext == 2 && t.n == 4) continue;
        StratumReport r = empirical_stratum_census(m, ext);
        const Field& g = Field::extension(p, ext);
        LinearFormMatrix mg = ext == 1 ? m : m.over(g);
        const BigInt total = projective_point_count(g, t.rows());
        std::vector<std::uint64_t> expected(t.vars() + 1, 0);
        for (BigInt i = 0; i < total; ++i) ++expected[rank(mg.dual_matrix(projective_point(g, t.rows(), i)))];
        CHECK(r.counts == expected);
        std::uint64_t sum = 0;
        for (auto c : r.counts) sum += c;
        CHECK(BigInt(sum) == total);
        CHECK(r.examined == sum);
      }
    }
  }
}

TEST_CASE("worker partitions merge to the same report") {
  const Field& f = Field::prime(11);
  SplitWhiteInstance w = split_white_instance(f, 1, 3);
  CensusOptions one, four;
  one.workers = 1;
  four.workers = 4;
  StratumReport a = empirical_stratum_census(w.matrix, 2, one);
  StratumReport b = empirical_stratum_census(w.matrix, 2, four);
  CHECK(a.counts == b.counts);
  CHECK(a.deficient_points == b.deficient_points);
}

TEST_CASE("split White instances stabilize at the blow-up count") {
  const Field& f = Field::prime(5);
  SplitWhiteInstance cubic = split_white_instance(f, 0, 1);
  std::vector<std::uint64_t> counts;
  for (int k = 1; k <= 3; ++k) counts.push_back(empirical_stratum_census(cubic.matrix, k).rank_deficient);
  CHECK(counts == std::vector<std::uint64_t>{6, 6, 6});
  CHECK(stabilized_value(counts) == 6);

  StratumReport r = empirical_stratum_census(cubic.matrix, 1);
  std::set<ProjPoint> found(r.deficient_points.begin(), r.deficient_points.end());
  CHECK(found == std::set<ProjPoint>(cubic.special_points.begin(), cubic.special_points.end()));
}

TEST_CASE("split White instances reject special configurations") {
  // Six points on a conic would make every point of the plane rank-deficient.
  const Field& f = Field::prime(5);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SplitWhiteInstance w = split_white_instance(f, 0, derive_seed(seed, 90));
    CHECK(empirical_stratum_census(w.matrix, 1).rank_deficient == 6);
  }
}

TEST_CASE("good range instances have no rank-deficient points") {
  LinearFormMatrix m = generate_instance(triple(4, 4, 1, Field::prime(31)), 5);
  StratumReport r = empirical_stratum_census(m, 1);
  CHECK(r.rank_deficient == 0);
  CHECK(r.examined == 31 * 31 * 31 + 31 * 31 + 31 + 1);
}

TEST_CASE("sampled census and budgets") {
  const Field& f = Field::prime(101);
  LinearFormMatrix m = generate_instance(triple(4, 4, 1, f), 5);
  CensusOptions opt;
  opt.mode = CensusOptions::Mode::kSampled;
  opt.samples = 2000;
  StratumReport r = empirical_stratum_census(m, 1, opt);
  CHECK(r.mode == "sampled");
  CHECK(r.examined == 2000);
  CHECK(r.counts[5] + r.counts[4] == 2000);
  CensusOptions tight;
  tight.budget = 1000;
  CHECK_THROWS_AS(empirical_stratum_census(m, 1, tight), BudgetExhausted);
  CHECK_FALSE(stabilized_value({3, 6}).has_value());
  CHECK(stabilized_value({3, 6, 6}) == 6);
}
