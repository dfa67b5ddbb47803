#include <doctest.h>

#include <set>

#include "degenloci/instance.hpp"
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

// All points of P^{k-1}(F_p) in affine-chart order.
std::vector<Vec> projective_points(const Field& f, int k) {
  std::vector<Vec> out;
  const std::uint64_t p = f.characteristic();
  for (int lead = 0; lead < k; ++lead) {
    const int free = k - lead - 1;
    std::uint64_t total = 1;
    for (int i = 0; i < free; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Vec v = zero_vector(f, k);
      v[lead] = Scalar::one(f);
      std::uint64_t r = idx;
      for (int i = lead + 1; i < k; ++i) {
        v[i] = Scalar::from_int(f, static_cast<long long>(r % p));
        r /= p;
      }
      out.push_back(v);
    }
  }
  return out;
}

// Points of S by direct rank computation of M_v.
std::set<ProjPoint> exhaustive_S(const LinearFormMatrix& m) {
  std::set<ProjPoint> out;
  for (const auto& v : projective_points(m.field(), m.params().vars())) {
    if (rank(m.evaluate_at(v)) == static_cast<std::size_t>(m.params().n - 1)) out.insert(ProjPoint::from(v));
  }
  return out;
}

}  // namespace

TEST_CASE("parameter ranges") {
  const Field& q = Field::rationals();
  RangeReport r = validate_params(triple(4, 4, 1, q));
  CHECK(r.in_smooth_range);
  CHECK(r.good_range);
  CHECK_FALSE(r.is_white_case);
  CHECK_FALSE(r.has_type_b_lines);

  RangeReport w = validate_params(triple(3, 4, 1, q));
  CHECK(w.is_white_case);
  CHECK(w.has_type_b_lines);
  CHECK_FALSE(w.good_range);

  RangeReport big = validate_params(triple(4, 6, 1, q));
  CHECK(big.has_type_b_lines);
  CHECK(big.has_2dim_fibres);
  CHECK(validate_params(triple(7, 9, 2, q)).has_2dim_fibres);
  CHECK_FALSE(validate_params(triple(6, 8, 2, q)).has_2dim_fibres);
  CHECK_FALSE(validate_params(triple(3, 5, 2, q)).has_2dim_fibres);

  CHECK_THROWS_AS(validate_params(triple(2, 4, 1, q)), std::invalid_argument);
  CHECK_THROWS_AS(validate_params(triple(4, 1, 1, q)), std::invalid_argument);

  TripleParams a = associated_triple(triple(4, 4, 1, q));
  CHECK(a.n == 5);
  CHECK(a.s == 3);
  CHECK(a.m == 0);
  TripleParams b = associated_triple(triple(6, 5, 1, q));
  CHECK(b.n == 6);
  CHECK(b.s == 5);
  CHECK(b.m == 1);
  CHECK_THROWS_AS(associated_triple(triple(3, 4, 1, q)), std::domain_error);
}

TEST_CASE("projective points are normalized") {
  const Field& f = Field::prime(7);
  Vec v = vector_from_ints(f, {0, 3, 5});
  ProjPoint p = ProjPoint::from(v);
  CHECK(p.coords()[0].is_zero());
  CHECK(p.coords()[1].is_one());
  CHECK(p == ProjPoint::from(Scalar::from_int(f, 4) * v));
  CHECK_THROWS(ProjPoint::from(zero_vector(f, 3)));
  CHECK(p.to_string() == "[0:1:4]");
}

TEST_CASE("matrix views of the tri-tensor agree") {
  int checks = 0;
  for (const Field* f : {&Field::rationals(), &Field::prime(101)}) {
    LinearFormMatrix m = generate_instance(triple(4, 4, 1, *f), 7);
    Rng rng(9);
    for (int trial = 0; trial < 500; ++trial) {
      Vec a = rng.vector(*f, 4), u = rng.vector(*f, 5), b = rng.vector(*f, 5);
      CHECK(m.dual_matrix(a) * u == m.evaluate_at(u).transpose() * a);
      CHECK(m.contract(a, u) == m.dual_matrix(a) * u);
      CHECK(m.omega(a, u, b) == dot(a, m.evaluate_at(u) * b));
      checks += 3;
    }
  }
  CHECK(checks == 3000);
}

TEST_CASE("generation is deterministic and json round-trips") {
  const Field& f = Field::prime(101);
  LinearFormMatrix a = generate_instance(triple(4, 4, 1, f), 42);
  LinearFormMatrix b = generate_instance(triple(4, 4, 1, f), 42);
  LinearFormMatrix c = generate_instance(triple(4, 4, 1, f), 43);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  std::string text = instance_to_json(a);
  CHECK(text.rfind("{\"format\":\"degenloci-instance-v1\",\"p\":101,\"ext\":1,\"n\":4,\"s\":4,\"m\":1,\"seed\":42", 0) == 0);
  LinearFormMatrix back = instance_from_json(text);
  CHECK(back == a);
  CHECK(back.seed() == 42);
  CHECK(instance_to_json(back) == text);

  LinearFormMatrix q = generate_instance(triple(3, 4, 1, Field::rationals()), 5);
  CHECK(instance_from_json(instance_to_json(q)) == q);
  for (const auto& x : q.coeffs()) {
    CHECK(x.rational() >= -9);
    CHECK(x.rational() <= 9);
  }
  CHECK_THROWS(instance_from_json("{\"format\":\"other\"}"));
  CHECK_THROWS(instance_from_json("not json"));
}

TEST_CASE("rejection sampling finds exactly the points of S") {
  const Field& f = Field::prime(5);
  LinearFormMatrix m = generate_instance(triple(4, 4, 1, f), 3);
  std::set<ProjPoint> truth = exhaustive_S(m);
  REQUIRE(truth.size() > 5);
  SampleStats stats;
  auto pts = sample_points_on_S(m, truth.size(), 11, {}, &stats);
  CHECK(stats.strategy == "rejection");
  std::set<ProjPoint> found;
  for (const auto& p : pts) {
    found.insert(p.v);
    CHECK(is_zero(m.evaluate_at(p.v.coords()).transpose() * p.alpha.coords()));
  }
  CHECK(found.size() == pts.size());
  CHECK(found == truth);
}

TEST_CASE("sampling is reproducible and lands on S") {
  const Field& f = Field::prime(101);
  LinearFormMatrix m = generate_instance(triple(4, 4, 1, f), 1);
  auto a = sample_points_on_S(m, 30, 77);
  auto b = sample_points_on_S(m, 30, 77);
  CHECK(a == b);
  for (const auto& p : a) {
    SMembership mem = s_membership(m, p.v.coords());
    CHECK(mem.status == Membership::kOnS);
    CHECK(*mem.alpha == p.alpha);
  }
}

TEST_CASE("pencil sampling in codimension one and two") {
  const Field& f = Field::prime(32003);
  for (auto t : {triple(4, 4, 1, f), triple(6, 5, 1, f)}) {
    LinearFormMatrix m = generate_instance(t, 5);
    SampleOptions opt;
    opt.strategy = SampleOptions::Strategy::kPencil;
    SampleStats stats;
    auto pts = sample_points_on_S(m, 6, 19, opt, &stats);
    CHECK(stats.strategy == "pencil");
    CHECK(pts.size() == 6);
    std::set<ProjPoint> distinct;
    for (const auto& p : pts) {
      distinct.insert(p.v);
      CHECK(rank(m.evaluate_at(p.v.coords())) == static_cast<std::size_t>(t.n - 1));
      CHECK(is_zero(m.dual_matrix(p.alpha.coords()) * p.v.coords()));
    }
    CHECK(distinct.size() == pts.size());
  }
}

TEST_CASE("pencil and rejection agree on a small field") {
  const Field& f = Field::prime(7);
  LinearFormMatrix m = generate_instance(triple(4, 4, 1, f), 8);
  std::set<ProjPoint> truth = exhaustive_S(m);
  SampleOptions opt;
  opt.strategy = SampleOptions::Strategy::kPencil;
  auto pts = sample_points_on_S(m, 4, 3, opt);
  for (const auto& p : pts) CHECK(truth.count(p.v) == 1);
}

TEST_CASE("budget exhaustion is reported") {
  const Field& f = Field::prime(32003);
  LinearFormMatrix m = generate_instance(triple(6, 5, 1, f), 5);
  SampleOptions opt;
  opt.strategy = SampleOptions::Strategy::kRejection;
  opt.budget = 2000;
  CHECK_THROWS_AS(sample_points_on_S(m, 5, 1, opt), BudgetExhausted);
  CHECK_THROWS_AS(sample_points_on_S(generate_instance(triple(4, 4, 1, Field::rationals()), 1), 1, 1),
                  std::invalid_argument);
}

TEST_CASE("split White instances have rational special points") {
  for (int mm : {0, 1}) {
    const Field& f = Field::prime(13);
    SplitWhiteInstance w = split_white_instance(f, mm, 21);
    const TripleParams& t = w.matrix.params();
    CHECK(t.n == 3);
    CHECK(t.s == mm + 3);
    CHECK(validate_params(t).is_white_case);
    CHECK(w.special_points.size() == static_cast<std::size_t>((mm + 4) * (mm + 3) / 2));
    // Exhaustive oracle over P^2(F_13).
    std::set<ProjPoint> special;
    for (const auto& z : projective_points(f, 3)) {
      const std::size_t r = rank(w.matrix.dual_matrix(z));
      CHECK(r >= static_cast<std::size_t>(t.s - 1));
      if (r < static_cast<std::size_t>(t.s)) special.insert(ProjPoint::from(z));
    }
    CHECK(special == std::set<ProjPoint>(w.special_points.begin(), w.special_points.end()));
  }
}

TEST_CASE("genericity probe finds the special points") {
  const Field& f = Field::prime(5);
  SplitWhiteInstance w = split_white_instance(f, 0, 4);
  ProbeReport r = genericity_probe(w.matrix, 3000, 8);
  CHECK(r.trials >= 3000);
  CHECK(r.rank_deficient_z > 0);
  for (const auto& z : r.deficient_z) {
    CHECK(std::find(w.special_points.begin(), w.special_points.end(), z) != w.special_points.end());
  }
  ProbeReport g = genericity_probe(generate_instance(triple(4, 4, 1, Field::prime(101)), 2), 2000, 3);
  CHECK(g.corank_events == 0);
  CHECK(g.rank_deficient_z == 0);
}

TEST_CASE("doctored instances") {
  const Field& f = Field::prime(101);
  LinearFormMatrix m = generate_instance(triple(4, 4, 1, f), 12);
  LinearFormMatrix rep = with_repeated_row(m, 0, 1);
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    CHECK(s_membership(rep, rng.nonzero_vector(f, 5)).status != Membership::kNotOnS);
  }
  LinearFormMatrix scroll = with_scroll_line(m);
  for (int trial = 0; trial < 50; ++trial) {
    Vec v = zero_vector(f, 5);
    v[0] = rng.element(f);
    v[1] = rng.element(f);
    if (is_zero(v)) continue;
    SMembership mem = s_membership(scroll, v);
    REQUIRE(mem.status == Membership::kOnS);
    // alpha_v = (v1, v0, 0, 0): the line maps onto the line <e0, e1>.
    CHECK(mem.alpha->coords()[2].is_zero());
    CHECK(mem.alpha->coords()[3].is_zero());
  }
}
