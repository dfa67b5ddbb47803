#include <doctest.h>

#include <set>

#include "degenloci/correspondence.hpp"
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

// Independent oracle: omega summed over the coefficient array for every
// basis triple.
bool omega_vanishes(const LinearFormMatrix& m, const ZPoint& p) {
  const TripleParams& t = m.params();
  for (const auto& a : p.rho1.basis()) {
    for (const auto& u : p.rho2.basis()) {
      for (const auto& b : p.rho3.basis()) {
        Scalar acc = Scalar::zero(m.field());
        for (int i = 0; i < t.rows(); ++i) {
          for (int j = 0; j < t.cols(); ++j) {
            for (int l = 0; l < t.vars(); ++l) acc += a[i] * m.coeff(i, j, l) * u[l] * b[j];
          }
        }
        if (!acc.is_zero()) return false;
      }
    }
  }
  return true;
}

Subspace random_subspace(Rng& rng, const Field& f, std::size_t ambient, std::size_t dim) {
  while (true) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < dim; ++i) gens.push_back(rng.vector(f, ambient));
    Subspace s = Subspace::span(f, ambient, gens);
    if (s.dim() == dim) return s;
  }
}

}  // namespace

TEST_CASE("psi is the kernel direction and is homogeneous") {
  const Field& f = Field::prime(101);
  LinearFormMatrix m = generate_instance(triple(4, 4, 1, f), 3);
  auto pts = sample_points_on_S(m, 40, 5);
  for (const auto& p : pts) {
    SPoint q = psi(m, p.v.coords());
    CHECK(q == p);
    CHECK(is_zero(m.evaluate_at(q.v.coords()).transpose() * q.alpha.coords()));
    CHECK(psi(m, Scalar::from_int(f, 17) * p.v.coords()) == q);
  }
  Rng rng(1);
  Vec off = rng.nonzero_vector(f, 5);
  if (s_membership(m, off).status == Membership::kNotOnS) CHECK_THROWS_AS(psi(m, off), std::invalid_argument);
  CHECK_THROWS_AS(psi(with_repeated_row(with_repeated_row(m, 0, 1), 0, 2), pts[0].v.coords()), DegenerateInstance);
}

TEST_CASE("psi is injective on sampled points in the good range") {
  const Field& f = Field::prime(32003);
  LinearFormMatrix m = generate_instance(triple(4, 4, 1, f), 9);
  auto pts = sample_points_on_S(m, 200, 10);
  std::set<ProjPoint> images;
  for (const auto& p : pts) images.insert(p.alpha);
  CHECK(images.size() == 200);
}

TEST_CASE("omega is trilinear and matches its basis coefficients") {
  const Field& f = Field::prime(32003);
  LinearFormMatrix m = generate_instance(triple(3, 3, 1, f), 4);
  const TripleParams& t = m.params();
  for (int i = 0; i < t.rows(); ++i) {
    for (int j = 0; j < t.cols(); ++j) {
      for (int l = 0; l < t.vars(); ++l) {
        CHECK(m.omega(unit_vector(f, t.rows(), i), unit_vector(f, t.vars(), l), unit_vector(f, t.cols(), j)) ==
              m.coeff(i, j, l));
      }
    }
  }
  Rng rng(2);
  int checks = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Vec a = rng.vector(f, 3), a2 = rng.vector(f, 3), u = rng.vector(f, 4), u2 = rng.vector(f, 4);
    Vec b = rng.vector(f, 4), b2 = rng.vector(f, 4);
    Scalar c = rng.element(f);
    CHECK(m.omega(a + c * a2, u, b) == m.omega(a, u, b) + c * m.omega(a2, u, b));
    CHECK(m.omega(a, u + c * u2, b) == m.omega(a, u, b) + c * m.omega(a, u2, b));
    CHECK(m.omega(a, u, b + c * b2) == m.omega(a, u, b) + c * m.omega(a, u, b2));
    checks += 3;
  }
  CHECK(checks == 3000);
}

TEST_CASE("built points lie in Z and round-trip") {
  for (auto t : {triple(3, 3, 1, Field::prime(32003)), triple(4, 4, 1, Field::prime(32003))}) {
    LinearFormMatrix m = generate_instance(t, 21);
    auto pts = sample_points_on_S(m, 16, 22);
    int built = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        ZPoint z = build_point(m, pts[i], pts[j]);
        CHECK(z == build_point(m, pts[j], pts[i]));
        CHECK(z_membership(m, z));
        CHECK(omega_vanishes(m, z));
        CHECK(w_space(m, z.rho1, z.rho2) == pi_plane(m, pts[i], pts[j]));
        Classification c = classify(m, z);
        CHECK(c.label == ZCase::kA);
        auto pair = recover_pair(m, z);
        std::array<SPoint, 2> expected{std::min(pts[i], pts[j]), std::max(pts[i], pts[j])};
        CHECK(pair == expected);
        ++built;
      }
    }
    CHECK(built == 120);
  }
}

TEST_CASE("build_point ignores representative scaling") {
  const Field& f = Field::prime(101);
  LinearFormMatrix m = generate_instance(triple(4, 4, 1, f), 6);
  auto pts = sample_points_on_S(m, 2, 7);
  ZPoint z = build_point(m, pts[0], pts[1]);
  SPoint p2 = psi(m, Scalar::from_int(f, 33) * pts[0].v.coords());
  CHECK(build_point(m, p2, pts[1]) == z);
  CHECK_THROWS_AS(build_point(m, pts[0], pts[0]), std::invalid_argument);
  CHECK(zpoint_from_json(f, zpoint_to_json(z)) == z);
}

TEST_CASE("random Z-points are rejected and perturbations leave Z") {
  const Field& f = Field::prime(32003);
  LinearFormMatrix m = generate_instance(triple(4, 4, 1, f), 8);
  Rng rng(3);
  int outside = 0;
  for (int trial = 0; trial < 200; ++trial) {
    ZPoint z{random_subspace(rng, f, 4, 2), random_subspace(rng, f, 5, 2), random_subspace(rng, f, 5, 3)};
    outside += !z_membership(m, z);
    CHECK(classify(m, z).label == (z_membership(m, z) ? classify(m, z).label : ZCase::kNotInZ));
  }
  CHECK(outside == 200);
  auto pts = sample_points_on_S(m, 10, 4);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    ZPoint z = build_point(m, pts[i], pts[i + 1]);
    std::vector<Vec> basis = z.rho3.basis();
    Subspace pi = pi_plane(m, pts[i], pts[i + 1]);
    Vec bump = rng.vector(f, 5);
    while (z.rho3.contains(bump) || pi.orthogonal().contains(bump)) bump = rng.vector(f, 5);
    basis[0] = basis[0] + bump;
    Subspace moved = Subspace::span(f, 5, basis);
    if (moved.dim() != 3) continue;
    ZPoint y{z.rho1, z.rho2, moved};
    CHECK_FALSE(z_membership(m, y));
  }
}

TEST_CASE("random (rho1, rho2) have dim W >= 3") {
  const Field& f = Field::prime(32003);
  LinearFormMatrix m = generate_instance(triple(4, 4, 1, f), 12);
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Subspace w = w_space(m, random_subspace(rng, f, 4, 2), random_subspace(rng, f, 5, 2));
    CHECK(w.dim() >= 3);
  }
}

TEST_CASE("Phi reconstructs the mixed evaluations") {
  const Field& f = Field::prime(32003);
  LinearFormMatrix m = generate_instance(triple(4, 4, 1, f), 13);
  auto pts = sample_points_on_S(m, 12, 14);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    ZPoint z = build_point(m, pts[i], pts[i + 1]);
    PhiData d = phi_matrix(m, z.rho1, z.rho2);
    Vec n11 = m.contract(d.a1, d.u1), n21 = m.contract(d.a1, d.u2);
    Vec n12 = m.contract(d.a2, d.u1), n22 = m.contract(d.a2, d.u2);
    CHECK(n12 == Scalar::from_int(f, -1) * (d.phi(0, 0) * n11 + d.phi(1, 0) * n21));
    CHECK(n22 == Scalar::from_int(f, -1) * (d.phi(0, 1) * n11 + d.phi(1, 1) * n21));
    EigenResult2x2 e = eigen_2x2(d.phi);
    CHECK(e.kind == EigenKind::kDistinct);
    // Vieta: the eigenvalues are the alpha coordinates delta of the witnesses.
    CHECK(e.spaces[0].value + e.spaces[1].value == d.phi(0, 0) + d.phi(1, 1));
    CHECK(e.spaces[0].value * e.spaces[1].value == determinant(d.phi));
    CHECK_FALSE(e.spaces[0].value == e.spaces[1].value);
  }
}

TEST_CASE("classification is independent of the chosen bases") {
  const Field& f = Field::prime(101);
  LinearFormMatrix m = generate_instance(triple(4, 4, 1, f), 15);
  auto pts = sample_points_on_S(m, 12, 16);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    ZPoint z = build_point(m, pts[i], pts[i + 1]);
    Classification base = classify(m, z);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      ClassifyOptions opt;
      opt.basis_seed = seed;
      Classification c = classify(m, z, opt);
      CHECK(c.label == base.label);
      CHECK(c.witnesses == base.witnesses);
    }
  }
}

TEST_CASE("conjugate pairs over F_{p^2} classify as case a") {
  const Field& f = Field::prime(101);
  const Field& f2 = Field::extension(101, 2);
  LinearFormMatrix m = generate_instance(triple(4, 4, 1, f), 17);
  LinearFormMatrix m2 = m.over(f2);
  auto pts = sample_points_on_S(m2, 8, 18);
  int checked = 0;
  for (const auto& p : pts) {
    if (Subspace::span(f2, 5, {p.v.coords()}).defined_over_prime_subfield()) continue;
    Vec vbar, abar;
    for (const auto& x : p.v.coords()) vbar.push_back(x.frobenius());
    for (const auto& x : p.alpha.coords()) abar.push_back(x.frobenius());
    SPoint q{ProjPoint::from(vbar), ProjPoint::from(abar)};
    ZPoint z2 = build_point(m2, p, q);
    REQUIRE(z2.rho1.defined_over_prime_subfield());
    REQUIRE(z2.rho2.defined_over_prime_subfield());
    REQUIRE(z2.rho3.defined_over_prime_subfield());
    ZPoint z{z2.rho1.restrict_to_prime_subfield(), z2.rho2.restrict_to_prime_subfield(),
             z2.rho3.restrict_to_prime_subfield()};
    Classification c = classify(m, z);
    CHECK(c.label == ZCase::kA);
    CHECK(c.eigen == EigenKind::kIrrationalPair);
    REQUIRE(c.witnesses.size() == 2);
    std::array<SPoint, 2> expected{std::min(p, q), std::max(p, q)};
    CHECK(c.witnesses[0] == expected[0]);
    CHECK(c.witnesses[1] == expected[1]);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("tangent spaces and case c") {
  const Field& f = Field::prime(101);
  LinearFormMatrix m = generate_instance(triple(4, 4, 1, f), 19);
  auto pts = sample_points_on_S(m, 30, 20);
  Rng rng(21);
  int built = 0;
  for (const auto& p : pts) {
    Subspace tan = tangent_space_at(m, p);
    CHECK(tan.dim() == 3);
    CHECK(tan.contains(p.v.coords()));
    for (const auto& b : tan.basis()) CHECK(first_order_kernel(m, p, b).has_value());
    Vec off = rng.vector(f, 5);
    if (!tan.contains(off)) CHECK_FALSE(first_order_kernel(m, p, off).has_value());

    Vec t = zero_vector(f, 5);
    for (const auto& b : tan.basis()) t = t + rng.element(f) * b;
    if (Subspace::span(f, 5, {t, p.v.coords()}).dim() != 2) continue;
    std::optional<ZPoint> built_point;
    try {
      built_point = tangent_z_point(m, p, t);
    } catch (const DegeneratePair&) {
      continue;
    }
    const ZPoint& z = *built_point;
    CHECK(omega_vanishes(m, z));
    Classification c = classify(m, z);
    CHECK(c.label == ZCase::kC);
    REQUIRE(c.witnesses.size() == 1);
    CHECK(c.witnesses[0] == p);
    ++built;
  }
  CHECK(built >= 20);
}

TEST_CASE("contracted lines of a White surface give case b") {
  const Field& f = Field::prime(101);
  SplitWhiteInstance w = split_white_instance(f, 0, 5);
  int seen = 0;
  for (const auto& z : w.special_points) {
    ZPoint p = contracted_line_z_point(w.matrix, z.coords(), 7);
    CHECK(omega_vanishes(w.matrix, p));
    Classification c = classify(w.matrix, p);
    CHECK(c.label == ZCase::kB);
    CHECK(c.eigen == EigenKind::kRepeatedFull);
    CHECK(*c.image_point == z);
    // Two points of the contracted line span a degenerate pair.
    auto line = p.rho2.basis();
    SPoint a = psi(w.matrix, line[0]), b = psi(w.matrix, line[1]);
    CHECK(pi_plane(w.matrix, a, b).dim() == 0);
    CHECK_THROWS_AS(build_point(w.matrix, a, b), DegeneratePair);
    ++seen;
  }
  CHECK(seen == 6);
}

TEST_CASE("a scroll line gives case d") {
  const Field& f = Field::prime(101);
  LinearFormMatrix m = with_scroll_line(generate_instance(triple(4, 4, 1, f), 23));
  ZPoint p = scroll_line_z_point(m, 3);
  CHECK(z_membership(m, p));
  CHECK(omega_vanishes(m, p));
  Classification c = classify(m, p);
  CHECK(c.label == ZCase::kD);
  CHECK(c.w_dim == 1);
  CHECK(*c.image_line == p.rho1);
}

TEST_CASE("degenerate pairs only occur on lines of S") {
  const Field& f = Field::prime(7);
  SplitWhiteInstance w = split_white_instance(f, 0, 2);
  std::vector<SPoint> pts = sample_points_on_S(w.matrix, 25, 4);
  int degenerate = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Subspace pi = pi_plane(w.matrix, pts[i], pts[j]);
      if (pi.dim() == 2) {
        CHECK_NOTHROW(build_point(w.matrix, pts[i], pts[j]));
        continue;
      }
      ++degenerate;
      const Vec& v = pts[i].v.coords();
      const Vec& u = pts[j].v.coords();
      for (int k = 1; k <= 3; ++k) {
        CHECK(s_membership(w.matrix, v + Scalar::from_int(f, k) * u).status != Membership::kNotOnS);
      }
    }
  }
  CHECK(degenerate > 0);
}
