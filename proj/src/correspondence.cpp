#include "degenloci/correspondence.hpp"

#include <algorithm>

#include <json.hpp>

#include "degenloci/random.hpp"

namespace degenloci {

namespace {

nlohmann::ordered_json subspace_json(const Subspace& s) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& b : s.basis()) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& x : b) row.push_back(x.to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Subspace subspace_from_json(const Field& f, const nlohmann::json& rows, std::size_t ambient) {
  std::vector<Vec> basis;
  for (const auto& r : rows) {
    if (r.size() != ambient) throw std::invalid_argument("ZPoint row has the wrong length");
    Vec v;
    for (const auto& x : r) v.push_back(Scalar::parse(f, x.get<std::string>()));
    basis.push_back(std::move(v));
  }
  return Subspace::from_basis(f, ambient, basis);
}

ZPoint embed_point(const ZPoint& p, const Field& f) {
  return {p.rho1.embed(f), p.rho2.embed(f), p.rho3.embed(f)};
}

// Basis of a 2-dimensional subspace, optionally mixed by a random invertible
// 2x2 matrix.
std::array<Vec, 2> pick_basis(const Subspace& s, Rng* rng) {
  if (s.dim() != 2) throw std::invalid_argument("expected a 2-dimensional subspace");
  const Vec& b1 = s.basis()[0];
  const Vec& b2 = s.basis()[1];
  if (!rng) return {b1, b2};
  const Field& f = s.field();
  while (true) {
    Scalar g00 = rng->element(f), g01 = rng->element(f), g10 = rng->element(f), g11 = rng->element(f);
    if ((g00 * g11 - g01 * g10).is_zero()) continue;
    return {g00 * b1 + g01 * b2, g10 * b1 + g11 * b2};
  }
}

PhiData phi_from_bases(const LinearFormMatrix& m, const Vec& b1, const Vec& b2, const Vec& u1, const Vec& u2) {
  const Field& f = m.field();
  const std::size_t cols = m.params().cols();
  std::vector<std::pair<Vec, Vec>> candidates{{b2, b1}, {b1, b2}};
  for (int t = 1; t <= 3; ++t) candidates.push_back({b1 + Scalar::from_int(f, t) * b2, b2});
  for (const auto& [a1, a2] : candidates) {
    Vec n11 = m.contract(a1, u1);
    Vec n21 = m.contract(a1, u2);
    if (Subspace::span(f, cols, {n11, n21}).dim() != 2) continue;
    Vec n12 = m.contract(a2, u1);
    Vec n22 = m.contract(a2, u2);
    DenseMatrix base(f, cols, 2);
    for (std::size_t j = 0; j < cols; ++j) {
      base(j, 0) = n11[j];
      base(j, 1) = n21[j];
    }
    DenseMatrix phi(f, 2, 2);
    const Vec* rhs[2] = {&n12, &n22};
    for (int i = 0; i < 2; ++i) {
      Vec neg = Scalar::from_int(f, -1) * *rhs[i];
      auto x = solve(base, neg);
      if (!x) throw DegenerateInstance("W has dimension above 2 for these subspaces");
      phi(0, i) = (*x)[0];
      phi(1, i) = (*x)[1];
    }
    return {a1, a2, u1, u2, phi};
  }
  throw DegenerateInstance("no adapted basis: some point of [rho2] has corank >= 2 on rho1");
}

bool alpha_matches(const SMembership& mem, const Vec& alpha) {
  return mem.status == Membership::kOnS && mem.alpha && *mem.alpha == ProjPoint::from(alpha);
}

std::vector<Vec> line_samples(const Subspace& line) {
  const Vec& u1 = line.basis()[0];
  const Vec& u2 = line.basis()[1];
  return {u1, u2, u1 + u2};
}

}  // namespace

void check_zpoint_shape(const LinearFormMatrix& m, const ZPoint& p) {
  const TripleParams& t = m.params();
  if (p.rho1.ambient() != static_cast<std::size_t>(t.rows()) || p.rho1.dim() != 2 ||
      p.rho2.ambient() != static_cast<std::size_t>(t.vars()) || p.rho2.dim() != 2 ||
      p.rho3.ambient() != static_cast<std::size_t>(t.cols()) ||
      p.rho3.dim() != static_cast<std::size_t>(t.cols() - 2)) {
    throw std::invalid_argument("ZPoint dimensions do not fit the instance");
  }
  if (&p.rho1.field() != &m.field() || &p.rho2.field() != &m.field() || &p.rho3.field() != &m.field()) {
    throw FieldMismatch("ZPoint and instance live over different fields");
  }
}

std::string zpoint_to_json(const ZPoint& p) {
  nlohmann::ordered_json j;
  j["rho1"] = subspace_json(p.rho1);
  j["rho2"] = subspace_json(p.rho2);
  j["rho3"] = subspace_json(p.rho3);
  return j.dump();
}

ZPoint zpoint_from_json(const Field& f, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  auto ambient = [](const nlohmann::json& rows) -> std::size_t {
    if (!rows.is_array() || rows.empty()) throw std::invalid_argument("ZPoint subspace needs rows");
    return rows[0].size();
  };
  return {subspace_from_json(f, j.at("rho1"), ambient(j.at("rho1"))),
          subspace_from_json(f, j.at("rho2"), ambient(j.at("rho2"))),
          subspace_from_json(f, j.at("rho3"), ambient(j.at("rho3")))};
}

SPoint psi(const LinearFormMatrix& m, const Vec& v) {
  SMembership mem = s_membership(m, v);
  if (mem.status == Membership::kNotOnS) throw std::invalid_argument("psi: point is not on S");
  if (mem.status == Membership::kDeeper) throw DegenerateInstance("psi: corank " + std::to_string(mem.corank));
  return {ProjPoint::from(v), *mem.alpha};
}

Subspace pi_plane(const LinearFormMatrix& m, const SPoint& p, const SPoint& q) {
  if (p.v == q.v) throw std::invalid_argument("pi_plane needs two distinct points");
  return Subspace::span(m.field(), m.params().cols(),
                        {m.contract(q.alpha.coords(), p.v.coords()), m.contract(p.alpha.coords(), q.v.coords())});
}

ZPoint build_point(const LinearFormMatrix& m, const SPoint& p, const SPoint& q) {
  const Field& f = m.field();
  Subspace pi = pi_plane(m, p, q);
  Subspace rho1 = Subspace::span(f, m.params().rows(), {p.alpha.coords(), q.alpha.coords()});
  if (rho1.dim() != 2) throw DegeneratePair("alpha_v and alpha_w coincide");
  if (pi.dim() != 2) throw DegeneratePair("pi_{v,w} has dimension " + std::to_string(pi.dim()));
  Subspace rho2 = Subspace::span(f, m.params().vars(), {p.v.coords(), q.v.coords()});
  return {rho1, rho2, pi.orthogonal()};
}

bool z_membership(const LinearFormMatrix& m, const ZPoint& p) {
  check_zpoint_shape(m, p);
  for (const auto& a : p.rho1.basis()) {
    for (const auto& u : p.rho2.basis()) {
      Vec x = m.contract(a, u);
      for (const auto& b : p.rho3.basis()) {
        if (!dot(x, b).is_zero()) return false;
      }
    }
  }
  return true;
}

Subspace w_space(const LinearFormMatrix& m, const Subspace& rho1, const Subspace& rho2) {
  if (rho1.dim() != 2 || rho2.dim() != 2) throw std::invalid_argument("w_space needs two 2-dimensional subspaces");
  std::vector<Vec> gens;
  for (const auto& u : rho2.basis()) {
    for (const auto& a : rho1.basis()) gens.push_back(m.contract(a, u));
  }
  Subspace w = Subspace::span(m.field(), m.params().cols(), gens);
  if (w.dim() == 0) throw DegenerateInstance("W vanishes: every point of [rho2] is deeper on rho1");
  return w;
}

PhiData phi_matrix(const LinearFormMatrix& m, const Subspace& rho1, const Subspace& rho2) {
  if (w_space(m, rho1, rho2).dim() != 2) throw std::invalid_argument("phi_matrix needs dim W = 2");
  auto a = pick_basis(rho1, nullptr);
  auto u = pick_basis(rho2, nullptr);
  return phi_from_bases(m, a[0], a[1], u[0], u[1]);
}

std::string to_string(ZCase c) {
  switch (c) {
    case ZCase::kA:
      return "a";
    case ZCase::kB:
      return "b";
    case ZCase::kC:
      return "c";
    case ZCase::kD:
      return "d";
    case ZCase::kNotInZ:
      return "not_in_Z";
  }
  return "?";
}

Classification classify(const LinearFormMatrix& m, const ZPoint& p, const ClassifyOptions& options) {
  Classification out;
  if (!z_membership(m, p)) return out;
  Subspace w = w_space(m, p.rho1, p.rho2);
  out.w_dim = w.dim();
  if (w.dim() > 2) throw std::logic_error("W exceeds rho3^perp on a point of Z");

  if (w.dim() == 1) {
    out.label = ZCase::kD;
    for (const auto& u : line_samples(p.rho2)) {
      SMembership mem = s_membership(m, u);
      if (mem.status != Membership::kOnS || !p.rho1.contains(mem.alpha->coords())) {
        throw DegenerateInstance("case d: [rho2] is not a line of S over [rho1]");
      }
    }
    out.line = p.rho2;
    out.image_line = p.rho1;
    return out;
  }

  Rng rng(options.basis_seed);
  Rng* mix = options.basis_seed ? &rng : nullptr;
  auto a = pick_basis(p.rho1, mix);
  auto u = pick_basis(p.rho2, mix);
  PhiData d = phi_from_bases(m, a[0], a[1], u[0], u[1]);
  EigenResult2x2 e = eigen_2x2(d.phi);
  out.eigen = e.kind;

  auto witness = [&](const EigenSpace& sp, const Vec& ev) {
    const Field& g = sp.value.field();
    Vec v = ev[0] * embed(d.u1, g) + ev[1] * embed(d.u2, g);
    Vec alpha = sp.value * embed(d.a1, g) + embed(d.a2, g);
    LinearFormMatrix lifted = &g == &m.field() ? m : m.over(g);
    if (!alpha_matches(s_membership(lifted, v), alpha)) throw DegenerateInstance("witness fails its membership check");
    return SPoint{ProjPoint::from(v), ProjPoint::from(alpha)};
  };

  switch (e.kind) {
    case EigenKind::kDistinct:
    case EigenKind::kIrrationalPair: {
      out.label = ZCase::kA;
      if (e.spaces.empty()) return out;
      for (const auto& sp : e.spaces) out.witnesses.push_back(witness(sp, sp.basis.at(0)));
      std::sort(out.witnesses.begin(), out.witnesses.end());
      const Field& g = out.witnesses[0].v.field();
      LinearFormMatrix lifted = &g == &m.field() ? m : m.over(g);
      ZPoint rebuilt = build_point(lifted, out.witnesses[0], out.witnesses[1]);
      if (!(rebuilt == embed_point(p, g))) throw DegenerateInstance("case a witnesses do not rebuild the point");
      return out;
    }
    case EigenKind::kRepeatedFull: {
      out.label = ZCase::kB;
      const Scalar& delta = e.spaces.at(0).value;
      Vec alpha = delta * d.a1 + d.a2;
      for (const auto& v : line_samples(p.rho2)) {
        if (!alpha_matches(s_membership(m, v), alpha)) throw DegenerateInstance("case b: [rho2] is not contracted");
      }
      out.line = p.rho2;
      out.image_point = ProjPoint::from(alpha);
      return out;
    }
    case EigenKind::kRepeatedDefective: {
      out.label = ZCase::kC;
      const EigenSpace& sp = e.spaces.at(0);
      SPoint t = witness(sp, sp.basis.at(0));
      if (!tangent_space_at(m, t).contains(p.rho2)) throw DegenerateInstance("case c: [rho2] is not tangent");
      out.witnesses.push_back(t);
      return out;
    }
  }
  return out;
}

std::array<SPoint, 2> recover_pair(const LinearFormMatrix& m, const ZPoint& p) {
  Classification c = classify(m, p);
  if (c.label != ZCase::kA) throw std::invalid_argument("recover_pair: point is in case " + to_string(c.label));
  if (c.witnesses.size() != 2) throw std::invalid_argument("recover_pair: the pair is not defined over a finite field");
  return {c.witnesses[0], c.witnesses[1]};
}

Subspace tangent_space_at(const LinearFormMatrix& m, const SPoint& p) {
  const Field& f = p.v.field();
  if (&f != &m.field()) return tangent_space_at(m.over(f), p);
  RankKernel rk = rank_and_kernel(m.evaluate_at(p.v.coords()));
  DenseMatrix a = m.dual_matrix(p.alpha.coords()).transpose();
  DenseMatrix cond(f, rk.kernel.size(), m.params().vars());
  for (std::size_t r = 0; r < rk.kernel.size(); ++r) {
    Vec row = a * rk.kernel[r];
    for (std::size_t l = 0; l < row.size(); ++l) cond(r, l) = row[l];
  }
  Subspace out = Subspace::span(f, m.params().vars(), rank_and_kernel(cond).kernel);
  if (out.dim() != static_cast<std::size_t>(m.params().s - m.params().m)) {
    throw DegenerateInstance("tangent space has dimension " + std::to_string(out.dim()));
  }
  return out;
}

std::optional<Vec> first_order_kernel(const LinearFormMatrix& m, const SPoint& p, const Vec& t) {
  Vec rhs = Scalar::from_int(m.field(), -1) * (m.dual_matrix(p.alpha.coords()) * t);
  return solve(m.evaluate_at(p.v.coords()).transpose(), rhs);
}

ZPoint tangent_z_point(const LinearFormMatrix& m, const SPoint& p, const Vec& t) {
  const Field& f = m.field();
  Subspace rho2 = Subspace::span(f, m.params().vars(), {p.v.coords(), t});
  if (rho2.dim() != 2) throw std::invalid_argument("tangent vector must differ from v");
  auto beta = first_order_kernel(m, p, t);
  if (!beta) throw std::invalid_argument("t is not a tangent vector at p");
  Subspace rho1 = Subspace::span(f, m.params().rows(), {p.alpha.coords(), *beta});
  if (rho1.dim() != 2) throw DegeneratePair("first-order kernel deformation is trivial");
  Subspace w = w_space(m, rho1, rho2);
  if (w.dim() != 2) throw DegeneratePair("tangent configuration has dim W = " + std::to_string(w.dim()));
  return {rho1, rho2, w.orthogonal()};
}

ZPoint contracted_line_z_point(const LinearFormMatrix& m, const Vec& z, std::uint64_t seed) {
  const Field& f = m.field();
  RankKernel rk = rank_and_kernel(m.dual_matrix(z));
  if (rk.kernel.size() != 2) throw std::invalid_argument("z must have a 2-dimensional kernel");
  Subspace rho2 = Subspace::span(f, m.params().vars(), rk.kernel);
  Rng rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Subspace rho1 = Subspace::span(f, m.params().rows(), {z, rng.vector(f, m.params().rows())});
    if (rho1.dim() != 2) continue;
    Subspace w = w_space(m, rho1, rho2);
    if (w.dim() == 2) return {rho1, rho2, w.orthogonal()};
  }
  throw DegeneratePair("no completion of rho1 gives dim W = 2");
}

ZPoint scroll_line_z_point(const LinearFormMatrix& m, std::uint64_t seed) {
  const Field& f = m.field();
  const TripleParams& t = m.params();
  Subspace rho1 = Subspace::span(f, t.rows(), {unit_vector(f, t.rows(), 0), unit_vector(f, t.rows(), 1)});
  Subspace rho2 = Subspace::span(f, t.vars(), {unit_vector(f, t.vars(), 0), unit_vector(f, t.vars(), 1)});
  Subspace w = w_space(m, rho1, rho2);
  if (w.dim() != 1) throw std::invalid_argument("instance has no scroll line on <e0, e1>");
  Subspace perp = w.orthogonal();
  Rng rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Vec> gens;
    for (int k = 0; k < t.cols() - 2; ++k) {
      Vec g = zero_vector(f, t.cols());
      for (const auto& b : perp.basis()) g = g + rng.element(f) * b;
      gens.push_back(g);
    }
    Subspace rho3 = Subspace::span(f, t.cols(), gens);
    if (rho3.dim() == static_cast<std::size_t>(t.cols() - 2)) return {rho1, rho2, rho3};
  }
  throw DegeneratePair("could not choose rho3");
}

}  // namespace degenloci
