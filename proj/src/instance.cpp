#include "degenloci/instance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include <json.hpp>

#include "degenloci/kernels.hpp"
#include "degenloci/random.hpp"
#include "degenloci/upoly.hpp"

namespace degenloci {

RangeReport validate_params(const TripleParams& t) {
  if (t.n < 3 || t.m < 0 || t.s < 2) {
    throw std::invalid_argument("parameters need n >= 3, m >= 0, s >= 2");
  }
  RangeReport r;
  r.in_smooth_range = t.m + 2 <= t.s && t.s <= 2 * t.m + 3;
  r.good_range = r.in_smooth_range && t.n > 2 * t.s - 2 * t.m - 3;
  r.has_type_b_lines = t.n <= 2 * t.s - 2 * t.m - 3;
  r.has_2dim_fibres = 2 * t.n <= 3 * t.s - 3 * t.m - 7;
  r.is_white_case = t.s == t.n + t.m;
  return r;
}

TripleParams associated_triple(const TripleParams& t) {
  TripleParams a;
  a.n = t.s + 1;
  a.s = t.n - 1;
  a.m = t.n + t.m - t.s - 1;
  a.field = t.field;
  if (a.m < 0) throw std::domain_error("associated triple has m < 0");
  if (a.n <= 0 || a.s <= 0) throw std::domain_error("associated triple has a non-positive component");
  return a;
}

ProjPoint ProjPoint::from(const Vec& v) {
  if (v.empty()) throw std::invalid_argument("projective point needs coordinates");
  return ProjPoint(normalize(v));
}

std::string ProjPoint::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ":";
    out += coords_[i].to_string();
  }
  return out + "]";
}

LinearFormMatrix::LinearFormMatrix(const TripleParams& params, std::vector<Scalar> coeffs, std::uint64_t seed)
    : params_(params), c_(std::move(coeffs)), seed_(seed) {
  const std::size_t expected = static_cast<std::size_t>(params.rows()) * params.cols() * params.vars();
  if (c_.size() != expected) throw std::invalid_argument("coefficient array has the wrong size");
  for (const auto& x : c_) {
    if (&x.field() != params.field) throw FieldMismatch("coefficient outside the instance field");
  }
}

DenseMatrix LinearFormMatrix::evaluate_at(const Vec& v) const {
  if (static_cast<int>(v.size()) != params_.vars()) throw std::invalid_argument("evaluate_at: wrong vector length");
  DenseMatrix out(*params_.field, params_.rows(), params_.cols());
  for (int i = 0; i < params_.rows(); ++i) {
    for (int j = 0; j < params_.cols(); ++j) {
      Scalar acc = Scalar::zero(*params_.field);
      for (int l = 0; l < params_.vars(); ++l) acc += coeff(i, j, l) * v[l];
      out(i, j) = acc;
    }
  }
  return out;
}

DenseMatrix LinearFormMatrix::dual_matrix(const Vec& alpha) const {
  if (static_cast<int>(alpha.size()) != params_.rows()) throw std::invalid_argument("dual_matrix: wrong vector length");
  DenseMatrix out(*params_.field, params_.cols(), params_.vars());
  for (int i = 0; i < params_.rows(); ++i) {
    if (alpha[i].is_zero()) continue;
    for (int j = 0; j < params_.cols(); ++j) {
      for (int l = 0; l < params_.vars(); ++l) out(j, l) += alpha[i] * coeff(i, j, l);
    }
  }
  return out;
}

Vec LinearFormMatrix::contract(const Vec& a, const Vec& u) const {
  return evaluate_at(u).transpose() * a;
}

Scalar LinearFormMatrix::omega(const Vec& a, const Vec& u, const Vec& b) const {
  if (static_cast<int>(a.size()) != params_.rows() || static_cast<int>(u.size()) != params_.vars() ||
      static_cast<int>(b.size()) != params_.cols()) {
    throw std::invalid_argument("omega: dimension mismatch");
  }
  return dot(contract(a, u), b);
}

LinearFormMatrix LinearFormMatrix::over(const Field& target) const {
  TripleParams p = params_;
  p.field = &target;
  std::vector<Scalar> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(x.embed(target));
  return LinearFormMatrix(p, std::move(c), seed_);
}

LinearFormMatrix LinearFormMatrix::with_coeff(int i, int j, int l, const Scalar& value) const {
  std::vector<Scalar> c = c_;
  c.at(index(i, j, l)) = value;
  return LinearFormMatrix(params_, std::move(c), seed_);
}

LinearFormMatrix generate_instance(const TripleParams& t, std::uint64_t seed) {
  if (t.field->kind() == Field::Kind::kExtension) throw std::invalid_argument("instances live over Q or F_p");
  Rng rng(seed);
  std::vector<Scalar> c;
  const std::size_t count = static_cast<std::size_t>(t.rows()) * t.cols() * t.vars();
  c.reserve(count);
  for (std::size_t k = 0; k < count; ++k) c.push_back(rng.element(*t.field));
  return LinearFormMatrix(t, std::move(c), seed);
}

std::string instance_to_json(const LinearFormMatrix& m) {
  const TripleParams& t = m.params();
  if (t.field->kind() == Field::Kind::kExtension) throw std::invalid_argument("instance files hold Q or F_p data");
  nlohmann::ordered_json j;
  j["format"] = "degenloci-instance-v1";
  j["p"] = t.field->characteristic();
  j["ext"] = 1;
  j["n"] = t.n;
  j["s"] = t.s;
  j["m"] = t.m;
  j["seed"] = m.seed();
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (int i = 0; i < t.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int jj = 0; jj < t.cols(); ++jj) {
      nlohmann::ordered_json form = nlohmann::ordered_json::array();
      for (int l = 0; l < t.vars(); ++l) form.push_back(m.coeff(i, jj, l).to_string());
      row.push_back(std::move(form));
    }
    coeffs.push_back(std::move(row));
  }
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

LinearFormMatrix instance_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("format", "") != "degenloci-instance-v1") throw std::invalid_argument("unknown instance format");
  if (j.at("ext").get<int>() != 1) throw std::invalid_argument("instance files support ext = 1 only");
  TripleParams t;
  t.n = j.at("n").get<int>();
  t.s = j.at("s").get<int>();
  t.m = j.at("m").get<int>();
  const std::uint64_t p = j.at("p").get<std::uint64_t>();
  t.field = p == 0 ? &Field::rationals() : &Field::prime(p);
  const auto& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != t.rows()) throw std::invalid_argument("coeffs: wrong row count");
  std::vector<Scalar> c;
  for (int i = 0; i < t.rows(); ++i) {
    if (static_cast<int>(coeffs[i].size()) != t.cols()) throw std::invalid_argument("coeffs: wrong column count");
    for (int jj = 0; jj < t.cols(); ++jj) {
      if (static_cast<int>(coeffs[i][jj].size()) != t.vars()) throw std::invalid_argument("coeffs: wrong form length");
      for (int l = 0; l < t.vars(); ++l) c.push_back(Scalar::parse(*t.field, coeffs[i][jj][l].get<std::string>()));
    }
  }
  return LinearFormMatrix(t, std::move(c), j.at("seed").get<std::uint64_t>());
}

SMembership s_membership(const LinearFormMatrix& m, const Vec& v) {
  if (is_zero(v)) throw std::invalid_argument("s_membership needs a nonzero vector");
  DenseMatrix mv = m.evaluate_at(v);
  std::vector<Vec> kernel = left_kernel(mv);
  SMembership out;
  out.corank = kernel.size();
  if (kernel.empty()) {
    out.status = Membership::kNotOnS;
  } else if (kernel.size() == 1) {
    out.status = Membership::kOnS;
    out.alpha = ProjPoint::from(kernel[0]);
  } else {
    out.status = Membership::kDeeper;
  }
  return out;
}

namespace {

// Field element number idx in base-p digit order (distinct for distinct idx < q).
Scalar nth_element(const Field& f, std::uint64_t idx) {
  std::vector<std::uint64_t> digits(f.degree(), 0);
  for (int i = 0; i < f.degree() && idx; ++i) {
    digits[i] = idx % f.characteristic();
    idx /= f.characteristic();
  }
  return Scalar::from_coordinates(f, digits);
}

double field_size(const Field& f) { return std::pow(static_cast<double>(f.characteristic()), f.degree()); }

// Residues of the coefficient array laid out for the batch combine kernel:
// coeffs[i * entries + (j * vars + l)] = c[i][j][l].
std::vector<std::uint32_t> lane_coefficients(const LinearFormMatrix& m) {
  std::vector<std::uint32_t> out;
  out.reserve(m.coeffs().size());
  for (const auto& x : m.coeffs()) out.push_back(static_cast<std::uint32_t>(x.residue()));
  return out;
}

class GammaSampler {
 public:
  GammaSampler(const LinearFormMatrix& m, std::uint64_t seed)
      : m_(m), f_(m.field()), t_(m.params()), rng_(seed) {
    lanes_ok_ = f_.kind() == Field::Kind::kPrime && kernels::lane_prime_supported(f_.characteristic());
    if (lanes_ok_) coeffs_ = lane_coefficients(m);
  }

  Vec random_z() { return rng_.nonzero_vector(f_, t_.rows()); }

  // Next batch of up to kLanes random [z] that survive the full-rank screen.
  std::vector<Vec> screened_draws(std::uint64_t& draws) {
    std::vector<Vec> out;
    if (!lanes_ok_ || t_.gamma_codim() <= 0) {
      out.push_back(random_z());
      ++draws;
      return out;
    }
    const int rows = t_.cols();
    const int cols = t_.vars();
    const int entries = rows * cols;
    const std::uint32_t p = static_cast<std::uint32_t>(f_.characteristic());
    std::vector<Vec> zs;
    std::vector<std::uint32_t> weights(static_cast<std::size_t>(t_.rows()) * kernels::kLanes);
    for (int l = 0; l < kernels::kLanes; ++l) {
      Vec z = random_z();
      for (int i = 0; i < t_.rows(); ++i) weights[i * kernels::kLanes + l] = static_cast<std::uint32_t>(z[i].residue());
      zs.push_back(std::move(z));
    }
    draws += kernels::kLanes;
    const auto& k = kernels::active_kernels();
    std::vector<std::uint32_t> batch(static_cast<std::size_t>(entries) * kernels::kLanes);
    k.combine(coeffs_.data(), weights.data(), t_.rows(), entries, p, batch.data());
    std::vector<std::uint32_t> work = batch;
    std::uint8_t certified[kernels::kLanes];
    k.screen_full_rank(work.data(), rows, cols, p, certified);
    std::vector<std::uint32_t> single(entries);
    for (int l = 0; l < kernels::kLanes; ++l) {
      if (certified[l]) continue;
      for (int e = 0; e < entries; ++e) single[e] = batch[e * kernels::kLanes + l];
      if (kernels::rank_mod_p(single.data(), rows, cols, p) < cols) out.push_back(zs[l]);
    }
    return out;
  }

  Rng& rng() { return rng_; }

 private:
  const LinearFormMatrix& m_;
  const Field& f_;
  const TripleParams& t_;
  Rng rng_;
  bool lanes_ok_ = false;
  std::vector<std::uint32_t> coeffs_;
};

struct Collector {
  const LinearFormMatrix& m;
  std::size_t count;
  SampleStats& stats;
  Rng& rng;
  std::set<ProjPoint> seen;
  std::vector<SPoint> points;

  bool done() const { return points.size() >= count; }

  void offer_z(const Vec& z) {
    RankKernel rk = rank_and_kernel(m.dual_matrix(z));
    if (rk.kernel.empty()) return;
    ++stats.accepted;
    Vec v = rk.kernel[0];
    if (rk.kernel.size() > 1) {
      do {
        v = zero_vector(m.field(), rk.kernel[0].size());
        for (const auto& k : rk.kernel) v = v + rng.element(m.field()) * k;
      } while (is_zero(v));
    }
    SMembership mem = s_membership(m, v);
    if (mem.status == Membership::kDeeper) {
      ++stats.deeper;
      return;
    }
    if (mem.status != Membership::kOnS) return;
    ProjPoint pv = ProjPoint::from(v);
    if (!seen.insert(pv).second) {
      ++stats.duplicates;
      return;
    }
    points.push_back({pv, *mem.alpha});
  }
};

// det of the square matrix A_z restricted to the given rows.
Scalar minor_without_row(const DenseMatrix& a, int skip) {
  DenseMatrix sq(a.field(), a.cols(), a.cols());
  int r = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (static_cast<int>(i) == skip) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) sq(r, c) = a(i, c);
    ++r;
  }
  return determinant(sq);
}

Vec affine_point(const std::vector<Vec>& frame, const std::vector<Scalar>& t) {
  Vec z = frame[0];
  for (std::size_t i = 0; i < t.size(); ++i) z = z + t[i] * frame[i + 1];
  return z;
}

// Univariate slice of a maximal minor of A along z0 + t z1 (+ fixed shift).
UPoly minor_along_line(const LinearFormMatrix& m, const Vec& base, const Vec& dir, int skip) {
  const Field& f = m.field();
  const int deg = m.params().vars();
  std::vector<Scalar> xs, ys;
  for (int i = 0; i <= deg; ++i) {
    Scalar t = nth_element(f, i);
    xs.push_back(t);
    Vec z = base + t * dir;
    ys.push_back(minor_without_row(m.dual_matrix(z), skip));
  }
  return interpolate(xs, ys);
}

void pencil_codim1(const LinearFormMatrix& m, Collector& col, std::uint64_t budget) {
  const Field& f = m.field();
  const int n = m.params().rows();
  for (std::uint64_t line = 0; line < budget && !col.done(); ++line) {
    ++col.stats.draws;
    Vec z0 = col.rng.nonzero_vector(f, n);
    Vec z1 = col.rng.nonzero_vector(f, n);
    UPoly d = minor_along_line(m, z0, z1, -1);
    if (d.is_zero()) continue;
    for (const auto& t : roots_in_field(d)) {
      col.offer_z(z0 + t * z1);
      if (col.done()) return;
    }
  }
}

void pencil_codim2(const LinearFormMatrix& m, Collector& col, std::uint64_t budget) {
  const Field& f = m.field();
  const int n = m.params().rows();
  const int d = m.params().vars();
  const int res_deg = d * d;
  if (field_size(f) <= res_deg + 1) throw BudgetExhausted("field too small for the plane sampler");
  for (std::uint64_t plane = 0; plane < budget && !col.done(); ++plane) {
    ++col.stats.draws;
    std::vector<Vec> frame{col.rng.nonzero_vector(f, n), col.rng.nonzero_vector(f, n), col.rng.nonzero_vector(f, n)};
    auto slices = [&](const Scalar& t1) {
      Vec base = frame[0] + t1 * frame[1];
      return std::make_pair(minor_along_line(m, base, frame[2], 0), minor_along_line(m, base, frame[2], 1));
    };
    std::vector<Scalar> xs, ys;
    for (int i = 0; i <= res_deg; ++i) {
      Scalar t1 = nth_element(f, i);
      auto [g0, g1] = slices(t1);
      xs.push_back(t1);
      ys.push_back(resultant(g0, g1, d, d));
    }
    UPoly r = interpolate(xs, ys);
    if (r.is_zero()) continue;
    for (const auto& t1 : roots_in_field(r)) {
      auto [g0, g1] = slices(t1);
      UPoly g = gcd(g0, g1);
      if (g.degree() < 1) continue;
      for (const auto& t2 : roots_in_field(g)) {
        col.offer_z(affine_point(frame, {t1, t2}));
        if (col.done()) return;
      }
    }
  }
}

}  // namespace

std::vector<SPoint> sample_points_on_S(const LinearFormMatrix& m, std::size_t count, std::uint64_t seed,
                                       const SampleOptions& options, SampleStats* stats_out) {
  const Field& f = m.field();
  if (!f.is_finite()) throw std::invalid_argument("sampling needs a finite field");
  SampleStats stats;
  GammaSampler sampler(m, seed);
  Collector col{m, count, stats, sampler.rng(), {}, {}};
  const int c = m.params().gamma_codim();
  const double expected = c <= 0 ? 1.0 : std::pow(field_size(f), c);

  SampleOptions::Strategy strategy = options.strategy;
  if (strategy == SampleOptions::Strategy::kAuto) {
    strategy = (c <= 0 || expected <= static_cast<double>(options.rejection_limit)) ? SampleOptions::Strategy::kRejection
                                                                                   : SampleOptions::Strategy::kPencil;
  }

  if (strategy == SampleOptions::Strategy::kRejection) {
    stats.strategy = "rejection";
    double planned = std::max(1e4, 50.0 * static_cast<double>(count)) * expected;
    const std::uint64_t budget =
        options.budget ? options.budget : static_cast<std::uint64_t>(std::min(planned, 4.0e18));
    while (!col.done()) {
      if (stats.draws >= budget) {
        throw BudgetExhausted("rejection sampling used " + std::to_string(stats.draws) + " draws and found " +
                              std::to_string(col.points.size()) + " of " + std::to_string(count) +
                              " points; acceptance is about q^-" + std::to_string(c) + ", lower the prime");
      }
      for (const auto& z : sampler.screened_draws(stats.draws)) {
        col.offer_z(z);
        if (col.done()) break;
      }
    }
  } else {
    stats.strategy = "pencil";
    const std::uint64_t budget = options.budget ? options.budget : 200 * count + 1000;
    if (c == 1) {
      pencil_codim1(m, col, budget);
    } else if (c == 2) {
      pencil_codim2(m, col, budget);
    } else {
      throw BudgetExhausted("no pencil sampler for codimension " + std::to_string(c) + "; lower the prime");
    }
    if (!col.done()) {
      throw BudgetExhausted("pencil sampling exhausted " + std::to_string(budget) + " slices with " +
                            std::to_string(col.points.size()) + " of " + std::to_string(count) + " points");
    }
  }
  if (stats_out) *stats_out = stats;
  return std::move(col.points);
}

ProbeReport genericity_probe(const LinearFormMatrix& m, std::uint64_t trials, std::uint64_t seed) {
  if (!m.field().is_finite()) throw std::invalid_argument("probe needs a finite field");
  GammaSampler sampler(m, seed);
  ProbeReport report;
  const int s = m.params().s;
  std::uint64_t draws = 0;
  while (draws < trials) {
    for (const auto& z : sampler.screened_draws(draws)) {
      RankKernel rk = rank_and_kernel(m.dual_matrix(z));
      if (rk.kernel.empty()) continue;
      if (static_cast<int>(rk.rank) <= s - 1) {
        ++report.rank_deficient_z;
        ProjPoint pz = ProjPoint::from(z);
        if (std::find(report.deficient_z.begin(), report.deficient_z.end(), pz) == report.deficient_z.end()) {
          report.deficient_z.push_back(pz);
        }
      }
      for (const auto& v : rk.kernel) {
        SMembership mem = s_membership(m, v);
        if (mem.status == Membership::kOnS) ++report.points_on_S;
        if (mem.status == Membership::kDeeper) ++report.corank_events;
      }
    }
  }
  report.trials = draws;
  std::sort(report.deficient_z.begin(), report.deficient_z.end());
  return report;
}

LinearFormMatrix with_repeated_row(const LinearFormMatrix& m, int src, int dst) {
  const TripleParams& t = m.params();
  if (src < 0 || dst < 0 || src >= t.rows() || dst >= t.rows()) throw std::out_of_range("row index");
  LinearFormMatrix out = m;
  for (int j = 0; j < t.cols(); ++j) {
    for (int l = 0; l < t.vars(); ++l) out = out.with_coeff(dst, j, l, m.coeff(src, j, l));
  }
  return out;
}

LinearFormMatrix with_scroll_line(const LinearFormMatrix& m) {
  const TripleParams& t = m.params();
  if (t.rows() < 2 || t.vars() < 2) throw std::invalid_argument("scroll line needs n >= 2 and s >= 1");
  const Scalar zero = Scalar::zero(m.field());
  LinearFormMatrix out = m;
  for (int j = 0; j < t.cols(); ++j) {
    out = out.with_coeff(1, j, 0, zero);
    out = out.with_coeff(0, j, 1, zero);
    out = out.with_coeff(1, j, 1, -m.coeff(0, j, 0));
  }
  return out;
}

namespace {

std::vector<std::array<int, 3>> monomials3(int degree) {
  std::vector<std::array<int, 3>> out;
  for (int a = degree; a >= 0; --a) {
    for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
  }
  return out;
}

Scalar eval_monomial(const std::array<int, 3>& e, const Vec& z) {
  Scalar r = Scalar::one(z[0].field());
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < e[i]; ++k) r *= z[i];
  }
  return r;
}

}  // namespace

SplitWhiteInstance split_white_instance(const Field& f, int m, std::uint64_t seed) {
  if (f.kind() != Field::Kind::kPrime) throw std::invalid_argument("split instances live over F_p");
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  const int d = m + 3;
  const int npts = static_cast<int>(binomial(d + 1, 2));
  const BigInt plane_points = f.order() * f.order() + f.order() + 1;
  if (plane_points < npts) throw std::invalid_argument("field has too few points in P^2");
  Rng rng(seed);
  const auto mon_d = monomials3(d);
  const auto mon_d1 = monomials3(d + 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<ProjPoint> chosen;
    while (static_cast<int>(chosen.size()) < npts) chosen.insert(ProjPoint::from(rng.nonzero_vector(f, 3)));
    std::vector<ProjPoint> pts(chosen.begin(), chosen.end());

    DenseMatrix eval(f, npts, mon_d.size());
    for (int i = 0; i < npts; ++i) {
      for (std::size_t k = 0; k < mon_d.size(); ++k) eval(i, k) = eval_monomial(mon_d[k], pts[i].coords());
    }
    RankKernel forms = rank_and_kernel(eval);
    if (static_cast<int>(forms.kernel.size()) != d + 1) continue;

    // Linear syzygies sum_k L_k F_k = 0 with L_k = sum_i y[k][i] z_i.
    DenseMatrix syz(f, mon_d1.size(), 3 * (d + 1));
    for (int k = 0; k <= d; ++k) {
      for (int i = 0; i < 3; ++i) {
        for (std::size_t a = 0; a < mon_d.size(); ++a) {
          std::array<int, 3> e = mon_d[a];
          ++e[i];
          auto it = std::find(mon_d1.begin(), mon_d1.end(), e);
          std::size_t row = static_cast<std::size_t>(it - mon_d1.begin());
          syz(row, 3 * k + i) += forms.kernel[k][a];
        }
      }
    }
    RankKernel relations = rank_and_kernel(syz);
    if (static_cast<int>(relations.kernel.size()) != d) continue;

    TripleParams t;
    t.n = 3;
    t.m = m;
    t.s = d;
    t.field = &f;
    std::vector<Scalar> coeffs;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < d; ++j) {
        for (int l = 0; l <= d; ++l) coeffs.push_back(relations.kernel[j][3 * l + i]);
      }
    }
    LinearFormMatrix lfm(t, std::move(coeffs), seed);
    bool ok = true;
    for (const auto& p : pts) {
      if (static_cast<int>(rank(lfm.dual_matrix(p.coords()))) != d - 1) {
        ok = false;
        break;
      }
    }
    // Every other rational point must keep full rank (rules out, e.g., six
    // points on a conic).
    std::vector<Vec> probes;
    const std::uint64_t p = f.characteristic();
    if (p <= 61) {
      for (std::uint64_t a = 0; a < p; ++a) {
        for (std::uint64_t b = 0; b < p; ++b) {
          probes.push_back(vector_from_ints(f, {1, static_cast<long long>(a), static_cast<long long>(b)}));
        }
        probes.push_back(vector_from_ints(f, {0, 1, static_cast<long long>(a)}));
      }
      probes.push_back(vector_from_ints(f, {0, 0, 1}));
    } else {
      for (int i = 0; i < 64; ++i) probes.push_back(rng.nonzero_vector(f, 3));
    }
    for (const auto& z : probes) {
      if (!ok) break;
      if (chosen.count(ProjPoint::from(z))) continue;
      ok = static_cast<int>(rank(lfm.dual_matrix(z))) == d;
    }
    if (!ok) continue;
    return {std::move(lfm), std::move(pts)};
  }
  throw DegenerateInstance("could not find points in general position");
}

}  // namespace degenloci
