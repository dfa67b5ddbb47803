#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degenloci/errors.hpp"
#include "degenloci/linalg.hpp"

namespace degenloci {

// The triple (n, s, m): n x (n+m) matrices of linear forms in s+1 variables.
struct TripleParams {
  int n = 3;
  int s = 3;
  int m = 0;
  const Field* field = &Field::rationals();

  int rows() const { return n; }
  int cols() const { return n + m; }
  int vars() const { return s + 1; }
  int dim_S() const { return s - m - 1; }
  int dim_Z() const { return 2 * (s - m - 1); }
  // Expected codimension of {z : rank A_z <= s} in P^{n-1}.
  int gamma_codim() const { return n + m - s; }

  bool operator==(const TripleParams& o) const {
    return n == o.n && s == o.s && m == o.m && field == o.field;
  }
};

struct RangeReport {
  bool in_smooth_range = false;
  bool good_range = false;
  bool has_type_b_lines = false;
  bool has_2dim_fibres = false;
  bool is_white_case = false;
};

// Requires n >= 3, m >= 0, s >= 2.
RangeReport validate_params(const TripleParams& t);

// (n, s, m) -> (s+1, n-1, n+m-s-1). Throws std::domain_error when the result
// has a negative m or a non-positive component.
TripleParams associated_triple(const TripleParams& t);

// A point of projective space held by its representative whose first nonzero
// coordinate is 1.
class ProjPoint {
 public:
  static ProjPoint from(const Vec& v);

  const Vec& coords() const { return coords_; }
  const Field& field() const { return coords_.front().field(); }
  std::size_t ambient_dim() const { return coords_.size() - 1; }
  ProjPoint embed(const Field& target) const { return from(degenloci::embed(coords_, target)); }
  std::string to_string() const;

  bool operator==(const ProjPoint& o) const { return coords_ == o.coords_; }
  auto operator<=>(const ProjPoint& o) const { return coords_ <=> o.coords_; }

 private:
  explicit ProjPoint(Vec coords) : coords_(std::move(coords)) {}
  Vec coords_;
};

// A point [v] of S with the kernel direction [alpha_v] of M_v^T.
struct SPoint {
  ProjPoint v;
  ProjPoint alpha;

  bool operator==(const SPoint& o) const { return v == o.v && alpha == o.alpha; }
  auto operator<=>(const SPoint& o) const {
    if (auto c = v <=> o.v; c != 0) return c;
    return alpha <=> o.alpha;
  }
};

// The matrix M with entries f_j^i = sum_l c[i][j][l] x_l. The same array is
// the tri-tensor omega(a, u, b) = a^T M_u b.
class LinearFormMatrix {
 public:
  // coeffs is flattened as ((i * cols) + j) * vars + l.
  LinearFormMatrix(const TripleParams& params, std::vector<Scalar> coeffs, std::uint64_t seed = 0);

  const TripleParams& params() const { return params_; }
  const Field& field() const { return *params_.field; }
  std::uint64_t seed() const { return seed_; }
  const Scalar& coeff(int i, int j, int l) const { return c_[index(i, j, l)]; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  // n x (n+m) evaluation M_v.
  DenseMatrix evaluate_at(const Vec& v) const;
  // (n+m) x (s+1) matrix A_alpha with A_alpha v = M_v^T alpha.
  DenseMatrix dual_matrix(const Vec& alpha) const;
  // M_u^T a, a vector of length n+m.
  Vec contract(const Vec& a, const Vec& u) const;
  Scalar omega(const Vec& a, const Vec& u, const Vec& b) const;

  LinearFormMatrix over(const Field& target) const;
  LinearFormMatrix with_coeff(int i, int j, int l, const Scalar& value) const;

  bool operator==(const LinearFormMatrix& o) const { return params_ == o.params_ && c_ == o.c_; }

 private:
  std::size_t index(int i, int j, int l) const {
    return (static_cast<std::size_t>(i) * params_.cols() + j) * params_.vars() + l;
  }

  TripleParams params_;
  std::vector<Scalar> c_;
  std::uint64_t seed_;
};

// Coefficients uniform in F_p, or integers in [-9, 9] over Q.
LinearFormMatrix generate_instance(const TripleParams& t, std::uint64_t seed);

std::string instance_to_json(const LinearFormMatrix& m);
LinearFormMatrix instance_from_json(const std::string& text);

enum class Membership { kNotOnS, kOnS, kDeeper };

struct SMembership {
  Membership status = Membership::kNotOnS;
  // Left kernel generator of M_v when the corank is exactly 1.
  std::optional<ProjPoint> alpha;
  std::size_t corank = 0;
};

SMembership s_membership(const LinearFormMatrix& m, const Vec& v);

struct SampleOptions {
  enum class Strategy { kAuto, kRejection, kPencil };
  Strategy strategy = Strategy::kAuto;
  // Maximum number of [z] draws (rejection) or lines/planes (pencil); 0 picks
  // a default proportional to count times the expected cost.
  std::uint64_t budget = 0;
  // kAuto uses rejection while q^codim stays at or below this bound.
  std::uint64_t rejection_limit = 100000;
};

struct SampleStats {
  std::uint64_t draws = 0;
  std::uint64_t accepted = 0;
  std::uint64_t deeper = 0;
  std::uint64_t duplicates = 0;
  std::string strategy;
};

// Distinct points of S found through the Gamma-side system A_z v = 0.
// Requires a finite field. Throws BudgetExhausted.
std::vector<SPoint> sample_points_on_S(const LinearFormMatrix& m, std::size_t count, std::uint64_t seed,
                                       const SampleOptions& options = {}, SampleStats* stats = nullptr);

struct ProbeReport {
  std::uint64_t trials = 0;
  std::uint64_t points_on_S = 0;
  std::uint64_t corank_events = 0;
  std::uint64_t rank_deficient_z = 0;
  std::vector<ProjPoint> deficient_z;
};

// Draws [z] uniformly; records kernel points and their corank, and every z
// with rank A_z <= s-1.
ProbeReport genericity_probe(const LinearFormMatrix& m, std::uint64_t trials, std::uint64_t seed);

// Copies the forms of row src onto row dst (a deliberately degenerate instance).
LinearFormMatrix with_repeated_row(const LinearFormMatrix& m, int src, int dst);

// Imposes conditions making span(e_0, e_1) in P^s a line of S mapped by psi
// onto the line span(e_0, e_1) of P^{n-1}, with dim W = 1 there.
LinearFormMatrix with_scroll_line(const LinearFormMatrix& m);

// A White-case instance (n, s, m) = (3, m+3, m) over F_p built from the
// Hilbert-Burch matrix of binom(m+4, 2) random F_p-rational points of P^2, so
// every special point z with rank A_z <= s-1 is rational. Returns the points.
struct SplitWhiteInstance {
  LinearFormMatrix matrix;
  std::vector<ProjPoint> special_points;
};
SplitWhiteInstance split_white_instance(const Field& f, int m, std::uint64_t seed);

}  // namespace degenloci
