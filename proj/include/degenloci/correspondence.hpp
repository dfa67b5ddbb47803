#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degenloci/eigen.hpp"
#include "degenloci/instance.hpp"

namespace degenloci {

// A point (rho1, rho2, rho3) of Gr(2, n) x Gr(2, s+1) x Gr(n+m-2, n+m).
struct ZPoint {
  Subspace rho1;
  Subspace rho2;
  Subspace rho3;

  bool operator==(const ZPoint& o) const { return rho1 == o.rho1 && rho2 == o.rho2 && rho3 == o.rho3; }
};

// Throws std::invalid_argument unless the dimensions fit the instance.
void check_zpoint_shape(const LinearFormMatrix& m, const ZPoint& p);

std::string zpoint_to_json(const ZPoint& p);
ZPoint zpoint_from_json(const Field& f, const std::string& text);

// [v] -> ([v], [alpha_v]). Throws std::invalid_argument off S and
// DegenerateInstance at corank >= 2.
SPoint psi(const LinearFormMatrix& m, const Vec& v);

// <M_v^T alpha_w, M_w^T alpha_v>, of dimension 0, 1 or 2.
Subspace pi_plane(const LinearFormMatrix& m, const SPoint& p, const SPoint& q);

// (<alpha_v, alpha_w>, <v, w>, pi^perp). Throws DegeneratePair when the pair
// spans a special line.
ZPoint build_point(const LinearFormMatrix& m, const SPoint& p, const SPoint& q);

// omega(a, u, b) = 0 for every triple of basis vectors.
bool z_membership(const LinearFormMatrix& m, const ZPoint& p);

// span{M_u^T a : a in rho1, u in rho2}. Throws DegenerateInstance if zero.
Subspace w_space(const LinearFormMatrix& m, const Subspace& rho1, const Subspace& rho2);

// Bases a1, a2 of rho1 and u1, u2 of rho2 with M_{u1}^T a1, M_{u2}^T a1
// spanning W, and Phi with (nu12 nu22) = -(nu11 nu21) Phi where
// nu_ij = M_{u_i}^T a_j.
struct PhiData {
  Vec a1, a2, u1, u2;
  DenseMatrix phi;
};
PhiData phi_matrix(const LinearFormMatrix& m, const Subspace& rho1, const Subspace& rho2);

enum class ZCase { kA, kB, kC, kD, kNotInZ };
std::string to_string(ZCase c);

struct Classification {
  ZCase label = ZCase::kNotInZ;
  std::size_t w_dim = 0;
  std::optional<EigenKind> eigen;
  // Case a: the two points, sorted (over F_{p^2} for a conjugate pair; empty
  // for an irreducible pair over Q). Case c: the tangency point.
  std::vector<SPoint> witnesses;
  // Cases b and d: the line [rho2] of S.
  std::optional<Subspace> line;
  // Case b: the common image psi([rho2]).
  std::optional<ProjPoint> image_point;
  // Case d: the image line psi([rho2]) = [rho1].
  std::optional<Subspace> image_line;
};

struct ClassifyOptions {
  // Nonzero: replace the echelon bases of rho1 and rho2 by random bases.
  std::uint64_t basis_seed = 0;
};

// Throws DegenerateInstance when dim W = 0 or a witness fails its check.
Classification classify(const LinearFormMatrix& m, const ZPoint& p, const ClassifyOptions& options = {});

// The two points of a case-a Z-point; throws std::invalid_argument otherwise.
std::array<SPoint, 2> recover_pair(const LinearFormMatrix& m, const ZPoint& p);

// {t : alpha_v^T M_t kappa = 0 for all kappa in ker M_v}, of dimension s - m.
Subspace tangent_space_at(const LinearFormMatrix& m, const SPoint& p);

// Some beta with M_v^T beta = -M_t^T alpha_v, if one exists.
std::optional<Vec> first_order_kernel(const LinearFormMatrix& m, const SPoint& p, const Vec& t);

// (<alpha_v, beta>, <v, t>, W^perp). Throws DegeneratePair if t gives a
// degenerate configuration (choose another t).
ZPoint tangent_z_point(const LinearFormMatrix& m, const SPoint& p, const Vec& t);

// For z with rank A_z = s - 1: the line [ker A_z] of S contracted onto [z],
// completed by a random second generator of rho1.
ZPoint contracted_line_z_point(const LinearFormMatrix& m, const Vec& z, std::uint64_t seed);

// For an instance from with_scroll_line: rho1 = rho2 = <e_0, e_1> and a
// random rho3 inside W^perp.
ZPoint scroll_line_z_point(const LinearFormMatrix& m, std::uint64_t seed);

}  // namespace degenloci
