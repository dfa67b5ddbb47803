#include "degenloci/eigen.hpp"

#include <algorithm>
#include <stdexcept>

#include "degenloci/linalg.hpp"

namespace degenloci {

std::vector<Scalar> quadratic_roots(const Scalar& a, const Scalar& b, const Scalar& c) {
  const Field& f = a.field();
  if (f.is_finite() && f.characteristic() == 2) throw std::domain_error("characteristic 2 is unsupported");
  if (a.is_zero()) throw std::invalid_argument("leading coefficient must be nonzero");
  const Scalar two = Scalar::from_int(f, 2);
  const Scalar disc = b * b - Scalar::from_int(f, 4) * a * c;
  if (auto r = sqrt(disc)) {
    Scalar denom = (two * a).inverse();
    std::vector<Scalar> roots{(-b - *r) * denom, (-b + *r) * denom};
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  if (!f.is_finite()) return {};
  if (f.kind() != Field::Kind::kPrime) throw std::domain_error("quadratic splits only beyond the supported fields");
  const Field& f2 = Field::extension(f.characteristic(), 2);
  Scalar r = *sqrt(disc.embed(f2));
  Scalar denom = (two * a).embed(f2).inverse();
  std::vector<Scalar> roots{(-b.embed(f2) - r) * denom, (-b.embed(f2) + r) * denom};
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string to_string(EigenKind kind) {
  switch (kind) {
    case EigenKind::kDistinct:
      return "distinct";
    case EigenKind::kRepeatedFull:
      return "repeated-full";
    case EigenKind::kRepeatedDefective:
      return "repeated-defective";
    case EigenKind::kIrrationalPair:
      return "irrational-pair";
  }
  return "unknown";
}

namespace {

EigenSpace space_for(const DenseMatrix& phi, const Scalar& delta) {
  const Field& f = delta.field();
  DenseMatrix shifted = phi.embed(f) - DenseMatrix::identity(f, 2).scaled(delta);
  return {delta, rank_and_kernel(shifted).kernel};
}

}  // namespace

EigenResult2x2 eigen_2x2(const DenseMatrix& phi) {
  if (phi.rows() != 2 || phi.cols() != 2) throw std::invalid_argument("eigen_2x2 needs a 2x2 matrix");
  const Field& f = phi.field();
  if (f.kind() == Field::Kind::kExtension) throw std::invalid_argument("eigen_2x2 needs entries in Q or F_p");
  if (phi(0, 1).is_zero() && phi(1, 0).is_zero() && phi(0, 0) == phi(1, 1)) {
    return {EigenKind::kRepeatedFull, {space_for(phi, phi(0, 0))}};
  }
  const Scalar tr = phi(0, 0) + phi(1, 1);
  const Scalar det = phi(0, 0) * phi(1, 1) - phi(0, 1) * phi(1, 0);
  std::vector<Scalar> roots = quadratic_roots(Scalar::one(f), -tr, det);
  if (roots.empty()) return {EigenKind::kIrrationalPair, {}};
  if (&roots[0].field() != &f) {
    return {EigenKind::kIrrationalPair, {space_for(phi, roots[0]), space_for(phi, roots[1])}};
  }
  if (roots[0] == roots[1]) return {EigenKind::kRepeatedDefective, {space_for(phi, roots[0])}};
  return {EigenKind::kDistinct, {space_for(phi, roots[0]), space_for(phi, roots[1])}};
}

}  // namespace degenloci
