#pragma once

#include <string>
#include <vector>

#include "degenloci/matrix.hpp"

namespace degenloci {

// Both roots of a x^2 + b x + c, with multiplicity. Over F_p, roots outside
// F_p are returned in F_{p^2}. Over Q an irreducible quadratic yields an
// empty list. Requires a != 0 and odd characteristic.
std::vector<Scalar> quadratic_roots(const Scalar& a, const Scalar& b, const Scalar& c);

enum class EigenKind { kDistinct, kRepeatedFull, kRepeatedDefective, kIrrationalPair };

std::string to_string(EigenKind kind);

struct EigenSpace {
  Scalar value;
  // Reduced echelon basis of ker(Phi - value), over the field of value.
  std::vector<Vec> basis;
};

struct EigenResult2x2 {
  EigenKind kind;
  // Distinct and irrational pairs: two spaces. Repeated kinds: one space.
  // An irrational pair over Q carries no spaces.
  std::vector<EigenSpace> spaces;
};

// Phi must be 2x2 over Q or a prime field.
EigenResult2x2 eigen_2x2(const DenseMatrix& phi);

}  // namespace degenloci
