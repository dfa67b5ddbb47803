#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "degenloci/matrix.hpp"

namespace degenloci {

struct Echelon {
  DenseMatrix reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form with leftmost pivots. Throws FieldMismatch when an
// entry belongs to another field than the matrix.
Echelon rref(const DenseMatrix& a);

std::size_t rank(const DenseMatrix& a);

struct RankKernel {
  std::size_t rank = 0;
  // Basis of the right kernel, itself in reduced echelon form.
  std::vector<Vec> kernel;
};

// Requires a nonempty matrix.
RankKernel rank_and_kernel(const DenseMatrix& a);

// Basis of {x : x^T a = 0}, in reduced echelon form.
std::vector<Vec> left_kernel(const DenseMatrix& a);

// Some solution of a x = b (free variables set to zero), or nothing.
std::optional<Vec> solve(const DenseMatrix& a, const Vec& b);

Scalar determinant(const DenseMatrix& a);

// A linear subspace of F^ambient held by its canonical reduced echelon
// basis, so equality of subspaces is equality of representations.
class Subspace {
 public:
  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& generators);
  // Rows must already form a reduced echelon basis; validated.
  static Subspace from_basis(const Field& f, std::size_t ambient, const std::vector<Vec>& rows);

  const Field& field() const { return *field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  DenseMatrix basis_matrix() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Complement for the standard coordinate pairing.
  Subspace orthogonal() const;
  Subspace operator+(const Subspace& other) const;
  Subspace embed(const Field& target) const;
  // True when every basis entry lies in the prime subfield.
  bool defined_over_prime_subfield() const;
  Subspace restrict_to_prime_subfield() const;

  bool operator==(const Subspace& o) const;

 private:
  Subspace(const Field& f, std::size_t ambient) : field_(&f), ambient_(ambient) {}

  const Field* field_;
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace degenloci
