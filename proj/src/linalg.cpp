#include "degenloci/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace degenloci {

namespace {

void check_entries(const DenseMatrix& a) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (&a(r, c).field() != &a.field()) {
        throw FieldMismatch("entry (" + std::to_string(r) + "," + std::to_string(c) + ") lies in " +
                            a(r, c).field().name() + ", matrix is over " + a.field().name());
      }
    }
  }
}

}  // namespace

Echelon rref(const DenseMatrix& a) {
  check_entries(a);
  DenseMatrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const DenseMatrix& a) { return rref(a).pivots.size(); }

RankKernel rank_and_kernel(const DenseMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw std::invalid_argument("rank_and_kernel needs a nonempty matrix");
  Echelon e = rref(a);
  const Field& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> kernel;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec k = zero_vector(f, a.cols());
    k[free] = Scalar::one(f);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) k[e.pivots[i]] = -e.reduced(i, free);
    kernel.push_back(std::move(k));
  }
  if (!kernel.empty()) kernel = Subspace::span(f, a.cols(), kernel).basis();
  return {e.pivots.size(), std::move(kernel)};
}

std::vector<Vec> left_kernel(const DenseMatrix& a) { return rank_and_kernel(a.transpose()).kernel; }

std::optional<Vec> solve(const DenseMatrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  DenseMatrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  Echelon e = rref(aug);
  Vec x = zero_vector(a.field(), a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, a.cols());
  }
  return x;
}

Scalar determinant(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  check_entries(a);
  DenseMatrix m = a;
  const std::size_t n = m.rows();
  Scalar det = Scalar::one(a.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col).is_zero()) ++sel;
    if (sel == n) return Scalar::zero(a.field());
    if (sel != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(sel, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Scalar factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vec>& generators) {
  Subspace s(f, ambient);
  if (generators.empty()) return s;
  Echelon e = rref(DenseMatrix::from_rows(f, generators, ambient));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) s.basis_.push_back(e.reduced.row(i));
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::from_basis(const Field& f, std::size_t ambient, const std::vector<Vec>& rows) {
  Subspace s = span(f, ambient, rows);
  if (s.basis_ != rows) throw std::invalid_argument("rows are not a reduced echelon basis");
  return s;
}

DenseMatrix Subspace::basis_matrix() const { return DenseMatrix::from_rows(*field_, basis_, ambient_); }

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length differs from ambient dimension");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_[i][j];
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

Subspace Subspace::orthogonal() const {
  if (basis_.empty()) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < ambient_; ++i) all.push_back(unit_vector(*field_, ambient_, i));
    return span(*field_, ambient_, all);
  }
  return span(*field_, ambient_, rank_and_kernel(basis_matrix()).kernel);
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (field_ != other.field_ || ambient_ != other.ambient_) throw std::invalid_argument("incompatible subspaces");
  std::vector<Vec> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return span(*field_, ambient_, gens);
}

Subspace Subspace::embed(const Field& target) const {
  std::vector<Vec> rows;
  for (const auto& v : basis_) rows.push_back(degenloci::embed(v, target));
  return span(target, ambient_, rows);
}

bool Subspace::defined_over_prime_subfield() const {
  for (const auto& v : basis_) {
    for (const auto& x : v) {
      if (!x.in_prime_subfield()) return false;
    }
  }
  return true;
}

Subspace Subspace::restrict_to_prime_subfield() const {
  const Field& base = field_->prime_subfield();
  std::vector<Vec> rows;
  for (const auto& v : basis_) {
    Vec w;
    for (const auto& x : v) w.push_back(x.restrict_to_prime());
    rows.push_back(std::move(w));
  }
  return span(base, ambient_, rows);
}

bool Subspace::operator==(const Subspace& o) const {
  return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

}  // namespace degenloci
