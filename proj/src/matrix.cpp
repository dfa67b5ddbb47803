#include "degenloci/matrix.hpp"

#include <stdexcept>

namespace degenloci {

namespace {

void require_len(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
}

}  // namespace

Vec zero_vector(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

Vec vector_from_ints(const Field& f, const std::vector<long long>& values) {
  Vec v;
  v.reserve(values.size());
  for (long long x : values) v.push_back(Scalar::from_int(f, x));
  return v;
}

Scalar dot(const Vec& a, const Vec& b) {
  require_len(a, b);
  if (a.empty()) throw std::invalid_argument("dot product of empty vectors");
  Scalar s = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec operator+(const Vec& a, const Vec& b) {
  require_len(a, b);
  Vec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  require_len(a, b);
  Vec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

Vec operator*(const Scalar& c, const Vec& a) {
  Vec r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(c * x);
  return r;
}

bool is_zero(const Vec& a) {
  for (const auto& x : a) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec embed(const Vec& a, const Field& target) {
  Vec r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x.embed(target));
  return r;
}

Vec normalize(const Vec& a) {
  for (const auto& x : a) {
    if (!x.is_zero()) return x.inverse() * a;
  }
  throw std::invalid_argument("cannot normalize the zero vector");
}

bool projectively_equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  return normalize(a) == normalize(b);
}

DenseMatrix::DenseMatrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

DenseMatrix DenseMatrix::identity(const Field& f, std::size_t n) {
  DenseMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

DenseMatrix DenseMatrix::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
  DenseMatrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (&rows[r][c].field() != &f) throw FieldMismatch("matrix entry from " + rows[r][c].field().name());
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

DenseMatrix DenseMatrix::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::vector<Vec> vs;
  for (const auto& r : rows) vs.push_back(vector_from_ints(f, r));
  return from_rows(f, vs, cols);
}

Vec DenseMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec DenseMatrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vec> DenseMatrix::row_vectors() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(*field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  DenseMatrix m(*field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  DenseMatrix m(*field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  DenseMatrix m(*field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) m(r, c) += a * o(k, c);
    }
  }
  return m;
}

Vec DenseMatrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec out = zero_vector(*field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

DenseMatrix DenseMatrix::scaled(const Scalar& c) const {
  DenseMatrix m(*field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = c * data_[i];
  return m;
}

DenseMatrix DenseMatrix::embed(const Field& target) const {
  DenseMatrix m(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].embed(target);
  return m;
}

bool DenseMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

}  // namespace degenloci
