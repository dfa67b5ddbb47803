#pragma once

#include <cstddef>
#include <vector>

#include "degenloci/field.hpp"

namespace degenloci {

using Vec = std::vector<Scalar>;

Vec zero_vector(const Field& f, std::size_t n);
Vec unit_vector(const Field& f, std::size_t n, std::size_t i);
Vec vector_from_ints(const Field& f, const std::vector<long long>& values);

Scalar dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& a);
bool is_zero(const Vec& a);
// Coordinatewise field embedding.
Vec embed(const Vec& a, const Field& target);
// Scales so that the first nonzero coordinate is 1. Throws on the zero vector.
Vec normalize(const Vec& a);
// Rescalings of each other (both nonzero).
bool projectively_equal(const Vec& a, const Vec& b);

// Dense row-major matrix over a single Field.
class DenseMatrix {
 public:
  DenseMatrix(const Field& f, std::size_t rows, std::size_t cols);

  static DenseMatrix identity(const Field& f, std::size_t n);
  // All rows must have length cols.
  static DenseMatrix from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);
  static DenseMatrix from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);

  const Field& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::vector<Vec> row_vectors() const;

  DenseMatrix transpose() const;
  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;
  DenseMatrix operator*(const DenseMatrix& o) const;
  Vec operator*(const Vec& v) const;
  DenseMatrix scaled(const Scalar& c) const;
  DenseMatrix embed(const Field& target) const;
  bool is_zero() const;

  bool operator==(const DenseMatrix& o) const;

 private:
  const Field* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

}  // namespace degenloci
