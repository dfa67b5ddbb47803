#include "degenloci/random.hpp"

#include <stdexcept>

namespace degenloci {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

long long Rng::between(long long lo, long long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Scalar Rng::element(const Field& f) {
  if (!f.is_finite()) return Scalar::from_int(f, between(-9, 9));
  std::vector<std::uint64_t> coords(f.degree());
  for (auto& c : coords) c = below(f.characteristic());
  return Scalar::from_coordinates(f, coords);
}

Scalar Rng::nonzero_element(const Field& f) {
  while (true) {
    Scalar s = element(f);
    if (!s.is_zero()) return s;
  }
}

Vec Rng::vector(const Field& f, std::size_t n) {
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(element(f));
  return v;
}

Vec Rng::nonzero_vector(const Field& f, std::size_t n) {
  while (true) {
    Vec v = vector(f, n);
    if (!is_zero(v)) return v;
  }
}

DenseMatrix Rng::matrix(const Field& f, std::size_t rows, std::size_t cols) {
  DenseMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = element(f);
  }
  return m;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace degenloci
