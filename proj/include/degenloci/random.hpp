#pragma once

#include <cstdint>
#include <random>

#include "degenloci/matrix.hpp"

namespace degenloci {

// Seeded generator whose outputs depend only on the seed: bounded draws use
// rejection on raw 64-bit words instead of library distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  long long between(long long lo, long long hi);

  // Uniform element of a finite field; integers in [-9, 9] for Q.
  Scalar element(const Field& f);
  Scalar nonzero_element(const Field& f);
  Vec vector(const Field& f, std::size_t n);
  Vec nonzero_vector(const Field& f, std::size_t n);
  DenseMatrix matrix(const Field& f, std::size_t rows, std::size_t cols);

 private:
  std::mt19937_64 engine_;
};

// Seed for an independent sub-stream (splitmix64 finaliser).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace degenloci
