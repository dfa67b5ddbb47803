#pragma once

#include <cstdint>
#include <vector>

namespace degenloci::kernels {

// Matrices over a small prime field processed eight at a time. Storage is
// lane-interleaved: entry e of lane l lives at data[e * kLanes + l].
inline constexpr int kLanes = 8;

// Products of two residues must fit in a signed 32-bit lane.
inline constexpr std::uint64_t kLanePrimeBound = 46341;

inline bool lane_prime_supported(std::uint64_t p) { return p < kLanePrimeBound; }

struct KernelSet {
  const char* name;
  // out[e][l] = sum_t weights[t][l] * coeffs[t * entries + e] mod p, where
  // weights is lane-interleaved with `terms` rows.
  void (*combine)(const std::uint32_t* coeffs, const std::uint32_t* weights, int terms, int entries,
                  std::uint32_t p, std::uint32_t* out);
  // Fraction-free elimination without row exchanges, in place, on a batch of
  // rows x cols matrices. certified[l] = 1 when every diagonal pivot of lane
  // l is nonzero, which proves rank min(rows, cols); 0 leaves it undecided.
  void (*screen_full_rank)(std::uint32_t* data, int rows, int cols, std::uint32_t p, std::uint8_t* certified);
};

const KernelSet& scalar_kernels();
// nullptr when the build or the CPU lacks AVX2.
const KernelSet* avx2_kernels();
// AVX2 when available, unless the environment sets DEGENLOCI_KERNELS=scalar.
const KernelSet& active_kernels();

// Exact rank of a row-major rows x cols matrix mod p (destroys the input).
int rank_mod_p(std::uint32_t* data, int rows, int cols, std::uint32_t p);

}  // namespace degenloci::kernels
