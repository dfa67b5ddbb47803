#include <cstdlib>
#include <cstring>
#include <utility>

#include "degenloci/kernels.hpp"
#include "degenloci/numeric.hpp"

namespace degenloci::kernels {

namespace {

inline std::uint32_t mul32(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

void combine_scalar(const std::uint32_t* coeffs, const std::uint32_t* weights, int terms, int entries,
                    std::uint32_t p, std::uint32_t* out) {
  for (int e = 0; e < entries; ++e) {
    for (int l = 0; l < kLanes; ++l) {
      std::uint32_t acc = 0;
      for (int t = 0; t < terms; ++t) {
        acc += mul32(weights[t * kLanes + l], coeffs[t * entries + e], p);
        if (acc >= p) acc -= p;
      }
      out[e * kLanes + l] = acc;
    }
  }
}

void screen_scalar(std::uint32_t* data, int rows, int cols, std::uint32_t p, std::uint8_t* certified) {
  for (int l = 0; l < kLanes; ++l) certified[l] = 1;
  const int steps = rows < cols ? rows : cols;
  for (int c = 0; c < steps; ++c) {
    for (int l = 0; l < kLanes; ++l) {
      const std::uint32_t pivot = data[(c * cols + c) * kLanes + l];
      if (pivot == 0) certified[l] = 0;
      for (int r = c + 1; r < rows; ++r) {
        const std::uint32_t f = data[(r * cols + c) * kLanes + l];
        for (int k = c; k < cols; ++k) {
          std::uint32_t& x = data[(r * cols + k) * kLanes + l];
          const std::uint32_t a = mul32(pivot, x, p);
          const std::uint32_t b = mul32(f, data[(c * cols + k) * kLanes + l], p);
          x = a >= b ? a - b : a + p - b;
        }
      }
    }
  }
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", combine_scalar, screen_scalar};
  return set;
}

int rank_mod_p(std::uint32_t* data, int rows, int cols, std::uint32_t p) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int sel = rank;
    while (sel < rows && data[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != rank) {
      for (int k = c; k < cols; ++k) std::swap(data[sel * cols + k], data[rank * cols + k]);
    }
    const std::uint32_t inv = static_cast<std::uint32_t>(invmod(data[rank * cols + c], p));
    for (int r = rank + 1; r < rows; ++r) {
      const std::uint32_t f = mul32(data[r * cols + c], inv, p);
      if (f == 0) continue;
      for (int k = c; k < cols; ++k) {
        const std::uint32_t b = mul32(f, data[rank * cols + k], p);
        std::uint32_t& x = data[r * cols + k];
        x = x >= b ? x - b : x + p - b;
      }
    }
    ++rank;
  }
  return rank;
}

const KernelSet& active_kernels() {
  static const KernelSet* chosen = [] {
    const char* env = std::getenv("DEGENLOCI_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
    const KernelSet* simd = avx2_kernels();
    return simd ? simd : &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace degenloci::kernels
