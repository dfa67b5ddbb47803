#include "degenloci/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define DEGENLOCI_HAVE_AVX2_PATH 1
#endif

namespace degenloci::kernels {

#ifdef DEGENLOCI_HAVE_AVX2_PATH

namespace {

// a * b mod p for residues below 46341: the product fits in a signed lane,
// a float quotient estimate is off by at most one and gets corrected.
__attribute__((target("avx2"))) inline __m256i mulmod8(__m256i a, __m256i b, __m256i p, __m256 inv_p) {
  const __m256i prod = _mm256_mullo_epi32(a, b);
  const __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(prod), inv_p));
  __m256i r = _mm256_sub_epi32(prod, _mm256_mullo_epi32(q, p));
  r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), r), p));
  r = _mm256_sub_epi32(r, _mm256_andnot_si256(_mm256_cmpgt_epi32(p, r), p));
  return r;
}

__attribute__((target("avx2"))) inline __m256i load8(const std::uint32_t* src) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src));
}

__attribute__((target("avx2"))) inline void store8(std::uint32_t* dst, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst), v);
}

__attribute__((target("avx2"))) void combine_avx2(const std::uint32_t* coeffs, const std::uint32_t* weights,
                                                  int terms, int entries, std::uint32_t p, std::uint32_t* out) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
  for (int e = 0; e < entries; ++e) {
    __m256i acc = _mm256_setzero_si256();
    for (int t = 0; t < terms; ++t) {
      const __m256i c = _mm256_set1_epi32(static_cast<int>(coeffs[t * entries + e]));
      acc = _mm256_add_epi32(acc, mulmod8(load8(weights + t * kLanes), c, vp, inv_p));
      acc = _mm256_sub_epi32(acc, _mm256_andnot_si256(_mm256_cmpgt_epi32(vp, acc), vp));
    }
    store8(out + e * kLanes, acc);
  }
}

__attribute__((target("avx2"))) void screen_avx2(std::uint32_t* data, int rows, int cols, std::uint32_t p,
                                                 std::uint8_t* certified) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
  __m256i failed = _mm256_setzero_si256();
  const int steps = rows < cols ? rows : cols;
  for (int c = 0; c < steps; ++c) {
    const __m256i pivot = load8(data + (c * cols + c) * kLanes);
    failed = _mm256_or_si256(failed, _mm256_cmpeq_epi32(pivot, _mm256_setzero_si256()));
    for (int r = c + 1; r < rows; ++r) {
      const __m256i f = load8(data + (r * cols + c) * kLanes);
      for (int k = c; k < cols; ++k) {
        std::uint32_t* x = data + (r * cols + k) * kLanes;
        const __m256i a = mulmod8(pivot, load8(x), vp, inv_p);
        const __m256i b = mulmod8(f, load8(data + (c * cols + k) * kLanes), vp, inv_p);
        __m256i d = _mm256_sub_epi32(a, b);
        d = _mm256_add_epi32(d, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), d), vp));
        store8(x, d);
      }
    }
  }
  alignas(32) std::uint32_t mask[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(mask), failed);
  for (int l = 0; l < kLanes; ++l) certified[l] = mask[l] ? 0 : 1;
}

}  // namespace

const KernelSet* avx2_kernels() {
  static const KernelSet set{"avx2", combine_avx2, screen_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &set : nullptr;
}

#else

const KernelSet* avx2_kernels() { return nullptr; }

#endif

}  // namespace degenloci::kernels
