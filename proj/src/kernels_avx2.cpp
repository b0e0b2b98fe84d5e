#include "detring/kernels.hpp"

#include <immintrin.h>

namespace detring::kernels {

namespace {

void add_avx2(const std::int32_t* a, const std::int32_t* b, std::int32_t* out, std::size_t len) {
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_add_epi32(va, vb));
  }
  for (; i < len; ++i) out[i] = a[i] + b[i];
}

std::ptrdiff_t last_difference_avx2(const std::int32_t* a, const std::int32_t* b,
                                    std::size_t len) {
  std::size_t end = len;
  // scalar tail first so that the vector blocks are aligned to the front
  for (std::size_t tail = len % 8; tail > 0; --tail) {
    --end;
    if (a[end] != b[end]) return static_cast<std::ptrdiff_t>(end);
  }
  while (end >= 8) {
    end -= 8;
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + end));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + end));
    const int eq = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vb)));
    const unsigned diff = static_cast<unsigned>(~eq) & 0xFFu;
    if (diff != 0) return static_cast<std::ptrdiff_t>(end + 31 - __builtin_clz(diff));
  }
  return -1;
}

inline std::int64_t hsum_epi64(__m256i v) {
  const __m128i lo = _mm256_castsi256_si128(v);
  const __m128i hi = _mm256_extracti128_si256(v, 1);
  const __m128i s = _mm_add_epi64(lo, hi);
  return _mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1);
}

std::int64_t sum_avx2(const std::int32_t* a, std::size_t len) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(v)));
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(v, 1)));
  }
  std::int64_t s = hsum_epi64(acc);
  for (; i < len; ++i) s += a[i];
  return s;
}

std::int64_t dot_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t len) {
  // _mm256_mul_epi32 multiplies the low signed halves of each 64-bit lane, so
  // even and odd lanes are handled separately to keep full 64-bit products.
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(va, vb));
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(_mm256_srli_epi64(va, 32),
                                                 _mm256_srli_epi64(vb, 32)));
  }
  std::int64_t s = hsum_epi64(acc);
  for (; i < len; ++i) s += std::int64_t{a[i]} * b[i];
  return s;
}

void matvec_avx2(const std::int32_t* matrix, std::size_t rows, std::size_t cols,
                 const std::int32_t* x, std::int64_t* out) {
  for (std::size_t r = 0; r < rows; ++r) out[r] = dot_avx2(matrix + r * cols, x, cols);
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{"avx2",   add_avx2, last_difference_avx2,
                                 sum_avx2, dot_avx2, matvec_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &table : nullptr;
}

}  // namespace detring::kernels
