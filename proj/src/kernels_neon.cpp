#include "detring/kernels.hpp"

#include <arm_neon.h>

namespace detring::kernels {

namespace {

void add_neon(const std::int32_t* a, const std::int32_t* b, std::int32_t* out, std::size_t len) {
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) vst1q_s32(out + i, vaddq_s32(vld1q_s32(a + i), vld1q_s32(b + i)));
  for (; i < len; ++i) out[i] = a[i] + b[i];
}

std::ptrdiff_t last_difference_neon(const std::int32_t* a, const std::int32_t* b,
                                    std::size_t len) {
  std::size_t end = len;
  for (std::size_t tail = len % 4; tail > 0; --tail) {
    --end;
    if (a[end] != b[end]) return static_cast<std::ptrdiff_t>(end);
  }
  while (end >= 4) {
    end -= 4;
    const uint32x4_t eq = vceqq_s32(vld1q_s32(a + end), vld1q_s32(b + end));
    if (vminvq_u32(eq) == 0) {
      for (std::size_t k = end + 4; k-- > end;)
        if (a[k] != b[k]) return static_cast<std::ptrdiff_t>(k);
    }
  }
  return -1;
}

std::int64_t sum_neon(const std::int32_t* a, std::size_t len) {
  int64x2_t acc = vdupq_n_s64(0);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) acc = vpadalq_s32(acc, vld1q_s32(a + i));
  std::int64_t s = vaddvq_s64(acc);
  for (; i < len; ++i) s += a[i];
  return s;
}

std::int64_t dot_neon(const std::int32_t* a, const std::int32_t* b, std::size_t len) {
  int64x2_t acc = vdupq_n_s64(0);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const int32x4_t va = vld1q_s32(a + i);
    const int32x4_t vb = vld1q_s32(b + i);
    acc = vmlal_s32(acc, vget_low_s32(va), vget_low_s32(vb));
    acc = vmlal_high_s32(acc, va, vb);
  }
  std::int64_t s = vaddvq_s64(acc);
  for (; i < len; ++i) s += std::int64_t{a[i]} * b[i];
  return s;
}

void matvec_neon(const std::int32_t* matrix, std::size_t rows, std::size_t cols,
                 const std::int32_t* x, std::int64_t* out) {
  for (std::size_t r = 0; r < rows; ++r) out[r] = dot_neon(matrix + r * cols, x, cols);
}

}  // namespace

const KernelTable* neon_table() {
  static const KernelTable table{"neon",   add_neon, last_difference_neon,
                                 sum_neon, dot_neon, matvec_neon};
  return &table;
}

}  // namespace detring::kernels
