#pragma once

// Integer inner loops used by monomial arithmetic and cone membership.
//
// Every kernel has a scalar reference implementation; AVX2 (x86-64) and NEON
// (aarch64) variants are compiled when the toolchain supports them and one
// table is chosen at first use from the running CPU. Setting the environment
// variable DETRING_KERNELS=scalar forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace detring::kernels {

struct KernelTable {
  std::string_view name;
  // out[i] = a[i] + b[i]
  void (*add)(const std::int32_t* a, const std::int32_t* b, std::int32_t* out, std::size_t len);
  // Index of the last position where a and b differ, or -1.
  std::ptrdiff_t (*last_difference)(const std::int32_t* a, const std::int32_t* b, std::size_t len);
  std::int64_t (*sum)(const std::int32_t* a, std::size_t len);
  std::int64_t (*dot)(const std::int32_t* a, const std::int32_t* b, std::size_t len);
  // out[row] = <matrix[row, :], x> for a dense row-major matrix.
  void (*matvec)(const std::int32_t* matrix, std::size_t rows, std::size_t cols,
                 const std::int32_t* x, std::int64_t* out);
};

const KernelTable& scalar_table();
// nullptr when the variant was not compiled in or the CPU lacks the feature.
const KernelTable* avx2_table();
const KernelTable* neon_table();

// The table selected for this process.
const KernelTable& active();

inline void add(std::span<const std::int32_t> a, std::span<const std::int32_t> b,
                std::span<std::int32_t> out) {
  active().add(a.data(), b.data(), out.data(), out.size());
}

inline std::ptrdiff_t last_difference(std::span<const std::int32_t> a,
                                      std::span<const std::int32_t> b) {
  return active().last_difference(a.data(), b.data(), a.size());
}

inline std::int64_t sum(std::span<const std::int32_t> a) {
  return active().sum(a.data(), a.size());
}

inline std::int64_t dot(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  return active().dot(a.data(), b.data(), a.size());
}

inline void matvec(std::span<const std::int32_t> matrix, std::size_t rows, std::size_t cols,
                   std::span<const std::int32_t> x, std::span<std::int64_t> out) {
  active().matvec(matrix.data(), rows, cols, x.data(), out.data());
}

}  // namespace detring::kernels
