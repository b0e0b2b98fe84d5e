#include "detring/kernels.hpp"

namespace detring::kernels {
namespace {

void add_scalar(const std::int32_t* a, const std::int32_t* b, std::int32_t* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) out[i] = a[i] + b[i];
}

std::ptrdiff_t last_difference_scalar(const std::int32_t* a, const std::int32_t* b,
                                      std::size_t len) {
  for (std::size_t i = len; i-- > 0;)
    if (a[i] != b[i]) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

std::int64_t sum_scalar(const std::int32_t* a, std::size_t len) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < len; ++i) s += a[i];
  return s;
}

std::int64_t dot_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t len) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < len; ++i) s += std::int64_t{a[i]} * b[i];
  return s;
}

void matvec_scalar(const std::int32_t* matrix, std::size_t rows, std::size_t cols,
                   const std::int32_t* x, std::int64_t* out) {
  for (std::size_t r = 0; r < rows; ++r) out[r] = dot_scalar(matrix + r * cols, x, cols);
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar",        add_scalar, last_difference_scalar,
                                 sum_scalar,      dot_scalar, matvec_scalar};
  return table;
}

}  // namespace detring::kernels
