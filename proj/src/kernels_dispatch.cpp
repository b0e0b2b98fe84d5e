#include "detring/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace detring::kernels {

#if !defined(DETRING_WITH_AVX2)
const KernelTable* avx2_table() { return nullptr; }
#endif
#if !defined(DETRING_WITH_NEON)
const KernelTable* neon_table() { return nullptr; }
#endif

namespace {

const KernelTable& select_table() {
  if (const char* forced = std::getenv("DETRING_KERNELS");
      forced != nullptr && std::string_view(forced) == "scalar")
    return scalar_table();
  if (const KernelTable* t = avx2_table()) return *t;
  if (const KernelTable* t = neon_table()) return *t;
  return scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select_table();
  return table;
}

}  // namespace detring::kernels
