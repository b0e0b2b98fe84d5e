#include <doctest.h>

#include <random>
#include <vector>

#include "detring/kernels.hpp"

using namespace detring::kernels;

namespace {

std::vector<const KernelTable*> variants() {
  std::vector<const KernelTable*> out;
  if (avx2_table()) out.push_back(avx2_table());
  if (neon_table()) out.push_back(neon_table());
  return out;
}

std::vector<std::int32_t> random_vector(std::mt19937& rng, std::size_t len, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<std::int32_t> v(len);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("active table is one of the compiled variants") {
  const auto& a = active();
  bool known = &a == &scalar_table();
  for (const auto* v : variants()) known = known || &a == v;
  CHECK(known);
  CHECK(!a.name.empty());
}

TEST_CASE("vector kernels agree with the scalar reference") {
  std::mt19937 rng(1234);
  const auto& ref = scalar_table();
  for (const auto* var : variants()) {
    CAPTURE(var->name);
    for (std::size_t len : {0u, 1u, 3u, 7u, 8u, 9u, 15u, 16u, 17u, 31u, 64u, 100u}) {
      for (int rep = 0; rep < 20; ++rep) {
        auto a = random_vector(rng, len, -1000, 1000);
        auto b = random_vector(rng, len, -1000, 1000);
        std::vector<std::int32_t> o1(len), o2(len);
        ref.add(a.data(), b.data(), o1.data(), len);
        var->add(a.data(), b.data(), o2.data(), len);
        CHECK(o1 == o2);
        CHECK(ref.sum(a.data(), len) == var->sum(a.data(), len));
        CHECK(ref.dot(a.data(), b.data(), len) == var->dot(a.data(), b.data(), len));

        // sparse differences exercise the backward scan
        auto c = a;
        if (len > 0 && rep % 3 != 0) c[std::uniform_int_distribution<std::size_t>(0, len - 1)(rng)] += 1;
        CHECK(ref.last_difference(a.data(), c.data(), len) == var->last_difference(a.data(), c.data(), len));
        CHECK(ref.last_difference(a.data(), b.data(), len) == var->last_difference(a.data(), b.data(), len));
      }
    }
  }
}

TEST_CASE("matvec agrees with the scalar reference") {
  std::mt19937 rng(99);
  const auto& ref = scalar_table();
  for (const auto* var : variants()) {
    for (std::size_t rows : {1u, 4u, 13u})
      for (std::size_t cols : {1u, 5u, 8u, 12u, 33u}) {
        auto mat = random_vector(rng, rows * cols, -3, 3);
        auto x = random_vector(rng, cols, -50, 50);
        std::vector<std::int64_t> o1(rows), o2(rows);
        ref.matvec(mat.data(), rows, cols, x.data(), o1.data());
        var->matvec(mat.data(), rows, cols, x.data(), o2.data());
        CHECK(o1 == o2);
      }
  }
}

TEST_CASE("scalar reference on hand examples") {
  const auto& ref = scalar_table();
  std::vector<std::int32_t> a{1, 2, 3, 4}, b{1, 5, 3, 4};
  CHECK(ref.last_difference(a.data(), b.data(), 4) == 1);
  CHECK(ref.last_difference(a.data(), a.data(), 4) == -1);
  CHECK(ref.sum(a.data(), 4) == 10);
  CHECK(ref.dot(a.data(), b.data(), 4) == 1 + 10 + 9 + 16);
}
