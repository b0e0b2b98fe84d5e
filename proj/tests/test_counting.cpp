#include <doctest.h>

#include "detring/counting.hpp"
#include "detring/errors.hpp"
#include "oracles.hpp"

using namespace detring;

namespace {

IntegerMatrix make(std::initializer_list<std::initializer_list<long>> rows) {
  IntegerMatrix out;
  for (const auto& row : rows) {
    std::vector<Integer> r;
    for (long x : row) r.emplace_back(x);
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("det_exact examples") {
  CHECK(det_exact(make({{6, 3}, {4, 3}})) == 6);
  CHECK(det_exact(make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
  CHECK(det_exact(make({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}})) == 0);
  CHECK(det_exact(make({{0, 1}, {1, 0}})) == -1);
  CHECK(det_exact(IntegerMatrix{}) == 1);
  CHECK_THROWS_AS(det_exact(make({{1, 2}})), ValidationError);
}

TEST_CASE("det_exact agrees with cofactor expansion on random matrices") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-30, 30);
  std::uniform_int_distribution<int> zero(0, 3);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + k % 6;
    IntegerMatrix a(n, std::vector<Integer>(n));
    for (auto& row : a)
      for (auto& x : row) x = zero(rng) == 0 ? 0 : entry(rng);
    CHECK(det_exact(a) == oracle::det(a));
  }
  // big entries
  IntegerMatrix big(3, std::vector<Integer>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) big[i][j] = Integer("123456789012345678901234567890") * (i + 2 * j + 1) + i * j * j;
  CHECK(det_exact(big) == oracle::det(big));
}

TEST_CASE("binomial convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("mu_power examples") {
  const auto p = Parameters::make(3, 3, 2);
  CHECK(mu_power(p, Ideal::p, 1) == 3);
  CHECK(mu_power(p, Ideal::p, 2) == 6);
  CHECK(mu_power(p, Ideal::p, 0) == 1);
  CHECK(mu_power_direct(p, Ideal::p, 2) == 6);
  CHECK(mu_power_direct(p, Ideal::p, 1) == 3);
  CHECK(binomial_matrix(p, BinomialRule::mu_p, 2) == make({{6, 3}, {4, 3}}));
  for (int n = 2; n <= 6; ++n)
    for (int t = 1; t <= 4; ++t) {
      const auto q = Parameters::make(2, n, 1);
      CHECK(mu_power(q, Ideal::p, t) == oracle::binomial(t + n - 1, n - 1));
    }
  CHECK(mu_power(Parameters::make(4, 3, 2), Ideal::q, 2) == mu_power_direct(Parameters::make(4, 3, 2), Ideal::q, 2));
  CHECK_THROWS_AS(mu_power(Parameters::make(3, 3, 3), Ideal::p, 1), ValidationError);
  CHECK_THROWS_AS(mu_power(p, Ideal::p, -1), ValidationError);
}

TEST_CASE("determinant formula equals enumeration, m,n <= 5, t <= 4") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 5; ++n)
      for (int r = 1; r < std::min(m, n); ++r)
        for (int t = 1; t <= 4; ++t) {
          const auto p = Parameters::make(m, n, r);
          CHECK(mu_power(p, Ideal::p, t) == mu_power_direct(p, Ideal::p, t));
          CHECK(mu_power(p, Ideal::q, t) == mu_power_direct(p, Ideal::q, t));
          CHECK(mu_power(p, Ideal::p, t) == Integer(static_cast<long>(oracle::rectangular_tableaux(r, n, t))));
          CHECK(mu_power(p, Ideal::q, t) == Integer(static_cast<long>(oracle::rectangular_tableaux(r, m, t))));
          // transpose symmetry
          CHECK(mu_power(p, Ideal::p, t) == mu_power(p.transposed(), Ideal::q, t));
        }
}

TEST_CASE("multiplicity examples and e = mu at the CM bound, m,n <= 6") {
  CHECK(multiplicity(Parameters::make(2, 2, 1)) == 2);
  CHECK(multiplicity(Parameters::make(3, 3, 2)) == 3);
  CHECK(multiplicity(Parameters::make(3, 2, 1)) == 3);
  CHECK(binomial_matrix(Parameters::make(3, 3, 2), BinomialRule::multiplicity) == make({{6, 3}, {3, 2}}));
  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= 6; ++n)
      for (int r = 1; r < std::min(m, n); ++r) {
        const auto p = Parameters::make(m, n, r);
        const Integer e = multiplicity(p);
        CHECK(mu_power(p, Ideal::p, m - r) == e);
        CHECK(mu_power(p, Ideal::q, n - r) == e);
      }
}

TEST_CASE("mu(p^t) is strictly increasing in t") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 5; ++n)
      for (int r = 1; r < std::min(m, n); ++r) {
        const auto p = Parameters::make(m, n, r);
        for (int t = 1; t <= 5; ++t) CHECK(mu_power(p, Ideal::p, t + 1) > mu_power(p, Ideal::p, t));
      }
}

TEST_CASE("hodge_dim") {
  CHECK(hodge_dim(2, 3, 1) == 3);
  CHECK(hodge_dim(2, 4, 1) == 6);
  CHECK(hodge_dim(2, 4, 0) == 1);
  CHECK(hodge_dim(3, 5, 2) == Integer(static_cast<long>(oracle::rectangular_tableaux(3, 5, 2))));
  CHECK_THROWS_AS(hodge_dim(3, 2, 1), ValidationError);
  CHECK_THROWS_AS(hodge_dim(0, 2, 1), ValidationError);
}

TEST_CASE("hilbert function examples") {
  const auto p = Parameters::make(2, 2, 1);
  for (auto method : {HilbertMethod::bitableaux, HilbertMethod::lattice, HilbertMethod::rank}) {
    CHECK(hilbert_function(p, 2, method) == 9);
    CHECK(hilbert_function(Parameters::make(3, 2, 2), 0, method) == 1);
    CHECK(hilbert_function(Parameters::make(2, 2, 2), 2, method) == 10);
  }
  CHECK(parse_hilbert_method("rank") == HilbertMethod::rank);
  CHECK_THROWS_AS(parse_hilbert_method("magic"), ValidationError);
}

TEST_CASE("three-way Hilbert agreement, m,n <= 3, d <= 3") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int r = 1; r <= std::min(m, n); ++r)
        for (int d = 0; d <= 3; ++d) {
          const auto p = Parameters::make(m, n, r);
          const auto a = hilbert_function(p, d, HilbertMethod::bitableaux);
          CHECK(a == hilbert_function(p, d, HilbertMethod::lattice));
          CHECK(a == hilbert_function(p, d, HilbertMethod::rank));
          CHECK(a == Integer(static_cast<long>(oracle::standard_count(p, d))));
        }
}

TEST_CASE("bitableaux and lattice Hilbert functions agree, m,n <= 4, d <= 5") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int r = 1; r <= std::min(m, n); ++r)
        for (int d = 0; d <= 5; ++d) {
          const auto p = Parameters::make(m, n, r);
          CHECK(hilbert_function(p, d, HilbertMethod::bitableaux) == hilbert_function(p, d, HilbertMethod::lattice));
        }
}

TEST_CASE("R_{r+1} = K[X] when r = min(m,n)") {
  // dim K[X]_d = C(mn + d - 1, d)
  for (const auto& p : {Parameters::make(2, 2, 2), Parameters::make(2, 3, 2)})
    for (int d = 0; d <= 3; ++d)
      CHECK(hilbert_function(p, d, HilbertMethod::bitableaux) == oracle::binomial(p.m * p.n + d - 1, d));
}
