#include <doctest.h>

#include "detring/cone.hpp"
#include "detring/errors.hpp"
#include "oracles.hpp"

using namespace detring;

TEST_CASE("parameters") {
  CHECK_NOTHROW(Parameters::make(2, 3, 2));
  CHECK_THROWS_AS(Parameters::make(2, 3, 3), ValidationError);
  CHECK_THROWS_AS(Parameters::make(0, 3, 1), ValidationError);
  CHECK_THROWS_AS(Parameters::make(2, 2, 0), ValidationError);
  CHECK_THROWS_AS(Parameters::make(2, 3, 2).require_proper(), ValidationError);
  CHECK_NOTHROW(Parameters::make(3, 3, 2).require_proper());
  CHECK(Parameters::make(2, 4, 1).transposed() == Parameters::make(4, 2, 1));
}

TEST_CASE("minor text form") {
  const Minor m({1, 2}, {1, 3});
  CHECK(m.to_string() == "[1 2|1 3]");
  CHECK(Minor::parse("[1 2|1 3]") == m);
  CHECK(Minor::parse(" [ 2 | 3 ] ") == Minor({2}, {3}));
  CHECK_THROWS_AS(Minor::parse("[2 1|1 2]"), ValidationError);
  CHECK_THROWS_AS(Minor::parse("[1 2|1]"), ValidationError);
  CHECK_THROWS_AS(Minor::parse("[1 2|1 2"), ValidationError);
  CHECK_THROWS_AS(Minor({1, 1}, {1, 2}), ValidationError);
  CHECK(m.fits(2, 3));
  CHECK(!m.fits(2, 2));
}

TEST_CASE("minor_leq examples") {
  CHECK(minor_leq(Minor({1, 2}, {1, 2}), Minor({1}, {1})));
  CHECK(!minor_leq(Minor({1}, {2}), Minor({2}, {1})));
  CHECK(!minor_leq(Minor({2}, {1}), Minor({1}, {2})));
  CHECK(!minor_leq(Minor({1}, {1}), Minor({1, 2}, {1, 2})));
}

TEST_CASE("minor_leq is a partial order, m,n <= 3") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const auto minors = all_minors(m, n);
      for (const auto& a : minors) {
        CHECK(minor_leq(a, a));
        for (const auto& b : minors) {
          CHECK(minor_leq(a, b) == oracle::leq(a, b));
          if (minor_leq(a, b) && minor_leq(b, a)) CHECK(a == b);
          if (!minor_leq(a, b)) continue;
          for (const auto& c : minors)
            if (minor_leq(b, c)) CHECK(minor_leq(a, c));
        }
      }
    }
}

TEST_CASE("bitableau basics") {
  const auto s = Bitableau::parse("[1 2|1 2][2|3]");
  CHECK(s.shape() == std::vector<int>{2, 1});
  CHECK(s.degree() == 3);
  CHECK(s.to_string() == "[1 2|1 2][2|3]");
  CHECK(Bitableau().to_string() == "[|]");
  CHECK(Bitableau::parse("[|]").empty());
  CHECK_THROWS_AS(Bitableau::parse("[1|1][1 2|1 2]"), ValidationError);
}

TEST_CASE("is_standard examples") {
  CHECK(is_standard(Bitableau::parse("[1 2|1 2][2|2]")));
  CHECK(!is_standard(Bitableau::parse("[1|2][2|1]")));
  CHECK(is_standard(Bitableau()));
}

TEST_CASE("enumerate_standard examples") {
  CHECK(enumerate_standard(Parameters::make(2, 2, 1), 2).size() == 9);
  for (const auto& p : {Parameters::make(2, 2, 1), Parameters::make(3, 4, 2)}) {
    const auto zero = enumerate_standard(p, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());
  }
  std::size_t fixed = 0;
  for (const auto& s : enumerate_standard(Parameters::make(3, 3, 2), 4)) {
    if (s.shape() != std::vector<int>{2, 2}) continue;
    if (s.factors()[0].rows() == std::vector<int>{1, 2} && s.factors()[1].rows() == std::vector<int>{1, 2}) ++fixed;
  }
  CHECK(fixed == 6);
}

TEST_CASE("enumerate_standard: standard, in range, sorted, deterministic, matches brute force") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int r = 1; r <= std::min(m, n); ++r)
        for (int d = 0; d <= 4; ++d) {
          const auto p = Parameters::make(m, n, r);
          const auto list = enumerate_standard(p, d);
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(r);
          CAPTURE(d);
          CHECK(list == enumerate_standard(p, d));
          CHECK(std::is_sorted(list.begin(), list.end()));
          CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
          for (const auto& s : list) {
            CHECK(is_standard(s));
            CHECK(in_standard_range(s, p));
            CHECK(s.degree() == d);
            const auto shape = s.shape();
            CHECK(std::is_sorted(shape.rbegin(), shape.rend()));
          }
          CHECK(list.size() == oracle::standard_count(p, d));
        }
}

TEST_CASE("standard bitableau count equals cone lattice-point count, m,n <= 4, d <= 4") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int r = 1; r <= std::min(m, n); ++r)
        for (int d = 0; d <= 4; ++d) {
          const auto p = Parameters::make(m, n, r);
          CHECK(static_cast<std::int64_t>(enumerate_standard(p, d).size()) == lattice_point_count(p, d));
        }
}

TEST_CASE("generators_gamma") {
  const auto rows = generators_gamma(Parameters::make(3, 3, 2), Side::rows);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].to_string() == "[1 2|1 2]");
  CHECK(rows[1].to_string() == "[1 2|1 3]");
  CHECK(rows[2].to_string() == "[1 2|2 3]");
  CHECK(generators_gamma(Parameters::make(4, 3, 2), Side::cols).size() == 6);
  const auto small = generators_gamma(Parameters::make(2, 2, 1), Side::rows);
  CHECK(small == std::vector<Minor>{Minor({1}, {1}), Minor({1}, {2})});
}

TEST_CASE("partitions and tableaux") {
  CHECK(partitions(4, 2) == std::vector<std::vector<int>>{{2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  // semistandard tableaux of shape (2,1) with entries <= 3: 8
  CHECK(enumerate_tableaux({2, 1}, 3).size() == 8);
  CHECK(subsets(4, 2).size() == 6);
}
