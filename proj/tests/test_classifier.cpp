#include <doctest.h>

#include "detring/classifier.hpp"
#include "detring/errors.hpp"

using namespace detring;

TEST_CASE("classify examples") {
  const auto p = Parameters::make(3, 3, 2);
  const auto v1 = classify(p, Ideal::p, 1);
  CHECK(v1.is_cohen_macaulay);
  CHECK(v1.is_ulrich);
  CHECK(v1.mu == 3);
  CHECK(v1.e == 3);

  const auto v2 = classify(p, Ideal::p, 2);
  CHECK(!v2.is_cohen_macaulay);
  CHECK(!v2.is_ulrich);
  CHECK(v2.mu == 6);
  CHECK(v2.e == 3);

  const auto v0 = classify(p, Ideal::p, 0);
  CHECK(v0.is_cohen_macaulay);
  CHECK(!v0.is_ulrich);
  CHECK(v0.mu == 1);

  CHECK_THROWS_AS(classify(Parameters::make(3, 3, 3), Ideal::p, 1), ValidationError);
  CHECK_THROWS_AS(classify(p, Ideal::q, -1), ValidationError);
}

TEST_CASE("verdict invariants and one Ulrich power per side, m,n <= 5") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 5; ++n)
      for (int r = 1; r < std::min(m, n); ++r) {
        const auto p = Parameters::make(m, n, r);
        for (auto ideal : {Ideal::p, Ideal::q}) {
          const int bound = ideal == Ideal::p ? m - r : n - r;
          CHECK(cm_bound(p, ideal) == bound);
          int ulrich = 0;
          for (int t = 0; t <= bound + 3; ++t) {
            const auto v = classify(p, ideal, t);
            CHECK(v.is_cohen_macaulay == (t <= bound));
            CHECK(v.is_ulrich == (t == bound));
            if (v.is_ulrich) CHECK((v.is_cohen_macaulay && v.mu == v.e));
            if (!v.is_cohen_macaulay) CHECK(v.mu > v.e);
            ulrich += v.is_ulrich;
          }
          CHECK(ulrich == 1);
        }
        if (m == n) CHECK(classify(p, Ideal::p, m - r).mu == classify(p, Ideal::q, n - r).mu);
      }
}

TEST_CASE("certify examples") {
  const auto p = Parameters::make(3, 3, 2);
  const auto c1 = certify(p, Ideal::p, 1, 6);
  CHECK(c1.kind == CertificateKind::conic);
  CHECK(c1.holds);
  CHECK(c1.agrees());
  REQUIRE(c1.conic.has_value());
  CHECK(c1.conic->equal);

  const auto c2 = certify(p, Ideal::p, 2, 6);
  CHECK(c2.kind == CertificateKind::mu_exceeds_e);
  CHECK(c2.holds);
  CHECK(c2.verdict.mu == 6);
  CHECK(c2.verdict.e == 3);
  CHECK(c2.agrees());

  const auto q = Parameters::make(2, 4, 1);
  const auto c3 = certify(q, Ideal::q, 3, 6);
  CHECK(c3.kind == CertificateKind::conic);
  CHECK(c3.agrees());
  REQUIRE(c3.conic.has_value());
  CHECK(c3.conic->params == q.transposed());
  CHECK(c3.conic->equal);

  const auto c0 = certify(p, Ideal::q, 0, 6);
  CHECK(c0.kind == CertificateKind::unit_ideal);
  CHECK(c0.agrees());
}

TEST_CASE("classify and certify agree, m,n <= 3, D = 6") {
  // the m,n <= 4 sweep runs in the acceptance suite
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 3; ++n)
      for (int r = 1; r < std::min(m, n); ++r) {
        const auto p = Parameters::make(m, n, r);
        for (auto ideal : {Ideal::p, Ideal::q})
          for (int t = 0; t <= cm_bound(p, ideal) + 1; ++t) CHECK(certify(p, ideal, t, 6).agrees());
      }
}

TEST_CASE("conic check beyond the bound fails on both sides") {
  const auto p = Parameters::make(2, 3, 1);
  CHECK(!conic_check_for(p, Ideal::p, 2, 6).equal);
  CHECK(conic_check_for(p, Ideal::q, 2, 6).equal);
  CHECK(!conic_check_for(p, Ideal::q, 3, 6).equal);
}

TEST_CASE("rank-one MCM classes") {
  using List = std::vector<std::pair<Ideal, int>>;
  CHECK(rank1_mcm_classes(Parameters::make(3, 3, 2)) == List{{Ideal::p, 0}, {Ideal::p, 1}, {Ideal::q, 1}});
  CHECK(rank1_mcm_classes(Parameters::make(4, 3, 2)) ==
        List{{Ideal::p, 0}, {Ideal::p, 1}, {Ideal::p, 2}, {Ideal::q, 1}});
  CHECK(rank1_mcm_classes(Parameters::make(2, 2, 1)) == List{{Ideal::p, 0}, {Ideal::p, 1}, {Ideal::q, 1}});
  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= 6; ++n)
      for (int r = 1; r < std::min(m, n); ++r)
        CHECK(rank1_mcm_classes(Parameters::make(m, n, r)).size() == static_cast<std::size_t>((m - r) + (n - r) + 1));
  CHECK_THROWS_AS(rank1_mcm_classes(Parameters::make(2, 3, 2)), ValidationError);
}

TEST_CASE("ideal names") {
  CHECK(std::string(to_string(Ideal::p)) == "p");
  CHECK(parse_ideal("q") == Ideal::q);
  CHECK_THROWS_AS(parse_ideal("r"), ValidationError);
}
