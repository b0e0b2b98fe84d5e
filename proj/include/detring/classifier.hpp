#pragma once

// Which powers of p and q are Cohen-Macaulay or Ulrich, with desk-scale
// certificates, and the rank-one maximal Cohen-Macaulay classes.

#include <optional>
#include <utility>
#include <vector>

#include "detring/cone.hpp"
#include "detring/counting.hpp"

namespace detring {

struct Verdict {
  Ideal ideal = Ideal::p;
  int t = 0;
  bool is_cohen_macaulay = false;
  bool is_ulrich = false;
  Integer mu;
  Integer e;
};

// Largest CM exponent: m - r for p, n - r for q.
int cm_bound(const Parameters& params, Ideal ideal);

Verdict classify(const Parameters& params, Ideal ideal, int t);

enum class CertificateKind { unit_ideal, conic, mu_exceeds_e };
const char* to_string(CertificateKind kind);

struct Certificate {
  Verdict verdict;  // from the closed-form bounds
  CertificateKind kind = CertificateKind::unit_ideal;
  bool holds = false;
  // Conic check, run on the transposed parameters for q.
  std::optional<ConicReport> conic;

  // Evidence agrees with the verdict.
  bool agrees() const;
};

Certificate certify(const Parameters& params, Ideal ideal, int t, std::int64_t degree_bound,
                    const Rational& epsilon = Rational(1, 2));

// The conic check for p^t, or for q^t via the transpose symmetry.
ConicReport conic_check_for(const Parameters& params, Ideal ideal, int t, std::int64_t degree_bound,
                            const Rational& epsilon = Rational(1, 2));

// p^0, ..., p^{m-r}, q^1, ..., q^{n-r}.
std::vector<std::pair<Ideal, int>> rank1_mcm_classes(const Parameters& params);

}  // namespace detring
