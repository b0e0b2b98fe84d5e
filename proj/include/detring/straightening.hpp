#pragma once

// Straightening modulo I_{r+1} through the generic point: the leading monomial
// of phi(f) names a standard bitableau, which is subtracted until nothing
// is left.

#include <cstddef>
#include <vector>

#include "detring/generic_point.hpp"

namespace detring {

struct StandardTerm {
  Rational coefficient;
  Bitableau bitableau;
};

// Standard bitableaux in S_r with nonzero coefficients, ordered by descending
// closed-form initial monomial.
struct StandardCombination {
  std::vector<StandardTerm> terms;

  bool empty() const noexcept { return terms.empty(); }
  // sum_i lambda_i * Sigma_i evaluated on the X side.
  Polynomial evaluate(const Parameters& params) const;
};

struct StraightenResult {
  StandardCombination combination;
  // Subtraction steps per homogeneous degree.
  std::vector<std::pair<int, std::size_t>> iterations;
  std::size_t total_iterations() const;
};

StraightenResult straighten_with_stats(const Polynomial& f, const Parameters& params);
StandardCombination straighten(const Polynomial& f, const Parameters& params);

// f in I_{r+1} iff phi(f) = 0.
bool is_in_ideal(const Polynomial& f, const Parameters& params);

// Formal sum of two combinations (coefficients of equal bitableaux added).
StandardCombination merge(const StandardCombination& a, const StandardCombination& b,
                          const Parameters& params);

}  // namespace detring
