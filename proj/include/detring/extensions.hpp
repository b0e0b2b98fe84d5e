#pragma once

// The SL-invariant ring generated by the entries of YZ and the maximal minors
// of Y and Z, its initial algebra, and the initial ideals of the ideals
// I(X; delta) generated by the minors not above a fixed minor delta.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detring/cone.hpp"
#include "detring/generic_point.hpp"

namespace detring {

// mn product entries, C(m,r) maximal minors of Y, C(n,r) maximal minors of Z.
std::vector<Polynomial> generators_R_tilde(const Parameters& params);

struct BidegreeCount {
  std::int64_t cone = 0;   // Etilde lattice points
  std::int64_t basis = 0;  // (minor products) x (standard bitableaux)
};

struct TildeReport {
  Parameters params;
  std::int64_t degree_bound = 0;
  SemigroupReport semigroup;
  // Family monomials that are not the leading term of their generator polynomial.
  std::int64_t leading_term_mismatches = 0;
  std::int64_t family_size = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, BidegreeCount> by_bidegree;
  bool bidegree_counts_equal = false;
  // (d, d) Etilde counts agree with the E counts.
  bool diagonal_matches_e = false;
  // Etilde against E: the non-coupling rows agree, and the Etilde equations
  // together with the j = r coupling span exactly the E equations.
  bool non_coupling_rows_identical = false;
  std::size_t equation_rank_e = 0;
  std::size_t equation_rank_etilde = 0;
  std::size_t equation_rank_etilde_with_last = 0;
  std::size_t equation_rank_joint = 0;
  bool structural_difference_ok = false;
  // Generators violating c_j = 0 for all j < r (the couplings of E with j = r
  // simply deleted).
  std::int64_t literal_system_generators_outside = 0;

  bool passed() const {
    return semigroup.passed() && leading_term_mismatches == 0 && bidegree_counts_equal && diagonal_matches_e &&
           structural_difference_ok;
  }
};

TildeReport verify_D_tilde(const Parameters& params, std::int64_t degree_bound);

// Number of basis monomials of the invariant ring in bidegree (d1, d2).
std::int64_t tilde_basis_count(const Parameters& params, int d1, int d2);

// Variables whose presence in a D-monomial marks it as an initial monomial of
// I(X; delta). Requires r = min(m, n).
std::vector<Variable> ladder_variable_set(const Parameters& params, const Minor& delta);

struct LadderDegree {
  int degree = 0;
  std::size_t spanning_polynomials = 0;
  std::size_t initial_dimension = 0;  // dim in(I(X;delta))_d
  std::size_t predicted_dimension = 0;  // D-monomials touching V(delta)
  std::size_t d_monomials = 0;
  bool equal = false;
};

struct LadderReport {
  Parameters params;
  Minor delta;
  int max_degree = 0;
  std::vector<Variable> variables;
  std::vector<LadderDegree> degrees;
  std::size_t prime_pairs_checked = 0;
  std::size_t prime_failures = 0;
  std::optional<std::string> first_mismatch;

  bool passed() const;
};

LadderReport verify_ladder(const Parameters& params, const Minor& delta, int max_degree);

}  // namespace detring
