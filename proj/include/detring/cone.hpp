#pragma once

// Exponent vectors of initial monomials, the linear system cutting out their
// cone, the semigroup generated by the initial monomials of minors, and the
// conic-ideal witness for powers of the row ideal.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "detring/poly.hpp"
#include "detring/tableaux.hpp"

namespace detring {

// Coordinates: alpha (m x r, row-major) followed by beta (r x n, row-major).
class ExponentVector {
 public:
  explicit ExponentVector(const Parameters& params);
  ExponentVector(const Parameters& params, std::vector<std::int32_t> coords);
  static ExponentVector from_monomial(const Monomial& mono, const Parameters& params);

  const Parameters& params() const noexcept { return params_; }
  std::span<const std::int32_t> coords() const noexcept { return coords_; }
  std::int32_t alpha(int i, int j) const;  // 1-based
  std::int32_t beta(int u, int v) const;
  std::int32_t& alpha(int i, int j);
  std::int32_t& beta(int u, int v);
  std::int64_t y_degree() const;
  std::int64_t z_degree() const;
  std::int64_t total_degree() const;
  bool nonnegative() const;

  // Throws ValidationError when a coordinate is negative.
  Monomial to_monomial() const;
  // Coordinates for the transposed parameters (n, m, r): alpha' = beta^T, beta' = alpha^T.
  ExponentVector transposed() const;

  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector scaled(std::int32_t k) const;
  bool operator==(const ExponentVector& other) const { return coords_ == other.coords_; }
  auto operator<=>(const ExponentVector& other) const { return coords_ <=> other.coords_; }

  // "alpha=[[1,0],[0,1]] beta=[[1,0],[0,1]]"
  std::string to_string() const;

 private:
  Parameters params_;
  std::vector<std::int32_t> coords_;
};

std::size_t coordinate_count(const Parameters& params);
std::size_t alpha_coordinate(const Parameters& params, int i, int j);
std::size_t beta_coordinate(const Parameters& params, int u, int v);

enum class ConeVariant { E, Etilde };
enum class RowKind { eq0, geq0 };

struct ConeRow {
  RowKind kind;
  std::vector<std::int32_t> coeffs;
  std::string label;
};

// The equations and inequalities of the exponent cone. For E: diagonal
// vanishing, column partial-sum inequalities on alpha and beta, nonnegativity
// and the r coupling equations c_j = 0, where c_j = sum_i alpha_ij - sum_v beta_jv.
// Etilde keeps everything but replaces the couplings by c_j = c_{j+1},
// j < r, which frees exactly one direction: c_r = 0 cuts E back out.
class ConeSystem {
 public:
  static ConeSystem build(const Parameters& params, ConeVariant variant);

  const Parameters& params() const noexcept { return params_; }
  ConeVariant variant() const noexcept { return variant_; }
  std::size_t dimension() const noexcept { return dim_; }
  const std::vector<ConeRow>& rows() const noexcept { return rows_; }

  // Row values <row, v> for an integer vector (vectorized kernel).
  std::vector<std::int64_t> evaluate(std::span<const std::int32_t> v) const;

 private:
  ConeSystem(const Parameters& params, ConeVariant variant);
  void add_row(RowKind kind, std::vector<std::int32_t> coeffs, std::string label);

  Parameters params_;
  ConeVariant variant_;
  std::size_t dim_;
  std::vector<ConeRow> rows_;
  std::vector<std::int32_t> matrix_;  // rows_ flattened row-major
};

// Exact membership of a rational vector in the cone (rows only).
bool cone_membership(std::span<const Rational> v, const ConeSystem& system);
// Integer fast path; same semantics as the rational overload.
bool cone_membership(std::span<const std::int32_t> v, const ConeSystem& system);
bool satisfies_equations(std::span<const std::int32_t> v, const ConeSystem& system);

// Initial monomials of all t-minors of YZ, 1 <= t <= r.
std::vector<Monomial> generators_D(const Parameters& params);
// The three families: mixed t < r, pure r-minors of Y, pure r-minors of Z.
std::vector<Monomial> generators_D_tilde(const Parameters& params);

// All N-combinations of the generators with total degree <= max_total.
std::vector<ExponentVector> semigroup_points(const std::vector<Monomial>& generators,
                                             const Parameters& params, std::int64_t max_total);

struct EnumerationBounds {
  std::int64_t max_total = 0;
  std::int64_t max_alpha = -1;  // -1: no separate bound
  std::int64_t max_beta = -1;
  // per-coordinate lower bounds; empty means all zero
  std::vector<std::int32_t> lower;
};

enum class RowFilter { equations_only, all_rows };

// Integer points with each
// coordinate >= its lower bound and the given degree bounds, satisfying the
// selected rows. The search is exhaustive over the bounded box, in ascending
// coordinate order.
std::vector<ExponentVector> enumerate_points(const ConeSystem& system, const EnumerationBounds& bounds,
                                             RowFilter filter);

struct DegreeCount {
  std::int64_t semigroup = 0;
  std::int64_t cone = 0;
};

struct SemigroupReport {
  Parameters params;
  ConeVariant variant;
  std::int64_t degree_bound;
  std::map<std::int64_t, DegreeCount> by_total_degree;
  bool sets_equal = false;
  std::optional<ExponentVector> first_counterexample;
  std::string counterexample_side;  // "semigroup only" or "cone only"
  std::int64_t generators_outside_cone = 0;
  // M^k in the semigroup implies M in the semigroup, for all monomials M with k*deg(M) <= bound.
  std::int64_t power_test_cases = 0;
  bool power_test_passed = false;
  std::optional<ExponentVector> power_counterexample;

  bool passed() const { return sets_equal && power_test_passed && generators_outside_cone == 0; }
};

SemigroupReport semigroup_vs_cone(const Parameters& params, ConeVariant variant, std::int64_t degree_bound);

// Number of E lattice points of Y-degree d.
std::int64_t lattice_point_count(const Parameters& params, int y_degree);

// Displacement vector w_t: alpha_jj = t - eps, alpha_ij = -(t - eps)/(m - r)
// for j < i <= m - r + j, everything else 0.
struct Witness {
  Parameters params;
  int t = 0;
  Rational epsilon;
  std::vector<Rational> w;

  static Witness make(const Parameters& params, int t, const Rational& epsilon);
};

struct ConicReport {
  Parameters params;
  int t = 0;
  Rational epsilon;
  std::int64_t degree_bound = 0;
  bool predicted = false;  // t <= m - r
  bool equal = false;
  std::int64_t window_points = 0;
  std::int64_t e_t_points = 0;       // {v in E : alpha_rr >= t}
  std::int64_t shifted_points = 0;   // {v in ZE : v - w in the cone}
  std::optional<ExponentVector> counterexample;
  std::string counterexample_side;

  // The check behaves as the theory predicts: equality iff t <= m - r.
  bool as_predicted() const { return equal == predicted; }
};

// Compares both sets on the window of lattice points v with v >= min(0, ceil(w))
// coordinatewise and total degree <= degree_bound.
ConicReport conic_equality_check(const Parameters& params, int t, const Witness& witness,
                                 std::int64_t degree_bound);

}  // namespace detring
