#pragma once

// The generic point X -> YZ of the determinantal ring and the initial
// monomials of standard bitableaux under it.

#include <map>
#include <vector>

#include "detring/poly.hpp"
#include "detring/tableaux.hpp"

namespace detring {

inline VariableSpace x_space(const Parameters& p) { return VariableSpace::x_space(p.m, p.n); }
inline VariableSpace yz_space(const Parameters& p) { return VariableSpace::yz_space(p.m, p.r, p.n); }

// Caches the product entries (YZ)_{ij} = sum_k y[i,k] z[k,j].
class SubstitutionMap {
 public:
  explicit SubstitutionMap(const Parameters& params);

  const Parameters& params() const noexcept { return params_; }
  const Polynomial& entry(int i, int j) const;  // 1-based

 private:
  Parameters params_;
  std::vector<Polynomial> entries_;  // row-major m x n
};

// Image of f under X_{ij} -> (YZ)_{ij}.
Polynomial phi(const Polynomial& f, const SubstitutionMap& map);

// Determinant of the submatrix of X (an X-space polynomial).
Polynomial minor_on_x(const Minor& minor, const Parameters& params);
// Determinant of the submatrix of YZ, expanded by Cauchy-Binet through the
// minors of Y and Z rather than through phi.
Polynomial minor_on_yz(const Minor& minor, const Parameters& params);
// Determinant of a submatrix of Y (rows of Y, columns 1..size) or of Z.
Polynomial y_minor(const std::vector<int>& rows, const std::vector<int>& cols, const Parameters& params);
Polynomial z_minor(const std::vector<int>& rows, const std::vector<int>& cols, const Parameters& params);

enum class EvalSide { X, YZ };
Polynomial eval_bitableau(const Bitableau& s, EvalSide side, const Parameters& params);

// Memoizes YZ-side minor values for repeated bitableau evaluation.
class MinorCache {
 public:
  explicit MinorCache(const Parameters& params) : params_(params) {}
  const Polynomial& yz(const Minor& minor);
  Polynomial eval_yz(const Bitableau& s);

 private:
  Parameters params_;
  std::map<Minor, Polynomial> cache_;
};

// prod_i prod_j y[a_ij, j] z[j, b_ij] for a standard bitableau in S_r.
Monomial initial_monomial_closed_form(const Bitableau& s, const Parameters& params);

// Inverse of the closed form; throws DecodeError when the monomial is not the
// initial monomial of a standard bitableau in S_r.
Bitableau decode_standard(const Monomial& mono, const Parameters& params);

}  // namespace detring
