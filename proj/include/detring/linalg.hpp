#pragma once

// Exact linear algebra: fraction-free determinants and row echelon forms of
// polynomial families with pivots on leading monomials.

#include <map>
#include <vector>

#include "detring/poly.hpp"

namespace detring {

using IntegerMatrix = std::vector<std::vector<Integer>>;

// Bareiss elimination with row pivoting; throws ValidationError if not square.
Integer det_exact(IntegerMatrix matrix);

// Incremental echelon basis of a span of polynomials. Each stored row is
// primitive with integer coefficients and has a distinct leading monomial, so
// the set of pivots is exactly the initial space of the span.
class PolynomialEchelon {
 public:
  explicit PolynomialEchelon(VariableSpace space) : space_(space) {}

  // Reduces f against the basis; returns true if it enlarged the span.
  bool insert(const Polynomial& f);
  // Fully top-reduced remainder of f (zero iff f lies in the span).
  Polynomial reduce(const Polynomial& f) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  std::vector<Monomial> leading_monomials() const;
  bool has_pivot(const Monomial& mono) const { return rows_.count(mono) != 0; }

 private:
  VariableSpace space_;
  std::map<Monomial, Polynomial, TermOrderDescending> rows_;
};

// Clears denominators and divides out the integer content; sign makes the
// leading coefficient positive.
Polynomial primitive_part(const Polynomial& f);

}  // namespace detring
