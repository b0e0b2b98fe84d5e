#pragma once

// Exact multivariate polynomials over the rationals on two variable spaces:
// the m x n matrix X, and the pair (Y, Z) of an m x r and an r x n matrix.
//
// Exponent vectors are stored in variable-ranking order, largest variable
// first. On the YZ-space the ranking is
//   Y_{m1} > ... > Y_{11} > Y_{m2} > ... > Y_{1r} > Z_{1n} > ... > Z_{11} > Z_{2n} > ... > Z_{r1}
// and monomials are compared degree-reverse-lexicographically with respect to
// it. The X-space uses row-major ranking x[1,1] > x[1,2] > ... > x[m,n] with the
// same comparison rule; it only serves as a canonical storage order there.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace detring {

using Integer = mpz_class;
using Rational = mpq_class;

enum class SpaceKind { X, YZ };

struct Variable {
  char letter;  // 'x', 'y' or 'z'
  int row;      // 1-based
  int col;      // 1-based
  auto operator<=>(const Variable&) const = default;
};

class VariableSpace {
 public:
  static VariableSpace x_space(int m, int n);
  static VariableSpace yz_space(int m, int r, int n);

  SpaceKind kind() const noexcept { return kind_; }
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  std::size_t size() const noexcept;

  // Position in ranking order; indices are 1-based and range-checked.
  std::size_t x(int i, int j) const;
  std::size_t y(int i, int j) const;
  std::size_t z(int u, int v) const;
  std::size_t index_of(const Variable& var) const;
  Variable variable(std::size_t index) const;

  std::string describe() const;
  bool operator==(const VariableSpace&) const = default;

 private:
  VariableSpace(SpaceKind kind, int m, int n, int r) : kind_(kind), m_(m), n_(n), r_(r) {}
  SpaceKind kind_;
  int m_;
  int n_;
  int r_;
};

void require_same_space(const VariableSpace& a, const VariableSpace& b);

class Monomial {
 public:
  explicit Monomial(VariableSpace space);
  Monomial(VariableSpace space, std::vector<std::int32_t> exponents);
  static Monomial variable(VariableSpace space, std::size_t index, std::int32_t power = 1);

  const VariableSpace& space() const noexcept { return space_; }
  std::span<const std::int32_t> exponents() const noexcept { return exps_; }
  std::int32_t exponent(std::size_t index) const { return exps_.at(index); }
  std::int64_t degree() const noexcept { return degree_; }
  // (Y-degree, Z-degree) on the YZ-space.
  std::pair<std::int64_t, std::int64_t> bidegree() const;
  bool is_one() const noexcept { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  Monomial pow(std::int32_t k) const;
  bool divides(const Monomial& other) const;

  bool operator==(const Monomial& other) const;
  std::string to_string() const;

 private:
  VariableSpace space_;
  std::vector<std::int32_t> exps_;
  std::int64_t degree_ = 0;
};

// Degree-reverse-lexicographic comparison along the space's variable ranking.
// Throws SpaceMismatch for monomials on different spaces.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b);

// Strict weak ordering placing larger monomials first.
struct TermOrderDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b) == std::strong_ordering::greater;
  }
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

class Polynomial {
 public:
  explicit Polynomial(VariableSpace space) : space_(space) {}
  static Polynomial constant(VariableSpace space, const Rational& c);
  static Polynomial monomial(const Monomial& mono, const Rational& c = 1);
  // Collects like terms, drops zeros, sorts descending.
  static Polynomial from_terms(VariableSpace space, std::vector<Term> terms);

  const VariableSpace& space() const noexcept { return space_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Order-maximal term; throws ValidationError on the zero polynomial.
  const Term& leading_term() const;
  std::int64_t max_degree() const;
  bool is_homogeneous() const;
  std::map<std::int64_t, Polynomial> homogeneous_components() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Monomial& mono, const Rational& c) const;
  Polynomial pow(unsigned k) const;
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }

  bool operator==(const Polynomial& g) const;
  // Canonical text in the input grammar; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  Polynomial(VariableSpace space, std::vector<Term> sorted_terms)
      : space_(space), terms_(std::move(sorted_terms)) {}
  Polynomial merge(const Polynomial& g, bool subtract) const;

  VariableSpace space_;
  std::vector<Term> terms_;  // strictly descending in the term order, no zero coefficients
};

enum class ArithOp { add, sub, mul };
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op);

inline const Term& leading_term(const Polynomial& f) { return f.leading_term(); }

// Grammar (whitespace-insensitive, 1-based indices):
//   poly    := ['+'|'-'] term (('+'|'-') term)*
//   term    := coeff | coeff '*' factors | factors
//   factors := factor ('*' factor)*
//   factor  := var ('^' uint)?
//   var     := ('x'|'y'|'z') '[' uint ',' uint ']'
//   coeff   := uint | uint '/' uint
Polynomial parse_polynomial(std::string_view text, VariableSpace space);

}  // namespace detring
