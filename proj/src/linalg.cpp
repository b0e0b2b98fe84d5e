#include "detring/linalg.hpp"

#include "detring/errors.hpp"

namespace detring {

Integer det_exact(IntegerMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw ValidationError("det_exact needs a square matrix");
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1;
  for (const auto& t : f.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
  Integer content = 0;
  for (const auto& t : f.terms()) {
    const Integer num = t.coefficient.get_num() * (den_lcm / t.coefficient.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(den_lcm, content);
  scale.canonicalize();
  if (sgn(f.leading_term().coefficient) < 0) scale = -scale;
  return f.scaled(scale);
}

bool PolynomialEchelon::insert(const Polynomial& f) {
  Polynomial rem = reduce(f);
  if (rem.is_zero()) return false;
  Monomial lead = rem.leading_term().monomial;
  rows_.emplace(std::move(lead), std::move(rem));
  return true;
}

Polynomial PolynomialEchelon::reduce(const Polynomial& f) const {
  require_same_space(space_, f.space());
  Polynomial p = primitive_part(f);
  while (!p.is_zero()) {
    const Term& lead = p.leading_term();
    auto it = rows_.find(lead.monomial);
    if (it == rows_.end()) break;
    // fraction-free step: lc(pivot) * p - lc(p) * pivot
    const Rational lc_p = lead.coefficient;
    const Rational lc_b = it->second.leading_term().coefficient;
    p = primitive_part(p.scaled(lc_b) - it->second.scaled(lc_p));
  }
  return p;
}

std::vector<Monomial> PolynomialEchelon::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(rows_.size());
  for (const auto& [mono, row] : rows_) out.push_back(mono);
  return out;
}

}  // namespace detring
