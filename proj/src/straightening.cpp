#include "detring/straightening.hpp"

#include <algorithm>

#include "detring/errors.hpp"

namespace detring {

namespace {

void sort_descending(StandardCombination& c, const Parameters& params) {
  std::vector<std::pair<Monomial, StandardTerm>> keyed;
  keyed.reserve(c.terms.size());
  for (auto& t : c.terms) keyed.emplace_back(initial_monomial_closed_form(t.bitableau, params), std::move(t));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return compare_monomials(a.first, b.first) == std::strong_ordering::greater;
  });
  c.terms.clear();
  for (auto& [mono, t] : keyed) c.terms.push_back(std::move(t));
}

}  // namespace

Polynomial StandardCombination::evaluate(const Parameters& params) const {
  Polynomial out(x_space(params));
  for (const auto& t : terms) out += eval_bitableau(t.bitableau, EvalSide::X, params).scaled(t.coefficient);
  return out;
}

std::size_t StraightenResult::total_iterations() const {
  std::size_t total = 0;
  for (const auto& [deg, count] : iterations) total += count;
  return total;
}

StraightenResult straighten_with_stats(const Polynomial& f, const Parameters& params) {
  require_same_space(f.space(), x_space(params));
  const SubstitutionMap map(params);
  MinorCache cache(params);
  StraightenResult result;
  for (const auto& [degree, component] : f.homogeneous_components()) {
    Polynomial image = phi(component, map);
    std::size_t steps = 0;
    while (!image.is_zero()) {
      const Term lead = image.leading_term();
      Bitableau sigma;
      try {
        sigma = decode_standard(lead.monomial, params);
      } catch (const DecodeError& e) {
        throw InternalError(std::string("straightening reached an undecodable leading monomial: ") + e.what());
      }
      // phi(Sigma) is monic in its initial monomial
      image -= cache.eval_yz(sigma).scaled(lead.coefficient);
      if (!image.is_zero() &&
          compare_monomials(image.leading_term().monomial, lead.monomial) != std::strong_ordering::less)
        throw InternalError("straightening step did not lower the leading monomial");
      result.combination.terms.push_back({lead.coefficient, std::move(sigma)});
      ++steps;
    }
    result.iterations.emplace_back(static_cast<int>(degree), steps);
  }
  sort_descending(result.combination, params);
  return result;
}

StandardCombination straighten(const Polynomial& f, const Parameters& params) {
  return straighten_with_stats(f, params).combination;
}

bool is_in_ideal(const Polynomial& f, const Parameters& params) {
  return phi(f, SubstitutionMap(params)).is_zero();
}

StandardCombination merge(const StandardCombination& a, const StandardCombination& b,
                          const Parameters& params) {
  std::map<Bitableau, Rational> sums;
  for (const auto* c : {&a, &b})
    for (const auto& t : c->terms) sums[t.bitableau] += t.coefficient;
  StandardCombination out;
  for (auto& [s, coeff] : sums)
    if (coeff != 0) out.terms.push_back({coeff, s});
  sort_descending(out, params);
  return out;
}

}  // namespace detring
