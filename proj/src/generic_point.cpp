#include "detring/generic_point.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "detring/errors.hpp"

namespace detring {

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

// Leibniz expansion of a determinant whose entries are single variables.
Polynomial variable_determinant(const VariableSpace& space, std::size_t size,
                                const std::function<std::size_t(std::size_t, std::size_t)>& var) {
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  do {
    std::vector<std::int32_t> exps(space.size(), 0);
    for (std::size_t i = 0; i < size; ++i) ++exps[var(i, static_cast<std::size_t>(perm[i]))];
    terms.push_back({Monomial(space, std::move(exps)), Rational(permutation_sign(perm))});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial::from_terms(space, std::move(terms));
}

void check_minor(const Minor& minor, const Parameters& params) {
  if (!minor.fits(params.m, params.n))
    throw ValidationError("minor " + minor.to_string() + " out of range for m=" +
                          std::to_string(params.m) + " n=" + std::to_string(params.n));
}

}  // namespace

SubstitutionMap::SubstitutionMap(const Parameters& params) : params_(params) {
  const VariableSpace space = yz_space(params);
  entries_.reserve(static_cast<std::size_t>(params.m) * params.n);
  for (int i = 1; i <= params.m; ++i) {
    for (int j = 1; j <= params.n; ++j) {
      std::vector<Term> terms;
      for (int k = 1; k <= params.r; ++k)
        terms.push_back({Monomial::variable(space, space.y(i, k)) * Monomial::variable(space, space.z(k, j)),
                         Rational(1)});
      entries_.push_back(Polynomial::from_terms(space, std::move(terms)));
    }
  }
}

const Polynomial& SubstitutionMap::entry(int i, int j) const {
  if (i < 1 || i > params_.m || j < 1 || j > params_.n) throw ValidationError("entry index out of range");
  return entries_[static_cast<std::size_t>(i - 1) * params_.n + (j - 1)];
}

Polynomial phi(const Polynomial& f, const SubstitutionMap& map) {
  const Parameters& p = map.params();
  require_same_space(f.space(), x_space(p));
  const VariableSpace target = yz_space(p);
  // powers of entries are shared between terms
  std::map<std::pair<std::size_t, std::int32_t>, Polynomial> powers;
  auto power_of = [&](std::size_t var, std::int32_t e) -> const Polynomial& {
    auto it = powers.find({var, e});
    if (it == powers.end()) {
      const Variable v = f.space().variable(var);
      it = powers.emplace(std::make_pair(var, e), map.entry(v.row, v.col).pow(static_cast<unsigned>(e))).first;
    }
    return it->second;
  };
  Polynomial out(target);
  for (const auto& t : f.terms()) {
    Polynomial img = Polynomial::constant(target, t.coefficient);
    const auto exps = t.monomial.exponents();
    for (std::size_t v = 0; v < exps.size(); ++v)
      if (exps[v] != 0) img = img * power_of(v, exps[v]);
    out += img;
  }
  return out;
}

Polynomial minor_on_x(const Minor& minor, const Parameters& params) {
  check_minor(minor, params);
  const VariableSpace space = x_space(params);
  if (minor.size() == 0) return Polynomial::constant(space, 1);
  return variable_determinant(space, static_cast<std::size_t>(minor.size()), [&](std::size_t i, std::size_t j) {
    return space.x(minor.rows()[i], minor.cols()[j]);
  });
}

Polynomial y_minor(const std::vector<int>& rows, const std::vector<int>& cols, const Parameters& params) {
  const VariableSpace space = yz_space(params);
  if (rows.size() != cols.size()) throw ValidationError("y_minor needs a square index set");
  if (rows.empty()) return Polynomial::constant(space, 1);
  return variable_determinant(space, rows.size(),
                              [&](std::size_t i, std::size_t j) { return space.y(rows[i], cols[j]); });
}

Polynomial z_minor(const std::vector<int>& rows, const std::vector<int>& cols, const Parameters& params) {
  const VariableSpace space = yz_space(params);
  if (rows.size() != cols.size()) throw ValidationError("z_minor needs a square index set");
  if (rows.empty()) return Polynomial::constant(space, 1);
  return variable_determinant(space, rows.size(),
                              [&](std::size_t i, std::size_t j) { return space.z(rows[i], cols[j]); });
}

Polynomial minor_on_yz(const Minor& minor, const Parameters& params) {
  check_minor(minor, params);
  const VariableSpace space = yz_space(params);
  if (minor.size() == 0) return Polynomial::constant(space, 1);
  // Cauchy-Binet: det((YZ)_{a,b}) = sum over t-subsets K of [r] of det(Y_{a,K}) det(Z_{K,b})
  Polynomial out(space);
  for (const auto& k : subsets(params.r, minor.size()))
    out += y_minor(minor.rows(), k, params) * z_minor(k, minor.cols(), params);
  return out;
}

Polynomial eval_bitableau(const Bitableau& s, EvalSide side, const Parameters& params) {
  const VariableSpace space = side == EvalSide::X ? x_space(params) : yz_space(params);
  Polynomial out = Polynomial::constant(space, 1);
  for (const auto& f : s.factors())
    out = out * (side == EvalSide::X ? minor_on_x(f, params) : minor_on_yz(f, params));
  return out;
}

const Polynomial& MinorCache::yz(const Minor& minor) {
  auto it = cache_.find(minor);
  if (it == cache_.end()) it = cache_.emplace(minor, minor_on_yz(minor, params_)).first;
  return it->second;
}

Polynomial MinorCache::eval_yz(const Bitableau& s) {
  Polynomial out = Polynomial::constant(yz_space(params_), 1);
  for (const auto& f : s.factors()) out = out * yz(f);
  return out;
}

Monomial initial_monomial_closed_form(const Bitableau& s, const Parameters& params) {
  if (!is_standard(s)) throw ValidationError("bitableau " + s.to_string() + " is not standard");
  if (!in_standard_range(s, params))
    throw ValidationError("bitableau " + s.to_string() + " is not in S_r for r=" + std::to_string(params.r));
  const VariableSpace space = yz_space(params);
  std::vector<std::int32_t> exps(space.size(), 0);
  for (const auto& f : s.factors()) {
    for (int j = 1; j <= f.size(); ++j) {
      ++exps[space.y(f.rows()[j - 1], j)];
      ++exps[space.z(j, f.cols()[j - 1])];
    }
  }
  return Monomial(space, std::move(exps));
}

Bitableau decode_standard(const Monomial& mono, const Parameters& params) {
  const VariableSpace space = yz_space(params);
  require_same_space(mono.space(), space);
  // column j of the left tableau: y[i,j] with multiplicity, read in increasing i
  std::vector<std::vector<int>> left(static_cast<std::size_t>(params.r));
  std::vector<std::vector<int>> right(static_cast<std::size_t>(params.r));
  for (int j = 1; j <= params.r; ++j) {
    for (int i = 1; i <= params.m; ++i)
      left[j - 1].insert(left[j - 1].end(), static_cast<std::size_t>(mono.exponent(space.y(i, j))), i);
    for (int v = 1; v <= params.n; ++v)
      right[j - 1].insert(right[j - 1].end(), static_cast<std::size_t>(mono.exponent(space.z(j, v))), v);
  }
  for (int j = 0; j < params.r; ++j) {
    if (left[j].size() != right[j].size())
      throw DecodeError("monomial " + mono.to_string() + ": column " + std::to_string(j + 1) +
                        " lengths differ between Y and Z");
    if (j > 0 && left[j].size() > left[j - 1].size())
      throw DecodeError("monomial " + mono.to_string() + ": column lengths increase");
  }
  // re-pair columns into rows: row i collects the i-th entry of every column long enough
  const std::size_t rows = left.empty() ? 0 : left[0].size();
  std::vector<Minor> factors;
  factors.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<int> a;
    std::vector<int> b;
    for (int j = 0; j < params.r && left[j].size() > i; ++j) {
      a.push_back(left[j][i]);
      b.push_back(right[j][i]);
    }
    try {
      factors.emplace_back(std::move(a), std::move(b));
    } catch (const ValidationError&) {
      throw DecodeError("monomial " + mono.to_string() + ": tableau row " + std::to_string(i + 1) +
                        " is not strictly increasing");
    }
  }
  Bitableau s(std::move(factors));
  if (!is_standard(s) || !(initial_monomial_closed_form(s, params) == mono))
    throw DecodeError("monomial " + mono.to_string() + " has no standard preimage");
  return s;
}

}  // namespace detring
