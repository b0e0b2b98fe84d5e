#include "detring/extensions.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "detring/errors.hpp"
#include "detring/linalg.hpp"

namespace detring {

namespace {

std::size_t rational_rank(const std::vector<std::vector<std::int32_t>>& rows) {
  std::vector<std::vector<Rational>> mat;
  for (const auto& row : rows) mat.emplace_back(row.begin(), row.end());
  std::size_t rank = 0;
  const std::size_t cols = mat.empty() ? 0 : mat.front().size();
  for (std::size_t c = 0; c < cols && rank < mat.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < mat.size() && mat[pivot][c] == 0) ++pivot;
    if (pivot == mat.size()) continue;
    std::swap(mat[pivot], mat[rank]);
    for (std::size_t k = rank + 1; k < mat.size(); ++k) {
      if (mat[k][c] == 0) continue;
      const Rational f = mat[k][c] / mat[rank][c];
      for (std::size_t x = c; x < cols; ++x) mat[k][x] -= f * mat[rank][x];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<Polynomial> generators_R_tilde(const Parameters& params) {
  std::vector<Polynomial> out;
  const SubstitutionMap map(params);
  for (int i = 1; i <= params.m; ++i)
    for (int j = 1; j <= params.n; ++j) out.push_back(map.entry(i, j));
  std::vector<int> first(static_cast<std::size_t>(params.r));
  for (int k = 0; k < params.r; ++k) first[k] = k + 1;
  for (const auto& a : subsets(params.m, params.r)) out.push_back(y_minor(a, first, params));
  for (const auto& b : subsets(params.n, params.r)) out.push_back(z_minor(first, b, params));
  return out;
}

std::int64_t tilde_basis_count(const Parameters& params, int d1, int d2) {
  if (d1 < 0 || d2 < 0) return 0;
  const int diff = d1 - d2;
  if (diff % params.r != 0) return 0;
  const int t = std::abs(diff) / params.r;
  const int degree = std::max(d1, d2);
  std::int64_t count = 0;
  for (const auto& sigma : enumerate_standard(params, degree)) {
    int hits = 0;
    for (const auto& f : sigma.factors()) {
      if (f.size() != params.r) continue;
      const auto& fixed = diff > 0 ? f.cols() : f.rows();
      bool initial = true;
      for (int k = 0; k < params.r; ++k) initial = initial && fixed[k] == k + 1;
      hits += initial;
    }
    count += hits >= t;
  }
  return count;
}

TildeReport verify_D_tilde(const Parameters& params, std::int64_t degree_bound) {
  TildeReport report;
  report.params = params;
  report.degree_bound = degree_bound;
  report.semigroup = semigroup_vs_cone(params, ConeVariant::Etilde, degree_bound);

  // leading terms of the mixed t-minors (t < r) of YZ and of the maximal minors of Y and Z
  const auto family = generators_D_tilde(params);
  report.family_size = static_cast<std::int64_t>(family.size());
  std::vector<Polynomial> sources;
  for (int t = 1; t < params.r; ++t)
    for (const auto& a : subsets(params.m, t))
      for (const auto& b : subsets(params.n, t)) sources.push_back(minor_on_yz(Minor(a, b), params));
  const auto invariants = generators_R_tilde(params);
  const std::size_t entries = static_cast<std::size_t>(params.m) * params.n;
  sources.insert(sources.end(), invariants.begin() + static_cast<std::ptrdiff_t>(entries), invariants.end());
  if (sources.size() != family.size()) {
    report.leading_term_mismatches = static_cast<std::int64_t>(std::max(sources.size(), family.size()));
  } else {
    for (std::size_t k = 0; k < family.size(); ++k) {
      const Term& lt = sources[k].leading_term();
      if (!(lt.monomial == family[k]) || lt.coefficient != 1) ++report.leading_term_mismatches;
    }
  }

  // bigraded counts of Etilde lattice points against the basis description
  const ConeSystem tilde = ConeSystem::build(params, ConeVariant::Etilde);
  EnumerationBounds bounds;
  bounds.max_total = degree_bound;
  for (std::int64_t d1 = 0; d1 <= degree_bound; ++d1)
    for (std::int64_t d2 = 0; d1 + d2 <= degree_bound; ++d2) report.by_bidegree[{d1, d2}];
  for (const auto& v : enumerate_points(tilde, bounds, RowFilter::all_rows))
    ++report.by_bidegree[{v.y_degree(), v.z_degree()}].cone;
  report.bidegree_counts_equal = true;
  report.diagonal_matches_e = true;
  for (auto& [bideg, count] : report.by_bidegree) {
    count.basis = tilde_basis_count(params, static_cast<int>(bideg.first), static_cast<int>(bideg.second));
    if (count.basis != count.cone) report.bidegree_counts_equal = false;
    if (bideg.first == bideg.second &&
        count.cone != lattice_point_count(params, static_cast<int>(bideg.first)))
      report.diagonal_matches_e = false;
  }

  // Etilde differs from E by exactly one coupling equation
  const ConeSystem e = ConeSystem::build(params, ConeVariant::E);
  auto is_coupling = [](const ConeRow& row) { return row.label.rfind("coupling", 0) == 0; };
  auto rows_of = [&](const ConeSystem& sys, bool coupling) {
    std::vector<std::pair<int, std::vector<std::int32_t>>> out;
    for (const auto& row : sys.rows())
      if (is_coupling(row) == coupling) out.emplace_back(static_cast<int>(row.kind), row.coeffs);
    std::sort(out.begin(), out.end());
    return out;
  };
  report.non_coupling_rows_identical = rows_of(e, false) == rows_of(tilde, false);
  std::vector<std::vector<std::int32_t>> eq_e;
  std::vector<std::vector<std::int32_t>> eq_tilde;
  std::vector<std::int32_t> last;
  for (const auto& row : e.rows())
    if (row.kind == RowKind::eq0) {
      eq_e.push_back(row.coeffs);
      if (row.label == "coupling j=" + std::to_string(params.r)) last = row.coeffs;
    }
  for (const auto& row : tilde.rows())
    if (row.kind == RowKind::eq0) eq_tilde.push_back(row.coeffs);
  report.equation_rank_e = rational_rank(eq_e);
  report.equation_rank_etilde = rational_rank(eq_tilde);
  auto with_last = eq_tilde;
  if (!last.empty()) with_last.push_back(last);
  report.equation_rank_etilde_with_last = rational_rank(with_last);
  auto joint = eq_tilde;
  joint.insert(joint.end(), eq_e.begin(), eq_e.end());
  report.equation_rank_joint = rational_rank(joint);
  report.structural_difference_ok = report.non_coupling_rows_identical && !last.empty() &&
                                    report.equation_rank_e == report.equation_rank_etilde + 1 &&
                                    report.equation_rank_etilde_with_last == report.equation_rank_e &&
                                    report.equation_rank_joint == report.equation_rank_e;

  for (const auto& g : family) {
    const auto ev = ExponentVector::from_monomial(g, params);
    bool inside = cone_membership(ev.coords(), tilde);
    for (int j = 1; j < params.r; ++j) {
      std::int64_t c = 0;
      for (int i = 1; i <= params.m; ++i) c += ev.alpha(i, j);
      for (int v = 1; v <= params.n; ++v) c -= ev.beta(j, v);
      inside = inside && c == 0;
    }
    report.literal_system_generators_outside += !inside;
  }
  return report;
}

// ---------------------------------------------------------------- ladder

std::vector<Variable> ladder_variable_set(const Parameters& params, const Minor& delta) {
  if (params.r != std::min(params.m, params.n))
    throw ValidationError("ladder computations need r = min(m, n)");
  if (delta.size() == 0 || !delta.fits(params.m, params.n))
    throw ValidationError("delta " + delta.to_string() + " is not a minor of X");
  std::set<Variable> vars;
  const int t = delta.size();
  for (int i = 1; i <= t; ++i) {
    for (int c = 1; c < delta.rows()[i - 1]; ++c) vars.insert({'y', c, i});
    for (int d = 1; d < delta.cols()[i - 1]; ++d) vars.insert({'z', i, d});
  }
  if (t < params.r)
    for (int c = 1; c <= params.m; ++c) vars.insert({'y', c, t + 1});
  return {vars.begin(), vars.end()};
}

bool LadderReport::passed() const {
  return !first_mismatch && prime_failures == 0 &&
         std::all_of(degrees.begin(), degrees.end(), [](const LadderDegree& d) { return d.equal; });
}

namespace {

void for_each_monomial(const VariableSpace& space, int degree, const std::function<void(const Monomial&)>& visit) {
  std::vector<std::int32_t> exps(space.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int budget) {
    if (var + 1 == exps.size()) {
      exps[var] = budget;
      visit(Monomial(space, exps));
      exps[var] = 0;
      return;
    }
    for (int e = budget; e >= 0; --e) {
      exps[var] = e;
      rec(var + 1, budget - e);
    }
    exps[var] = 0;
  };
  if (degree >= 0) rec(0, degree);
}

}  // namespace

LadderReport verify_ladder(const Parameters& params, const Minor& delta, int max_degree) {
  LadderReport report;
  report.params = params;
  report.delta = delta;
  report.max_degree = max_degree;
  report.variables = ladder_variable_set(params, delta);
  if (max_degree < 0) throw ValidationError("max degree must be nonnegative");

  const VariableSpace xs = x_space(params);
  const VariableSpace yz = yz_space(params);
  const SubstitutionMap map(params);
  std::vector<std::size_t> v_indices;
  for (const auto& var : report.variables) v_indices.push_back(yz.index_of(var));
  auto touches_v = [&](const Monomial& mono) {
    return std::any_of(v_indices.begin(), v_indices.end(), [&](std::size_t k) { return mono.exponent(k) > 0; });
  };

  std::vector<Minor> generators;
  for (const auto& gamma : all_minors(params.m, params.n))
    if (!minor_leq(delta, gamma)) generators.push_back(gamma);

  // initial spaces of phi(I(X;delta)) and the D-monomials, per degree
  std::vector<std::set<Monomial, TermOrderDescending>> initial(static_cast<std::size_t>(max_degree) + 1);
  std::vector<std::vector<Monomial>> d_monomials(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 0; d <= max_degree; ++d) {
    LadderDegree deg;
    deg.degree = d;
    PolynomialEchelon echelon(yz);
    for (const auto& gamma : generators) {
      if (gamma.size() > d) continue;
      const Polynomial gx = minor_on_x(gamma, params);
      for_each_monomial(xs, d - gamma.size(), [&](const Monomial& mono) {
        echelon.insert(phi(gx.times(mono, 1), map));
        ++deg.spanning_polynomials;
      });
    }
    const auto lms = echelon.leading_monomials();
    initial[d].insert(lms.begin(), lms.end());
    deg.initial_dimension = initial[d].size();

    std::set<Monomial, TermOrderDescending> predicted;
    for (const auto& sigma : enumerate_standard(params, d)) {
      Monomial mono = initial_monomial_closed_form(sigma, params);
      if (touches_v(mono)) predicted.insert(mono);
      d_monomials[d].push_back(std::move(mono));
    }
    deg.d_monomials = d_monomials[d].size();
    deg.predicted_dimension = predicted.size();
    deg.equal = predicted.size() == initial[d].size() &&
                std::equal(predicted.begin(), predicted.end(), initial[d].begin());
    if (!deg.equal && !report.first_mismatch) {
      std::string detail;
      for (const auto& mono : initial[d])
        if (!predicted.count(mono)) {
          detail = "initial monomial " + mono.to_string() + " avoids V(delta)";
          break;
        }
      if (detail.empty())
        for (const auto& mono : predicted)
          if (!initial[d].count(mono)) {
            detail = "D-monomial " + mono.to_string() + " touches V(delta) but is not initial";
            break;
          }
      report.first_mismatch = "degree " + std::to_string(d) + ": " + detail;
    }
    report.degrees.push_back(deg);
  }

  // prime property on the computed initial spaces
  for (int a = 0; a <= max_degree; ++a) {
    for (int b = a; a + b <= max_degree; ++b) {
      for (const auto& mm : d_monomials[a]) {
        for (const auto& nn : d_monomials[b]) {
          const Monomial prod = mm * nn;
          const bool in_prod = initial[a + b].count(prod) != 0;
          const bool in_factor = initial[a].count(mm) != 0 || initial[b].count(nn) != 0;
          ++report.prime_pairs_checked;
          if (in_prod != in_factor) {
            ++report.prime_failures;
            if (!report.first_mismatch)
              report.first_mismatch = "prime property fails for " + mm.to_string() + " * " + nn.to_string();
          }
        }
      }
    }
  }
  return report;
}

}  // namespace detring
