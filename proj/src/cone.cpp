#include "detring/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "detring/errors.hpp"
#include "detring/generic_point.hpp"
#include "detring/kernels.hpp"

namespace detring {

// ---------------------------------------------------------------- ExponentVector

std::size_t coordinate_count(const Parameters& p) {
  return static_cast<std::size_t>(p.m) * p.r + static_cast<std::size_t>(p.r) * p.n;
}

std::size_t alpha_coordinate(const Parameters& p, int i, int j) {
  if (i < 1 || i > p.m || j < 1 || j > p.r) throw ValidationError("alpha index out of range");
  return static_cast<std::size_t>(i - 1) * p.r + (j - 1);
}

std::size_t beta_coordinate(const Parameters& p, int u, int v) {
  if (u < 1 || u > p.r || v < 1 || v > p.n) throw ValidationError("beta index out of range");
  return static_cast<std::size_t>(p.m) * p.r + static_cast<std::size_t>(u - 1) * p.n + (v - 1);
}

ExponentVector::ExponentVector(const Parameters& params)
    : params_(params), coords_(coordinate_count(params), 0) {}

ExponentVector::ExponentVector(const Parameters& params, std::vector<std::int32_t> coords)
    : params_(params), coords_(std::move(coords)) {
  if (coords_.size() != coordinate_count(params_)) throw ValidationError("exponent vector has wrong dimension");
}

ExponentVector ExponentVector::from_monomial(const Monomial& mono, const Parameters& params) {
  const VariableSpace space = yz_space(params);
  require_same_space(mono.space(), space);
  ExponentVector out(params);
  for (int i = 1; i <= params.m; ++i)
    for (int j = 1; j <= params.r; ++j) out.alpha(i, j) = mono.exponent(space.y(i, j));
  for (int u = 1; u <= params.r; ++u)
    for (int v = 1; v <= params.n; ++v) out.beta(u, v) = mono.exponent(space.z(u, v));
  return out;
}

std::int32_t ExponentVector::alpha(int i, int j) const { return coords_[alpha_coordinate(params_, i, j)]; }
std::int32_t ExponentVector::beta(int u, int v) const { return coords_[beta_coordinate(params_, u, v)]; }
std::int32_t& ExponentVector::alpha(int i, int j) { return coords_[alpha_coordinate(params_, i, j)]; }
std::int32_t& ExponentVector::beta(int u, int v) { return coords_[beta_coordinate(params_, u, v)]; }

std::int64_t ExponentVector::y_degree() const {
  return kernels::sum(std::span(coords_).first(static_cast<std::size_t>(params_.m) * params_.r));
}
std::int64_t ExponentVector::z_degree() const { return total_degree() - y_degree(); }
std::int64_t ExponentVector::total_degree() const { return kernels::sum(coords_); }

bool ExponentVector::nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int32_t c) { return c >= 0; });
}

Monomial ExponentVector::to_monomial() const {
  if (!nonnegative()) throw ValidationError("exponent vector " + to_string() + " has negative entries");
  const VariableSpace space = yz_space(params_);
  std::vector<std::int32_t> exps(space.size(), 0);
  for (int i = 1; i <= params_.m; ++i)
    for (int j = 1; j <= params_.r; ++j) exps[space.y(i, j)] = alpha(i, j);
  for (int u = 1; u <= params_.r; ++u)
    for (int v = 1; v <= params_.n; ++v) exps[space.z(u, v)] = beta(u, v);
  return Monomial(space, std::move(exps));
}

ExponentVector ExponentVector::transposed() const {
  const Parameters tp = params_.transposed();
  ExponentVector out(tp);
  // new Y (n x r) is the transpose of Z; new Z (r x m) is the transpose of Y
  for (int u = 1; u <= params_.r; ++u)
    for (int v = 1; v <= params_.n; ++v) out.alpha(v, u) = beta(u, v);
  for (int i = 1; i <= params_.m; ++i)
    for (int j = 1; j <= params_.r; ++j) out.beta(j, i) = alpha(i, j);
  return out;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (!(params_ == other.params_)) throw ValidationError("exponent vectors on different parameters");
  ExponentVector out(params_);
  kernels::add(coords_, other.coords_, out.coords_);
  return out;
}

ExponentVector ExponentVector::scaled(std::int32_t k) const {
  ExponentVector out = *this;
  for (auto& c : out.coords_) c *= k;
  return out;
}

std::string ExponentVector::to_string() const {
  std::string out = "alpha=[";
  for (int i = 1; i <= params_.m; ++i) {
    out += i > 1 ? ",[" : "[";
    for (int j = 1; j <= params_.r; ++j) out += (j > 1 ? "," : "") + std::to_string(alpha(i, j));
    out += "]";
  }
  out += "] beta=[";
  for (int u = 1; u <= params_.r; ++u) {
    out += u > 1 ? ",[" : "[";
    for (int v = 1; v <= params_.n; ++v) out += (v > 1 ? "," : "") + std::to_string(beta(u, v));
    out += "]";
  }
  return out + "]";
}

// ---------------------------------------------------------------- ConeSystem

ConeSystem::ConeSystem(const Parameters& params, ConeVariant variant)
    : params_(params), variant_(variant), dim_(coordinate_count(params)) {}

void ConeSystem::add_row(RowKind kind, std::vector<std::int32_t> coeffs, std::string label) {
  matrix_.insert(matrix_.end(), coeffs.begin(), coeffs.end());
  rows_.push_back({kind, std::move(coeffs), std::move(label)});
}

ConeSystem ConeSystem::build(const Parameters& p, ConeVariant variant) {
  ConeSystem sys(p, variant);
  const std::size_t dim = sys.dim_;
  auto unit = [&](std::size_t c) {
    std::vector<std::int32_t> row(dim, 0);
    row[c] = 1;
    return row;
  };
  auto a = [&](int i, int j) { return alpha_coordinate(p, i, j); };
  auto b = [&](int u, int v) { return beta_coordinate(p, u, v); };
  const auto idx = [](int x, int y) { return "[" + std::to_string(x) + "," + std::to_string(y) + "]"; };

  // (1) alpha_ij = 0 for j > i, beta_uv = 0 for u > v
  for (int i = 1; i <= p.m; ++i)
    for (int j = i + 1; j <= p.r; ++j) sys.add_row(RowKind::eq0, unit(a(i, j)), "zero alpha" + idx(i, j));
  for (int u = 1; u <= p.r; ++u)
    for (int v = 1; v < u && v <= p.n; ++v) sys.add_row(RowKind::eq0, unit(b(u, v)), "zero beta" + idx(u, v));

  // (2) sum_{i=j-1}^{k-1} alpha_{i,j-1} - sum_{i=j}^{k} alpha_{ij} >= 0
  for (int j = 2; j <= p.r; ++j) {
    for (int k = j; k <= p.m; ++k) {
      std::vector<std::int32_t> row(dim, 0);
      for (int i = j - 1; i <= k - 1; ++i) row[a(i, j - 1)] += 1;
      for (int i = j; i <= k; ++i) row[a(i, j)] -= 1;
      sys.add_row(RowKind::geq0, std::move(row), "alpha column step j=" + std::to_string(j) + " k=" + std::to_string(k));
    }
  }
  // (3) sum_{v=u-1}^{w-1} beta_{u-1,v} - sum_{v=u}^{w} beta_{uv} >= 0
  for (int u = 2; u <= p.r; ++u) {
    for (int w = u; w <= p.n; ++w) {
      std::vector<std::int32_t> row(dim, 0);
      for (int v = u - 1; v <= w - 1; ++v) row[b(u - 1, v)] += 1;
      for (int v = u; v <= w; ++v) row[b(u, v)] -= 1;
      sys.add_row(RowKind::geq0, std::move(row), "beta row step u=" + std::to_string(u) + " w=" + std::to_string(w));
    }
  }
  // (4) nonnegativity below the diagonal, and at (r, r)
  for (int i = 1; i <= p.m; ++i)
    for (int j = 1; j < i && j <= p.r; ++j) sys.add_row(RowKind::geq0, unit(a(i, j)), "nonneg alpha" + idx(i, j));
  for (int u = 1; u <= p.r; ++u)
    for (int v = u + 1; v <= p.n; ++v) sys.add_row(RowKind::geq0, unit(b(u, v)), "nonneg beta" + idx(u, v));
  sys.add_row(RowKind::geq0, unit(a(p.r, p.r)), "nonneg alpha" + idx(p.r, p.r));
  sys.add_row(RowKind::geq0, unit(b(p.r, p.r)), "nonneg beta" + idx(p.r, p.r));

  // (5) coupling: c_j = sum_i alpha_ij - sum_v beta_jv
  auto coupling = [&](int j, int sign, std::vector<std::int32_t>& row) {
    for (int i = 1; i <= p.m; ++i) row[a(i, j)] += sign;
    for (int v = 1; v <= p.n; ++v) row[b(j, v)] -= sign;
  };
  if (variant == ConeVariant::E) {
    for (int j = 1; j <= p.r; ++j) {
      std::vector<std::int32_t> row(dim, 0);
      coupling(j, 1, row);
      sys.add_row(RowKind::eq0, std::move(row), "coupling j=" + std::to_string(j));
    }
  } else {
    for (int j = 1; j < p.r; ++j) {
      std::vector<std::int32_t> row(dim, 0);
      coupling(j, 1, row);
      coupling(j + 1, -1, row);
      sys.add_row(RowKind::eq0, std::move(row), "coupling j=" + std::to_string(j) + " equals j=" + std::to_string(j + 1));
    }
  }
  return sys;
}

std::vector<std::int64_t> ConeSystem::evaluate(std::span<const std::int32_t> v) const {
  if (v.size() != dim_) throw ValidationError("vector dimension does not match the cone system");
  std::vector<std::int64_t> out(rows_.size());
  kernels::matvec(matrix_, rows_.size(), dim_, v, out);
  return out;
}

bool cone_membership(std::span<const Rational> v, const ConeSystem& system) {
  if (v.size() != system.dimension()) throw ValidationError("vector dimension does not match the cone system");
  for (const auto& row : system.rows()) {
    Rational value = 0;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (row.coeffs[c] != 0) value += v[c] * row.coeffs[c];
    if (row.kind == RowKind::eq0 ? value != 0 : value < 0) return false;
  }
  return true;
}

bool cone_membership(std::span<const std::int32_t> v, const ConeSystem& system) {
  const auto values = system.evaluate(v);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (system.rows()[k].kind == RowKind::eq0 ? values[k] != 0 : values[k] < 0) return false;
  }
  return true;
}

bool satisfies_equations(std::span<const std::int32_t> v, const ConeSystem& system) {
  const auto values = system.evaluate(v);
  for (std::size_t k = 0; k < values.size(); ++k)
    if (system.rows()[k].kind == RowKind::eq0 && values[k] != 0) return false;
  return true;
}

// ---------------------------------------------------------------- generators

std::vector<Monomial> generators_D(const Parameters& p) {
  const VariableSpace space = yz_space(p);
  std::vector<Monomial> out;
  for (int t = 1; t <= p.r; ++t) {
    for (const auto& a : subsets(p.m, t)) {
      for (const auto& b : subsets(p.n, t)) {
        std::vector<std::int32_t> exps(space.size(), 0);
        for (int j = 1; j <= t; ++j) {
          ++exps[space.y(a[j - 1], j)];
          ++exps[space.z(j, b[j - 1])];
        }
        out.emplace_back(space, std::move(exps));
      }
    }
  }
  return out;
}

std::vector<Monomial> generators_D_tilde(const Parameters& p) {
  const VariableSpace space = yz_space(p);
  std::vector<Monomial> out;
  for (const auto& mono : generators_D(p))
    if (mono.bidegree().first < p.r) out.push_back(mono);
  for (const auto& a : subsets(p.m, p.r)) {
    std::vector<std::int32_t> exps(space.size(), 0);
    for (int j = 1; j <= p.r; ++j) ++exps[space.y(a[j - 1], j)];
    out.emplace_back(space, std::move(exps));
  }
  for (const auto& b : subsets(p.n, p.r)) {
    std::vector<std::int32_t> exps(space.size(), 0);
    for (int j = 1; j <= p.r; ++j) ++exps[space.z(j, b[j - 1])];
    out.emplace_back(space, std::move(exps));
  }
  return out;
}

std::vector<ExponentVector> semigroup_points(const std::vector<Monomial>& generators, const Parameters& params,
                                             std::int64_t max_total) {
  std::vector<ExponentVector> gens;
  for (const auto& g : generators) {
    if (g.degree() == 0) throw ValidationError("semigroup generator of degree 0");
    gens.push_back(ExponentVector::from_monomial(g, params));
  }
  std::vector<std::set<ExponentVector>> levels(static_cast<std::size_t>(std::max<std::int64_t>(max_total, 0) + 1));
  levels[0].insert(ExponentVector(params));
  for (std::int64_t d = 1; d <= max_total; ++d) {
    for (const auto& g : gens) {
      const std::int64_t gd = g.total_degree();
      if (gd > d) continue;
      for (const auto& p : levels[static_cast<std::size_t>(d - gd)]) levels[static_cast<std::size_t>(d)].insert(p + g);
    }
  }
  std::vector<ExponentVector> out;
  for (const auto& level : levels) out.insert(out.end(), level.begin(), level.end());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- enumeration

namespace {

enum class Support { alpha, beta, mixed, none };

Support row_support(const std::vector<std::int32_t>& coeffs, std::size_t alpha_count) {
  bool in_alpha = false;
  bool in_beta = false;
  for (std::size_t c = 0; c < coeffs.size(); ++c) {
    if (coeffs[c] == 0) continue;
    (c < alpha_count ? in_alpha : in_beta) = true;
  }
  if (in_alpha && in_beta) return Support::mixed;
  if (in_alpha) return Support::alpha;
  if (in_beta) return Support::beta;
  return Support::none;
}

bool row_ok(RowKind kind, std::int64_t value) { return kind == RowKind::eq0 ? value == 0 : value >= 0; }

// All assignments of the free coordinates in [begin, end) with lower bounds and
// a bound on the part sum; other coordinates of the part stay 0.
std::vector<std::vector<std::int32_t>> enumerate_part(std::size_t dim, std::size_t begin, std::size_t end,
                                                      const std::vector<bool>& forced_zero,
                                                      const std::vector<std::int32_t>& lower,
                                                      std::int64_t max_sum,
                                                      const std::vector<const ConeRow*>& part_rows) {
  std::vector<std::size_t> free;
  std::int64_t lower_sum = 0;
  for (std::size_t c = begin; c < end; ++c) {
    if (forced_zero[c]) continue;
    free.push_back(c);
    lower_sum += lower[c];
  }
  std::vector<std::vector<std::int32_t>> out;
  if (lower_sum > max_sum) return out;
  std::vector<std::int32_t> current(dim, 0);
  for (std::size_t c : free) current[c] = lower[c];
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t budget) {
    if (k == free.size()) {
      for (const ConeRow* row : part_rows)
        if (!row_ok(row->kind, kernels::dot(row->coeffs, current))) return;
      out.emplace_back(current.begin() + static_cast<std::ptrdiff_t>(begin),
                       current.begin() + static_cast<std::ptrdiff_t>(end));
      return;
    }
    const std::size_t c = free[k];
    for (std::int64_t extra = 0; extra <= budget; ++extra) {
      current[c] = static_cast<std::int32_t>(lower[c] + extra);
      rec(k + 1, budget - extra);
    }
    current[c] = lower[c];
  };
  rec(0, max_sum - lower_sum);
  return out;
}

}  // namespace

std::vector<ExponentVector> enumerate_points(const ConeSystem& system, const EnumerationBounds& bounds,
                                             RowFilter filter) {
  const Parameters& p = system.params();
  const std::size_t dim = system.dimension();
  const std::size_t alpha_count = static_cast<std::size_t>(p.m) * p.r;
  std::vector<std::int32_t> lower = bounds.lower.empty() ? std::vector<std::int32_t>(dim, 0) : bounds.lower;
  if (lower.size() != dim) throw ValidationError("lower bounds have wrong dimension");

  std::vector<bool> forced_zero(dim, false);
  std::vector<const ConeRow*> alpha_rows;
  std::vector<const ConeRow*> beta_rows;
  std::vector<const ConeRow*> mixed_rows;
  for (const auto& row : system.rows()) {
    if (filter == RowFilter::equations_only && row.kind != RowKind::eq0) continue;
    const auto nonzero = std::count_if(row.coeffs.begin(), row.coeffs.end(), [](std::int32_t c) { return c != 0; });
    if (row.kind == RowKind::eq0 && nonzero == 1) {
      const auto c = static_cast<std::size_t>(
          std::find_if(row.coeffs.begin(), row.coeffs.end(), [](std::int32_t x) { return x != 0; }) -
          row.coeffs.begin());
      if (lower[c] > 0) return {};
      forced_zero[c] = true;
      lower[c] = 0;
      continue;
    }
    switch (row_support(row.coeffs, alpha_count)) {
      case Support::alpha: alpha_rows.push_back(&row); break;
      case Support::beta: beta_rows.push_back(&row); break;
      case Support::mixed: mixed_rows.push_back(&row); break;
      case Support::none:
        if (!row_ok(row.kind, 0)) return {};
        break;
    }
  }

  std::int64_t beta_lower = 0;
  std::int64_t alpha_lower = 0;
  for (std::size_t c = 0; c < dim; ++c)
    if (!forced_zero[c]) (c < alpha_count ? alpha_lower : beta_lower) += lower[c];
  std::int64_t max_alpha = bounds.max_total - beta_lower;
  std::int64_t max_beta = bounds.max_total - alpha_lower;
  if (bounds.max_alpha >= 0) max_alpha = std::min(max_alpha, bounds.max_alpha);
  if (bounds.max_beta >= 0) max_beta = std::min(max_beta, bounds.max_beta);

  const auto alphas = enumerate_part(dim, 0, alpha_count, forced_zero, lower, max_alpha, alpha_rows);
  const auto betas = enumerate_part(dim, alpha_count, dim, forced_zero, lower, max_beta, beta_rows);

  auto part_value = [&](const ConeRow& row, const std::vector<std::int32_t>& part, std::size_t offset) {
    return kernels::dot(std::span(row.coeffs).subspan(offset, part.size()), part);
  };
  const bool mixed_all_eq =
      std::all_of(mixed_rows.begin(), mixed_rows.end(), [](const ConeRow* r) { return r->kind == RowKind::eq0; });

  std::vector<ExponentVector> out;
  auto emit = [&](const std::vector<std::int32_t>& av, const std::vector<std::int32_t>& bv) {
    std::vector<std::int32_t> coords(av);
    coords.insert(coords.end(), bv.begin(), bv.end());
    if (kernels::sum(coords) > bounds.max_total) return;
    for (const ConeRow* row : mixed_rows)
      if (!row_ok(row->kind, kernels::dot(row->coeffs, coords))) return;
    out.emplace_back(p, std::move(coords));
  };

  if (mixed_all_eq) {
    std::map<std::vector<std::int64_t>, std::vector<std::size_t>> by_key;
    for (std::size_t k = 0; k < betas.size(); ++k) {
      std::vector<std::int64_t> key;
      for (const ConeRow* row : mixed_rows) key.push_back(part_value(*row, betas[k], alpha_count));
      by_key[key].push_back(k);
    }
    for (const auto& av : alphas) {
      std::vector<std::int64_t> key;
      for (const ConeRow* row : mixed_rows) key.push_back(-part_value(*row, av, 0));
      auto it = by_key.find(key);
      if (it == by_key.end()) continue;
      for (std::size_t k : it->second) emit(av, betas[k]);
    }
  } else {
    for (const auto& av : alphas)
      for (const auto& bv : betas) emit(av, bv);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- semigroup vs cone

SemigroupReport semigroup_vs_cone(const Parameters& params, ConeVariant variant, std::int64_t degree_bound) {
  if (degree_bound < 1) throw ValidationError("degree bound must be >= 1");
  const ConeSystem system = ConeSystem::build(params, variant);
  const auto generators = variant == ConeVariant::E ? generators_D(params) : generators_D_tilde(params);

  SemigroupReport report{params, variant, degree_bound, {}, false, std::nullopt, {}, 0, 0, false, std::nullopt};
  for (const auto& g : generators) {
    const auto ev = ExponentVector::from_monomial(g, params);
    if (!cone_membership(ev.coords(), system)) ++report.generators_outside_cone;
  }

  const auto semigroup = semigroup_points(generators, params, degree_bound);
  EnumerationBounds bounds;
  bounds.max_total = degree_bound;
  const auto cone = enumerate_points(system, bounds, RowFilter::all_rows);

  for (std::int64_t d = 0; d <= degree_bound; ++d) report.by_total_degree[d];
  for (const auto& v : semigroup) ++report.by_total_degree[v.total_degree()].semigroup;
  for (const auto& v : cone) ++report.by_total_degree[v.total_degree()].cone;

  report.sets_equal = semigroup == cone;
  if (!report.sets_equal) {
    std::vector<ExponentVector> only_semigroup;
    std::vector<ExponentVector> only_cone;
    std::set_difference(semigroup.begin(), semigroup.end(), cone.begin(), cone.end(),
                        std::back_inserter(only_semigroup));
    std::set_difference(cone.begin(), cone.end(), semigroup.begin(), semigroup.end(), std::back_inserter(only_cone));
    if (!only_cone.empty()) {
      report.first_counterexample = only_cone.front();
      report.counterexample_side = "cone only";
    } else {
      report.first_counterexample = only_semigroup.front();
      report.counterexample_side = "semigroup only";
    }
  }

  // normality: every monomial M with k*deg(M) <= bound and M^k in the semigroup lies in it
  const std::set<ExponentVector> members(semigroup.begin(), semigroup.end());
  report.power_test_passed = true;
  const std::size_t dim = coordinate_count(params);
  for (int k = 2; k <= 3; ++k) {
    const std::int64_t max_deg = degree_bound / k;
    std::vector<std::int32_t> current(dim, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t c, std::int64_t budget) {
      if (c == dim) {
        ExponentVector v(params, current);
        ++report.power_test_cases;
        if (members.count(v.scaled(k)) != 0 && members.count(v) == 0 && report.power_test_passed) {
          report.power_test_passed = false;
          report.power_counterexample = v;
        }
        return;
      }
      for (std::int64_t e = 0; e <= budget; ++e) {
        current[c] = static_cast<std::int32_t>(e);
        rec(c + 1, budget - e);
      }
      current[c] = 0;
    };
    rec(0, max_deg);
  }
  return report;
}

std::int64_t lattice_point_count(const Parameters& params, int y_degree) {
  if (y_degree < 0) return 0;
  const ConeSystem system = ConeSystem::build(params, ConeVariant::E);
  EnumerationBounds bounds;
  bounds.max_total = 2 * static_cast<std::int64_t>(y_degree);
  bounds.max_alpha = y_degree;
  bounds.max_beta = y_degree;
  std::int64_t count = 0;
  for (const auto& v : enumerate_points(system, bounds, RowFilter::all_rows))
    if (v.y_degree() == y_degree) ++count;
  return count;
}

// ---------------------------------------------------------------- conic witness

Witness Witness::make(const Parameters& params, int t, const Rational& epsilon) {
  params.require_proper();
  if (t < 1) throw ValidationError("witness needs t >= 1");
  if (epsilon <= 0 || epsilon >= 1) throw ValidationError("epsilon must lie strictly between 0 and 1");
  Witness wt{params, t, epsilon, std::vector<Rational>(coordinate_count(params), Rational(0))};
  const Rational diag = Rational(t) - epsilon;
  Rational below = -diag / Rational(params.m - params.r);
  below.canonicalize();
  for (int j = 1; j <= params.r; ++j) {
    wt.w[alpha_coordinate(params, j, j)] = diag;
    for (int i = j + 1; i <= params.m - params.r + j; ++i) wt.w[alpha_coordinate(params, i, j)] = below;
  }
  return wt;
}

namespace {

std::int64_t ceil_of(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c.get_si();
}

}  // namespace

ConicReport conic_equality_check(const Parameters& params, int t, const Witness& witness,
                                 std::int64_t degree_bound) {
  params.require_proper();
  if (t < 1) throw ValidationError("conic check needs t >= 1");
  if (!(witness.params == params) || witness.t != t) throw ValidationError("witness built for other parameters");
  const ConeSystem system = ConeSystem::build(params, ConeVariant::E);
  // w must lie in the linear span RE
  for (const auto& row : system.rows()) {
    if (row.kind != RowKind::eq0) continue;
    Rational value = 0;
    for (std::size_t c = 0; c < witness.w.size(); ++c) value += witness.w[c] * row.coeffs[c];
    if (value != 0) throw InternalError("witness violates equation '" + row.label + "'");
  }

  // thresholds: v - w in the cone iff <row, v> >= ceil(<row, w>) (inequalities)
  std::vector<std::int64_t> threshold;
  for (const auto& row : system.rows()) {
    Rational value = 0;
    for (std::size_t c = 0; c < witness.w.size(); ++c) value += witness.w[c] * row.coeffs[c];
    threshold.push_back(ceil_of(value));
  }

  EnumerationBounds bounds;
  bounds.max_total = degree_bound;
  bounds.lower.resize(coordinate_count(params));
  for (std::size_t c = 0; c < bounds.lower.size(); ++c)
    bounds.lower[c] = static_cast<std::int32_t>(std::min<std::int64_t>(0, ceil_of(witness.w[c])));
  const auto window = enumerate_points(system, bounds, RowFilter::equations_only);

  ConicReport report;
  report.params = params;
  report.t = t;
  report.epsilon = witness.epsilon;
  report.degree_bound = degree_bound;
  report.predicted = t <= params.m - params.r;
  report.window_points = static_cast<std::int64_t>(window.size());
  report.equal = true;
  for (const auto& v : window) {
    const auto values = system.evaluate(v.coords());
    bool in_cone = true;
    bool shifted = true;
    for (std::size_t k = 0; k < values.size(); ++k) {
      const bool eq = system.rows()[k].kind == RowKind::eq0;
      if (eq ? values[k] != 0 : values[k] < 0) in_cone = false;
      if (eq ? values[k] != threshold[k] : values[k] < threshold[k]) shifted = false;
    }
    const bool in_e_t = in_cone && v.alpha(params.r, params.r) >= t;
    report.e_t_points += in_e_t;
    report.shifted_points += shifted;
    if (in_e_t != shifted && report.equal) {
      // confirm on the exact rational difference before reporting
      std::vector<Rational> diff(v.coords().size());
      for (std::size_t c = 0; c < diff.size(); ++c) diff[c] = Rational(v.coords()[c]) - witness.w[c];
      if (cone_membership(std::span<const Rational>(diff), system) != shifted)
        throw InternalError("integer and rational shifted-cone tests disagree at " + v.to_string());
      report.equal = false;
      report.counterexample = v;
      report.counterexample_side = in_e_t ? "in E_t only" : "in w_t + cone only";
    }
  }
  return report;
}

}  // namespace detring
