#include "detring/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>

#include "detring/classifier.hpp"
#include "detring/errors.hpp"
#include "detring/extensions.hpp"
#include "detring/straightening.hpp"

namespace detring::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  int m = 0;
  int n = 0;
  int r = 0;
  int t = -1;
  int deg = -1;
  std::int64_t deg_bound = -1;
  std::string ideal = "p";
  std::string eps = "1/2";
  std::string poly;
  std::string delta;
  std::string method;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
};

struct Outcome {
  json body;
  int code = 0;
};

std::string str(const Rational& q) { return q.get_str(); }

// Small integers stay numbers; anything too wide for int64 is emitted as a string.
json number(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json params_json(const Parameters& p) { return json{{"m", p.m}, {"n", p.n}, {"r", p.r}}; }

json vector_json(const ExponentVector& v) {
  const Parameters& p = v.params();
  json alpha = json::array();
  for (int i = 1; i <= p.m; ++i) {
    json row = json::array();
    for (int j = 1; j <= p.r; ++j) row.push_back(v.alpha(i, j));
    alpha.push_back(row);
  }
  json beta = json::array();
  for (int u = 1; u <= p.r; ++u) {
    json row = json::array();
    for (int w = 1; w <= p.n; ++w) row.push_back(v.beta(u, w));
    beta.push_back(row);
  }
  return json{{"alpha", alpha}, {"beta", beta}};
}

json optional_vector(const std::optional<ExponentVector>& v) { return v ? vector_json(*v) : json(nullptr); }

json semigroup_json(const SemigroupReport& rep) {
  json degrees = json::array();
  for (const auto& [d, c] : rep.by_total_degree)
    degrees.push_back(json{{"degree", d}, {"semigroup", c.semigroup}, {"cone", c.cone}});
  json out{{"variant", rep.variant == ConeVariant::E ? "E" : "Etilde"},
           {"degree_bound", rep.degree_bound},
           {"sets_equal", rep.sets_equal},
           {"generators_outside_cone", rep.generators_outside_cone},
           {"by_total_degree", degrees},
           {"counterexample", optional_vector(rep.first_counterexample)}};
  if (rep.first_counterexample) out["counterexample_side"] = rep.counterexample_side;
  out["power_test"] = json{{"cases", rep.power_test_cases},
                           {"passed", rep.power_test_passed},
                           {"counterexample", optional_vector(rep.power_counterexample)}};
  out["passed"] = rep.passed();
  return out;
}

json conic_json(const ConicReport& rep) {
  json out{{"parameters", params_json(rep.params)},
           {"t", rep.t},
           {"epsilon", str(rep.epsilon)},
           {"degree_bound", rep.degree_bound},
           {"predicted", rep.predicted},
           {"equal", rep.equal},
           {"as_predicted", rep.as_predicted()},
           {"window_points", rep.window_points},
           {"e_t_points", rep.e_t_points},
           {"shifted_points", rep.shifted_points},
           {"counterexample", optional_vector(rep.counterexample)}};
  if (rep.counterexample) out["counterexample_side"] = rep.counterexample_side;
  return out;
}

json verdict_json(const Verdict& v) {
  return json{{"ideal", to_string(v.ideal)}, {"t", v.t},           {"cm", v.is_cohen_macaulay},
              {"ulrich", v.is_ulrich},       {"mu", number(v.mu)}, {"e", number(v.e)}};
}

json combination_json(const StandardCombination& c) {
  json terms = json::array();
  for (const auto& term : c.terms)
    terms.push_back(json{{"coefficient", str(term.coefficient)}, {"bitableau", term.bitableau.to_string()}});
  return terms;
}

Parameters parameters(const Options& o) { return Parameters::make(o.m, o.n, o.r); }

Rational parse_epsilon(const std::string& text) {
  Rational eps;
  try {
    eps = Rational(text);
  } catch (const std::invalid_argument&) {
    throw ValidationError("--eps must be a rational p/q, got '" + text + "'");
  }
  if (eps.get_den() == 0) throw ValidationError("--eps has zero denominator");
  eps.canonicalize();
  if (eps <= 0 || eps >= 1) throw ValidationError("--eps must lie strictly between 0 and 1");
  return eps;
}

int require_t(const Options& o, int minimum) {
  if (o.t < minimum) throw ValidationError("--t must be >= " + std::to_string(minimum));
  return o.t;
}

int require_deg(const Options& o) {
  if (o.deg < 0) throw ValidationError("--deg must be given and >= 0");
  return o.deg;
}

// A few terms of degree <= deg with small nonzero integer coefficients.
Polynomial random_polynomial(const Parameters& p, int deg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t k) { return static_cast<int>(rng() % k); };
  const VariableSpace space = x_space(p);
  std::vector<Term> terms;
  const int count = 1 + below(4);
  for (int k = 0; k < count; ++k) {
    std::vector<std::int32_t> exps(space.size(), 0);
    const int d = below(static_cast<std::uint64_t>(deg) + 1);
    for (int e = 0; e < d; ++e) ++exps[static_cast<std::size_t>(below(space.size()))];
    int c = below(10) - 5;
    if (c >= 0) ++c;
    terms.push_back({Monomial(space, std::move(exps)), Rational(c)});
  }
  return Polynomial::from_terms(space, std::move(terms));
}

Polynomial input_polynomial(const Options& o, const Parameters& p) {
  if (!o.poly.empty()) {
    if (o.seed) throw ValidationError("--poly and --seed are mutually exclusive");
    return parse_polynomial(o.poly, x_space(p));
  }
  if (!o.seed) throw ValidationError("give --poly, or --seed together with --deg");
  return random_polynomial(p, require_deg(o), *o.seed);
}

// ---------------------------------------------------------------- commands

Outcome cmd_basis(const Options& o) {
  const Parameters p = parameters(o);
  const int d = require_deg(o);
  json items = json::array();
  for (const auto& s : enumerate_standard(p, d))
    items.push_back(json{{"bitableau", s.to_string()}, {"initial_monomial", initial_monomial_closed_form(s, p).to_string()}});
  return {json{{"parameters", params_json(p)}, {"deg", d}, {"count", items.size()}, {"basis", items}}};
}

Outcome cmd_straighten(const Options& o) {
  const Parameters p = parameters(o);
  const Polynomial f = input_polynomial(o, p);
  const auto result = straighten_with_stats(f, p);
  json iterations = json::array();
  for (const auto& [d, k] : result.iterations) iterations.push_back(json{{"degree", d}, {"steps", k}});
  return {json{{"parameters", params_json(p)},
               {"input", f.to_string()},
               {"terms", combination_json(result.combination)},
               {"in_ideal", result.combination.empty()},
               {"iterations", iterations}}};
}

Outcome cmd_member(const Options& o) {
  const Parameters p = parameters(o);
  const Polynomial f = input_polynomial(o, p);
  return {json{{"parameters", params_json(p)}, {"input", f.to_string()}, {"in_ideal", is_in_ideal(f, p)}}};
}

Outcome cmd_hilbert(const Options& o) {
  const Parameters p = parameters(o);
  const int d = require_deg(o);
  json out{{"parameters", params_json(p)}, {"deg", d}};
  if (!o.method.empty()) {
    const HilbertMethod method = parse_hilbert_method(o.method);
    out["method"] = to_string(method);
    out["hilbert"] = number(hilbert_function(p, d, method));
    return {out};
  }
  json by_method;
  std::vector<Integer> values;
  for (auto method : {HilbertMethod::bitableaux, HilbertMethod::lattice, HilbertMethod::rank}) {
    values.push_back(hilbert_function(p, d, method));
    by_method[to_string(method)] = number(values.back());
  }
  const bool agree = std::all_of(values.begin(), values.end(), [&](const Integer& v) { return v == values.front(); });
  out["method"] = "all";
  out["hilbert"] = number(values.front());
  out["by_method"] = by_method;
  out["agree"] = agree;
  return {out, agree ? 0 : 2};
}

Outcome cmd_mu(const Options& o) {
  const Parameters p = parameters(o);
  const Integer mu = mu_power(p, parse_ideal(o.ideal), require_t(o, 0));
  return {json{{"mu", number(mu)}}};
}

Outcome cmd_mult(const Options& o) {
  const Parameters p = parameters(o);
  return {json{{"e", number(multiplicity(p))}}};
}

Outcome cmd_hodge(const Options& o) {
  if (o.r < 1 || o.r > o.n) throw ValidationError("hodge needs 1 <= r <= n");
  return {json{{"hodge", number(hodge_dim(o.r, o.n, require_t(o, 0)))}}};
}

Outcome cmd_classify(const Options& o) {
  const Parameters p = parameters(o);
  return {verdict_json(classify(p, parse_ideal(o.ideal), require_t(o, 0)))};
}

std::int64_t bound_or(const Options& o, std::int64_t fallback) {
  if (o.deg_bound < 0) return fallback;
  if (o.deg_bound < 1) throw ValidationError("--deg-bound must be >= 1");
  return o.deg_bound;
}

Outcome cmd_certify(const Options& o) {
  const Parameters p = parameters(o);
  const Certificate cert =
      certify(p, parse_ideal(o.ideal), require_t(o, 0), bound_or(o, 6), parse_epsilon(o.eps));
  json evidence{{"kind", to_string(cert.kind)}, {"holds", cert.holds}};
  if (cert.kind == CertificateKind::mu_exceeds_e)
    evidence["inequality"] = json{{"mu", number(cert.verdict.mu)}, {"e", number(cert.verdict.e)}};
  if (cert.conic) evidence["conic"] = conic_json(*cert.conic);
  return {json{{"verdict", verdict_json(cert.verdict)}, {"certificate", evidence}, {"agrees", cert.agrees()}},
          cert.agrees() ? 0 : 2};
}

Outcome cmd_cone_check(const Options& o) {
  const Parameters p = parameters(o);
  const std::int64_t bound = bound_or(o, 6);
  if (o.t < 0) {
    const auto rep = semigroup_vs_cone(p, ConeVariant::E, bound);
    return {json{{"parameters", params_json(p)}, {"semigroup", semigroup_json(rep)}}, rep.passed() ? 0 : 2};
  }
  const auto rep = conic_check_for(p, parse_ideal(o.ideal), require_t(o, 1), bound, parse_epsilon(o.eps));
  return {json{{"ideal", o.ideal}, {"conic", conic_json(rep)}}, rep.as_predicted() ? 0 : 2};
}

Outcome cmd_tilde_check(const Options& o) {
  const Parameters p = parameters(o);
  const auto rep = verify_D_tilde(p, bound_or(o, 6));
  json bideg = json::array();
  for (const auto& [key, c] : rep.by_bidegree)
    bideg.push_back(json{{"y_degree", key.first}, {"z_degree", key.second}, {"cone", c.cone}, {"basis", c.basis}});
  json structure{{"non_coupling_rows_identical", rep.non_coupling_rows_identical},
                 {"equation_rank_e", rep.equation_rank_e},
                 {"equation_rank_etilde", rep.equation_rank_etilde},
                 {"equation_rank_etilde_with_last_coupling", rep.equation_rank_etilde_with_last},
                 {"equation_rank_joint", rep.equation_rank_joint},
                 {"passed", rep.structural_difference_ok}};
  return {json{{"parameters", params_json(p)},
               {"generators", generators_R_tilde(p).size()},
               {"family_size", rep.family_size},
               {"leading_term_mismatches", rep.leading_term_mismatches},
               {"semigroup", semigroup_json(rep.semigroup)},
               {"bidegrees", bideg},
               {"bidegree_counts_equal", rep.bidegree_counts_equal},
               {"diagonal_matches_e", rep.diagonal_matches_e},
               {"structure", structure},
               {"literal_system_generators_outside", rep.literal_system_generators_outside},
               {"passed", rep.passed()}},
          rep.passed() ? 0 : 2};
}

Outcome cmd_ladder_check(const Options& o) {
  const Parameters p = parameters(o);
  if (o.delta.empty()) throw ValidationError("--delta is required");
  const Minor delta = Minor::parse(o.delta);
  const int dmax = static_cast<int>(bound_or(o, 3));
  const auto rep = verify_ladder(p, delta, dmax);
  json vars = json::array();
  for (const auto& v : rep.variables)
    vars.push_back(std::string(1, v.letter) + "[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]");
  json degrees = json::array();
  for (const auto& d : rep.degrees)
    degrees.push_back(json{{"degree", d.degree},
                           {"spanning_polynomials", d.spanning_polynomials},
                           {"initial_dimension", d.initial_dimension},
                           {"predicted_dimension", d.predicted_dimension},
                           {"d_monomials", d.d_monomials},
                           {"equal", d.equal}});
  return {json{{"parameters", params_json(p)},
               {"delta", delta.to_string()},
               {"max_degree", dmax},
               {"variables", vars},
               {"degrees", degrees},
               {"prime_pairs_checked", rep.prime_pairs_checked},
               {"prime_failures", rep.prime_failures},
               {"mismatch", rep.first_mismatch ? json(*rep.first_mismatch) : json(nullptr)},
               {"passed", rep.passed()}},
          rep.passed() ? 0 : 2};
}

Outcome cmd_mcm_classes(const Options& o) {
  const Parameters p = parameters(o);
  json classes = json::array();
  for (const auto& [ideal, t] : rank1_mcm_classes(p)) {
    const Verdict v = classify(p, ideal, t);
    classes.push_back(json{{"ideal", to_string(ideal)}, {"t", t}, {"mu", number(v.mu)}, {"ulrich", v.is_ulrich}});
  }
  return {json{{"parameters", params_json(p)}, {"count", classes.size()}, {"classes", classes}}};
}

// ---------------------------------------------------------------- table output

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    if (j.empty()) rows.emplace_back(prefix, "{}");
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
    if (scalars) {
      std::string joined;
      for (const auto& x : j) joined += (joined.empty() ? "" : " ") + (x.is_string() ? x.get<std::string>() : x.dump());
      rows.emplace_back(prefix, joined);
    } else {
      for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], prefix + "[" + std::to_string(k) + "]", rows);
    }
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void print_table(const json& j, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [key, value] : rows) out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
}

// ---------------------------------------------------------------- option wiring

enum Flag : unsigned {
  M = 1u << 0,
  N = 1u << 1,
  R = 1u << 2,
  T = 1u << 3,
  T_REQ = 1u << 4,
  DEG = 1u << 5,
  DEG_REQ = 1u << 6,
  BOUND = 1u << 7,
  IDEAL = 1u << 8,
  EPS = 1u << 9,
  POLY = 1u << 10,
  DELTA = 1u << 11,
  METHOD = 1u << 12,
  SEED = 1u << 13,
};
constexpr unsigned MNR = M | N | R;

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help, unsigned flags, Options& o) {
  CLI::App* sub = app.add_subcommand(name, help);
  if (flags & M) sub->add_option("--m", o.m, "rows of X")->required()->check(CLI::PositiveNumber);
  if (flags & N) sub->add_option("--n", o.n, "columns of X")->required()->check(CLI::PositiveNumber);
  if (flags & R) sub->add_option("--r", o.r, "rank bound (r+1)-minors vanish")->required()->check(CLI::PositiveNumber);
  if (flags & (T | T_REQ)) {
    auto* opt = sub->add_option("--t", o.t, "power exponent")->check(CLI::NonNegativeNumber);
    if (flags & T_REQ) opt->required();
  }
  if (flags & (DEG | DEG_REQ)) {
    auto* opt = sub->add_option("--deg", o.deg, "degree")->check(CLI::NonNegativeNumber);
    if (flags & DEG_REQ) opt->required();
  }
  if (flags & BOUND) sub->add_option("--deg-bound", o.deg_bound, "degree bound for enumeration")->check(CLI::PositiveNumber);
  if (flags & IDEAL) sub->add_option("--ideal", o.ideal, "p (row ideal) or q (column ideal)")->check(CLI::IsMember({"p", "q"}));
  if (flags & EPS) sub->add_option("--eps", o.eps, "witness epsilon p/q in (0,1), default 1/2");
  if (flags & POLY) sub->add_option("--poly", o.poly, "polynomial in x[i,j]");
  if (flags & DELTA) sub->add_option("--delta", o.delta, "minor such as \"[1 2|1 3]\"")->required();
  if (flags & METHOD)
    sub->add_option("--method", o.method, "bitableaux, lattice or rank (default: all three)")
        ->check(CLI::IsMember({"bitableaux", "lattice", "rank"}));
  if (flags & SEED) sub->add_option("--seed", o.seed, "random polynomial seed (with --deg)");
  sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determinantal rings through the generic point X = YZ", "detring"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::pair<CLI::App*, std::function<Outcome(const Options&)>>> commands{
      {add_command(app, "basis", "standard bitableaux of a degree", MNR | DEG_REQ, o), cmd_basis},
      {add_command(app, "straighten", "expand modulo I_{r+1} in standard bitableaux", MNR | POLY | SEED | DEG, o),
       cmd_straighten},
      {add_command(app, "member", "membership in I_{r+1}", MNR | POLY | SEED | DEG, o), cmd_member},
      {add_command(app, "hilbert", "Hilbert function of R_{r+1}", MNR | DEG_REQ | METHOD, o), cmd_hilbert},
      {add_command(app, "mu", "minimal number of generators of p^t or q^t", MNR | T_REQ | IDEAL, o), cmd_mu},
      {add_command(app, "mult", "multiplicity of R_{r+1}", MNR, o), cmd_mult},
      {add_command(app, "hodge", "dimension of G(r,n)_t", N | R | T_REQ, o), cmd_hodge},
      {add_command(app, "classify", "Cohen-Macaulay / Ulrich verdict for p^t or q^t", MNR | T_REQ | IDEAL, o),
       cmd_classify},
      {add_command(app, "certify", "verdict with a conic or counting certificate", MNR | T_REQ | IDEAL | BOUND | EPS, o),
       cmd_certify},
      {add_command(app, "cone-check", "semigroup against cone lattice points, or the conic check with --t",
                   MNR | T | IDEAL | BOUND | EPS, o),
       cmd_cone_check},
      {add_command(app, "tilde-check", "initial algebra of the SL-invariant ring", MNR | BOUND, o), cmd_tilde_check},
      {add_command(app, "ladder-check", "initial ideal of I(X;delta) against V(delta)", MNR | DELTA | BOUND, o),
       cmd_ladder_check},
      {add_command(app, "mcm-classes", "rank-one maximal Cohen-Macaulay classes", MNR, o), cmd_mcm_classes},
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    for (const auto& [sub, handler] : commands) {
      if (!sub->parsed()) continue;
      const Outcome result = handler(o);
      if (o.format == "table")
        print_table(result.body, out);
      else
        out << result.body.dump(2) << '\n';
      return result.code;
    }
  } catch (const InternalError& e) {
    err << "internal check failed: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace detring::cli
