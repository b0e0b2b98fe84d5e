// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cli_commands.hpp"
#include "detring/classifier.hpp"
#include "detring/cli.hpp"
#include "detring/extensions.hpp"
#include "detring/straightening.hpp"
#include "oracles.hpp"

using namespace detring;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::vector<Parameters> all_params(int max_m, int max_n, bool proper) {
  std::vector<Parameters> out;
  for (int m = 1; m <= max_m; ++m)
    for (int n = 1; n <= max_n; ++n)
      for (int r = 1; r <= std::min(m, n); ++r)
        if (!proper || r < std::min(m, n)) out.push_back(Parameters::make(m, n, r));
  return out;
}

std::string name(const Parameters& p) {
  return "(" + std::to_string(p.m) + "," + std::to_string(p.n) + "," + std::to_string(p.r) + ")";
}

Outcome initial_monomials() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& p : all_params(3, 3, false)) {
    MinorCache cache(p);
    for (int d = 0; d <= 4; ++d)
      for (const auto& s : enumerate_standard(p, d)) {
        const auto img = cache.eval_yz(s);
        const auto closed = initial_monomial_closed_form(s, p);
        ++checked;
        if (img.terms().empty() || img.leading_term().monomial != closed || img.leading_term().coefficient != 1)
          o.fail(s.to_string() + " at " + name(p));
      }
  }
  if (o.ok) o.detail = std::to_string(checked) + " standard bitableaux";
  return o;
}

Outcome injectivity_and_basis() {
  Outcome o;
  for (const auto& p : all_params(3, 3, false))
    for (int d = 0; d <= 3; ++d) {
      const auto basis = enumerate_standard(p, d);
      std::set<Monomial, TermOrderDescending> images;
      for (const auto& s : basis) images.insert(initial_monomial_closed_form(s, p));
      if (images.size() != basis.size()) o.fail("closed form not injective at " + name(p) + " d=" + std::to_string(d));
      if (phi_image_rank(p, d) != basis.size())
        o.fail("rank differs from the basis size at " + name(p) + " d=" + std::to_string(d));
    }
  return o;
}

Outcome straightening_soundness() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int k = 0; k < 200; ++k) {
    const int m = dim(rng), n = dim(rng);
    const int r = std::uniform_int_distribution<int>(1, std::min(m, n))(rng);
    const auto p = Parameters::make(m, n, r);
    const auto f = oracle::random_polynomial(x_space(p), rng, 3, 5);
    const auto result = straighten_with_stats(f, p);
    Polynomial rhs(yz_space(p));
    for (const auto& t : result.combination.terms)
      rhs = rhs + oracle::phi(eval_bitableau(t.bitableau, EvalSide::X, p), p).scaled(t.coefficient);
    if (rhs != oracle::phi(f, p)) o.fail("image mismatch for " + f.to_string() + " at " + name(p));
    for (const auto& [d, steps] : result.iterations)
      if (steps > enumerate_standard(p, d).size()) o.fail("too many iterations at " + name(p));
  }
  return o;
}

Outcome normality() {
  Outcome o;
  std::int64_t cases = 0;
  for (const auto& p : all_params(4, 4, false)) {
    const auto rep = semigroup_vs_cone(p, ConeVariant::E, 6);
    cases += rep.power_test_cases;
    if (!rep.passed()) o.fail("semigroup differs from the cone at " + name(p));
  }
  if (o.ok) o.detail = std::to_string(cases) + " power test cases";
  return o;
}

Outcome counting_formulas() {
  Outcome o;
  const auto anchor = Parameters::make(3, 3, 2);
  if (mu_power(anchor, Ideal::p, 1) != 3 || mu_power(anchor, Ideal::p, 2) != 6) o.fail("anchored values");
  for (const auto& p : all_params(5, 5, true))
    for (int t = 1; t <= 4; ++t)
      for (auto ideal : {Ideal::p, Ideal::q})
        if (mu_power(p, ideal, t) != mu_power_direct(p, ideal, t))
          o.fail(std::string("mu(") + to_string(ideal) + "^" + std::to_string(t) + ") at " + name(p));
  return o;
}

Outcome multiplicity_bound() {
  Outcome o;
  if (multiplicity(Parameters::make(2, 2, 1)) != 2) o.fail("e at (2,2,1)");
  if (multiplicity(Parameters::make(3, 3, 2)) != 3) o.fail("e at (3,3,2)");
  for (const auto& p : all_params(6, 6, true)) {
    const Integer e = multiplicity(p);
    if (mu_power(p, Ideal::p, p.m - p.r) != e || mu_power(p, Ideal::q, p.n - p.r) != e) o.fail(name(p));
  }
  return o;
}

Outcome cm_boundary() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& p : all_params(4, 4, true)) {
    for (int t = 1; t <= p.m - p.r + 1; ++t) {
      const auto rep = conic_check_for(p, Ideal::p, t, 6);
      ++checks;
      const bool inside = t <= p.m - p.r;
      if (inside && !rep.equal) o.fail("conic check fails for t=" + std::to_string(t) + " at " + name(p));
      if (!inside && (rep.equal || !rep.counterexample))
        o.fail("no counterexample for t=" + std::to_string(t) + " at " + name(p));
    }
    for (auto ideal : {Ideal::p, Ideal::q}) {
      int ulrich = 0;
      for (int t = 0; t <= cm_bound(p, ideal) + 1; ++t) {
        const auto c = certify(p, ideal, t, 6);
        ++checks;
        if (!c.agrees()) o.fail(std::string("certify disagrees for ") + to_string(ideal) + "^" + std::to_string(t) + " at " + name(p));
        ulrich += c.verdict.is_ulrich;
      }
      if (ulrich != 1) o.fail("Ulrich count at " + name(p));
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " checks";
  return o;
}

Outcome invariant_algebra(std::string& info) {
  Outcome o;
  std::ostringstream literal;
  for (const auto& p : all_params(3, 3, false)) {
    const auto rep = verify_D_tilde(p, 6);
    if (!rep.passed()) o.fail(name(p));
    if (rep.literal_system_generators_outside > 0)
      literal << ' ' << name(p) << ':' << rep.literal_system_generators_outside;
  }
  info = "generators outside the cone with the couplings j < r kept at zero:" + literal.str();
  return o;
}

Outcome ladder() {
  Outcome o;
  std::size_t deltas = 0;
  for (const auto& p : {Parameters::make(2, 2, 2), Parameters::make(2, 3, 2)})
    for (const auto& delta : all_minors(p.m, p.n)) {
      ++deltas;
      const auto rep = verify_ladder(p, delta, 3);
      if (!rep.passed()) o.fail(delta.to_string() + " at " + name(p) + (rep.first_mismatch ? ": " + *rep.first_mismatch : ""));
    }
  std::ostringstream out, err;
  if (cli::run({"ladder-check", "--m", "2", "--n", "3", "--r", "2", "--delta", "[1|2]", "--deg-bound", "3"}, out, err) != 0)
    o.fail("ladder-check exit code");
  if (o.ok) o.detail = std::to_string(deltas) + " minors";
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto commands = clicases::every_command();
  for (const auto& args : commands) {
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::run(args, out1, err1);
    const int c2 = cli::run(args, out2, err2);
    if (c1 != 0 || c1 != c2 || out1.str() != out2.str() || err1.str() != err2.str()) o.fail(args.front());
  }
  if (o.ok) o.detail = std::to_string(commands.size()) + " invocations";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  std::string tilde_info;
  const std::vector<Criterion> criteria{
      {1, "initial monomial closed form", 60, initial_monomials},
      {2, "injectivity and basis rank", 120, injectivity_and_basis},
      {3, "straightening soundness", 60, straightening_soundness},
      {4, "normality, semigroup equals cone", 120, normality},
      {5, "counting formulas", 30, counting_formulas},
      {6, "multiplicity equals mu at the CM bound", 10, multiplicity_bound},
      {7, "CM and Ulrich boundary", 300, cm_boundary},
      {8, "SL-invariant initial algebra", 60, [&] { return invariant_algebra(tilde_info); }},
      {9, "ladder initial ideals", 120, ladder},
      {10, "CLI determinism", 0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) o.fail("over the time limit");
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title;
    std::cout << " (" << std::fixed << std::setprecision(2) << seconds << " s";
    if (!o.detail.empty()) std::cout << "; " << o.detail;
    std::cout << ")\n";
  }
  if (!tilde_info.empty()) std::cout << "info  " << tilde_info << '\n';
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
