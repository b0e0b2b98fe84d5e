#include "detring/counting.hpp"

#include <functional>

#include "detring/cone.hpp"
#include "detring/errors.hpp"
#include "detring/generic_point.hpp"

namespace detring {

const char* to_string(Ideal ideal) { return ideal == Ideal::p ? "p" : "q"; }

Ideal parse_ideal(std::string_view text) {
  if (text == "p") return Ideal::p;
  if (text == "q") return Ideal::q;
  throw ValidationError("ideal must be 'p' or 'q'");
}

const char* to_string(HilbertMethod method) {
  switch (method) {
    case HilbertMethod::bitableaux: return "bitableaux";
    case HilbertMethod::lattice: return "lattice";
    case HilbertMethod::rank: return "rank";
  }
  return "?";
}

HilbertMethod parse_hilbert_method(std::string_view text) {
  if (text == "bitableaux") return HilbertMethod::bitableaux;
  if (text == "lattice") return HilbertMethod::lattice;
  if (text == "rank") return HilbertMethod::rank;
  throw ValidationError("method must be bitableaux, lattice or rank");
}

Integer binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

IntegerMatrix binomial_matrix(const Parameters& p, BinomialRule rule, int t) {
  IntegerMatrix out(static_cast<std::size_t>(p.r), std::vector<Integer>(static_cast<std::size_t>(p.r)));
  for (int i = 1; i <= p.r; ++i) {
    for (int j = 1; j <= p.r; ++j) {
      Integer& e = out[i - 1][j - 1];
      switch (rule) {
        case BinomialRule::mu_p: e = binomial(t + p.n - j, p.n - i); break;
        case BinomialRule::mu_q: e = binomial(t + p.m - j, p.m - i); break;
        case BinomialRule::multiplicity: e = binomial(p.m + p.n - i - j, p.n - j); break;
      }
    }
  }
  return out;
}

Integer mu_power(const Parameters& params, Ideal ideal, int t) {
  params.require_proper();
  if (t < 0) throw ValidationError("t must be nonnegative");
  if (t == 0) return 1;
  return det_exact(binomial_matrix(params, ideal == Ideal::p ? BinomialRule::mu_p : BinomialRule::mu_q, t));
}

Integer mu_power_direct(const Parameters& params, Ideal ideal, int t) {
  params.require_proper();
  if (t < 0) throw ValidationError("t must be nonnegative");
  if (t == 0) return 1;
  const std::vector<int> shape(static_cast<std::size_t>(t), params.r);
  return static_cast<unsigned long>(enumerate_tableaux(shape, ideal == Ideal::p ? params.n : params.m).size());
}

Integer multiplicity(const Parameters& params) {
  params.require_proper();
  return det_exact(binomial_matrix(params, BinomialRule::multiplicity));
}

Integer hodge_dim(int r, int n, int t) {
  if (r < 1 || r > n) throw ValidationError("hodge_dim needs 1 <= r <= n");
  if (t < 0) throw ValidationError("hodge_dim needs t >= 0");
  // same matrix as mu_p; only n and r enter
  return det_exact(binomial_matrix(Parameters{r, n, r}, BinomialRule::mu_p, t));
}

std::size_t phi_image_rank(const Parameters& params, int d) {
  const VariableSpace xs = x_space(params);
  const SubstitutionMap map(params);
  PolynomialEchelon echelon(yz_space(params));
  std::vector<std::int32_t> exps(xs.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int budget) {
    if (var + 1 == exps.size()) {
      exps[var] = budget;
      echelon.insert(phi(Polynomial::monomial(Monomial(xs, exps)), map));
      exps[var] = 0;
      return;
    }
    for (int e = budget; e >= 0; --e) {
      exps[var] = e;
      rec(var + 1, budget - e);
    }
    exps[var] = 0;
  };
  rec(0, d);
  return echelon.rank();
}

Integer hilbert_function(const Parameters& params, int d, HilbertMethod method) {
  if (d < 0) throw ValidationError("degree must be nonnegative");
  switch (method) {
    case HilbertMethod::bitableaux:
      return static_cast<unsigned long>(enumerate_standard(params, d).size());
    case HilbertMethod::lattice:
      return static_cast<unsigned long>(lattice_point_count(params, d));
    case HilbertMethod::rank:
      return static_cast<unsigned long>(phi_image_rank(params, d));
  }
  throw ValidationError("unknown Hilbert method");
}

}  // namespace detring
