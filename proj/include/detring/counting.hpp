#pragma once

// Determinant formulas for the minimal number of generators of powers of the
// divisorial ideals p, q and for the multiplicity, with enumeration oracles,
// and the Hilbert function of R_{r+1} by three independent routes.

#include "detring/linalg.hpp"
#include "detring/tableaux.hpp"

namespace detring {

enum class Ideal { p, q };
const char* to_string(Ideal ideal);
Ideal parse_ideal(std::string_view text);

// C(a, b), zero for b < 0, b > a or a < 0.
Integer binomial(long a, long b);

enum class BinomialRule { mu_p, mu_q, multiplicity };
// mu_p: C(t+n-j, n-i); mu_q: C(t+m-j, m-i); multiplicity: C(m+n-i-j, n-j); 1 <= i, j <= r.
IntegerMatrix binomial_matrix(const Parameters& params, BinomialRule rule, int t = 0);

Integer mu_power(const Parameters& params, Ideal ideal, int t);
// Counts rectangular tableaux with t rows of length r (the standard products of
// exactly t generators of the ideal).
Integer mu_power_direct(const Parameters& params, Ideal ideal, int t);
Integer multiplicity(const Parameters& params);
// dim G(r, n)_t.
Integer hodge_dim(int r, int n, int t);

enum class HilbertMethod { bitableaux, lattice, rank };
const char* to_string(HilbertMethod method);
HilbertMethod parse_hilbert_method(std::string_view text);

// dim_K (R_{r+1})_d.
Integer hilbert_function(const Parameters& params, int d, HilbertMethod method);

// Rank of the phi-images of all degree-d monomials of K[X].
std::size_t phi_image_rank(const Parameters& params, int d);

}  // namespace detring
