#include "detring/classifier.hpp"

#include "detring/errors.hpp"

namespace detring {

int cm_bound(const Parameters& params, Ideal ideal) {
  return ideal == Ideal::p ? params.m - params.r : params.n - params.r;
}

Verdict classify(const Parameters& params, Ideal ideal, int t) {
  params.require_proper();
  if (t < 0) throw ValidationError("t must be nonnegative");
  Verdict v;
  v.ideal = ideal;
  v.t = t;
  v.mu = mu_power(params, ideal, t);
  v.e = multiplicity(params);
  const int bound = cm_bound(params, ideal);
  v.is_cohen_macaulay = t <= bound;
  v.is_ulrich = t == bound;
  if (v.is_ulrich && v.mu != v.e)
    throw InternalError("Ulrich power with mu != e at t=" + std::to_string(t));
  if (!v.is_cohen_macaulay && v.mu <= v.e)
    throw InternalError("non-CM power with mu <= e at t=" + std::to_string(t));
  return v;
}

const char* to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::unit_ideal: return "unit_ideal";
    case CertificateKind::conic: return "conic";
    case CertificateKind::mu_exceeds_e: return "mu_exceeds_e";
  }
  return "?";
}

bool Certificate::agrees() const {
  if (verdict.is_cohen_macaulay) return holds && kind != CertificateKind::mu_exceeds_e;
  return holds && kind == CertificateKind::mu_exceeds_e;
}

ConicReport conic_check_for(const Parameters& params, Ideal ideal, int t, std::int64_t degree_bound,
                            const Rational& epsilon) {
  // q^t at (m, n, r) is p^t at (n, m, r)
  const Parameters target = ideal == Ideal::p ? params : params.transposed();
  return conic_equality_check(target, t, Witness::make(target, t, epsilon), degree_bound);
}

Certificate certify(const Parameters& params, Ideal ideal, int t, std::int64_t degree_bound,
                    const Rational& epsilon) {
  Certificate cert;
  cert.verdict = classify(params, ideal, t);
  if (t == 0) {
    cert.kind = CertificateKind::unit_ideal;
    cert.holds = true;
  } else if (t <= cm_bound(params, ideal)) {
    cert.kind = CertificateKind::conic;
    cert.conic = conic_check_for(params, ideal, t, degree_bound, epsilon);
    cert.holds = cert.conic->equal;
  } else {
    cert.kind = CertificateKind::mu_exceeds_e;
    cert.holds = cert.verdict.mu > cert.verdict.e;
  }
  return cert;
}

std::vector<std::pair<Ideal, int>> rank1_mcm_classes(const Parameters& params) {
  params.require_proper();
  std::vector<std::pair<Ideal, int>> out;
  for (int t = 0; t <= params.m - params.r; ++t) out.emplace_back(Ideal::p, t);
  for (int t = 1; t <= params.n - params.r; ++t) out.emplace_back(Ideal::q, t);
  return out;
}

}  // namespace detring
