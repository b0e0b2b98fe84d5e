#include "detring/poly.hpp"

#include <algorithm>
#include <sstream>

#include "detring/errors.hpp"
#include "detring/kernels.hpp"

namespace detring {

// ---------------------------------------------------------------- VariableSpace

VariableSpace VariableSpace::x_space(int m, int n) {
  if (m < 1 || n < 1) throw ValidationError("X-space needs m, n >= 1");
  return VariableSpace(SpaceKind::X, m, n, 0);
}

VariableSpace VariableSpace::yz_space(int m, int r, int n) {
  if (m < 1 || n < 1 || r < 1) throw ValidationError("YZ-space needs m, r, n >= 1");
  return VariableSpace(SpaceKind::YZ, m, n, r);
}

std::size_t VariableSpace::size() const noexcept {
  if (kind_ == SpaceKind::X) return static_cast<std::size_t>(m_) * n_;
  return static_cast<std::size_t>(m_) * r_ + static_cast<std::size_t>(r_) * n_;
}

std::size_t VariableSpace::x(int i, int j) const {
  if (kind_ != SpaceKind::X) throw SpaceMismatch("x-variable on a YZ-space");
  if (i < 1 || i > m_ || j < 1 || j > n_)
    throw ValidationError("index out of range: x[" + std::to_string(i) + "," + std::to_string(j) +
                          "] on " + describe());
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

std::size_t VariableSpace::y(int i, int j) const {
  if (kind_ != SpaceKind::YZ) throw SpaceMismatch("y-variable on an X-space");
  if (i < 1 || i > m_ || j < 1 || j > r_)
    throw ValidationError("index out of range: y[" + std::to_string(i) + "," + std::to_string(j) +
                          "] on " + describe());
  // column by column, each column bottom to top
  return static_cast<std::size_t>(j - 1) * m_ + (m_ - i);
}

std::size_t VariableSpace::z(int u, int v) const {
  if (kind_ != SpaceKind::YZ) throw SpaceMismatch("z-variable on an X-space");
  if (u < 1 || u > r_ || v < 1 || v > n_)
    throw ValidationError("index out of range: z[" + std::to_string(u) + "," + std::to_string(v) +
                          "] on " + describe());
  // row by row, each row right to left
  return static_cast<std::size_t>(m_) * r_ + static_cast<std::size_t>(u - 1) * n_ + (n_ - v);
}

std::size_t VariableSpace::index_of(const Variable& var) const {
  switch (var.letter) {
    case 'x': return x(var.row, var.col);
    case 'y': return y(var.row, var.col);
    case 'z': return z(var.row, var.col);
    default: throw ValidationError(std::string("unknown variable letter '") + var.letter + "'");
  }
}

Variable VariableSpace::variable(std::size_t index) const {
  if (index >= size()) throw ValidationError("variable index out of range");
  const int k = static_cast<int>(index);
  if (kind_ == SpaceKind::X) return {'x', k / n_ + 1, k % n_ + 1};
  const int ycount = m_ * r_;
  if (k < ycount) return {'y', m_ - k % m_, k / m_ + 1};
  const int zk = k - ycount;
  return {'z', zk / n_ + 1, n_ - zk % n_};
}

std::string VariableSpace::describe() const {
  std::ostringstream os;
  if (kind_ == SpaceKind::X)
    os << "X-space(m=" << m_ << ",n=" << n_ << ")";
  else
    os << "YZ-space(m=" << m_ << ",r=" << r_ << ",n=" << n_ << ")";
  return os.str();
}

void require_same_space(const VariableSpace& a, const VariableSpace& b) {
  if (!(a == b)) throw SpaceMismatch("variable spaces differ: " + a.describe() + " vs " + b.describe());
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VariableSpace space) : space_(space), exps_(space.size(), 0) {}

Monomial::Monomial(VariableSpace space, std::vector<std::int32_t> exponents)
    : space_(space), exps_(std::move(exponents)) {
  if (exps_.size() != space_.size()) throw ValidationError("exponent vector has wrong length");
  for (auto e : exps_)
    if (e < 0) throw ValidationError("negative exponent");
  degree_ = kernels::sum(exps_);
}

Monomial Monomial::variable(VariableSpace space, std::size_t index, std::int32_t power) {
  Monomial mono(space);
  mono.exps_.at(index) = power;
  mono.degree_ = power;
  return mono;
}

std::pair<std::int64_t, std::int64_t> Monomial::bidegree() const {
  if (space_.kind() != SpaceKind::YZ) throw SpaceMismatch("bidegree needs a YZ-space");
  const auto ycount = static_cast<std::size_t>(space_.m()) * space_.r();
  const std::int64_t ydeg = kernels::sum(std::span(exps_).first(ycount));
  return {ydeg, degree_ - ydeg};
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_space(space_, other.space_);
  Monomial out(space_);
  kernels::add(exps_, other.exps_, out.exps_);
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::pow(std::int32_t k) const {
  if (k < 0) throw ValidationError("negative power");
  Monomial out(space_);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = exps_[i] * k;
  out.degree_ = degree_ * k;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_space(space_, other.space_);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::operator==(const Monomial& other) const {
  return space_ == other.space_ && degree_ == other.degree_ &&
         kernels::last_difference(exps_, other.exps_) < 0;
}

std::string Monomial::to_string() const {
  std::vector<std::pair<Variable, std::int32_t>> factors;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) factors.emplace_back(space_.variable(i), exps_[i]);
  std::sort(factors.begin(), factors.end());
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [var, e] : factors) {
    if (!out.empty()) out += '*';
    out += var.letter;
    out += '[' + std::to_string(var.row) + ',' + std::to_string(var.col) + ']';
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) {
  require_same_space(a.space(), b.space());
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const std::ptrdiff_t k = kernels::last_difference(a.exponents(), b.exponents());
  if (k < 0) return std::strong_ordering::equal;
  // smallest variable with differing exponent: the one with less of it is larger
  return a.exponents()[k] < b.exponents()[k] ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(VariableSpace space, const Rational& c) {
  Polynomial p(space);
  if (c != 0) p.terms_.push_back({Monomial(space), c});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& mono, const Rational& c) {
  Polynomial p(mono.space());
  if (c != 0) p.terms_.push_back({mono, c});
  return p;
}

Polynomial Polynomial::from_terms(VariableSpace space, std::vector<Term> terms) {
  for (const auto& t : terms) require_same_space(space, t.monomial.space());
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_monomials(a.monomial, b.monomial) == std::strong_ordering::greater;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  for (auto& t : out) t.coefficient.canonicalize();
  return Polynomial(space, std::move(out));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ValidationError("leading term of the zero polynomial");
  return terms_.front();
}

std::int64_t Polynomial::max_degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

std::map<std::int64_t, Polynomial> Polynomial::homogeneous_components() const {
  std::map<std::int64_t, Polynomial> out;
  for (const auto& t : terms_) {
    auto it = out.try_emplace(t.monomial.degree(), Polynomial(space_)).first;
    // terms stay sorted: the order is degree-first and we scan in descending order
    it->second.terms_.push_back(t);
  }
  return out;
}

Polynomial Polynomial::merge(const Polynomial& g, bool subtract) const {
  require_same_space(space_, g.space_);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (a == terms_.end())
      c = std::strong_ordering::less;
    else if (b == g.terms_.end())
      c = std::strong_ordering::greater;
    else
      c = compare_monomials(a->monomial, b->monomial);
    if (c == std::strong_ordering::greater) {
      out.push_back(*a++);
    } else if (c == std::strong_ordering::less) {
      out.push_back({b->monomial, subtract ? Rational(-b->coefficient) : b->coefficient});
      ++b;
    } else {
      Rational s = subtract ? Rational(a->coefficient - b->coefficient)
                            : Rational(a->coefficient + b->coefficient);
      if (s != 0) out.push_back({a->monomial, std::move(s)});
      ++a;
      ++b;
    }
  }
  return Polynomial(space_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& g) const { return merge(g, false); }
Polynomial Polynomial::operator-(const Polynomial& g) const { return merge(g, true); }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(space_);
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient *= c;
  return out;
}

Polynomial Polynomial::times(const Monomial& mono, const Rational& c) const {
  require_same_space(space_, mono.space());
  if (c == 0) return Polynomial(space_);
  // multiplication by a monomial preserves the order
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial * mono, t.coefficient * c});
  return Polynomial(space_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same_space(space_, g.space_);
  if (is_zero() || g.is_zero()) return Polynomial(space_);
  if (g.size() == 1) return times(g.terms_.front().monomial, g.terms_.front().coefficient);
  if (size() == 1) return g.times(terms_.front().monomial, terms_.front().coefficient);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : g.terms_) prod.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
  return from_terms(space_, std::move(prod));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(space_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (!(space_ == g.space_) || terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].monomial == g.terms_[i].monomial) || terms_[i].coefficient != g.terms_[i].coefficient)
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coefficient) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Rational mag = abs(t.coefficient);
    if (t.monomial.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += t.monomial.to_string();
    }
  }
  return out;
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op) {
  switch (op) {
    case ArithOp::add: return f + g;
    case ArithOp::sub: return f - g;
    case ArithOp::mul: return f * g;
  }
  throw ValidationError("unknown arithmetic operation");
}

}  // namespace detring
