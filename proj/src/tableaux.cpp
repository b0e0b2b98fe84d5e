#include "detring/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "detring/errors.hpp"

namespace detring {

Parameters Parameters::make(int m, int n, int r) {
  if (m < 1 || n < 1) throw ValidationError("m and n must be positive");
  if (r < 1 || r > std::min(m, n))
    throw ValidationError("r must satisfy 1 <= r <= min(m, n); got m=" + std::to_string(m) +
                          " n=" + std::to_string(n) + " r=" + std::to_string(r));
  return {m, n, r};
}

void Parameters::require_proper() const {
  if (r >= std::min(m, n))
    throw ValidationError("this operation requires r < min(m, n); got m=" + std::to_string(m) +
                          " n=" + std::to_string(n) + " r=" + std::to_string(r));
}

// ---------------------------------------------------------------- Minor

namespace {

bool strictly_increasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

// Reads one "[a ... | b ...]" starting at pos; advances pos.
Minor parse_minor_at(std::string_view text, std::size_t& pos) {
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_list = [&](char stop) {
    std::vector<int> out;
    for (;;) {
      skip();
      if (pos >= text.size()) throw ParseError("unterminated minor", pos);
      if (text[pos] == stop) {
        ++pos;
        return out;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError(std::string("unexpected character '") + text[pos] + "' in minor", pos);
      int value = 0;
      std::size_t digits = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        if (++digits > 6) throw ParseError("index too large", pos);
        value = value * 10 + (text[pos++] - '0');
      }
      out.push_back(value);
      skip();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
  };
  skip();
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  const std::size_t start = pos++;
  std::vector<int> rows = read_list('|');
  std::vector<int> cols = read_list(']');
  try {
    return Minor(std::move(rows), std::move(cols));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), start);
  }
}

}  // namespace

Minor::Minor(std::vector<int> rows, std::vector<int> cols) : rows_(std::move(rows)), cols_(std::move(cols)) {
  if (rows_.size() != cols_.size()) throw ValidationError("minor needs as many rows as columns");
  if (!strictly_increasing(rows_) || !strictly_increasing(cols_))
    throw ValidationError("minor indices must be strictly increasing");
  if ((!rows_.empty() && rows_.front() < 1) || (!cols_.empty() && cols_.front() < 1))
    throw ValidationError("minor indices are 1-based");
}

bool Minor::fits(int m, int n) const {
  return rows_.empty() || (rows_.back() <= m && cols_.back() <= n);
}

std::string Minor::to_string() const { return "[" + join(rows_) + "|" + join(cols_) + "]"; }

Minor Minor::parse(std::string_view text) {
  std::size_t pos = 0;
  Minor out = parse_minor_at(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("trailing characters after minor", pos);
  return out;
}

std::strong_ordering Minor::operator<=>(const Minor& other) const {
  if (size() != other.size()) return other.size() <=> size();
  if (auto c = rows_ <=> other.rows_; c != 0) return c;
  return cols_ <=> other.cols_;
}

bool minor_leq(const Minor& d1, const Minor& d2) {
  if (d1.size() < d2.size()) return false;
  for (int i = 0; i < d2.size(); ++i)
    if (d1.rows()[i] > d2.rows()[i] || d1.cols()[i] > d2.cols()[i]) return false;
  return true;
}

// ---------------------------------------------------------------- Bitableau

Bitableau::Bitableau(std::vector<Minor> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].size() == 0) throw ValidationError("empty minor as a bitableau factor");
    if (i > 0 && factors_[i - 1].size() < factors_[i].size())
      throw ValidationError("bitableau shape must be weakly decreasing");
  }
}

std::vector<int> Bitableau::shape() const {
  std::vector<int> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.size());
  return out;
}

int Bitableau::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.size();
  return d;
}

std::string Bitableau::to_string() const {
  if (factors_.empty()) return "[|]";
  std::string out;
  for (const auto& f : factors_) out += f.to_string();
  return out;
}

Bitableau Bitableau::parse(std::string_view text) {
  std::vector<Minor> factors;
  std::size_t pos = 0;
  for (;;) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    Minor mnr = parse_minor_at(text, pos);
    if (mnr.size() > 0) factors.push_back(std::move(mnr));
  }
  // products may be written in any order; sizes must still be weakly decreasing
  return Bitableau(std::move(factors));
}

std::strong_ordering Bitableau::operator<=>(const Bitableau& other) const {
  return factors_ <=> other.factors_;
}

bool is_standard(const Bitableau& s) {
  const auto& f = s.factors();
  for (std::size_t i = 1; i < f.size(); ++i)
    if (!minor_leq(f[i - 1], f[i])) return false;
  return true;
}

bool in_standard_range(const Bitableau& s, const Parameters& params) {
  for (const auto& f : s.factors())
    if (f.size() > params.r || !f.fits(params.m, params.n)) return false;
  return true;
}

// ---------------------------------------------------------------- enumeration

std::vector<Tableau> enumerate_tableaux(const std::vector<int>& shape, int max_entry) {
  for (std::size_t i = 1; i < shape.size(); ++i)
    if (shape[i] > shape[i - 1]) throw ValidationError("shape must be weakly decreasing");
  std::vector<Tableau> out;
  Tableau current;
  for (int len : shape) current.emplace_back(static_cast<std::size_t>(len), 0);

  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t row, std::size_t col) {
    if (row == shape.size()) {
      out.push_back(current);
      return;
    }
    if (col == current[row].size()) {
      fill(row + 1, 0);
      return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, current[row][col - 1] + 1);
    if (row > 0) lo = std::max(lo, current[row - 1][col]);
    // the rest of the row must still fit strictly increasing
    const int hi = max_entry - static_cast<int>(current[row].size() - 1 - col);
    for (int v = lo; v <= hi; ++v) {
      current[row][col] = v;
      fill(row, col + 1);
    }
  };
  fill(0, 0);
  return out;
}

std::vector<std::vector<int>> partitions(int d, int max_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int bound) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, bound); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  if (d >= 0) rec(d, max_part);
  return out;
}

std::vector<Bitableau> enumerate_standard(const Parameters& params, int degree) {
  std::vector<Bitableau> out;
  if (degree < 0) return out;
  for (const auto& shape : partitions(degree, params.r)) {
    const auto left = enumerate_tableaux(shape, params.m);
    const auto right = enumerate_tableaux(shape, params.n);
    for (const auto& lt : left) {
      for (const auto& rt : right) {
        std::vector<Minor> factors;
        factors.reserve(shape.size());
        for (std::size_t i = 0; i < shape.size(); ++i) factors.emplace_back(lt[i], rt[i]);
        out.emplace_back(std::move(factors));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<Minor> generators_gamma(const Parameters& params, Side side) {
  std::vector<int> first(static_cast<std::size_t>(params.r));
  for (int i = 0; i < params.r; ++i) first[i] = i + 1;
  std::vector<Minor> out;
  if (side == Side::rows) {
    for (auto& b : subsets(params.n, params.r)) out.emplace_back(first, std::move(b));
  } else {
    for (auto& a : subsets(params.m, params.r)) out.emplace_back(std::move(a), first);
  }
  return out;
}

std::vector<Minor> all_minors(int m, int n) {
  std::vector<Minor> out;
  for (int t = 1; t <= std::min(m, n); ++t)
    for (const auto& a : subsets(m, t))
      for (const auto& b : subsets(n, t)) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detring
