#pragma once

// Minors, bitableaux and standard bitableaux of an m x n generic matrix.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace detring {

// The triple fixing X (m x n), Y (m x r) and Z (r x n); 1 <= r <= min(m, n).
struct Parameters {
  int m = 0;
  int n = 0;
  int r = 0;

  static Parameters make(int m, int n, int r);
  // Requires additionally r < min(m, n), the setting of the divisorial ideals.
  void require_proper() const;
  Parameters transposed() const { return {n, m, r}; }
  bool operator==(const Parameters&) const = default;
};

// [a_1 ... a_t | b_1 ... b_t] with strictly increasing index lists.
class Minor {
 public:
  Minor() = default;
  Minor(std::vector<int> rows, std::vector<int> cols);

  const std::vector<int>& rows() const noexcept { return rows_; }
  const std::vector<int>& cols() const noexcept { return cols_; }
  int size() const noexcept { return static_cast<int>(rows_.size()); }
  bool fits(int m, int n) const;

  // "[1 2|1 3]"
  std::string to_string() const;
  static Minor parse(std::string_view text);

  bool operator==(const Minor&) const = default;
  // Canonical order: size descending, then rows, then cols lexicographically.
  std::strong_ordering operator<=>(const Minor& other) const;

 private:
  std::vector<int> rows_;
  std::vector<int> cols_;
};

// d1 ⪯ d2: size(d1) >= size(d2) and the first size(d2) entries of d1 are
// componentwise <= those of d2 on both sides.
bool minor_leq(const Minor& d1, const Minor& d2);

// Product of minors with weakly decreasing sizes (empty minors are not allowed
// as factors; the empty product is the empty bitableau).
class Bitableau {
 public:
  Bitableau() = default;
  explicit Bitableau(std::vector<Minor> factors);

  const std::vector<Minor>& factors() const noexcept { return factors_; }
  std::vector<int> shape() const;
  int degree() const;
  bool empty() const noexcept { return factors_.empty(); }

  // "[1 2|1 2][2|3]"; the empty bitableau prints as "[|]".
  std::string to_string() const;
  static Bitableau parse(std::string_view text);

  bool operator==(const Bitableau&) const = default;
  std::strong_ordering operator<=>(const Bitableau& other) const;

 private:
  std::vector<Minor> factors_;
};

bool is_standard(const Bitableau& s);
bool in_standard_range(const Bitableau& s, const Parameters& params);

// Tableau with rows strictly increasing and columns weakly increasing
// (top to bottom), entries in [1, max_entry].
using Tableau = std::vector<std::vector<int>>;
std::vector<Tableau> enumerate_tableaux(const std::vector<int>& shape, int max_entry);

// Partitions of d with every part <= max_part, largest part first; lists in
// reverse lexicographic order.
std::vector<std::vector<int>> partitions(int d, int max_part);

// All standard bitableaux of degree d with shape entries <= r, left entries <= m
// and right entries <= n, in canonical (ascending) order.
std::vector<Bitableau> enumerate_standard(const Parameters& params, int degree);

enum class Side { rows, cols };
// r-minors of the first r rows (rows) or of the first r columns (cols).
std::vector<Minor> generators_gamma(const Parameters& params, Side side);

// All minors of every size 1..min(m,n) in canonical order.
std::vector<Minor> all_minors(int m, int n);

// k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace detring
