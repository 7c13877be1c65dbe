#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include "unimon/errors.hpp"

namespace unimon {

using Entry = std::int64_t;

struct Position {
  int i = 1;
  int j = 2;

  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Number of strictly-upper positions of an n x n matrix.
std::size_t position_count(int n);

/// Row-major slot of (i, j), 1 <= i < j <= n, inside the strictly-upper vector.
std::size_t position_index(int n, int i, int j);

Entry checked_add(Entry a, Entry b);
Entry checked_mul(Entry a, Entry b);

/// Upper unitriangular integer matrix. Only the strictly-upper entries are
/// stored, row by row: (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n).
class UnipotentMatrix {
 public:
  UnipotentMatrix() = default;
  explicit UnipotentMatrix(int n);

  static UnipotentMatrix identity(int n);
  static UnipotentMatrix from_upper(int n, std::vector<Entry> upper);
  static UnipotentMatrix from_entries(
      int n, const std::vector<std::tuple<int, int, Entry>>& entries);
  /// First-row shorthand (a_2, ..., a_n) for elements of P(n).
  static UnipotentMatrix from_vector(const std::vector<Entry>& first_row);

  int n() const { return n_; }
  Entry at(int i, int j) const;
  const std::vector<Entry>& upper() const { return upper_; }
  std::vector<Entry> first_row() const;

  bool is_identity() const;
  bool is_nonnegative() const;

  /// Nonzero entries as (i, j, value) in row-major order.
  std::vector<std::tuple<int, int, Entry>> nonzero_entries() const;

  /// Compact text form, e.g. "(1,0,2)" listing the strictly-upper vector.
  std::string str() const;

  friend bool operator==(const UnipotentMatrix&, const UnipotentMatrix&) = default;
  friend std::strong_ordering operator<=>(const UnipotentMatrix& a,
                                          const UnipotentMatrix& b);

 private:
  int n_ = 0;
  std::vector<Entry> upper_;
};

struct MatrixHash {
  std::size_t operator()(const UnipotentMatrix& a) const noexcept;
};

UnipotentMatrix multiply(const UnipotentMatrix& a, const UnipotentMatrix& b);
UnipotentMatrix inverse(const UnipotentMatrix& a);
UnipotentMatrix operator*(const UnipotentMatrix& a, const UnipotentMatrix& b);

/// a^{-1} b
UnipotentMatrix left_quotient(const UnipotentMatrix& a, const UnipotentMatrix& b);
/// b a^{-1}
UnipotentMatrix right_quotient(const UnipotentMatrix& b, const UnipotentMatrix& a);

UnipotentMatrix power(const UnipotentMatrix& a, Entry k);

Entry max_entry(const UnipotentMatrix& a);
bool leq_entrywise(const UnipotentMatrix& a, const UnipotentMatrix& b);
UnipotentMatrix elementary(int n, int i, int j);

enum class PatternKind { full, first_row, custom };

class PatternGroup {
 public:
  PatternGroup() = default;

  static PatternGroup full(int n);
  static PatternGroup first_row(int n);
  /// Arbitrary position set; rejected unless closed under composition.
  static PatternGroup custom(int n, std::vector<Position> positions);

  int n() const { return n_; }
  PatternKind kind() const { return kind_; }
  const std::vector<Position>& positions() const { return positions_; }
  /// Slots of the pattern positions inside the strictly-upper vector.
  const std::vector<std::size_t>& slots() const { return slots_; }
  int dimension() const { return static_cast<int>(positions_.size()); }

  bool contains(const UnipotentMatrix& a) const;
  UnipotentMatrix identity() const { return UnipotentMatrix::identity(n_); }

  friend bool operator==(const PatternGroup& a, const PatternGroup& b) {
    return a.n_ == b.n_ && a.positions_ == b.positions_;
  }

 private:
  PatternGroup(int n, PatternKind kind, std::vector<Position> positions);

  int n_ = 0;
  PatternKind kind_ = PatternKind::full;
  std::vector<Position> positions_;
  std::vector<std::size_t> slots_;
};

bool in_group(const PatternGroup& p, const UnipotentMatrix& a);

/// Calls f on every matrix X of the pattern with lo <= X <= hi entrywise,
/// in canonical order. lo and hi are indexed by pattern slot (size dimension()).
/// When f returns bool, returning false stops the scan.
template <class F>
void for_each_in_range(const PatternGroup& p, const std::vector<Entry>& lo,
                       const std::vector<Entry>& hi, F&& f) {
  const auto& slots = p.slots();
  const std::size_t d = slots.size();
  for (std::size_t k = 0; k < d; ++k) {
    if (lo[k] > hi[k]) return;
  }
  std::vector<Entry> upper(position_count(p.n()), 0);
  for (std::size_t k = 0; k < d; ++k) upper[slots[k]] = lo[k];
  while (true) {
    if constexpr (std::is_same_v<std::invoke_result_t<F&, const UnipotentMatrix&>, bool>) {
      if (!f(UnipotentMatrix::from_upper(p.n(), upper))) return;
    } else {
      f(UnipotentMatrix::from_upper(p.n(), upper));
    }
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (upper[slots[k]] < hi[k]) {
        ++upper[slots[k]];
        break;
      }
      upper[slots[k]] = lo[k];
      if (k == 0) return;
    }
    if (d == 0) return;
  }
}

/// All X in the pattern with 0 <= X <= b entrywise.
template <class F>
void for_each_below(const PatternGroup& p, const UnipotentMatrix& b, F&& f) {
  std::vector<Entry> lo(p.slots().size(), 0), hi;
  hi.reserve(p.slots().size());
  for (std::size_t s : p.slots()) hi.push_back(b.upper()[s]);
  for_each_in_range(p, lo, hi, std::forward<F>(f));
}

/// All X in G(N) with max_entry(X) < bound.
template <class F>
void for_each_in_box(const PatternGroup& p, Entry bound, F&& f) {
  if (bound < 1) return;
  std::vector<Entry> lo(p.slots().size(), 0), hi(p.slots().size(), bound - 1);
  for_each_in_range(p, lo, hi, std::forward<F>(f));
}

std::vector<UnipotentMatrix> enumerate_box(const PatternGroup& p, Entry bound);

/// Mixed-radix index of boxed elements, used for dense membership tables.
class BoxIndexer {
 public:
  BoxIndexer() = default;
  BoxIndexer(const PatternGroup& p, Entry radix);

  std::size_t size() const { return size_; }
  Entry radix() const { return radix_; }
  /// Requires 0 <= entries < radix on pattern slots.
  std::size_t index(const UnipotentMatrix& a) const;

 private:
  std::vector<std::size_t> slots_;
  Entry radix_ = 1;
  std::size_t size_ = 1;
};

}  // namespace unimon

template <>
struct std::hash<unimon::UnipotentMatrix> : unimon::MatrixHash {};
