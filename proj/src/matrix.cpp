#include "unimon/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace unimon {

std::size_t position_count(int n) {
  if (n < 2) return 0;
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

std::size_t position_index(int n, int i, int j) {
  if (i < 1 || j > n || i >= j) {
    throw BadPosition("position (" + std::to_string(i) + "," + std::to_string(j) +
                      ") is not strictly upper in size " + std::to_string(n));
  }
  const auto row = static_cast<std::size_t>(i - 1);
  const auto nn = static_cast<std::size_t>(n);
  return row * nn - row * (row + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

Entry checked_add(Entry a, Entry b) {
  Entry out;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow("integer overflow in addition");
  return out;
}

Entry checked_mul(Entry a, Entry b) {
  Entry out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow("integer overflow in multiplication");
  return out;
}

UnipotentMatrix::UnipotentMatrix(int n) : n_(n), upper_(position_count(n), 0) {
  if (n < 2) throw SizeMismatch("matrix size must be at least 2");
}

UnipotentMatrix UnipotentMatrix::identity(int n) { return UnipotentMatrix(n); }

UnipotentMatrix UnipotentMatrix::from_upper(int n, std::vector<Entry> upper) {
  if (n < 2) throw SizeMismatch("matrix size must be at least 2");
  if (upper.size() != position_count(n)) {
    throw SizeMismatch("expected " + std::to_string(position_count(n)) +
                       " strictly-upper entries, got " + std::to_string(upper.size()));
  }
  UnipotentMatrix m;
  m.n_ = n;
  m.upper_ = std::move(upper);
  return m;
}

UnipotentMatrix UnipotentMatrix::from_entries(
    int n, const std::vector<std::tuple<int, int, Entry>>& entries) {
  UnipotentMatrix m(n);
  for (const auto& [i, j, v] : entries) m.upper_[position_index(n, i, j)] = v;
  return m;
}

UnipotentMatrix UnipotentMatrix::from_vector(const std::vector<Entry>& first_row) {
  const int n = static_cast<int>(first_row.size()) + 1;
  UnipotentMatrix m(n);
  for (int j = 2; j <= n; ++j) m.upper_[position_index(n, 1, j)] = first_row[j - 2];
  return m;
}

Entry UnipotentMatrix::at(int i, int j) const {
  if (i == j && i >= 1 && i <= n_) return 1;
  if (i > j && j >= 1 && i <= n_) return 0;
  return upper_[position_index(n_, i, j)];
}

std::vector<Entry> UnipotentMatrix::first_row() const {
  return {upper_.begin(), upper_.begin() + (n_ - 1)};
}

bool UnipotentMatrix::is_identity() const {
  return std::all_of(upper_.begin(), upper_.end(), [](Entry v) { return v == 0; });
}

bool UnipotentMatrix::is_nonnegative() const {
  return std::all_of(upper_.begin(), upper_.end(), [](Entry v) { return v >= 0; });
}

std::vector<std::tuple<int, int, Entry>> UnipotentMatrix::nonzero_entries() const {
  std::vector<std::tuple<int, int, Entry>> out;
  std::size_t k = 0;
  for (int i = 1; i < n_; ++i) {
    for (int j = i + 1; j <= n_; ++j, ++k) {
      if (upper_[k] != 0) out.emplace_back(i, j, upper_[k]);
    }
  }
  return out;
}

std::string UnipotentMatrix::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < upper_.size(); ++k) {
    if (k) os << ',';
    os << upper_[k];
  }
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const UnipotentMatrix& a, const UnipotentMatrix& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return a.upper_ <=> b.upper_;
}

std::size_t MatrixHash::operator()(const UnipotentMatrix& a) const noexcept {
  std::size_t h = static_cast<std::size_t>(a.n()) * 0x9e3779b97f4a7c15ULL;
  for (Entry v : a.upper()) {
    h ^= std::hash<Entry>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void require_same_size(const UnipotentMatrix& a, const UnipotentMatrix& b) {
  if (a.n() != b.n()) {
    throw SizeMismatch("matrix sizes differ: " + std::to_string(a.n()) + " vs " +
                       std::to_string(b.n()));
  }
}

}  // namespace

UnipotentMatrix multiply(const UnipotentMatrix& a, const UnipotentMatrix& b) {
  require_same_size(a, b);
  const int n = a.n();
  const auto& x = a.upper();
  const auto& y = b.upper();
  std::vector<Entry> out(x.size());
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Entry v = checked_add(x[position_index(n, i, j)], y[position_index(n, i, j)]);
      for (int k = i + 1; k < j; ++k) {
        v = checked_add(v, checked_mul(x[position_index(n, i, k)], y[position_index(n, k, j)]));
      }
      out[position_index(n, i, j)] = v;
    }
  }
  return UnipotentMatrix::from_upper(n, std::move(out));
}

UnipotentMatrix operator*(const UnipotentMatrix& a, const UnipotentMatrix& b) {
  return multiply(a, b);
}

UnipotentMatrix inverse(const UnipotentMatrix& a) {
  const int n = a.n();
  const auto& x = a.upper();
  std::vector<Entry> out(x.size(), 0);
  // Rows from the bottom up: X_ij = -a_ij - sum_{i<k<j} a_ik X_kj.
  for (int i = n - 1; i >= 1; --i) {
    for (int j = i + 1; j <= n; ++j) {
      Entry v = -x[position_index(n, i, j)];
      for (int k = i + 1; k < j; ++k) {
        v = checked_add(v, -checked_mul(x[position_index(n, i, k)], out[position_index(n, k, j)]));
      }
      out[position_index(n, i, j)] = v;
    }
  }
  return UnipotentMatrix::from_upper(n, std::move(out));
}

UnipotentMatrix left_quotient(const UnipotentMatrix& a, const UnipotentMatrix& b) {
  return multiply(inverse(a), b);
}

UnipotentMatrix right_quotient(const UnipotentMatrix& b, const UnipotentMatrix& a) {
  return multiply(b, inverse(a));
}

UnipotentMatrix power(const UnipotentMatrix& a, Entry k) {
  UnipotentMatrix base = k >= 0 ? a : inverse(a);
  Entry e = k >= 0 ? k : -k;
  UnipotentMatrix out = UnipotentMatrix::identity(a.n());
  while (e > 0) {
    if (e & 1) out = multiply(out, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return out;
}

Entry max_entry(const UnipotentMatrix& a) {
  Entry m = 0;
  for (Entry v : a.upper()) {
    if (v < 0) throw NegativeEntry("matrix " + a.str() + " has a negative entry");
    m = std::max(m, v);
  }
  return m;
}

bool leq_entrywise(const UnipotentMatrix& a, const UnipotentMatrix& b) {
  require_same_size(a, b);
  for (std::size_t k = 0; k < a.upper().size(); ++k) {
    if (a.upper()[k] > b.upper()[k]) return false;
  }
  return true;
}

UnipotentMatrix elementary(int n, int i, int j) {
  if (n < 2) throw SizeMismatch("matrix size must be at least 2");
  std::vector<Entry> upper(position_count(n), 0);
  upper[position_index(n, i, j)] = 1;
  return UnipotentMatrix::from_upper(n, std::move(upper));
}

PatternGroup::PatternGroup(int n, PatternKind kind, std::vector<Position> positions)
    : n_(n), kind_(kind), positions_(std::move(positions)) {
  std::sort(positions_.begin(), positions_.end());
  positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
  slots_.reserve(positions_.size());
  for (const auto& p : positions_) slots_.push_back(position_index(n_, p.i, p.j));
}

PatternGroup PatternGroup::full(int n) {
  if (n < 2) throw SizeMismatch("matrix size must be at least 2");
  std::vector<Position> ps;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) ps.push_back({i, j});
  return PatternGroup(n, PatternKind::full, std::move(ps));
}

PatternGroup PatternGroup::first_row(int n) {
  if (n < 2) throw SizeMismatch("matrix size must be at least 2");
  std::vector<Position> ps;
  for (int j = 2; j <= n; ++j) ps.push_back({1, j});
  return PatternGroup(n, PatternKind::first_row, std::move(ps));
}

PatternGroup PatternGroup::custom(int n, std::vector<Position> positions) {
  if (n < 2) throw SizeMismatch("matrix size must be at least 2");
  for (const auto& p : positions) position_index(n, p.i, p.j);
  PatternGroup g(n, PatternKind::custom, std::move(positions));
  std::vector<bool> present(position_count(n), false);
  for (std::size_t s : g.slots_) present[s] = true;
  for (const auto& a : g.positions_) {
    for (const auto& b : g.positions_) {
      if (a.j == b.i && !present[position_index(n, a.i, b.j)]) {
        throw BadPattern("pattern not closed under composition: (" + std::to_string(a.i) +
                         "," + std::to_string(a.j) + ") and (" + std::to_string(b.i) + "," +
                         std::to_string(b.j) + ") present but (" + std::to_string(a.i) +
                         "," + std::to_string(b.j) + ") missing");
      }
    }
  }
  return g;
}

bool PatternGroup::contains(const UnipotentMatrix& a) const {
  if (a.n() != n_) return false;
  std::size_t next = 0;
  for (std::size_t k = 0; k < a.upper().size(); ++k) {
    const bool in_pattern = next < slots_.size() && slots_[next] == k;
    if (in_pattern) {
      ++next;
    } else if (a.upper()[k] != 0) {
      return false;
    }
  }
  return true;
}

bool in_group(const PatternGroup& p, const UnipotentMatrix& a) {
  if (a.n() != p.n()) throw SizeMismatch("matrix size does not match the group");
  return p.contains(a);
}

std::vector<UnipotentMatrix> enumerate_box(const PatternGroup& p, Entry bound) {
  std::vector<UnipotentMatrix> out;
  for_each_in_box(p, bound, [&](const UnipotentMatrix& x) { out.push_back(x); });
  return out;
}

BoxIndexer::BoxIndexer(const PatternGroup& p, Entry radix)
    : slots_(p.slots()), radix_(radix) {
  constexpr std::size_t kLimit = std::size_t{1} << 30;
  size_ = 1;
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    if (size_ > kLimit / static_cast<std::size_t>(radix)) {
      throw Infeasible("membership table for radix " + std::to_string(radix) +
                       " exceeds the supported size");
    }
    size_ *= static_cast<std::size_t>(radix);
  }
}

std::size_t BoxIndexer::index(const UnipotentMatrix& a) const {
  std::size_t idx = 0;
  for (std::size_t s : slots_) {
    idx = idx * static_cast<std::size_t>(radix_) + static_cast<std::size_t>(a.upper()[s]);
  }
  return idx;
}

}  // namespace unimon
