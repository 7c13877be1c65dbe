#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "unimon/errors.hpp"
#include "unimon/matrix.hpp"

namespace unimon {

enum class Side { left, right, twosided };

/// Two non-gaps whose product is a gap.
class NotClosed : public ValidationError {
 public:
  NotClosed(UnipotentMatrix a, UnipotentMatrix b, UnipotentMatrix product);

  const UnipotentMatrix& left() const { return a_; }
  const UnipotentMatrix& right() const { return b_; }
  const UnipotentMatrix& product() const { return product_; }

 private:
  UnipotentMatrix a_, b_, product_;
};

/// Cofinite submonoid of G(N), stored as its sorted gap set.
class Monoid {
 public:
  static Monoid from_gaps(const PatternGroup& group, std::vector<UnipotentMatrix> gaps);
  static Monoid whole(const PatternGroup& group);

  const PatternGroup& group() const { return data_->group; }
  const std::vector<UnipotentMatrix>& gaps() const { return data_->gaps; }
  /// Least k such that every element of G(N) with an entry >= k is a member.
  Entry generating_number() const { return data_->r; }
  std::size_t genus() const { return data_->gaps.size(); }
  bool has_gaps() const { return !data_->gaps.empty(); }

  /// Nonnegative and supported on the pattern.
  bool in_ambient(const UnipotentMatrix& a) const;
  bool contains(const UnipotentMatrix& a) const;
  bool is_gap(const UnipotentMatrix& a) const;

  friend bool operator==(const Monoid& a, const Monoid& b) {
    return a.data_ == b.data_ ||
           (a.group() == b.group() && a.gaps() == b.gaps());
  }
  /// Canonical order on monoids of one group: lexicographic on sorted gap lists.
  friend bool operator<(const Monoid& a, const Monoid& b) { return a.gaps() < b.gaps(); }

 private:
  struct Data {
    PatternGroup group;
    std::vector<UnipotentMatrix> gaps;
    Entry r = 1;
    BoxIndexer indexer;
    std::vector<bool> gap_table;
  };
  explicit Monoid(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

struct MonoidInvariants {
  Entry r = 1;
  Entry conductor = 1;
  Entry genus = 0;
  Entry sporadicity = 1;
  std::vector<UnipotentMatrix> sporadic_set;
};

MonoidInvariants invariants(const Monoid& s);

bool contains(const Monoid& s, const UnipotentMatrix& a);

/// Outcome of closing a generator set inside a finite window.
struct GeneratorClosure {
  std::optional<Monoid> monoid;
  Entry bound = 0;

  bool verified() const { return monoid.has_value(); }
};

GeneratorClosure from_generators(const PatternGroup& group,
                                 const std::vector<UnipotentMatrix>& gens, Entry search_bound);

/// Identity together with every element having an entry >= k.
Monoid fundamental_monoid(const PatternGroup& group, Entry k);

std::vector<UnipotentMatrix> minimal_generators(const Monoid& s);

Monoid intersect(const Monoid& s, const Monoid& t);

/// S with the gap a turned into a member; throws NotClosed when that fails.
Monoid adjoin(const Monoid& s, const UnipotentMatrix& a);

/// Members of S with max_entry < bound, canonical order.
std::vector<UnipotentMatrix> members_in_box(const Monoid& s, Entry bound);

}  // namespace unimon
