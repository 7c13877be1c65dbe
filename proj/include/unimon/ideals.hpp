#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "unimon/monoid.hpp"
#include "unimon/orders.hpp"

namespace unimon {

/// Subset of G(N) stable under multiplication by S on the right (right side),
/// on the left (left side) or both. Either a finite complement is known
/// exactly, or the ideal is an expression over generator sets.
class RelativeIdeal {
 public:
  /// E S, S E or S E S depending on side.
  static RelativeIdeal generated(const Monoid& base, Side side, std::vector<UnipotentMatrix> gens);
  /// G(N) minus the given finite set; stability is checked.
  static RelativeIdeal cofinite(const Monoid& base, Side side,
                                std::vector<UnipotentMatrix> complement);

  const Monoid& base() const;
  Side side() const;
  bool is_cofinite() const;
  /// Sorted complement in G(N). Throws NotCofinite for expression ideals.
  const std::vector<UnipotentMatrix>& complement() const;
  bool contains(const UnipotentMatrix& a) const;
  /// True for E S, S E or S E S built directly from a generator set.
  bool is_generated() const;
  /// Throws NotCofinite unless is_generated().
  const std::vector<UnipotentMatrix>& generators() const;

  friend RelativeIdeal ideal_product(const RelativeIdeal& i, const RelativeIdeal& j);
  friend RelativeIdeal ideal_union(const RelativeIdeal& i, const RelativeIdeal& j);
  friend RelativeIdeal ideal_intersection(const RelativeIdeal& i, const RelativeIdeal& j);

  struct Node;

 private:
  explicit RelativeIdeal(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

RelativeIdeal ideal_from_generators(const Monoid& s, Side side, std::vector<UnipotentMatrix> gens);
bool ideal_contains(const RelativeIdeal& i, const UnipotentMatrix& a);
RelativeIdeal ideal_product(const RelativeIdeal& i, const RelativeIdeal& j);
RelativeIdeal ideal_union(const RelativeIdeal& i, const RelativeIdeal& j);
RelativeIdeal ideal_intersection(const RelativeIdeal& i, const RelativeIdeal& j);

/// Minimal elements of I under the S-order matching its side (Y in X S for
/// right ideals, S X for left, S X S for two-sided). Expression ideals need a box.
std::vector<UnipotentMatrix> ideal_min_generators(const RelativeIdeal& i,
                                                  std::optional<Entry> box = std::nullopt);

/// Two-sided ideal S u A with A a set of gaps; A must be closed under
/// translation by S* within the gaps.
class TorsionElement {
 public:
  TorsionElement(const Monoid& base, std::vector<UnipotentMatrix> gap_part);

  const Monoid& base() const { return base_; }
  const std::vector<UnipotentMatrix>& gap_part() const { return gap_part_; }
  bool contains(const UnipotentMatrix& a) const;
  RelativeIdeal ideal() const;
  bool is_idempotent() const;
  /// The oversemigroup S u A; requires an idempotent element.
  Monoid as_monoid() const;

  friend bool operator==(const TorsionElement& a, const TorsionElement& b) {
    return a.gap_part_ == b.gap_part_;
  }
  /// Canonical order: by size of the gap part, then lexicographically.
  friend bool operator<(const TorsionElement& a, const TorsionElement& b);

 private:
  Monoid base_;
  std::vector<UnipotentMatrix> gap_part_;
};

TorsionElement torsion_product(const TorsionElement& a, const TorsionElement& b);

/// UNIMON_MAX_NODES when set, otherwise a built-in default.
std::size_t default_max_nodes();

/// Every torsion element of S, canonical order.
std::vector<TorsionElement> torsion_monoid(const Monoid& s,
                                           std::size_t max_nodes = default_max_nodes());

/// Every monoid T with S inside T inside G(N); S first, G(N) last.
std::vector<Monoid> oversemigroups(const Monoid& s, std::size_t max_nodes = default_max_nodes());

/// Gaps g of S for which S u {g} is a monoid, canonical order.
std::vector<UnipotentMatrix> adjoinable_gaps(const Monoid& s);

struct IdempotentLattice {
  std::vector<TorsionElement> nodes;
  /// Index pairs (lower, upper) of covering relations.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;
  std::vector<std::size_t> minimal_nontrivial;
};

IdempotentLattice torsion_idempotents(const Monoid& s, std::size_t max_nodes = default_max_nodes());

}  // namespace unimon
