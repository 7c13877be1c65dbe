#pragma once

#include <functional>
#include <vector>

#include "unimon/monoid.hpp"

namespace unimon {

enum class OrderKind { left, right, twosided, entrywise };

/// Partial order on G(N). The S-orders compare through quotients:
/// left: A^{-1}B in S, right: BA^{-1} in S, twosided: both.
class Order {
 public:
  Order(OrderKind kind, Monoid context);

  static Order entrywise(const PatternGroup& group);
  /// Two-sided order of the gap-free monoid G(N).
  static Order natural(const PatternGroup& group);
  static Order for_side(Side side, const Monoid& context);

  OrderKind kind() const { return kind_; }
  const Monoid& context() const { return context_; }
  const PatternGroup& group() const { return context_.group(); }

  bool leq(const UnipotentMatrix& a, const UnipotentMatrix& b) const;

 private:
  OrderKind kind_;
  Monoid context_;
};

bool s_leq(const Order& order, const UnipotentMatrix& a, const UnipotentMatrix& b);

/// All C with a <= C <= b, canonical order.
std::vector<UnipotentMatrix> interval(const Order& order, const UnipotentMatrix& a,
                                      const UnipotentMatrix& b);

enum class Extremum { max, min };

std::vector<UnipotentMatrix> extremal(const Order& order, const std::vector<UnipotentMatrix>& xs,
                                      Extremum which);

struct NgCounts {
  std::size_t n_count = 0;
  std::size_t g_count = 0;

  friend bool operator==(const NgCounts&, const NgCounts&) = default;
};

/// Members and gaps of S in the order interval [1, c].
NgCounts count_n_g(const Monoid& s, const UnipotentMatrix& c, const Order& order);

/// Checks, among elements with max_entry < bound, that S minus I is closed
/// downwards in S: y in S\I, x in S, x <= y implies x in S\I.
bool is_lower_order_ideal_boxed(const Monoid& s, const Order& order,
                                const std::function<bool(const UnipotentMatrix&)>& in_ideal,
                                Entry bound);

}  // namespace unimon
