#include "unimon/orders.hpp"

#include <algorithm>

namespace unimon {

Order::Order(OrderKind kind, Monoid context) : kind_(kind), context_(std::move(context)) {}

Order Order::entrywise(const PatternGroup& group) {
  return Order(OrderKind::entrywise, Monoid::whole(group));
}

Order Order::natural(const PatternGroup& group) {
  return Order(OrderKind::twosided, Monoid::whole(group));
}

Order Order::for_side(Side side, const Monoid& context) {
  switch (side) {
    case Side::left:
      return Order(OrderKind::left, context);
    case Side::right:
      return Order(OrderKind::right, context);
    case Side::twosided:
      break;
  }
  return Order(OrderKind::twosided, context);
}

bool Order::leq(const UnipotentMatrix& a, const UnipotentMatrix& b) const {
  switch (kind_) {
    case OrderKind::entrywise:
      return leq_entrywise(a, b);
    case OrderKind::left:
      return leq_entrywise(a, b) && context_.contains(left_quotient(a, b));
    case OrderKind::right:
      return leq_entrywise(a, b) && context_.contains(right_quotient(b, a));
    case OrderKind::twosided:
      return leq_entrywise(a, b) && context_.contains(left_quotient(a, b)) &&
             context_.contains(right_quotient(b, a));
  }
  return false;
}

bool s_leq(const Order& order, const UnipotentMatrix& a, const UnipotentMatrix& b) {
  return order.leq(a, b);
}

namespace {

std::vector<Entry> pattern_entries(const PatternGroup& g, const UnipotentMatrix& a) {
  std::vector<Entry> out;
  out.reserve(g.slots().size());
  for (std::size_t s : g.slots()) out.push_back(a.upper()[s]);
  return out;
}

}  // namespace

std::vector<UnipotentMatrix> interval(const Order& order, const UnipotentMatrix& a,
                                      const UnipotentMatrix& b) {
  std::vector<UnipotentMatrix> out;
  const auto& g = order.group();
  for_each_in_range(g, pattern_entries(g, a), pattern_entries(g, b),
                    [&](const UnipotentMatrix& c) {
                      if (order.leq(a, c) && order.leq(c, b)) out.push_back(c);
                    });
  return out;
}

std::vector<UnipotentMatrix> extremal(const Order& order, const std::vector<UnipotentMatrix>& xs,
                                      Extremum which) {
  std::vector<UnipotentMatrix> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<UnipotentMatrix> out;
  for (const auto& x : sorted) {
    bool dominated = false;
    for (const auto& y : sorted) {
      if (y == x) continue;
      dominated = which == Extremum::max ? order.leq(x, y) : order.leq(y, x);
      if (dominated) break;
    }
    if (!dominated) out.push_back(x);
  }
  return out;
}

NgCounts count_n_g(const Monoid& s, const UnipotentMatrix& c, const Order& order) {
  NgCounts out;
  const auto one = s.group().identity();
  for_each_below(s.group(), c, [&](const UnipotentMatrix& b) {
    if (!order.leq(one, b) || !order.leq(b, c)) return;
    if (s.contains(b)) {
      ++out.n_count;
    } else {
      ++out.g_count;
    }
  });
  return out;
}

bool is_lower_order_ideal_boxed(const Monoid& s, const Order& order,
                                const std::function<bool(const UnipotentMatrix&)>& in_ideal,
                                Entry bound) {
  bool ok = true;
  for_each_in_box(s.group(), bound, [&](const UnipotentMatrix& y) {
    if (!s.contains(y) || in_ideal(y)) return true;
    for_each_below(s.group(), y, [&](const UnipotentMatrix& x) {
      if (s.contains(x) && in_ideal(x) && order.leq(x, y)) ok = false;
      return ok;
    });
    return ok;
  });
  return ok;
}

}  // namespace unimon
