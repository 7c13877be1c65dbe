#include "unimon/apery.hpp"

#include <algorithm>

#include "unimon/invariants.hpp"
#include "unimon/orders.hpp"

namespace unimon {

AperySet::AperySet(const Monoid& base, const UnipotentMatrix& pivot, Side side)
    : base_(base), pivot_(pivot), side_(side) {
  if (!base.contains(pivot) || pivot.is_identity()) {
    throw PivotNotInMonoid("pivot " + pivot.str() + " is not a non-identity member");
  }
  for (const auto& g : base.gaps()) {
    if (side != Side::right) {
      UnipotentMatrix b = multiply(pivot, g);
      if (base.contains(b) && (side == Side::left || base.is_gap(right_quotient(b, pivot)))) {
        core_.push_back(b);
      }
    }
    if (side == Side::right) {
      UnipotentMatrix b = multiply(g, pivot);
      if (base.contains(b)) core_.push_back(b);
    }
  }
  std::sort(core_.begin(), core_.end());
  core_.erase(std::unique(core_.begin(), core_.end()), core_.end());
}

bool AperySet::contains(const UnipotentMatrix& b) const {
  if (!base_.contains(b)) return false;
  const bool left_out = !base_.contains(left_quotient(pivot_, b));
  const bool right_out = !base_.contains(right_quotient(b, pivot_));
  switch (side_) {
    case Side::left:
      return left_out;
    case Side::right:
      return right_out;
    case Side::twosided:
      break;
  }
  return left_out && right_out;
}

AperySet apery(const Monoid& s, const UnipotentMatrix& a, Side side) { return {s, a, side}; }

bool apery_contains(const AperySet& ap, const UnipotentMatrix& b) { return ap.contains(b); }

std::vector<UnipotentMatrix> apery_in_box(const AperySet& ap, Entry bound) {
  std::vector<UnipotentMatrix> out;
  for_each_in_box(ap.base().group(), bound, [&](const UnipotentMatrix& b) {
    if (ap.contains(b)) out.push_back(b);
  });
  return out;
}

bool is_boxed_apery_maximal(const AperySet& ap, const UnipotentMatrix& x, Entry bound) {
  if (!ap.contains(x)) return false;
  const auto& g = ap.base().group();
  const Order order = Order::for_side(ap.side(), ap.base());
  std::vector<Entry> lo, hi(g.slots().size(), bound - 1);
  for (std::size_t s : g.slots()) lo.push_back(x.upper()[s]);
  bool maximal = true;
  for_each_in_range(g, lo, hi, [&](const UnipotentMatrix& y) {
    if (y != x && ap.contains(y) && order.leq(x, y)) maximal = false;
    return maximal;
  });
  return maximal;
}

std::vector<UnipotentMatrix> apery_maximal(const Monoid& s, const UnipotentMatrix& a, Side side) {
  const auto pf = pseudo_frobenius(s, side);
  const Entry bound = 2 * s.generating_number() + max_entry(a);
  std::vector<UnipotentMatrix> out;
  for (const auto& p : pf) {
    const UnipotentMatrix x = side == Side::right ? multiply(p, a) : multiply(a, p);
    // A one-sided pseudo-Frobenius gap can land outside S after the pivot
    // is applied on the other side; such a gap has no Apery preimage.
    if (!s.contains(x)) continue;
    bool verified;
    if (side == Side::twosided) {
      verified = is_boxed_apery_maximal(AperySet(s, a, Side::left), x, bound) &&
                 is_boxed_apery_maximal(AperySet(s, a, Side::right), multiply(p, a), bound);
    } else {
      verified = is_boxed_apery_maximal(AperySet(s, a, side), x, bound);
    }
    if (!verified) {
      throw Error("Apery maximality check failed for " + x.str() + " below bound " +
                  std::to_string(bound));
    }
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AperyFactorization factor_via_apery(const Monoid& s, const UnipotentMatrix& a, Side side,
                                    const UnipotentMatrix& b) {
  const AperySet ap(s, a, side);
  if (!s.contains(b)) throw ValidationError(b.str() + " is not a member of the monoid");
  AperyFactorization f;
  f.remainder = b;
  // Each peel strictly lowers the entry sum, so the loop ends.
  while (!ap.contains(f.remainder)) {
    UnipotentMatrix l = left_quotient(a, f.remainder);
    if (side != Side::right && s.contains(l)) {
      f.remainder = std::move(l);
      ++f.left_power;
      continue;
    }
    f.remainder = right_quotient(f.remainder, a);
    ++f.right_power;
  }
  return f;
}

}  // namespace unimon
