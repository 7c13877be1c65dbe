#include "unimon/invariants.hpp"

#include <algorithm>
#include <iterator>

#include "unimon/orders.hpp"

namespace unimon {

namespace {

void require_gaps(const Monoid& s) {
  if (!s.has_gaps()) throw EmptyGaps("the monoid has no gaps");
}

std::vector<UnipotentMatrix> intersection(const std::vector<UnipotentMatrix>& a,
                                          const std::vector<UnipotentMatrix>& b) {
  std::vector<UnipotentMatrix> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// A product g X or X g that is a gap dominates X entrywise, so only
// quotients between two gaps can violate the condition.
std::vector<UnipotentMatrix> frobenius_one_side(const Monoid& s, Side side) {
  std::vector<UnipotentMatrix> out;
  for (const auto& g : s.gaps()) {
    bool ok = true;
    for (const auto& h : s.gaps()) {
      if (h == g || !leq_entrywise(g, h)) continue;
      UnipotentMatrix x = side == Side::left ? left_quotient(g, h) : right_quotient(h, g);
      if (x.is_nonnegative()) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<UnipotentMatrix> frobenius(const Monoid& s, Side side) {
  require_gaps(s);
  if (side == Side::twosided) {
    return intersection(frobenius_one_side(s, Side::left), frobenius_one_side(s, Side::right));
  }
  return frobenius_one_side(s, side);
}

std::vector<UnipotentMatrix> pseudo_frobenius(const Monoid& s, Side side) {
  require_gaps(s);
  if (side == Side::twosided) {
    return intersection(pseudo_frobenius(s, Side::left), pseudo_frobenius(s, Side::right));
  }
  return extremal(Order::for_side(side, s), s.gaps(), Extremum::max);
}

std::vector<UnipotentMatrix> special_gaps(const Monoid& s) {
  std::vector<UnipotentMatrix> out;
  for (const auto& g : pseudo_frobenius(s, Side::twosided)) {
    if (s.contains(multiply(g, g))) out.push_back(g);
  }
  return out;
}

std::array<std::size_t, 3> type_numbers(const Monoid& s) {
  return {pseudo_frobenius(s, Side::left).size(), pseudo_frobenius(s, Side::right).size(),
          pseudo_frobenius(s, Side::twosided).size()};
}

FrobeniusData frobenius_data(const Monoid& s) {
  require_gaps(s);
  FrobeniusData d;
  d.f_left = frobenius(s, Side::left);
  d.f_right = frobenius(s, Side::right);
  d.f_two = intersection(d.f_left, d.f_right);
  d.pf_left = pseudo_frobenius(s, Side::left);
  d.pf_right = pseudo_frobenius(s, Side::right);
  d.pf_two = intersection(d.pf_left, d.pf_right);
  for (const auto& g : d.pf_two) {
    if (s.contains(multiply(g, g))) d.special.push_back(g);
  }
  d.type_numbers = {d.pf_left.size(), d.pf_right.size(), d.pf_two.size()};
  return d;
}

std::vector<UnipotentMatrix> pf_of_cofinite_ideal(const RelativeIdeal& i, Side side) {
  std::vector<UnipotentMatrix> candidates;
  for (const auto& c : i.complement()) {
    if (!c.is_identity()) candidates.push_back(c);
  }
  if (candidates.empty()) throw EmptyGaps("the ideal has no non-identity complement");
  if (side == Side::twosided) {
    return intersection(extremal(Order::for_side(Side::left, i.base()), candidates, Extremum::max),
                        extremal(Order::for_side(Side::right, i.base()), candidates, Extremum::max));
  }
  return extremal(Order::for_side(side, i.base()), candidates, Extremum::max);
}

}  // namespace unimon
