#include "unimon/monoid.hpp"

#include <algorithm>

namespace unimon {

NotClosed::NotClosed(UnipotentMatrix a, UnipotentMatrix b, UnipotentMatrix product)
    : ValidationError("not closed: " + a.str() + " * " + b.str() + " = " + product.str() +
                      " is a gap"),
      a_(std::move(a)),
      b_(std::move(b)),
      product_(std::move(product)) {}

namespace {

void check_element(const PatternGroup& group, const UnipotentMatrix& a) {
  if (a.n() != group.n()) {
    throw SizeMismatch("element " + a.str() + " has size " + std::to_string(a.n()) +
                       ", group has size " + std::to_string(group.n()));
  }
  if (!a.is_nonnegative()) throw NegativeEntry("element " + a.str() + " has a negative entry");
  if (!group.contains(a)) throw OutOfPattern("element " + a.str() + " is outside the pattern");
}

}  // namespace

Monoid Monoid::from_gaps(const PatternGroup& group, std::vector<UnipotentMatrix> gaps) {
  Entry top = 0;
  for (const auto& g : gaps) {
    check_element(group, g);
    if (g.is_identity()) throw IdentityGap("the identity cannot be a gap");
    top = std::max(top, max_entry(g));
  }
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());

  auto data = std::make_shared<Data>();
  data->group = group;
  data->r = gaps.empty() ? 1 : top + 1;
  data->indexer = BoxIndexer(group, data->r);
  data->gap_table.assign(data->indexer.size(), false);
  for (const auto& g : gaps) data->gap_table[data->indexer.index(g)] = true;
  data->gaps = std::move(gaps);
  Monoid s(std::move(data));

  // A product landing on a gap has both factors entrywise below that gap, so it
  // is enough to split each gap over its entrywise divisors.
  for (const auto& g : s.gaps()) {
    std::vector<UnipotentMatrix> below;
    for_each_below(group, g, [&](const UnipotentMatrix& a) { below.push_back(a); });
    for (auto it = below.rbegin(); it != below.rend(); ++it) {
      const auto& a = *it;
      if (a.is_identity() || a == g || s.is_gap(a)) continue;
      UnipotentMatrix b = left_quotient(a, g);
      if (!b.is_nonnegative() || b.is_identity() || s.is_gap(b)) continue;
      throw NotClosed(a, b, g);
    }
  }
  return s;
}

Monoid Monoid::whole(const PatternGroup& group) { return from_gaps(group, {}); }

bool Monoid::in_ambient(const UnipotentMatrix& a) const {
  return a.n() == group().n() && a.is_nonnegative() && group().contains(a);
}

bool Monoid::contains(const UnipotentMatrix& a) const {
  return in_ambient(a) && !is_gap(a);
}

bool Monoid::is_gap(const UnipotentMatrix& a) const {
  if (!in_ambient(a)) return false;
  for (std::size_t s : group().slots()) {
    if (a.upper()[s] >= data_->r) return false;
  }
  return data_->gap_table[data_->indexer.index(a)];
}

bool contains(const Monoid& s, const UnipotentMatrix& a) { return s.contains(a); }

MonoidInvariants invariants(const Monoid& s) {
  MonoidInvariants inv;
  inv.r = s.generating_number();
  inv.conductor = 1;
  for (int k = 0; k < s.group().dimension(); ++k) inv.conductor = checked_mul(inv.conductor, inv.r);
  inv.genus = static_cast<Entry>(s.genus());
  inv.sporadicity = inv.conductor - inv.genus;
  inv.sporadic_set = members_in_box(s, inv.r);
  return inv;
}

std::vector<UnipotentMatrix> members_in_box(const Monoid& s, Entry bound) {
  std::vector<UnipotentMatrix> out;
  for_each_in_box(s.group(), bound, [&](const UnipotentMatrix& x) {
    if (!s.is_gap(x)) out.push_back(x);
  });
  return out;
}

GeneratorClosure from_generators(const PatternGroup& group,
                                 const std::vector<UnipotentMatrix>& gens, Entry search_bound) {
  if (search_bound < 2) throw InputError("search bound must be at least 2");
  for (const auto& g : gens) {
    if (g.n() != group.n()) throw SizeMismatch("generator " + g.str() + " has the wrong size");
    if (!g.is_nonnegative() || !group.contains(g)) {
      throw GeneratorOutOfPattern("generator " + g.str() + " is not in G(N)");
    }
    if (g.is_identity()) throw IdentityGenerator("the identity is not a valid generator");
  }

  // Every factor of a boxed element is entrywise below it, and such a factor
  // precedes it in canonical order, so one ordered sweep computes the closure.
  BoxIndexer indexer(group, search_bound);
  std::vector<bool> member(indexer.size(), false);
  for_each_in_box(group, search_bound, [&](const UnipotentMatrix& x) {
    bool in = x.is_identity();
    for (std::size_t k = 0; !in && k < gens.size(); ++k) {
      if (!leq_entrywise(gens[k], x)) continue;
      UnipotentMatrix y = right_quotient(x, gens[k]);
      in = y.is_nonnegative() && member[indexer.index(y)];
    }
    member[indexer.index(x)] = in;
  });

  GeneratorClosure out;
  out.bound = search_bound;
  for (Entry k = 1; 2 * k <= search_bound; ++k) {
    bool window_full = true;
    for_each_in_box(group, 2 * k, [&](const UnipotentMatrix& x) {
      if (max_entry(x) >= k && !member[indexer.index(x)]) window_full = false;
      return window_full;
    });
    if (!window_full) continue;
    std::vector<UnipotentMatrix> gaps;
    for_each_in_box(group, k, [&](const UnipotentMatrix& x) {
      if (!member[indexer.index(x)]) gaps.push_back(x);
    });
    out.monoid = Monoid::from_gaps(group, std::move(gaps));
    return out;
  }
  return out;
}

Monoid fundamental_monoid(const PatternGroup& group, Entry k) {
  if (k < 1) throw InputError("fundamental monoid index must be at least 1");
  std::vector<UnipotentMatrix> gaps;
  for_each_in_box(group, k, [&](const UnipotentMatrix& x) {
    if (!x.is_identity()) gaps.push_back(x);
  });
  return Monoid::from_gaps(group, std::move(gaps));
}

std::vector<UnipotentMatrix> minimal_generators(const Monoid& s) {
  std::vector<UnipotentMatrix> out;
  const Entry bound = 2 * s.generating_number();
  for_each_in_box(s.group(), bound, [&](const UnipotentMatrix& a) {
    if (a.is_identity() || s.is_gap(a)) return;
    bool decomposable = false;
    for_each_below(s.group(), a, [&](const UnipotentMatrix& b) {
      if (b.is_identity() || b == a || s.is_gap(b)) return true;
      UnipotentMatrix c = left_quotient(b, a);
      decomposable = c.is_nonnegative() && !c.is_identity() && s.contains(c);
      return !decomposable;
    });
    if (!decomposable) out.push_back(a);
  });
  return out;
}

Monoid intersect(const Monoid& s, const Monoid& t) {
  if (!(s.group() == t.group())) throw GroupMismatch("monoids live in different groups");
  std::vector<UnipotentMatrix> gaps = s.gaps();
  gaps.insert(gaps.end(), t.gaps().begin(), t.gaps().end());
  return Monoid::from_gaps(s.group(), std::move(gaps));
}

Monoid adjoin(const Monoid& s, const UnipotentMatrix& a) {
  if (!s.is_gap(a)) throw ValidationError("element " + a.str() + " is not a gap");
  std::vector<UnipotentMatrix> gaps;
  gaps.reserve(s.genus() - 1);
  for (const auto& g : s.gaps()) {
    if (g != a) gaps.push_back(g);
  }
  return Monoid::from_gaps(s.group(), std::move(gaps));
}

}  // namespace unimon
