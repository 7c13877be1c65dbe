#include "unimon/ideals.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>

namespace unimon {

struct RelativeIdeal::Node {
  enum class Kind { generated, cofinite, product, join, meet };

  Node(Kind k, Monoid b, Side s) : kind(k), base(std::move(b)), side(s) {}

  Kind kind;
  Monoid base;
  Side side;
  std::vector<UnipotentMatrix> elems;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = RelativeIdeal::Node;

bool sorted_contains(const std::vector<UnipotentMatrix>& xs, const UnipotentMatrix& a) {
  return std::binary_search(xs.begin(), xs.end(), a);
}

void sort_unique(std::vector<UnipotentMatrix>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

// Is a in S x S for some x in xs.
bool in_two_sided_hull(const Monoid& s, const std::vector<UnipotentMatrix>& xs,
                       const UnipotentMatrix& a) {
  bool found = false;
  for_each_below(s.group(), a, [&](const UnipotentMatrix& u) {
    if (!s.contains(u)) return true;
    UnipotentMatrix w = left_quotient(u, a);
    if (!w.is_nonnegative()) return true;
    for (const auto& x : xs) {
      if (leq_entrywise(x, w) && s.contains(left_quotient(x, w))) {
        found = true;
        break;
      }
    }
    return !found;
  });
  return found;
}

bool node_contains(const Node& node, const UnipotentMatrix& a) {
  const Monoid& s = node.base;
  if (!s.in_ambient(a)) return false;
  switch (node.kind) {
    case Node::Kind::cofinite:
      return !sorted_contains(node.elems, a);
    case Node::Kind::generated:
      if (node.side == Side::twosided) return in_two_sided_hull(s, node.elems, a);
      for (const auto& e : node.elems) {
        if (!leq_entrywise(e, a)) continue;
        const bool hit = node.side == Side::right ? s.contains(left_quotient(e, a))
                                                  : s.contains(right_quotient(a, e));
        if (hit) return true;
      }
      return false;
    case Node::Kind::product: {
      bool found = false;
      for_each_below(s.group(), a, [&](const UnipotentMatrix& x) {
        if (node_contains(*node.lhs, x)) {
          UnipotentMatrix y = left_quotient(x, a);
          found = y.is_nonnegative() && node_contains(*node.rhs, y);
        }
        return !found;
      });
      return found;
    }
    case Node::Kind::join:
      return node_contains(*node.lhs, a) || node_contains(*node.rhs, a);
    case Node::Kind::meet:
      return node_contains(*node.lhs, a) && node_contains(*node.rhs, a);
  }
  return false;
}

}  // namespace

RelativeIdeal RelativeIdeal::generated(const Monoid& base, Side side,
                                       std::vector<UnipotentMatrix> gens) {
  if (gens.empty()) throw EmptyGeneratorSet("an ideal needs at least one generator");
  for (const auto& e : gens) {
    if (!base.in_ambient(e)) throw OutOfPattern("generator " + e.str() + " is not in G(N)");
  }
  sort_unique(gens);
  auto node = std::make_shared<Node>(Node::Kind::generated, base, side);
  node->elems = std::move(gens);
  return RelativeIdeal(std::move(node));
}

RelativeIdeal RelativeIdeal::cofinite(const Monoid& base, Side side,
                                      std::vector<UnipotentMatrix> complement) {
  for (const auto& c : complement) {
    if (!base.in_ambient(c)) throw OutOfPattern("element " + c.str() + " is not in G(N)");
  }
  sort_unique(complement);
  // X s = c or s X = c with X in I, s in S* would put an element of I*S* in
  // the complement; X and s are entrywise below c.
  for (const auto& c : complement) {
    for_each_below(base.group(), c, [&](const UnipotentMatrix& s) {
      if (s.is_identity() || !base.contains(s)) return;
      if (side != Side::left) {
        UnipotentMatrix x = right_quotient(c, s);
        if (x.is_nonnegative() && !sorted_contains(complement, x)) {
          throw NotStable(x.str() + " * " + s.str() + " = " + c.str() +
                          " leaves the set on the right");
        }
      }
      if (side != Side::right) {
        UnipotentMatrix x = left_quotient(s, c);
        if (x.is_nonnegative() && !sorted_contains(complement, x)) {
          throw NotStable(s.str() + " * " + x.str() + " = " + c.str() +
                          " leaves the set on the left");
        }
      }
    });
  }
  auto node = std::make_shared<Node>(Node::Kind::cofinite, base, side);
  node->elems = std::move(complement);
  return RelativeIdeal(std::move(node));
}

const Monoid& RelativeIdeal::base() const { return node_->base; }
Side RelativeIdeal::side() const { return node_->side; }
bool RelativeIdeal::is_cofinite() const { return node_->kind == Node::Kind::cofinite; }

const std::vector<UnipotentMatrix>& RelativeIdeal::complement() const {
  if (!is_cofinite()) throw NotCofinite("ideal has no finite complement representation");
  return node_->elems;
}

bool RelativeIdeal::contains(const UnipotentMatrix& a) const { return node_contains(*node_, a); }

bool RelativeIdeal::is_generated() const { return node_->kind == Node::Kind::generated; }

const std::vector<UnipotentMatrix>& RelativeIdeal::generators() const {
  if (!is_generated()) throw InputError("ideal is not given by a plain generator set");
  return node_->elems;
}

RelativeIdeal ideal_from_generators(const Monoid& s, Side side, std::vector<UnipotentMatrix> gens) {
  return RelativeIdeal::generated(s, side, std::move(gens));
}

bool ideal_contains(const RelativeIdeal& i, const UnipotentMatrix& a) { return i.contains(a); }

namespace {

void require_compatible(const RelativeIdeal& i, const RelativeIdeal& j) {
  if (!(i.base() == j.base())) throw Mismatch("ideals have different base monoids");
  if (i.side() != j.side()) throw Mismatch("ideals have different sides");
}

bool contains_base(const RelativeIdeal& i) {
  const Monoid& s = i.base();
  return std::all_of(i.complement().begin(), i.complement().end(),
                     [&](const UnipotentMatrix& c) { return s.is_gap(c); });
}

std::vector<UnipotentMatrix> gap_part_of(const RelativeIdeal& i) {
  std::vector<UnipotentMatrix> out;
  for (const auto& g : i.base().gaps()) {
    if (!sorted_contains(i.complement(), g)) out.push_back(g);
  }
  return out;
}

// Gaps of S lying in (S u A)(S u B) = S u AS u SB u AB.
std::vector<UnipotentMatrix> product_gap_part(const Monoid& s, const std::vector<UnipotentMatrix>& a,
                                              const std::vector<UnipotentMatrix>& b) {
  std::vector<UnipotentMatrix> out;
  for (const auto& h : s.gaps()) {
    bool hit = false;
    for (const auto& x : a) {
      if (!leq_entrywise(x, h)) continue;
      UnipotentMatrix q = left_quotient(x, h);
      if (s.contains(q) || sorted_contains(b, q)) {
        hit = true;
        break;
      }
    }
    for (std::size_t k = 0; !hit && k < b.size(); ++k) {
      if (leq_entrywise(b[k], h) && s.contains(right_quotient(h, b[k]))) hit = true;
    }
    if (hit) out.push_back(h);
  }
  return out;
}

std::vector<UnipotentMatrix> complement_in_gaps(const Monoid& s,
                                                const std::vector<UnipotentMatrix>& part) {
  std::vector<UnipotentMatrix> out;
  for (const auto& g : s.gaps()) {
    if (!sorted_contains(part, g)) out.push_back(g);
  }
  return out;
}

}  // namespace

RelativeIdeal ideal_product(const RelativeIdeal& i, const RelativeIdeal& j) {
  require_compatible(i, j);
  if (i.is_cofinite() && j.is_cofinite() && contains_base(i) && contains_base(j)) {
    auto part = product_gap_part(i.base(), gap_part_of(i), gap_part_of(j));
    auto node = std::make_shared<Node>(Node::Kind::cofinite, i.base(), i.side());
    node->elems = complement_in_gaps(i.base(), part);
    return RelativeIdeal(std::move(node));
  }
  auto node = std::make_shared<Node>(Node::Kind::product, i.base(), i.side());
  node->lhs = i.node_;
  node->rhs = j.node_;
  return RelativeIdeal(std::move(node));
}

RelativeIdeal ideal_union(const RelativeIdeal& i, const RelativeIdeal& j) {
  require_compatible(i, j);
  if (i.is_cofinite() && j.is_cofinite()) {
    auto node = std::make_shared<Node>(Node::Kind::cofinite, i.base(), i.side());
    std::set_intersection(i.complement().begin(), i.complement().end(), j.complement().begin(),
                          j.complement().end(), std::back_inserter(node->elems));
    return RelativeIdeal(std::move(node));
  }
  auto node = std::make_shared<Node>(Node::Kind::join, i.base(), i.side());
  node->lhs = i.node_;
  node->rhs = j.node_;
  return RelativeIdeal(std::move(node));
}

RelativeIdeal ideal_intersection(const RelativeIdeal& i, const RelativeIdeal& j) {
  require_compatible(i, j);
  if (i.is_cofinite() && j.is_cofinite()) {
    auto node = std::make_shared<Node>(Node::Kind::cofinite, i.base(), i.side());
    std::set_union(i.complement().begin(), i.complement().end(), j.complement().begin(),
                   j.complement().end(), std::back_inserter(node->elems));
    return RelativeIdeal(std::move(node));
  }
  auto node = std::make_shared<Node>(Node::Kind::meet, i.base(), i.side());
  node->lhs = i.node_;
  node->rhs = j.node_;
  return RelativeIdeal(std::move(node));
}

std::vector<UnipotentMatrix> ideal_min_generators(const RelativeIdeal& i, std::optional<Entry> box) {
  const Monoid& s = i.base();
  Entry bound;
  if (i.is_cofinite()) {
    Entry top = 0;
    for (const auto& c : i.complement()) top = std::max(top, max_entry(c) + 1);
    bound = 2 * s.generating_number() + top;
    if (box) bound = std::max(bound, *box);
  } else if (box) {
    bound = *box;
  } else {
    throw NotCofinite("minimal generators of an expression ideal need a box bound");
  }

  // Y is not minimal exactly when it factors as Y = X s (right side), s X
  // (left side) or either (two-sided) with X in I and s in S*.
  std::vector<UnipotentMatrix> out;
  for_each_in_box(s.group(), bound, [&](const UnipotentMatrix& y) {
    if (!i.contains(y)) return;
    bool reducible = false;
    for_each_below(s.group(), y, [&](const UnipotentMatrix& t) {
      if (t.is_identity() || !s.contains(t)) return true;
      if (i.side() != Side::left && i.contains(right_quotient(y, t))) reducible = true;
      if (i.side() != Side::right && i.contains(left_quotient(t, y))) reducible = true;
      return !reducible;
    });
    if (!reducible) out.push_back(y);
  });
  return out;
}

TorsionElement::TorsionElement(const Monoid& base, std::vector<UnipotentMatrix> gap_part)
    : base_(base), gap_part_(std::move(gap_part)) {
  sort_unique(gap_part_);
  for (const auto& a : gap_part_) {
    if (!base_.is_gap(a)) throw ValidationError(a.str() + " is not a gap of the base monoid");
  }
  for (const auto& a : gap_part_) {
    for (const auto& h : base_.gaps()) {
      if (h == a || sorted_contains(gap_part_, h) || !leq_entrywise(a, h)) continue;
      if (base_.contains(left_quotient(a, h)) || base_.contains(right_quotient(h, a))) {
        throw NotStable("gap part contains " + a.str() + " but not its translate " + h.str());
      }
    }
  }
}

bool TorsionElement::contains(const UnipotentMatrix& a) const {
  return base_.contains(a) || sorted_contains(gap_part_, a);
}

RelativeIdeal TorsionElement::ideal() const {
  return RelativeIdeal::cofinite(base_, Side::twosided, complement_in_gaps(base_, gap_part_));
}

bool TorsionElement::is_idempotent() const {
  return product_gap_part(base_, gap_part_, gap_part_) == gap_part_;
}

Monoid TorsionElement::as_monoid() const {
  return Monoid::from_gaps(base_.group(), complement_in_gaps(base_, gap_part_));
}

bool operator<(const TorsionElement& a, const TorsionElement& b) {
  if (a.gap_part_.size() != b.gap_part_.size()) return a.gap_part_.size() < b.gap_part_.size();
  return a.gap_part_ < b.gap_part_;
}

TorsionElement torsion_product(const TorsionElement& a, const TorsionElement& b) {
  if (!(a.base() == b.base())) throw Mismatch("torsion elements have different base monoids");
  return TorsionElement(a.base(), product_gap_part(a.base(), a.gap_part(), b.gap_part()));
}

std::size_t default_max_nodes() {
  if (const char* env = std::getenv("UNIMON_MAX_NODES")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 2'000'000;
}

namespace {

constexpr int kNotInGroup = -2;
constexpr int kMember = -1;

// Quotient tables over the gaps of S: code of y^{-1}h and h y^{-1}.
struct GapTables {
  std::size_t g = 0;
  std::vector<int> lq, rq;

  int left(std::size_t y, std::size_t h) const { return lq[y * g + h]; }
  int right(std::size_t y, std::size_t h) const { return rq[y * g + h]; }
};

GapTables build_tables(const Monoid& s) {
  const auto& gaps = s.gaps();
  GapTables t;
  t.g = gaps.size();
  t.lq.assign(t.g * t.g, kNotInGroup);
  t.rq.assign(t.g * t.g, kNotInGroup);
  auto code = [&](const UnipotentMatrix& q) {
    if (!s.in_ambient(q) || q.is_identity()) return kNotInGroup;
    if (!s.is_gap(q)) return kMember;
    return static_cast<int>(std::lower_bound(gaps.begin(), gaps.end(), q) - gaps.begin());
  };
  for (std::size_t y = 0; y < t.g; ++y) {
    for (std::size_t h = 0; h < t.g; ++h) {
      if (y == h || !leq_entrywise(gaps[y], gaps[h])) continue;
      t.lq[y * t.g + h] = code(left_quotient(gaps[y], gaps[h]));
      t.rq[y * t.g + h] = code(right_quotient(gaps[h], gaps[y]));
    }
  }
  return t;
}

}  // namespace

std::vector<TorsionElement> torsion_monoid(const Monoid& s, std::size_t max_nodes) {
  const auto& gaps = s.gaps();
  const std::size_t g = gaps.size();
  const GapTables t = build_tables(s);
  // successors[a]: gaps reachable from a by one translation by S*.
  std::vector<std::vector<std::size_t>> successors(g);
  for (std::size_t a = 0; a < g; ++a) {
    for (std::size_t h = 0; h < g; ++h) {
      if (t.left(a, h) == kMember || t.right(a, h) == kMember) successors[a].push_back(h);
    }
  }

  // Successors are entrywise larger, hence later in canonical order; deciding
  // gaps from the last one down means every successor is settled first.
  std::vector<TorsionElement> out;
  std::vector<bool> chosen(g, false);
  std::size_t emitted = 0;
  auto recurse = [&](auto&& self, std::size_t remaining) -> void {
    if (remaining == 0) {
      if (++emitted > max_nodes) {
        throw Infeasible("torsion monoid exceeds " + std::to_string(max_nodes) + " elements");
      }
      std::vector<UnipotentMatrix> part;
      for (std::size_t k = 0; k < g; ++k) {
        if (chosen[k]) part.push_back(gaps[k]);
      }
      out.emplace_back(s, std::move(part));
      return;
    }
    const std::size_t a = remaining - 1;
    self(self, a);
    const bool closed = std::all_of(successors[a].begin(), successors[a].end(),
                                    [&](std::size_t h) { return chosen[h]; });
    if (closed) {
      chosen[a] = true;
      self(self, a);
      chosen[a] = false;
    }
  };
  recurse(recurse, g);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Adjoined-gap sets A (as index lists) such that S u A is a monoid.
std::vector<std::vector<std::size_t>> oversemigroup_parts(const Monoid& s, std::size_t max_nodes) {
  const std::size_t g = s.genus();
  const GapTables t = build_tables(s);
  std::vector<bool> adjoined(g, false);
  std::vector<std::vector<std::size_t>> out;

  auto member = [&](int code, std::size_t y) {
    if (code == kMember) return true;
    if (code < 0) return false;
    return adjoined[static_cast<std::size_t>(code)] || static_cast<std::size_t>(code) == y;
  };
  auto can_adjoin = [&](std::size_t y) {
    for (std::size_t h = 0; h < g; ++h) {
      if (h == y || adjoined[h]) continue;
      if (member(t.left(y, h), y) || member(t.right(y, h), y)) return false;
    }
    return true;
  };

  // Adjoining the elements of any oversemigroup in decreasing canonical order
  // stays inside monoids at every step, so each one is reached exactly once.
  std::vector<std::size_t> path;
  auto recurse = [&](auto&& self, std::size_t limit) -> void {
    if (out.size() >= max_nodes) {
      throw Infeasible("oversemigroup search exceeds " + std::to_string(max_nodes) + " nodes");
    }
    out.push_back(path);
    for (std::size_t y = limit; y-- > 0;) {
      if (!can_adjoin(y)) continue;
      adjoined[y] = true;
      path.push_back(y);
      self(self, y);
      path.pop_back();
      adjoined[y] = false;
    }
  };
  recurse(recurse, g);
  for (auto& p : out) std::sort(p.begin(), p.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<UnipotentMatrix> pick(const Monoid& s, const std::vector<std::size_t>& idx) {
  std::vector<UnipotentMatrix> out;
  out.reserve(idx.size());
  for (std::size_t k : idx) out.push_back(s.gaps()[k]);
  return out;
}

}  // namespace

std::vector<Monoid> oversemigroups(const Monoid& s, std::size_t max_nodes) {
  std::vector<Monoid> out;
  for (const auto& part : oversemigroup_parts(s, max_nodes)) {
    out.push_back(Monoid::from_gaps(s.group(), complement_in_gaps(s, pick(s, part))));
  }
  return out;
}

std::vector<UnipotentMatrix> adjoinable_gaps(const Monoid& s) {
  std::vector<UnipotentMatrix> out;
  for (const auto& y : s.gaps()) {
    bool ok = true;
    for (const auto& h : s.gaps()) {
      if (h == y || !leq_entrywise(y, h)) continue;
      for (const UnipotentMatrix& q : {left_quotient(y, h), right_quotient(h, y)}) {
        if (s.contains(q) || q == y) ok = false;
      }
      if (!ok) break;
    }
    if (ok) out.push_back(y);
  }
  return out;
}

IdempotentLattice torsion_idempotents(const Monoid& s, std::size_t max_nodes) {
  IdempotentLattice lat;
  const auto parts = oversemigroup_parts(s, max_nodes);
  const std::size_t g = s.genus();
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::string> keys;
  for (const auto& part : parts) {
    std::string key(g, '0');
    for (std::size_t k : part) key[k] = '1';
    index.emplace(key, lat.nodes.size());
    keys.push_back(key);
    lat.nodes.emplace_back(s, pick(s, part));
  }
  // Between two nested oversemigroups one can always adjoin a single gap at a
  // time, so covers are exactly the inclusions that differ by one element.
  for (std::size_t j = 0; j < parts.size(); ++j) {
    for (std::size_t k : parts[j]) {
      std::string key = keys[j];
      key[k] = '0';
      if (auto it = index.find(key); it != index.end()) lat.hasse_edges.emplace_back(it->second, j);
    }
  }
  std::sort(lat.hasse_edges.begin(), lat.hasse_edges.end());
  for (const auto& [lo, hi] : lat.hasse_edges) {
    if (lo == 0) lat.minimal_nontrivial.push_back(hi);
  }
  return lat;
}

}  // namespace unimon
