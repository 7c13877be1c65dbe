#include "unimon/classify.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>

#include "unimon/apery.hpp"

namespace unimon {

namespace {

std::string join(const std::vector<UnipotentMatrix>& xs) {
  std::string out = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ",";
    out += xs[k].str();
  }
  return out + "}";
}

bool subset(const std::vector<UnipotentMatrix>& a, const std::vector<UnipotentMatrix>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool gap_union_is(const Monoid& s, const Monoid& t1, const Monoid& t2) {
  std::vector<UnipotentMatrix> u;
  std::set_union(t1.gaps().begin(), t1.gaps().end(), t2.gaps().begin(), t2.gaps().end(),
                 std::back_inserter(u));
  return u == s.gaps();
}

IrreducibilityResult oracle_irreducible(const Monoid& s) {
  // Proper oversemigroups, grouped by how many gaps were filled in.
  std::vector<Monoid> found;
  std::set<std::vector<UnipotentMatrix>> seen;
  std::vector<Monoid> level{s};
  while (!level.empty()) {
    std::vector<Monoid> next;
    for (const auto& t : level) {
      for (const auto& g : t.gaps()) {
        try {
          Monoid u = adjoin(t, g);
          if (seen.insert(u.gaps()).second) next.push_back(std::move(u));
        } catch (const NotClosed&) {
        }
      }
    }
    for (const auto& u : next) {
      for (const auto& v : found) {
        if (gap_union_is(s, u, v)) return {false, std::make_pair(v, u)};
      }
      found.push_back(u);
    }
    level = std::move(next);
  }
  return {true, std::nullopt};
}

}  // namespace

std::vector<TorsionElement> minimal_nontrivial_idempotents(const Monoid& s) {
  std::vector<TorsionElement> out;
  for (const auto& g : s.gaps()) {
    try {
      TorsionElement t(s, {g});
      if (t.is_idempotent()) out.push_back(std::move(t));
    } catch (const NotStable&) {
    }
  }
  return out;
}

IrreducibilityResult is_irreducible(const Monoid& s, IrreducibilityMethod method) {
  if (!s.has_gaps()) throw EmptyGaps("irreducibility is not defined for the whole group");
  if (method == IrreducibilityMethod::oracle) return oracle_irreducible(s);

  const auto atoms = minimal_nontrivial_idempotents(s);
  if (atoms.size() >= 2) {
    return {false, std::make_pair(atoms[0].as_monoid(), atoms[1].as_monoid())};
  }
  const auto f_two = frobenius(s, Side::twosided);
  const bool ok = atoms.size() == 1 && f_two == special_gaps(s);
  return {ok, std::nullopt};
}

FrobeniusReach frobenius_reach(const Monoid& s, const std::vector<UnipotentMatrix>& f_two,
                               const UnipotentMatrix& a) {
  FrobeniusReach r;
  for (const auto& c : f_two) {
    if (!leq_entrywise(a, c)) continue;
    const bool via_left = s.contains(left_quotient(a, c));    // C in A S
    const bool via_right = s.contains(right_quotient(c, a));  // C in S A
    r.one_sided = r.one_sided || via_left || via_right;
    r.strong = r.strong || (via_left && via_right);
  }
  return r;
}

SufficientConditions sufficient_conditions(const Monoid& s, const FrobeniusData& fd) {
  auto holds = [&](const std::vector<UnipotentMatrix>& f, std::optional<UnipotentMatrix>* failure) {
    if (f.size() != 1) return false;
    for (const auto& a : s.gaps()) {
      if (!frobenius_reach(s, f, a).one_sided) {
        if (failure) *failure = a;
        return false;
      }
    }
    return true;
  };
  SufficientConditions c;
  c.left = holds(fd.f_left, nullptr);
  c.right = holds(fd.f_right, nullptr);
  c.twosided = holds(fd.f_two, &c.twosided_failure);
  return c;
}

namespace {

struct SymmetryVerdict {
  Symmetry symmetry = Symmetry::none;
  bool strong = false;
  std::optional<UnipotentMatrix> witness;
};

SymmetryVerdict symmetry_of(const Monoid& s, const std::vector<UnipotentMatrix>& f_two) {
  SymmetryVerdict v;
  std::vector<FrobeniusReach> reach;
  for (const auto& a : s.gaps()) reach.push_back(frobenius_reach(s, f_two, a));

  auto all_except = [&](std::optional<std::size_t> skip, bool strong) {
    for (std::size_t k = 0; k < reach.size(); ++k) {
      if (skip && *skip == k) continue;
      if (!(strong ? reach[k].strong : reach[k].one_sided)) return false;
    }
    return true;
  };

  if (all_except(std::nullopt, false)) {
    v.symmetry = Symmetry::symmetric;
    v.strong = all_except(std::nullopt, true);
    return v;
  }
  bool any_strong = false;
  for (std::size_t k = 0; k < s.gaps().size(); ++k) {
    const auto& b = s.gaps()[k];
    const UnipotentMatrix sq = multiply(b, b);
    if (!std::binary_search(f_two.begin(), f_two.end(), sq)) continue;
    if (!all_except(k, false)) continue;
    if (!v.witness) v.witness = b;
    any_strong = any_strong || all_except(k, true);
  }
  if (v.witness) {
    v.symmetry = Symmetry::pseudo_symmetric;
    v.strong = any_strong;
  }
  return v;
}

Entry product_of_increments(const PatternGroup& g, const UnipotentMatrix& c) {
  Entry v = 1;
  for (std::size_t slot : g.slots()) v = checked_mul(v, checked_add(c.upper()[slot], 1));
  return v;
}

}  // namespace

ClassificationReport classify(const Monoid& s) {
  ClassificationReport rep;
  rep.invariants = invariants(s);
  if (!s.has_gaps()) {
    rep.irreducibility = Irreducibility::vacuous;
    return rep;
  }
  rep.frobenius = frobenius_data(s);
  const auto& fd = *rep.frobenius;
  const auto irr = is_irreducible(s, IrreducibilityMethod::torsion);
  rep.irreducibility = irr.irreducible ? Irreducibility::irreducible : Irreducibility::reducible;
  rep.reducibility_witness = irr.witness;
  if (!irr.irreducible && !rep.reducibility_witness) {
    rep.reducibility_witness = is_irreducible(s, IrreducibilityMethod::oracle).witness;
  }
  if (irr.irreducible) {
    auto sym = symmetry_of(s, fd.f_two);
    rep.symmetry = sym.symmetry;
    rep.strong = sym.strong;
    rep.pseudo_witness = sym.witness;
  }
  rep.conditions = sufficient_conditions(s, fd);

  if (fd.f_two.size() == 1) {
    const auto& c = fd.f_two.front();
    rep.counts.c = c;
    rep.counts.natural = count_n_g(s, c, Order::natural(s.group()));
    rep.counts.entrywise = count_n_g(s, c, Order::entrywise(s.group()));
    rep.counts.box_below_c = product_of_increments(s.group(), c);
    if (s.group().kind() == PatternKind::first_row) rep.counts.cube_volume = rep.counts.box_below_c;
  }
  return rep;
}

std::vector<UnipotentMatrix> apery_maxima_by_generators(const Monoid& s, const UnipotentMatrix& a,
                                                        Side side) {
  if (side == Side::twosided) throw InputError("generator test applies to one-sided Apery sets");
  const AperySet ap(s, a, side);
  const auto gens = minimal_generators(s);
  std::vector<Entry> top(position_count(s.group().n()), 0);
  for (std::size_t slot : s.group().slots()) top[slot] = s.generating_number() - 1;
  const UnipotentMatrix ceiling = UnipotentMatrix::from_upper(s.group().n(), top);
  const Entry bound =
      max_entry(side == Side::left ? multiply(a, ceiling) : multiply(ceiling, a)) + 1;

  // Apery sets are lower sets of S under the side order, so X is maximal
  // exactly when no single generator step stays inside.
  std::vector<UnipotentMatrix> out;
  for_each_in_box(s.group(), bound, [&](const UnipotentMatrix& x) {
    if (!ap.contains(x)) return;
    for (const auto& m : gens) {
      if (ap.contains(side == Side::left ? multiply(x, m) : multiply(m, x))) return;
    }
    out.push_back(x);
  });
  return out;
}

namespace {

std::vector<UnipotentMatrix> definitional_pf(const Monoid& s, Side side) {
  // A violating product g s or s g is a gap, so s has max_entry < r.
  const auto members = members_in_box(s, s.generating_number());
  std::vector<UnipotentMatrix> out;
  for (const auto& g : s.gaps()) {
    bool ok = true;
    for (const auto& m : members) {
      if (m.is_identity()) continue;
      if (side != Side::right && !s.contains(multiply(g, m))) ok = false;
      if (side != Side::left && !s.contains(multiply(m, g))) ok = false;
      if (!ok) break;
    }
    if (ok) out.push_back(g);
  }
  return out;
}

TheoremCheck check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? Verdict::pass : Verdict::fail, std::move(detail)};
}

TheoremCheck na(std::string name, std::string detail) {
  return {std::move(name), Verdict::not_applicable, std::move(detail)};
}

std::vector<UnipotentMatrix> map_quotient(const std::vector<UnipotentMatrix>& xs,
                                          const UnipotentMatrix& a, Side side) {
  std::vector<UnipotentMatrix> out;
  for (const auto& x : xs) {
    out.push_back(side == Side::left ? left_quotient(a, x) : right_quotient(x, a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<TheoremCheck> verify_theorems(const Monoid& s) {
  std::vector<TheoremCheck> out;
  const auto gens = minimal_generators(s);
  std::vector<UnipotentMatrix> pivots(gens.begin(), gens.begin() + std::min<std::size_t>(3, gens.size()));

  {
    bool ok = true;
    std::string detail = "pivots " + join(pivots);
    const auto members = members_in_box(s, 2 * s.generating_number());
    for (const auto& a : pivots) {
      for (Side side : {Side::left, Side::right, Side::twosided}) {
        const AperySet ap(s, a, side);
        for (const auto& b : members) {
          const auto f = factor_via_apery(s, a, side, b);
          const auto back = multiply(multiply(power(a, f.left_power), f.remainder),
                                     power(a, f.right_power));
          if (back != b || !ap.contains(f.remainder)) {
            ok = false;
            detail = "factorization of " + b.str() + " by " + a.str() + " failed";
          }
        }
      }
    }
    out.push_back(check("apery-generation", ok, detail));
  }

  if (!s.has_gaps()) {
    for (const char* name : {"pf-as-maxima", "pf-apery", "pf-apery-one-sided", "frobenius-in-pf", "frobenius-union",
                             "irreducible-frobenius-singleton", "unique-minimal-idempotent",
                             "strong-dichotomy", "symmetric-pf-singleton",
                             "natural-count-identity", "entrywise-count-identity", "cube-volume",
                             "maximality-characterization"}) {
      out.push_back(na(name, "no gaps"));
    }
    return out;
  }

  const auto fd = frobenius_data(s);
  {
    const bool ok = definitional_pf(s, Side::left) == fd.pf_left &&
                    definitional_pf(s, Side::right) == fd.pf_right &&
                    definitional_pf(s, Side::twosided) == fd.pf_two;
    out.push_back(check("pf-as-maxima", ok, "PF_t = " + join(fd.pf_two)));
  }
  {
    bool ok = true;
    bool one_sided_ok = true;
    std::string detail = "pivots " + join(pivots);
    std::string one_sided_detail = detail;
    for (const auto& a : pivots) {
      const auto pl = map_quotient(apery_maxima_by_generators(s, a, Side::left), a, Side::left);
      const auto pr = map_quotient(apery_maxima_by_generators(s, a, Side::right), a, Side::right);
      std::vector<UnipotentMatrix> pt;
      std::set_intersection(pl.begin(), pl.end(), pr.begin(), pr.end(), std::back_inserter(pt));
      if (pt != fd.pf_two) {
        ok = false;
        detail = "pivot " + a.str() + ": maxima give PF_t " + join(pt);
      }
      if (pl != fd.pf_left || pr != fd.pf_right) {
        one_sided_ok = false;
        one_sided_detail = "pivot " + a.str() + ": maxima give PF_l " + join(pl) + ", PF_r " +
                           join(pr);
      }
      try {
        for (Side side : {Side::left, Side::right, Side::twosided}) apery_maximal(s, a, side);
      } catch (const Error& e) {
        ok = false;
        detail = e.what();
      }
    }
    out.push_back(check("pf-apery", ok, detail));
    out.push_back(check("pf-apery-one-sided", one_sided_ok, one_sided_detail));
  }
  out.push_back(check("frobenius-in-pf",
                      subset(fd.f_left, fd.pf_left) && subset(fd.f_right, fd.pf_right) &&
                          subset(fd.f_two, fd.pf_two),
                      "F_t = " + join(fd.f_two)));
  {
    bool ok = true;
    std::string detail = "S u F valid for F_l, F_r, F_t";
    for (const auto* f : {&fd.f_left, &fd.f_right, &fd.f_two}) {
      std::vector<UnipotentMatrix> rest;
      std::set_difference(s.gaps().begin(), s.gaps().end(), f->begin(), f->end(),
                          std::back_inserter(rest));
      try {
        Monoid::from_gaps(s.group(), rest);
      } catch (const NotClosed& e) {
        ok = false;
        detail = e.what();
      }
    }
    out.push_back(check("frobenius-union", ok, detail));
  }

  const auto oracle = is_irreducible(s, IrreducibilityMethod::oracle);
  const auto torsion = is_irreducible(s, IrreducibilityMethod::torsion);
  {
    std::ostringstream d;
    d << "|F_t| = " << fd.f_two.size() << ", SG = " << join(fd.special)
      << (oracle.irreducible ? ", irreducible" : ", reducible");
    const bool ok = !oracle.irreducible || (fd.f_two.size() == 1 && fd.f_two == fd.special);
    out.push_back(check("irreducible-frobenius-singleton", ok, d.str()));
  }
  out.push_back(check("unique-minimal-idempotent", oracle.irreducible == torsion.irreducible,
                      std::string("oracle ") + (oracle.irreducible ? "irreducible" : "reducible") +
                          ", torsion " + (torsion.irreducible ? "irreducible" : "reducible")));

  const auto rep = classify(s);
  if (oracle.irreducible) {
    out.push_back(check("strong-dichotomy", rep.strong && rep.symmetry != Symmetry::none,
                        std::string(to_string(rep.symmetry)) + (rep.strong ? ", strong" : "")));
  } else {
    out.push_back(na("strong-dichotomy", "reducible"));
  }
  if (rep.symmetry == Symmetry::symmetric) {
    out.push_back(check("symmetric-pf-singleton", fd.pf_two.size() == 1 && fd.f_two.size() == 1,
                        "PF_t = " + join(fd.pf_two)));
  } else {
    out.push_back(na("symmetric-pf-singleton", "not symmetric"));
  }

  const bool strongly_symmetric = rep.symmetry == Symmetry::symmetric && rep.strong;
  const auto genus = static_cast<std::size_t>(s.genus());
  if (strongly_symmetric && rep.counts.natural) {
    const auto& c = *rep.counts.natural;
    std::ostringstream d;
    d << "n = " << c.n_count << ", g = " << c.g_count << ", genus = " << genus;
    out.push_back(check("natural-count-identity", c.n_count == genus && c.g_count == genus, d.str()));
    const auto& e = *rep.counts.entrywise;
    std::ostringstream d2;
    d2 << "box = " << *rep.counts.box_below_c << ", genus + n_e = " << genus + e.n_count;
    out.push_back(check("entrywise-count-identity",
                        static_cast<std::size_t>(*rep.counts.box_below_c) == genus + e.n_count,
                        d2.str()));
  } else {
    out.push_back(na("natural-count-identity", "not strongly symmetric"));
    out.push_back(na("entrywise-count-identity", "not strongly symmetric"));
  }
  if (rep.counts.cube_volume && rep.irreducible()) {
    const Entry vol = *rep.counts.cube_volume;
    const Entry g2 = 2 * static_cast<Entry>(genus);
    std::ostringstream d;
    d << "volume = " << vol << ", 2g = " << g2;
    if (rep.symmetry == Symmetry::symmetric) {
      out.push_back(check("cube-volume", vol == g2, d.str()));
    } else {
      out.push_back(check("cube-volume", vol == g2 - 1, d.str() + ", pseudo-symmetric so 2g - 1"));
    }
  } else {
    out.push_back(na("cube-volume", "needs an irreducible monoid in a first-row group"));
  }

  {
    std::vector<Monoid> overs;
    try {
      overs = oversemigroups(s);
    } catch (const Infeasible& e) {
      out.push_back(na("maximality-characterization", e.what()));
      return out;
    }
    bool ok = true;
    bool applicable = false;
    std::string detail;
    for (const auto* f : {&fd.f_left, &fd.f_right, &fd.f_two}) {
      if (f->size() != 1) continue;
      applicable = true;
      bool maximal = true;
      for (std::size_t k = 1; k < overs.size(); ++k) {
        if (!overs[k].is_gap(f->front())) continue;
        maximal = false;
        break;
      }
      if (maximal != oracle.irreducible) {
        ok = false;
        detail = "F = " + join(*f) + " disagrees with irreducibility";
      }
    }
    if (applicable) {
      out.push_back(check("maximality-characterization", ok,
                          detail.empty() ? std::to_string(overs.size()) + " oversemigroups"
                                         : detail));
    } else {
      out.push_back(na("maximality-characterization", "no Frobenius set of size one"));
    }
  }
  return out;
}

std::vector<Monoid> enumerate_monoids(const PatternGroup& group, std::size_t genus,
                                      std::size_t max_nodes) {
  // Each monoid has a unique parent: itself with its canonically largest gap
  // filled in. Children remove a minimal generator beyond every current gap.
  std::vector<Monoid> level{Monoid::whole(group)};
  std::size_t visited = 1;
  for (std::size_t g = 0; g < genus; ++g) {
    std::vector<Monoid> next;
    for (const auto& s : level) {
      for (const auto& m : minimal_generators(s)) {
        if (s.has_gaps() && !(s.gaps().back() < m)) continue;
        auto gaps = s.gaps();
        gaps.push_back(m);
        next.push_back(Monoid::from_gaps(group, std::move(gaps)));
        if (++visited > max_nodes) {
          throw Infeasible("enumeration exceeds " + std::to_string(max_nodes) + " nodes");
        }
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

std::vector<Monoid> enumerate_irreducible(const PatternGroup& group, std::size_t genus,
                                          std::size_t max_nodes) {
  std::vector<Monoid> out;
  if (genus == 0) return out;
  for (auto& s : enumerate_monoids(group, genus, max_nodes)) {
    if (is_irreducible(s, IrreducibilityMethod::torsion).irreducible) out.push_back(std::move(s));
  }
  return out;
}

const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::symmetric:
      return "symmetric";
    case Symmetry::pseudo_symmetric:
      return "pseudo_symmetric";
    case Symmetry::none:
      break;
  }
  return "none";
}

const char* to_string(Irreducibility i) {
  switch (i) {
    case Irreducibility::irreducible:
      return "irreducible";
    case Irreducibility::reducible:
      return "reducible";
    case Irreducibility::vacuous:
      break;
  }
  return "vacuous";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::not_applicable:
      break;
  }
  return "n/a";
}

}  // namespace unimon
