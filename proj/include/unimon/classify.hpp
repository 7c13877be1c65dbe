#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unimon/ideals.hpp"
#include "unimon/invariants.hpp"
#include "unimon/monoid.hpp"
#include "unimon/orders.hpp"

namespace unimon {

enum class IrreducibilityMethod { oracle, torsion };

struct IrreducibilityResult {
  bool irreducible = false;
  /// Two monoids strictly containing S whose intersection is S.
  std::optional<std::pair<Monoid, Monoid>> witness;
};

/// oracle: searches pairs of proper oversemigroups level by level.
/// torsion: unique minimal nontrivial idempotent and F_t = SG.
IrreducibilityResult is_irreducible(const Monoid& s,
                                    IrreducibilityMethod method = IrreducibilityMethod::torsion);

/// Minimal nontrivial idempotents of the torsion monoid: single adjoinable gaps.
std::vector<TorsionElement> minimal_nontrivial_idempotents(const Monoid& s);

enum class Symmetry { symmetric, pseudo_symmetric, none };
enum class Irreducibility { irreducible, reducible, vacuous };

/// Whether gap a reaches some C in F_t through A^{-1}C in S or CA^{-1} in S
/// (one_sided) or through both at once (strong).
struct FrobeniusReach {
  bool one_sided = false;
  bool strong = false;
};

FrobeniusReach frobenius_reach(const Monoid& s, const std::vector<UnipotentMatrix>& f_two,
                               const UnipotentMatrix& a);

/// The three one-sided sufficient conditions for irreducibility: |F| = 1 and
/// every gap reaches F by a left or right translate, for F = F_l, F_r, F_t.
struct SufficientConditions {
  bool left = false;
  bool right = false;
  bool twosided = false;
  /// First gap violating the two-sided condition, when |F_t| = 1.
  std::optional<UnipotentMatrix> twosided_failure;
};

SufficientConditions sufficient_conditions(const Monoid& s, const FrobeniusData& fd);

struct CountIdentities {
  /// Present when |F_t| = 1; C is the unique two-sided Frobenius element.
  std::optional<UnipotentMatrix> c;
  std::optional<NgCounts> natural;    // n and g under the order of G(N)
  std::optional<NgCounts> entrywise;  // n and g under the entrywise order
  std::optional<Entry> box_below_c;   // |{X in G(N) : X <= C entrywise}|
  std::optional<Entry> cube_volume;   // product of (c_j + 1), first-row patterns only
};

struct ClassificationReport {
  MonoidInvariants invariants;
  std::optional<FrobeniusData> frobenius;
  Irreducibility irreducibility = Irreducibility::vacuous;
  std::optional<std::pair<Monoid, Monoid>> reducibility_witness;
  Symmetry symmetry = Symmetry::none;
  bool strong = false;
  std::optional<UnipotentMatrix> pseudo_witness;
  SufficientConditions conditions;
  CountIdentities counts;

  bool irreducible() const { return irreducibility == Irreducibility::irreducible; }
};

ClassificationReport classify(const Monoid& s);

enum class Verdict { pass, fail, not_applicable };

struct TheoremCheck {
  std::string name;
  Verdict verdict = Verdict::not_applicable;
  std::string detail;
};

std::vector<TheoremCheck> verify_theorems(const Monoid& s);

/// Maximal elements of the Apery set among boxed members, found with the exact
/// local test X m outside the set for every minimal generator m.
std::vector<UnipotentMatrix> apery_maxima_by_generators(const Monoid& s, const UnipotentMatrix& a,
                                                        Side side);

/// All monoids of the group with the given genus, canonical order.
std::vector<Monoid> enumerate_monoids(const PatternGroup& group, std::size_t genus,
                                      std::size_t max_nodes = default_max_nodes());

std::vector<Monoid> enumerate_irreducible(const PatternGroup& group, std::size_t genus,
                                          std::size_t max_nodes = default_max_nodes());

const char* to_string(Symmetry s);
const char* to_string(Irreducibility i);
const char* to_string(Verdict v);

}  // namespace unimon
