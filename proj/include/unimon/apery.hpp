#pragma once

#include <vector>

#include "unimon/monoid.hpp"

namespace unimon {

/// Elements B of S with A^{-1}B outside S (left), BA^{-1} outside S (right),
/// or both (two-sided). Infinite in general; kept as an exact finite core plus
/// a membership test.
class AperySet {
 public:
  AperySet(const Monoid& base, const UnipotentMatrix& pivot, Side side);

  const Monoid& base() const { return base_; }
  const UnipotentMatrix& pivot() const { return pivot_; }
  Side side() const { return side_; }
  /// Members whose quotient by the pivot is a gap (both quotients when two-sided).
  const std::vector<UnipotentMatrix>& core() const { return core_; }
  bool contains(const UnipotentMatrix& b) const;

 private:
  Monoid base_;
  UnipotentMatrix pivot_;
  Side side_;
  std::vector<UnipotentMatrix> core_;
};

AperySet apery(const Monoid& s, const UnipotentMatrix& a, Side side);
bool apery_contains(const AperySet& ap, const UnipotentMatrix& b);
std::vector<UnipotentMatrix> apery_in_box(const AperySet& ap, Entry bound);

/// Maximal Apery members: A Z for Z in PF_l with A Z in S (left), Z A for Z in
/// PF_r with Z A in S (right), A PF_t (two-sided). Each element is checked for
/// maximality among Apery members below 2r + max_entry(A).
std::vector<UnipotentMatrix> apery_maximal(const Monoid& s, const UnipotentMatrix& a, Side side);

/// True when x is an Apery member with no strictly larger member, under the
/// side order, among elements with max_entry < bound.
bool is_boxed_apery_maximal(const AperySet& ap, const UnipotentMatrix& x, Entry bound);

/// B = A^left_power * remainder * A^right_power with remainder in the Apery set.
struct AperyFactorization {
  Entry left_power = 0;
  UnipotentMatrix remainder;
  Entry right_power = 0;
};

AperyFactorization factor_via_apery(const Monoid& s, const UnipotentMatrix& a, Side side,
                                    const UnipotentMatrix& b);

}  // namespace unimon
