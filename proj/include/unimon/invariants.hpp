#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "unimon/ideals.hpp"
#include "unimon/monoid.hpp"

namespace unimon {

struct FrobeniusData {
  std::vector<UnipotentMatrix> f_left, f_right, f_two;
  std::vector<UnipotentMatrix> pf_left, pf_right, pf_two;
  std::vector<UnipotentMatrix> special;
  /// |PF_l|, |PF_r|, |PF_t|
  std::array<std::size_t, 3> type_numbers{};
};

/// Gaps g with g X in S (left), X g in S (right) or both, for every X in G(N)*.
std::vector<UnipotentMatrix> frobenius(const Monoid& s, Side side);

/// Gaps g with g S* in S (left), S* g in S (right) or both.
std::vector<UnipotentMatrix> pseudo_frobenius(const Monoid& s, Side side);

/// Two-sided pseudo-Frobenius gaps whose square lies in S.
std::vector<UnipotentMatrix> special_gaps(const Monoid& s);

std::array<std::size_t, 3> type_numbers(const Monoid& s);

FrobeniusData frobenius_data(const Monoid& s);

/// Maximal non-identity elements of the finite complement of I.
std::vector<UnipotentMatrix> pf_of_cofinite_ideal(const RelativeIdeal& i, Side side);

}  // namespace unimon
