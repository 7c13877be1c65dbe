#pragma once

#include <fstream>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "unimon/io.hpp"
#include "unimon/monoid.hpp"

namespace unimon {

// Readable gtest failure messages.
inline void PrintTo(const UnipotentMatrix& a, std::ostream* os) { *os << a.str(); }

}  // namespace unimon

namespace testing_support {

using unimon::Monoid;
using unimon::PatternGroup;
using unimon::UnipotentMatrix;

inline std::string fixture_path(const std::string& name) {
  return std::string(UNIMON_FIXTURE_DIR) + "/" + name + ".json";
}

inline unimon::io::Json fixture_json(const std::string& name) {
  std::ifstream in(fixture_path(name));
  return unimon::io::Json::parse(in);
}

inline Monoid fixture(const std::string& name) { return unimon::io::monoid_from_json(fixture_json(name)); }

inline const std::vector<std::string>& monoid_fixtures() {
  static const std::vector<std::string> names{
      "f_necessary",   "subtle0",       "subtle1",         "subtle2",  "f_s2",     "f_s22",
      "f_s3_linearly", "p3_fund2",      "numerical_2_3",   "numerical_3_4_5", "whole_p3"};
  return names;
}

inline UnipotentMatrix vec(std::vector<unimon::Entry> first_row) {
  return UnipotentMatrix::from_vector(first_row);
}

inline UnipotentMatrix u3(unimon::Entry a12, unimon::Entry a13, unimon::Entry a23) {
  return UnipotentMatrix::from_upper(3, {a12, a13, a23});
}

inline std::vector<UnipotentMatrix> sorted(std::vector<UnipotentMatrix> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

inline oracle::Vec to_vec(const UnipotentMatrix& a) {
  return oracle::Vec(a.upper().begin(), a.upper().end());
}

inline std::vector<oracle::Vec> to_vecs(const std::vector<UnipotentMatrix>& xs) {
  std::vector<oracle::Vec> out;
  for (const auto& x : xs) out.push_back(to_vec(x));
  std::sort(out.begin(), out.end());
  return out;
}

inline oracle::Group to_oracle(const PatternGroup& g) {
  oracle::Group out{g.n(), {}};
  for (const auto& p : g.positions()) out.pos.push_back({p.i, p.j});
  return out;
}

inline oracle::Mon to_oracle(const Monoid& s) {
  oracle::Mon m{to_oracle(s.group()), {}};
  for (const auto& g : s.gaps()) m.gaps.insert(to_vec(g));
  return m;
}

inline std::vector<PatternGroup> random_patterns() {
  return {PatternGroup::first_row(2), PatternGroup::first_row(3), PatternGroup::full(3)};
}

// Removes randomly chosen minimal generators from G(N), one at a time, until
// the requested genus is reached. Every step keeps a monoid.
inline Monoid random_monoid(const PatternGroup& g, std::size_t genus, std::mt19937& rng) {
  Monoid s = Monoid::whole(g);
  while (s.genus() < genus) {
    const auto gens = unimon::minimal_generators(s);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    auto gaps = s.gaps();
    gaps.push_back(gens[pick(rng)]);
    std::sort(gaps.begin(), gaps.end());
    s = Monoid::from_gaps(g, gaps);
  }
  return s;
}

// The fixed random sample used by the property suites: 50 monoids per pattern.
inline std::vector<Monoid> random_sample(std::size_t per_pattern = 50, unsigned seed = 20240611) {
  std::mt19937 rng(seed);
  std::vector<Monoid> out;
  for (const auto& g : random_patterns()) {
    const std::size_t max_genus = g.dimension() == 1 ? 9 : (g.dimension() == 2 ? 8 : 6);
    std::uniform_int_distribution<std::size_t> genus(1, max_genus);
    for (std::size_t k = 0; k < per_pattern; ++k) out.push_back(random_monoid(g, genus(rng), rng));
  }
  return out;
}

}  // namespace testing_support
