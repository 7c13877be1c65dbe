#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "unimon/classify.hpp"
#include "unimon/ideals.hpp"
#include "unimon/monoid.hpp"

namespace unimon::io {

using Json = nlohmann::json;

/// {"vector": [...]} for first-row groups, {"n": n, "entries": [[i, j, v], ...]} otherwise.
Json matrix_to_json(const UnipotentMatrix& a, const PatternGroup& group);
Json matrix_to_json(const UnipotentMatrix& a);
/// Accepts both forms, and a bare array: the first row for first-row groups,
/// the strictly-upper vector otherwise.
UnipotentMatrix matrix_from_json(const Json& j, const PatternGroup& group);
UnipotentMatrix matrix_from_json(const Json& j);

Json matrices_to_json(const std::vector<UnipotentMatrix>& xs, const PatternGroup& group);
std::vector<UnipotentMatrix> matrices_from_json(const Json& j, const PatternGroup& group);

/// Short display form: first row for first-row groups, the upper vector otherwise.
std::string format_matrix(const UnipotentMatrix& a, const PatternGroup& group);

Json group_to_json(const PatternGroup& g);
PatternGroup group_from_json(const Json& j);

Json monoid_to_json(const Monoid& s);
/// Reads {"group", "gaps"} or {"group", "generators", "search_bound"}; the
/// latter throws Undecided when the window does not certify the closure.
Monoid monoid_from_json(const Json& j);

Json side_to_json(Side side);
Side side_from_string(const std::string& s);

/// {"side", "complement"} for cofinite ideals, {"side", "generators"} for generated ones.
Json ideal_to_json(const RelativeIdeal& i);
RelativeIdeal ideal_from_json(const Json& j, const Monoid& base);
Json ideal_generated_to_json(Side side, const std::vector<UnipotentMatrix>& gens,
                             const PatternGroup& group);

Json frobenius_to_json(const FrobeniusData& fd, const PatternGroup& group);
FrobeniusData frobenius_from_json(const Json& j, const PatternGroup& group);

Json report_to_json(const ClassificationReport& r, const PatternGroup& group);
ClassificationReport report_from_json(const Json& j, const PatternGroup& group);

Json checks_to_json(const std::vector<TheoremCheck>& checks);

Json lattice_to_json(const IdempotentLattice& lat, const PatternGroup& group);

/// Graphviz digraph of the lattice: nodes labelled by their sorted gap part,
/// edges from each element to the elements covering it.
std::string export_dot(const IdempotentLattice& lat);

/// Aligned plain-text rendering of a result document.
std::string render_table(const Json& doc);

}  // namespace unimon::io
