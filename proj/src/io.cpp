#include "unimon/io.hpp"

#include <algorithm>
#include <sstream>

namespace unimon::io {

namespace {

InputError bad(const std::string& what) { return InputError("malformed input: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Entry as_entry(const Json& v) {
  if (!v.is_number_integer()) throw bad("expected an integer, got " + v.dump());
  return v.get<Entry>();
}

int as_int(const Json& v) {
  const Entry e = as_entry(v);
  if (e < 0 || e > 1'000'000) throw bad("index out of range: " + v.dump());
  return static_cast<int>(e);
}

Json optional_matrix(const std::optional<UnipotentMatrix>& a, const PatternGroup& g) {
  return a ? matrix_to_json(*a, g) : Json(nullptr);
}

std::optional<UnipotentMatrix> optional_matrix_from(const Json& j, const PatternGroup& g) {
  if (j.is_null()) return std::nullopt;
  return matrix_from_json(j, g);
}

}  // namespace

Json matrix_to_json(const UnipotentMatrix& a, const PatternGroup& group) {
  if (group.kind() == PatternKind::first_row) return Json{{"vector", a.first_row()}};
  return matrix_to_json(a);
}

Json matrix_to_json(const UnipotentMatrix& a) {
  Json entries = Json::array();
  for (const auto& [i, j, v] : a.nonzero_entries()) entries.push_back(Json::array({i, j, v}));
  return Json{{"n", a.n()}, {"entries", entries}};
}

UnipotentMatrix matrix_from_json(const Json& j) {
  if (j.is_object() && j.contains("vector")) {
    const Json& v = j.at("vector");
    if (!v.is_array() || v.empty()) throw bad("\"vector\" must be a nonempty array");
    std::vector<Entry> row;
    for (const auto& x : v) row.push_back(as_entry(x));
    return UnipotentMatrix::from_vector(row);
  }
  const int n = as_int(field(j, "n"));
  const Json& es = field(j, "entries");
  if (!es.is_array()) throw bad("\"entries\" must be an array");
  std::vector<std::tuple<int, int, Entry>> entries;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 3) throw bad("each entry must be [i, j, value]");
    entries.emplace_back(as_int(e[0]), as_int(e[1]), as_entry(e[2]));
  }
  return UnipotentMatrix::from_entries(n, entries);
}

UnipotentMatrix matrix_from_json(const Json& j, const PatternGroup& group) {
  UnipotentMatrix a;
  if (j.is_array()) {
    std::vector<Entry> v;
    for (const auto& x : j) v.push_back(as_entry(x));
    if (group.kind() == PatternKind::first_row) {
      if (v.size() != static_cast<std::size_t>(group.n() - 1)) {
        throw SizeMismatch("expected " + std::to_string(group.n() - 1) + " first-row entries");
      }
      a = UnipotentMatrix::from_vector(v);
    } else {
      a = UnipotentMatrix::from_upper(group.n(), v);
    }
  } else {
    a = matrix_from_json(j);
  }
  if (a.n() != group.n()) {
    throw SizeMismatch("matrix of size " + std::to_string(a.n()) + " in a group of size " +
                       std::to_string(group.n()));
  }
  return a;
}

Json matrices_to_json(const std::vector<UnipotentMatrix>& xs, const PatternGroup& group) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(matrix_to_json(x, group));
  return out;
}

std::vector<UnipotentMatrix> matrices_from_json(const Json& j, const PatternGroup& group) {
  if (!j.is_array()) throw bad("expected an array of matrices");
  std::vector<UnipotentMatrix> out;
  for (const auto& x : j) out.push_back(matrix_from_json(x, group));
  return out;
}

std::string format_matrix(const UnipotentMatrix& a, const PatternGroup& group) {
  if (group.kind() != PatternKind::first_row) return a.str();
  std::string out = "(";
  const auto row = a.first_row();
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(row[k]);
  }
  return out + ")";
}

Json group_to_json(const PatternGroup& g) {
  Json pattern;
  switch (g.kind()) {
    case PatternKind::full:
      pattern = "full";
      break;
    case PatternKind::first_row:
      pattern = "first_row";
      break;
    case PatternKind::custom:
      pattern = Json::array();
      for (const auto& p : g.positions()) pattern.push_back(Json::array({p.i, p.j}));
      break;
  }
  return Json{{"n", g.n()}, {"pattern", pattern}};
}

PatternGroup group_from_json(const Json& j) {
  const int n = as_int(field(j, "n"));
  const Json& p = field(j, "pattern");
  if (p.is_string()) {
    const auto name = p.get<std::string>();
    if (name == "full") return PatternGroup::full(n);
    if (name == "first_row") return PatternGroup::first_row(n);
    throw bad("unknown pattern \"" + name + "\"");
  }
  if (!p.is_array()) throw bad("pattern must be \"full\", \"first_row\" or a position list");
  std::vector<Position> ps;
  for (const auto& e : p) {
    if (!e.is_array() || e.size() != 2) throw bad("each pattern position must be [i, j]");
    ps.push_back({as_int(e[0]), as_int(e[1])});
  }
  return PatternGroup::custom(n, ps);
}

Json monoid_to_json(const Monoid& s) {
  return Json{{"group", group_to_json(s.group())}, {"gaps", matrices_to_json(s.gaps(), s.group())}};
}

Monoid monoid_from_json(const Json& j) {
  const PatternGroup g = group_from_json(field(j, "group"));
  if (j.contains("generators")) {
    const auto gens = matrices_from_json(j.at("generators"), g);
    const Entry bound = j.contains("search_bound") ? as_entry(j.at("search_bound")) : 16;
    auto closure = from_generators(g, gens, bound);
    if (!closure.verified()) {
      throw Undecided("generators do not certify a cofinite monoid below bound " +
                      std::to_string(bound));
    }
    return *closure.monoid;
  }
  return Monoid::from_gaps(g, matrices_from_json(field(j, "gaps"), g));
}

Json side_to_json(Side side) {
  switch (side) {
    case Side::left:
      return "l";
    case Side::right:
      return "r";
    case Side::twosided:
      break;
  }
  return "t";
}

Side side_from_string(const std::string& s) {
  if (s == "l" || s == "left") return Side::left;
  if (s == "r" || s == "right") return Side::right;
  if (s == "t" || s == "twosided" || s == "two-sided") return Side::twosided;
  throw bad("unknown side \"" + s + "\"");
}

Json ideal_to_json(const RelativeIdeal& i) {
  const auto& g = i.base().group();
  if (i.is_cofinite()) {
    return Json{{"side", side_to_json(i.side())}, {"complement", matrices_to_json(i.complement(), g)}};
  }
  return ideal_generated_to_json(i.side(), i.generators(), g);
}

Json ideal_generated_to_json(Side side, const std::vector<UnipotentMatrix>& gens,
                             const PatternGroup& group) {
  return Json{{"side", side_to_json(side)}, {"generators", matrices_to_json(gens, group)}};
}

RelativeIdeal ideal_from_json(const Json& j, const Monoid& base) {
  const Side side = side_from_string(field(j, "side").get<std::string>());
  const auto& g = base.group();
  if (j.contains("complement")) {
    return RelativeIdeal::cofinite(base, side, matrices_from_json(j.at("complement"), g));
  }
  return RelativeIdeal::generated(base, side, matrices_from_json(field(j, "generators"), g));
}

Json frobenius_to_json(const FrobeniusData& fd, const PatternGroup& g) {
  return Json{{"F_l", matrices_to_json(fd.f_left, g)},
              {"F_r", matrices_to_json(fd.f_right, g)},
              {"F_t", matrices_to_json(fd.f_two, g)},
              {"PF_l", matrices_to_json(fd.pf_left, g)},
              {"PF_r", matrices_to_json(fd.pf_right, g)},
              {"PF_t", matrices_to_json(fd.pf_two, g)},
              {"SG", matrices_to_json(fd.special, g)},
              {"type_numbers", fd.type_numbers}};
}

FrobeniusData frobenius_from_json(const Json& j, const PatternGroup& g) {
  FrobeniusData fd;
  fd.f_left = matrices_from_json(field(j, "F_l"), g);
  fd.f_right = matrices_from_json(field(j, "F_r"), g);
  fd.f_two = matrices_from_json(field(j, "F_t"), g);
  fd.pf_left = matrices_from_json(field(j, "PF_l"), g);
  fd.pf_right = matrices_from_json(field(j, "PF_r"), g);
  fd.pf_two = matrices_from_json(field(j, "PF_t"), g);
  fd.special = matrices_from_json(field(j, "SG"), g);
  fd.type_numbers = field(j, "type_numbers").get<std::array<std::size_t, 3>>();
  return fd;
}

namespace {

Json counts_pair(const std::optional<NgCounts>& c) {
  if (!c) return nullptr;
  return Json::array({c->n_count, c->g_count});
}

std::optional<NgCounts> counts_pair_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return NgCounts{j.at(0).get<std::size_t>(), j.at(1).get<std::size_t>()};
}

Json optional_entry(const std::optional<Entry>& e) { return e ? Json(*e) : Json(nullptr); }

std::optional<Entry> optional_entry_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return as_entry(j);
}

}  // namespace

Json report_to_json(const ClassificationReport& r, const PatternGroup& g) {
  Json inv{{"r", r.invariants.r},
           {"conductor", r.invariants.conductor},
           {"genus", r.invariants.genus},
           {"sporadicity", r.invariants.sporadicity},
           {"sporadic_set", matrices_to_json(r.invariants.sporadic_set, g)}};
  Json witness = nullptr;
  if (r.reducibility_witness) {
    witness = Json::array({monoid_to_json(r.reducibility_witness->first),
                           monoid_to_json(r.reducibility_witness->second)});
  }
  Json conditions{{"left", r.conditions.left},
                  {"right", r.conditions.right},
                  {"twosided", r.conditions.twosided},
                  {"twosided_failure", optional_matrix(r.conditions.twosided_failure, g)}};
  Json counts{{"c", optional_matrix(r.counts.c, g)},
              {"natural", counts_pair(r.counts.natural)},
              {"entrywise", counts_pair(r.counts.entrywise)},
              {"box_below_c", optional_entry(r.counts.box_below_c)},
              {"cube_volume", optional_entry(r.counts.cube_volume)}};
  return Json{{"invariants", inv},
              {"frobenius", r.frobenius ? frobenius_to_json(*r.frobenius, g) : Json(nullptr)},
              {"irreducibility", to_string(r.irreducibility)},
              {"reducibility_witness", witness},
              {"symmetry", to_string(r.symmetry)},
              {"strong", r.strong},
              {"pseudo_witness", optional_matrix(r.pseudo_witness, g)},
              {"sufficient_conditions", conditions},
              {"counts", counts}};
}

ClassificationReport report_from_json(const Json& j, const PatternGroup& g) {
  ClassificationReport r;
  const Json& inv = field(j, "invariants");
  r.invariants.r = as_entry(field(inv, "r"));
  r.invariants.conductor = as_entry(field(inv, "conductor"));
  r.invariants.genus = as_entry(field(inv, "genus"));
  r.invariants.sporadicity = as_entry(field(inv, "sporadicity"));
  r.invariants.sporadic_set = matrices_from_json(field(inv, "sporadic_set"), g);
  if (!field(j, "frobenius").is_null()) r.frobenius = frobenius_from_json(j.at("frobenius"), g);

  const auto irr = field(j, "irreducibility").get<std::string>();
  for (auto v : {Irreducibility::irreducible, Irreducibility::reducible, Irreducibility::vacuous}) {
    if (irr == to_string(v)) r.irreducibility = v;
  }
  const Json& w = field(j, "reducibility_witness");
  if (!w.is_null()) r.reducibility_witness.emplace(monoid_from_json(w.at(0)), monoid_from_json(w.at(1)));

  const auto sym = field(j, "symmetry").get<std::string>();
  for (auto v : {Symmetry::symmetric, Symmetry::pseudo_symmetric, Symmetry::none}) {
    if (sym == to_string(v)) r.symmetry = v;
  }
  r.strong = field(j, "strong").get<bool>();
  r.pseudo_witness = optional_matrix_from(field(j, "pseudo_witness"), g);

  const Json& c = field(j, "sufficient_conditions");
  r.conditions.left = field(c, "left").get<bool>();
  r.conditions.right = field(c, "right").get<bool>();
  r.conditions.twosided = field(c, "twosided").get<bool>();
  r.conditions.twosided_failure = optional_matrix_from(field(c, "twosided_failure"), g);

  const Json& k = field(j, "counts");
  r.counts.c = optional_matrix_from(field(k, "c"), g);
  r.counts.natural = counts_pair_from(field(k, "natural"));
  r.counts.entrywise = counts_pair_from(field(k, "entrywise"));
  r.counts.box_below_c = optional_entry_from(field(k, "box_below_c"));
  r.counts.cube_volume = optional_entry_from(field(k, "cube_volume"));
  return r;
}

Json checks_to_json(const std::vector<TheoremCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    out.push_back(Json{{"name", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
  }
  return out;
}

Json lattice_to_json(const IdempotentLattice& lat, const PatternGroup& g) {
  Json nodes = Json::array();
  for (const auto& t : lat.nodes) nodes.push_back(matrices_to_json(t.gap_part(), g));
  Json edges = Json::array();
  for (const auto& [lo, hi] : lat.hasse_edges) edges.push_back(Json::array({lo, hi}));
  return Json{{"nodes", nodes}, {"hasse_edges", edges}, {"minimal_nontrivial", lat.minimal_nontrivial}};
}

std::string export_dot(const IdempotentLattice& lat) {
  std::ostringstream os;
  os << "digraph idempotents {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t k = 0; k < lat.nodes.size(); ++k) {
    const auto& t = lat.nodes[k];
    std::string label = "{";
    for (std::size_t m = 0; m < t.gap_part().size(); ++m) {
      if (m) label += ",";
      label += format_matrix(t.gap_part()[m], t.base().group());
    }
    label += "}";
    os << "  n" << k << " [label=\"" << label << "\"];\n";
  }
  for (const auto& [lo, hi] : lat.hasse_edges) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

bool looks_like_matrix(const Json& j) {
  return j.is_object() && (j.contains("vector") || (j.contains("entries") && j.contains("n")));
}

std::string cell(const Json& j) {
  if (looks_like_matrix(j)) {
    const UnipotentMatrix a = matrix_from_json(j);
    if (j.contains("vector")) return format_matrix(a, PatternGroup::first_row(a.n()));
    return a.str();
  }
  if (j.is_array() && std::all_of(j.begin(), j.end(), looks_like_matrix)) {
    std::string out = "{";
    for (const auto& x : j) out += (out.size() > 1 ? "," : "") + cell(x);
    return out + "}";
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
    std::string out;
    for (const auto& x : j) out += (out.empty() ? "" : " ") + cell(x);
    return out;
  }
  return j.dump();
}

void render(const Json& doc, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (doc.is_object() && !looks_like_matrix(doc)) {
    for (const auto& [k, v] : doc.items()) render(v, prefix.empty() ? k : prefix + "." + k, rows);
    return;
  }
  if (doc.is_array() && !doc.empty() && !looks_like_matrix(doc.front()) &&
      !doc.front().is_primitive()) {
    rows.emplace_back(prefix, "[" + std::to_string(doc.size()) + "]");
    for (std::size_t k = 0; k < doc.size(); ++k) {
      if (doc[k].is_object() && !looks_like_matrix(doc[k])) {
        render(doc[k], prefix + "[" + std::to_string(k) + "]", rows);
      } else {
        rows.emplace_back("", cell(doc[k]));
      }
    }
    return;
  }
  rows.emplace_back(prefix, cell(doc));
}

}  // namespace

std::string render_table(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  render(doc, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) {
    os << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  }
  return os.str();
}

}  // namespace unimon::io
