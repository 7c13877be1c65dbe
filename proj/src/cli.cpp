#include "unimon/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "unimon/apery.hpp"
#include "unimon/classify.hpp"
#include "unimon/ideals.hpp"
#include "unimon/invariants.hpp"
#include "unimon/io.hpp"
#include "unimon/orders.hpp"

namespace unimon::cli {

namespace {

using io::Json;

// Exit status of a successful verb that nevertheless found a failing check.
struct ReportedFailure {
  Json doc;
};

Json read_document(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
    return Json::parse(source);
  }
  std::ifstream in(source);
  if (!in) throw InputError("cannot open " + source);
  return Json::parse(in);
}

// A matrix on the command line: JSON, or a comma-separated entry list.
UnipotentMatrix parse_matrix(const std::string& text, const PatternGroup& g) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    return io::matrix_from_json(Json::parse(text), g);
  }
  Json arr = Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InputError("not an integer: \"" + item + "\"");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw InputError("not an integer: \"" + item + "\"");
    }
    arr.push_back(v);
  }
  return io::matrix_from_json(arr, g);
}

std::vector<UnipotentMatrix> parse_matrices(const std::string& text, const PatternGroup& g) {
  const Json j = Json::parse(text);
  return io::matrices_from_json(j, g);
}

OrderKind order_kind(const std::string& s) {
  if (s == "left" || s == "l") return OrderKind::left;
  if (s == "right" || s == "r") return OrderKind::right;
  if (s == "twosided" || s == "t") return OrderKind::twosided;
  if (s == "entrywise" || s == "e") return OrderKind::entrywise;
  throw InputError("unknown order kind \"" + s + "\"");
}

const char* order_name(OrderKind k) {
  switch (k) {
    case OrderKind::left:
      return "left";
    case OrderKind::right:
      return "right";
    case OrderKind::twosided:
      return "twosided";
    case OrderKind::entrywise:
      break;
  }
  return "entrywise";
}

struct Options {
  std::string input;
  std::string format = "table";
  std::string side = "t";
  std::string pivot;
  std::optional<Entry> box;
  std::string kind = "twosided";
  std::string a, b;
  std::string gens, complement;
  bool idempotents = false;
  std::string dot;
  std::string pattern = "first_row";
  int n = 3;
  std::size_t genus = 0;
  bool irreducible_only = false;
  std::string out_file;
};

Json validate_doc(const Monoid& s) {
  return Json{{"valid", true}, {"genus", s.genus()}, {"r", s.generating_number()}};
}

Json invariants_doc(const Monoid& s) {
  const auto inv = invariants(s);
  const auto& g = s.group();
  return Json{{"r", inv.r},
              {"conductor", inv.conductor},
              {"genus", inv.genus},
              {"sporadicity", inv.sporadicity},
              {"sporadic_set", io::matrices_to_json(inv.sporadic_set, g)}};
}

Json apery_doc(const Monoid& s, const Options& o) {
  const auto& g = s.group();
  if (o.pivot.empty()) throw InputError("apery needs --pivot");
  const UnipotentMatrix a = parse_matrix(o.pivot, g);
  const Side side = io::side_from_string(o.side);
  const AperySet ap(s, a, side);
  const Entry bound = o.box ? *o.box : checked_add(2 * s.generating_number(), max_entry(a));
  Json doc{{"pivot", io::matrix_to_json(a, g)},
           {"side", io::side_to_json(side)},
           {"core", io::matrices_to_json(ap.core(), g)},
           {"box", bound},
           {"members_in_box", io::matrices_to_json(apery_in_box(ap, bound), g)}};
  if (s.has_gaps()) doc["maximal"] = io::matrices_to_json(apery_maximal(s, a, side), g);
  return doc;
}

Json order_doc(const Monoid& s, const Options& o) {
  const auto& g = s.group();
  if (o.a.empty() || o.b.empty()) throw InputError("order needs --a and --b");
  const OrderKind kind = order_kind(o.kind);
  const Order order(kind, s);
  const auto a = parse_matrix(o.a, g);
  const auto b = parse_matrix(o.b, g);
  return Json{{"kind", order_name(kind)},
              {"a", io::matrix_to_json(a, g)},
              {"b", io::matrix_to_json(b, g)},
              {"leq", s_leq(order, a, b)},
              {"interval", io::matrices_to_json(interval(order, a, b), g)}};
}

Json ideal_doc(const Monoid& s, const Options& o, const Json& input) {
  const auto& g = s.group();
  const bool from_file = input.contains("ideal") && o.gens.empty() && o.complement.empty();
  if (!from_file && o.gens.empty() == o.complement.empty()) {
    throw InputError("ideal needs exactly one of --gens and --complement");
  }
  auto build = [&] {
    if (from_file) return io::ideal_from_json(input.at("ideal"), s);
    const Side side = io::side_from_string(o.side);
    if (o.gens.empty()) return RelativeIdeal::cofinite(s, side, parse_matrices(o.complement, g));
    return RelativeIdeal::generated(s, side, parse_matrices(o.gens, g));
  };
  const RelativeIdeal ideal = build();
  const Side side = ideal.side();
  Json doc{{"ideal", io::ideal_to_json(ideal)},
           {"min_generators", io::matrices_to_json(ideal_min_generators(ideal, o.box), g)}};
  if (ideal.is_cofinite()) {
    try {
      doc["pseudo_frobenius"] = io::matrices_to_json(pf_of_cofinite_ideal(ideal, side), g);
    } catch (const EmptyGaps&) {
      doc["pseudo_frobenius"] = Json::array();
    }
  }
  return doc;
}

Json torsion_doc(const Monoid& s, const Options& o) {
  const auto& g = s.group();
  Json doc;
  if (o.idempotents || !o.dot.empty()) {
    const auto lattice = torsion_idempotents(s);
    if (!o.dot.empty()) {
      std::ofstream f(o.dot);
      if (!f) throw InputError("cannot write " + o.dot);
      f << io::export_dot(lattice);
    }
    if (o.idempotents) return io::lattice_to_json(lattice, g);
  }
  const auto elements = torsion_monoid(s);
  Json parts = Json::array();
  std::size_t idem = 0;
  for (const auto& t : elements) {
    parts.push_back(io::matrices_to_json(t.gap_part(), g));
    if (t.is_idempotent()) ++idem;
  }
  doc["count"] = elements.size();
  doc["idempotent_count"] = idem;
  doc["elements"] = parts;
  return doc;
}

Json oversemigroups_doc(const Monoid& s) {
  const auto overs = oversemigroups(s);
  Json list = Json::array();
  for (const auto& t : overs) list.push_back(io::matrices_to_json(t.gaps(), s.group()));
  return Json{{"count", overs.size()}, {"gap_sets", list}};
}

Json verify_doc(const Monoid& s) {
  const auto checks = verify_theorems(s);
  Json doc{{"checks", io::checks_to_json(checks)}};
  const bool failed = std::any_of(checks.begin(), checks.end(),
                                  [](const TheoremCheck& c) { return c.verdict == Verdict::fail; });
  if (failed) throw ReportedFailure{doc};
  return doc;
}

PatternGroup pattern_group(const Options& o) {
  if (o.n < 2) throw InputError("--n must be at least 2");
  if (o.pattern == "first_row") return PatternGroup::first_row(o.n);
  if (o.pattern == "full") return PatternGroup::full(o.n);
  return io::group_from_json(Json{{"n", o.n}, {"pattern", Json::parse(o.pattern)}});
}

Json enumerate(const Options& o, std::ostream& out) {
  const PatternGroup g = pattern_group(o);
  const auto monoids = o.irreducible_only ? enumerate_irreducible(g, o.genus)
                                          : enumerate_monoids(g, o.genus);
  std::ofstream file;
  if (!o.out_file.empty()) {
    file.open(o.out_file);
    if (!file) throw InputError("cannot write " + o.out_file);
  }
  std::ostream& sink = o.out_file.empty() ? out : file;
  for (const auto& s : monoids) {
    const Json line{{"monoid", io::monoid_to_json(s)}, {"report", io::report_to_json(classify(s), g)}};
    sink << line.dump() << "\n";
  }
  if (o.out_file.empty()) return nullptr;
  return Json{{"count", monoids.size()}, {"out", o.out_file}};
}

Json matrix_witness(const NotClosed& e, const PatternGroup& g) {
  return Json{{"left", io::matrix_to_json(e.left(), g)},
              {"right", io::matrix_to_json(e.right(), g)},
              {"product", io::matrix_to_json(e.product(), g)}};
}

void emit(const Json& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << io::render_table(doc);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unipotent numerical monoids"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  auto verb = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "Monoid file or inline JSON")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    return sub;
  };
  auto add_side = [&](CLI::App* sub) {
    sub->add_option("--side", o.side, "l, r or t")->capture_default_str();
  };

  verb("validate", "Check that the gap set describes a monoid");
  verb("gaps", "List the gaps");
  verb("invariants", "Generating number, conductor, genus and sporadic set");
  verb("mingens", "Minimal generating set");
  auto* apery_cmd = verb("apery", "Apery set with respect to a pivot");
  apery_cmd->add_option("--pivot", o.pivot, "Pivot: JSON or comma-separated entries")->required();
  add_side(apery_cmd);
  apery_cmd->add_option("--box", o.box, "Entry bound for listed members");
  add_side(verb("frobenius", "Frobenius set"));
  add_side(verb("pf", "Pseudo-Frobenius set"));
  verb("special-gaps", "Special gaps");
  auto* order_cmd = verb("order", "Compare two elements and list the interval between them");
  order_cmd->add_option("--kind", o.kind, "left, right, twosided or entrywise")->capture_default_str();
  order_cmd->add_option("--a", o.a, "Lower element")->required();
  order_cmd->add_option("--b", o.b, "Upper element")->required();
  auto* ideal_cmd = verb("ideal", "Relative ideal, its minimal generators and pseudo-Frobenius set");
  add_side(ideal_cmd);
  ideal_cmd->add_option("--gens", o.gens, "JSON list of generators");
  ideal_cmd->add_option("--complement", o.complement, "JSON list of the finite complement");
  ideal_cmd->add_option("--box", o.box, "Entry bound for generated ideals");
  auto* torsion_cmd = verb("torsion", "Torsion monoid of relative ideals containing S");
  torsion_cmd->add_flag("--idempotents", o.idempotents, "Only the lattice of idempotents");
  torsion_cmd->add_option("--dot", o.dot, "Write the idempotent lattice as Graphviz");
  verb("oversemigroups", "All monoids containing S");
  verb("classify", "Irreducibility, symmetry and counting report");
  verb("verify", "Check every theorem on this monoid");
  auto* enum_cmd = app.add_subcommand("enumerate", "All monoids of a given genus");
  enum_cmd->add_option("--pattern", o.pattern, "first_row, full or a JSON position list")
      ->capture_default_str();
  enum_cmd->add_option("--n", o.n, "Matrix size")->capture_default_str();
  enum_cmd->add_option("--genus", o.genus, "Genus")->required();
  enum_cmd->add_flag("--irreducible-only", o.irreducible_only, "Keep irreducible monoids only");
  enum_cmd->add_option("--out", o.out_file, "JSON-lines output file");
  enum_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  std::optional<PatternGroup> group;
  try {
    if (name == "enumerate") {
      const Json doc = enumerate(o, out);
      if (!doc.is_null()) emit(doc, o.format, out);
      return 0;
    }
    const Json input = read_document(o.input);
    // Ideal documents carry their monoid under "monoid".
    const Json& monoid_doc = input.contains("monoid") ? input.at("monoid") : input;
    group = io::group_from_json(monoid_doc.at("group"));
    const Monoid s = io::monoid_from_json(monoid_doc);
    const auto& g = s.group();
    Json doc;
    if (name == "validate") {
      doc = validate_doc(s);
    } else if (name == "gaps") {
      doc = Json{{"genus", s.genus()}, {"gaps", io::matrices_to_json(s.gaps(), g)}};
    } else if (name == "invariants") {
      doc = invariants_doc(s);
    } else if (name == "mingens") {
      doc = Json{{"minimal_generators", io::matrices_to_json(minimal_generators(s), g)}};
    } else if (name == "apery") {
      doc = apery_doc(s, o);
    } else if (name == "frobenius") {
      const Side side = io::side_from_string(o.side);
      doc = Json{{"side", io::side_to_json(side)},
                 {"frobenius", io::matrices_to_json(frobenius(s, side), g)}};
    } else if (name == "pf") {
      const Side side = io::side_from_string(o.side);
      doc = Json{{"side", io::side_to_json(side)},
                 {"pseudo_frobenius", io::matrices_to_json(pseudo_frobenius(s, side), g)}};
    } else if (name == "special-gaps") {
      doc = Json{{"special_gaps", io::matrices_to_json(special_gaps(s), g)}};
    } else if (name == "order") {
      doc = order_doc(s, o);
    } else if (name == "ideal") {
      doc = ideal_doc(s, o, input);
    } else if (name == "torsion") {
      doc = torsion_doc(s, o);
    } else if (name == "oversemigroups") {
      doc = oversemigroups_doc(s);
    } else if (name == "classify") {
      doc = io::report_to_json(classify(s), g);
    } else if (name == "verify") {
      doc = verify_doc(s);
    }
    emit(doc, o.format, out);
    return 0;
  } catch (const ReportedFailure& f) {
    emit(f.doc, o.format, out);
    err << "error: at least one check failed\n";
    return 2;
  } catch (const NotClosed& e) {
    const PatternGroup g = group ? *group : PatternGroup::full(e.product().n());
    emit(Json{{"error", "not_closed"}, {"message", e.what()}, {"witness", matrix_witness(e, g)}},
         o.format, out);
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    emit(Json{{"error", "validation"}, {"message", e.what()}}, o.format, out);
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Undecided& e) {
    err << "undecided: " << e.what() << "\n";
    return 3;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const Overflow& e) {
    err << "overflow: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace unimon::cli
