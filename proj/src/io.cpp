#include "contact/io.hpp"

#include <fstream>
#include <sstream>

namespace contact {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::Parse, what); }

const Json& field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) parse_error(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const Json& value, const char* key) {
  if (!value.is_array()) parse_error(std::string("'") + key + "' must be a list of names");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) parse_error(std::string("'") + key + "' must be a list of names");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<NamePair> pair_list(const Json& doc, const char* key) {
  std::vector<NamePair> out;
  auto it = doc.find(key);
  if (it == doc.end()) return out;
  if (!it->is_array()) parse_error(std::string("'") + key + "' must be a list of pairs");
  for (const auto& item : *it) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
      parse_error(std::string("'") + key + "' entries must be pairs of names");
    out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
  }
  return out;
}

Json name_pairs(const std::vector<std::string>& names, const BitMatrix& rel, bool unordered) {
  Json out = Json::array();
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = unordered ? a : 0; b < names.size(); ++b)
      if (rel.test(a, b)) out.push_back({names[a], names[b]});
  return out;
}

Json index_names(const std::vector<std::size_t>& idx, const ContactStructure& s) {
  Json out = Json::array();
  for (std::size_t i : idx) out.push_back(s.name(i));
  return out;
}

std::string quoted(const std::string& name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Kind parse_kind(const std::string& text) {
  if (text == "poset") return Kind::Poset;
  if (text == "semilattice") return Kind::Semilattice;
  parse_error("unknown kind '" + text + "'");
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(Errc::Parse, "cannot write " + path.string());
  out << doc.dump(2) << "\n";
}

bool is_event_document(const Json& doc) { return doc.is_object() && doc.contains("conflict"); }

Json to_json(const ContactStructure& s) {
  Json out;
  out["kind"] = kind_name(s.kind());
  out["elements"] = s.names();
  out["bottom"] = s.name(s.bottom());
  Json order = Json::array();
  for (auto [a, b] : s.covers()) order.push_back({s.name(a), s.name(b)});
  out["order"] = std::move(order);
  out["contact"] = name_pairs(s.names(), s.contact_table(), true);
  return out;
}

ContactStructure structure_from_json(const Json& doc, ContactLoad mode) {
  if (!doc.is_object()) parse_error("structure document must be an object");
  if (doc.contains("conflict")) throw Error(Errc::KindMismatch, "event structure given where a contact structure is expected");
  Kind kind = Kind::Poset;
  if (auto it = doc.find("kind"); it != doc.end()) {
    if (!it->is_string()) parse_error("'kind' must be a string");
    kind = parse_kind(it->get<std::string>());
  }
  const Json& bottom = field(doc, "bottom");
  if (!bottom.is_string()) parse_error("'bottom' must be a name");
  std::vector<std::string> names = string_list(field(doc, "elements"), "elements");
  const auto order = pair_list(doc, "order");
  const auto contact_pairs = pair_list(doc, "contact");
  if (mode != ContactLoad::Close)
    return [&] {
      ContactStructure s = ContactStructure::from_pairs(names, bottom.get<std::string>(), order, contact_pairs, kind);
      if (mode == ContactLoad::Strict) require_valid(s);
      return s;
    }();
  ContactStructure bare = ContactStructure::from_pairs(names, bottom.get<std::string>(), order, {}, kind);
  std::vector<IndexPair> seed;
  for (const auto& [a, b] : contact_pairs) seed.emplace_back(bare.index(a), bare.index(b));
  return close_contact(bare, seed);
}

ContactStructure load_structure(const std::filesystem::path& path, ContactLoad mode) {
  return structure_from_json(read_json_file(path), mode);
}

Json to_json(const EventStructure& e) {
  Json out;
  out["elements"] = e.names();
  Json order = Json::array();
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = 0; b < e.size(); ++b) {
      if (a == b || !e.leq(a, b)) continue;
      bool cover = true;
      for (std::size_t m = 0; m < e.size() && cover; ++m)
        cover = m == a || m == b || !(e.leq(a, m) && e.leq(m, b));
      if (cover) order.push_back({e.name(a), e.name(b)});
    }
  out["order"] = std::move(order);
  out["conflict"] = name_pairs(e.names(), e.conflict_table(), true);
  return out;
}

EventStructure events_from_json(const Json& doc) {
  if (!doc.is_object()) parse_error("event document must be an object");
  if (doc.contains("bottom")) parse_error("event structures have no bottom");
  if (doc.contains("contact")) parse_error("event structures use 'conflict', not 'contact'");
  field(doc, "conflict");
  return EventStructure::from_pairs(string_list(field(doc, "elements"), "elements"), pair_list(doc, "order"),
                                    pair_list(doc, "conflict"));
}

EventStructure load_events(const std::filesystem::path& path) { return events_from_json(read_json_file(path)); }

Json to_json(const AxiomReport& report, const ContactStructure& s) {
  Json out;
  out["all_pass"] = report.all_pass();
  Json items = Json::array();
  for (const auto& r : report.results) {
    Json item;
    item["axiom"] = axiom_name(r.axiom);
    item["holds"] = r.holds;
    if (!r.holds) {
      item["witness"] = index_names(r.witness, s);
      item["detail"] = r.detail;
    }
    items.push_back(std::move(item));
  }
  out["axioms"] = std::move(items);
  return out;
}

Json to_json(const MapReport& report) {
  Json out;
  out["embedding"] = report.is_embedding();
  out["strong_embedding"] = report.is_strong_embedding();
  out["injective"] = report.injective;
  out["bottom_preserving"] = report.bottom_preserving;
  out["order_preserving"] = report.order_preserving;
  out["order_reflecting"] = report.order_reflecting;
  out["contact_preserving"] = report.contact_preserving;
  out["contact_reflecting"] = report.contact_reflecting;
  if (report.join_preserving) out["join_preserving"] = *report.join_preserving;
  out["failures"] = report.failures;
  return out;
}

Json to_json(const StructureMap& map) {
  Json pairs = Json::object();
  for (std::size_t x = 0; x < map.source().size(); ++x) pairs[map.source().name(x)] = map.target().name(map(x));
  Json out;
  out["map"] = std::move(pairs);
  out["report"] = to_json(map.report());
  return out;
}

Json to_json(const SetFamilyStructure& family) {
  Json out = to_json(family.structure());
  out["universe"] = family.universe();
  Json prov = Json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Provenance& p = family.provenance()[i];
    Json item;
    item["set"] = family.structure().name(i);
    item["origin"] = origin_name(p.origin);
    Json args = Json::array();
    for (std::size_t a : p.args) {
      // Element-level origins name source elements; the others name sets or universe points.
      if (p.origin == Origin::Union)
        args.push_back(family.structure().name(a));
      else if (p.origin == Origin::Subset || p.origin == Origin::Cut)
        args.push_back(a < family.universe().size() ? family.universe()[a] : std::to_string(a));
      else
        args.push_back(a);
    }
    item["args"] = std::move(args);
    prov.push_back(std::move(item));
  }
  out["provenance"] = std::move(prov);
  return out;
}

Json to_json(const SuperamalgamationReport& report, const std::vector<std::string>& names) {
  Json out;
  out["ok"] = report.ok();
  out["obligations"] = report.obligations;
  Json w = Json::array();
  for (const auto& x : report.witnesses) w.push_back({names[x.lower], names[x.middle], names[x.upper]});
  out["witnesses"] = std::move(w);
  Json c = Json::array();
  for (auto [lo, hi] : report.counterexamples) c.push_back({names[lo], names[hi]});
  out["counterexamples"] = std::move(c);
  return out;
}

Json to_json(const LimitStage& stage) {
  Json out;
  out["kind"] = kind_name(stage.kind);
  out["cap"] = stage.cap;
  out["stage"] = stage.stage;
  out["fixpoint"] = stage.fixpoint;
  out["budget_exceeded"] = stage.budget_exceeded;
  out["structure"] = to_json(stage.structure);
  if (stage.previous) out["previous"] = to_json(*stage.previous);
  Json log = Json::array();
  for (const auto& e : stage.log) {
    Json item;
    item["sweep"] = e.sweep;
    item["substructure"] = e.substructure;
    item["type"] = e.type;
    item["new_element"] = e.new_element;
    item["size_after"] = e.size_after;
    log.push_back(std::move(item));
  }
  out["log"] = std::move(log);
  return out;
}

Json to_json(const ExtensionCheck& check) {
  Json out;
  out["obligations"] = check.obligations;
  out["realized"] = check.realized;
  out["fraction"] = check.fraction();
  Json misses = Json::array();
  for (const auto& m : check.misses) misses.push_back({{"substructure", m.substructure}, {"type", m.type}});
  out["misses"] = std::move(misses);
  return out;
}

DotContact parse_dot_contact(const std::string& text) {
  if (text == "full") return DotContact::Full;
  if (text == "extra") return DotContact::Extra;
  if (text == "none") return DotContact::None;
  parse_error("unknown contact mode '" + text + "'");
}

std::string to_dot(const ContactStructure& s, DotContact contact) {
  std::ostringstream out;
  out << "digraph contact {\n  rankdir=BT;\n";
  for (const auto& name : s.names()) out << "  " << quoted(name) << ";\n";
  for (auto [a, b] : s.covers()) out << "  " << quoted(s.name(a)) << " -> " << quoted(s.name(b)) << ";\n";
  if (contact != DotContact::None) {
    const BitMatrix overlap = overlap_relation(s);
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (!s.contact(a, b)) continue;
        if (contact == DotContact::Extra && overlap.test(a, b)) continue;
        out << "  " << quoted(s.name(a)) << " -> " << quoted(s.name(b)) << " [style=dashed, dir=none];\n";
      }
  }
  out << "}\n";
  return out.str();
}

}  // namespace contact
