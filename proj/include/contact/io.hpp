#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "contact/amalgam.hpp"
#include "contact/axioms.hpp"
#include "contact/events.hpp"
#include "contact/fraisse.hpp"
#include "contact/represent.hpp"
#include "contact/structure.hpp"
#include "contact/structure_map.hpp"

namespace contact {

using Json = nlohmann::ordered_json;

/// What to do with the contact section of a loaded file.
enum class ContactLoad {
  Strict,  // reject unless every axiom holds
  Close,   // take the least valid relation containing the listed pairs
  Raw,     // keep the pairs as given (symmetrized); the caller checks axioms
};

Kind parse_kind(const std::string& text);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& doc);

bool is_event_document(const Json& doc);

/// Order is written as cover pairs, contact as unordered pairs.
Json to_json(const ContactStructure& s);
ContactStructure structure_from_json(const Json& doc, ContactLoad mode = ContactLoad::Strict);
ContactStructure load_structure(const std::filesystem::path& path, ContactLoad mode = ContactLoad::Strict);

Json to_json(const EventStructure& e);
/// Unvalidated; run check_event_structure on the result.
EventStructure events_from_json(const Json& doc);
EventStructure load_events(const std::filesystem::path& path);

Json to_json(const AxiomReport& report, const ContactStructure& s);
Json to_json(const MapReport& report);
/// Source and target by name, plus the verification report.
Json to_json(const StructureMap& map);
Json to_json(const SetFamilyStructure& family);
Json to_json(const SuperamalgamationReport& report, const std::vector<std::string>& names);
Json to_json(const LimitStage& stage);
Json to_json(const ExtensionCheck& check);

enum class DotContact { Full, Extra, None };

DotContact parse_dot_contact(const std::string& text);

/// Hasse diagram bottom-up with contact as dashed undirected edges.
std::string to_dot(const ContactStructure& s, DotContact contact = DotContact::Extra);

}  // namespace contact
