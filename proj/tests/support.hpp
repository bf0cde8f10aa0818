#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "contact/axioms.hpp"
#include "contact/structure.hpp"

namespace fixture {

using contact::ContactStructure;
using contact::Kind;

inline ContactStructure make(std::vector<std::string> names, std::vector<contact::NamePair> order,
                             std::vector<contact::NamePair> contact_pairs, Kind kind = Kind::Poset) {
  return ContactStructure::from_pairs(std::move(names), "0", order, contact_pairs, kind);
}

// Overlap contact on the given order.
inline ContactStructure with_overlap(std::vector<std::string> names, std::vector<contact::NamePair> order,
                                     Kind kind = Kind::Poset) {
  ContactStructure s = make(std::move(names), std::move(order), {}, kind);
  return s.with_contact(contact::overlap_relation(s));
}

inline ContactStructure chain2(Kind kind = Kind::Poset) { return with_overlap({"0", "1"}, {}, kind); }
inline ContactStructure chain3(Kind kind = Kind::Poset) {
  return with_overlap({"0", "c", "1"}, {{"0", "c"}, {"c", "1"}}, kind);
}
inline ContactStructure v_overlap() { return with_overlap({"0", "a", "b"}, {}); }
inline ContactStructure v_ab() {
  return make({"0", "a", "b"}, {}, {{"a", "a"}, {"b", "b"}, {"a", "b"}});
}
inline ContactStructure diamond(const std::string& x = "a", Kind kind = Kind::Semilattice) {
  return with_overlap({"0", x, "c", "1"}, {{x, "1"}, {"c", "1"}}, kind);
}
inline ContactStructure m3_overlap() {
  return with_overlap({"0", "a", "b", "c", "1"}, {{"a", "1"}, {"b", "1"}, {"c", "1"}}, Kind::Semilattice);
}

inline std::filesystem::path data(const std::string& file) {
  return std::filesystem::path(CONTACT_TEST_DATA) / file;
}

}  // namespace fixture
