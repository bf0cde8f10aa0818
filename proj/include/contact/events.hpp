#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "contact/amalgam.hpp"
#include "contact/structure.hpp"

namespace contact {

/// Name of the least element adjoined when an event structure is routed
/// through contact posets. Never a legal event name.
inline constexpr std::string_view kReservedBottom = "⊥";

/// Events with a causal partial order and a binary conflict relation.
/// Construction validates the order only; see check_event_structure.
class EventStructure {
 public:
  EventStructure(std::vector<std::string> names, BitMatrix leq, BitMatrix conflict);

  /// Order pairs are closed reflexively and transitively (Errc::Cycle);
  /// conflict pairs are symmetrized.
  static EventStructure from_pairs(std::vector<std::string> names, const std::vector<NamePair>& order_pairs,
                                   const std::vector<NamePair>& conflict_pairs);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> find(const std::string& name) const;
  bool leq(std::size_t a, std::size_t b) const { return leq_.test(a, b); }
  bool conflict(std::size_t a, std::size_t b) const { return conflict_.test(a, b); }
  const BitMatrix& order() const { return leq_; }
  const BitMatrix& conflict_table() const { return conflict_; }

  friend bool operator==(const EventStructure&, const EventStructure&) = default;

 private:
  std::vector<std::string> names_;
  BitMatrix leq_;
  BitMatrix conflict_;
};

struct EventReport {
  bool irreflexive = true;
  bool symmetric = true;
  bool inheritance = true;  // e # e' and e' ≤ e'' imply e # e''
  std::vector<std::size_t> witness;
  std::string detail;
  bool ok() const { return irreflexive && symmetric && inheritance; }
};

EventReport check_event_structure(const EventStructure& e);

/// Dual order, δ = complement of #. Throws Errc::AxiomViolation on invalid input.
BottomlessStructure event_to_contact(const EventStructure& e);
/// The same with kReservedBottom adjoined.
ContactStructure event_to_contact_with_bottom(const EventStructure& e);

/// Inverse of event_to_contact. Throws Errc::AxiomViolation unless the input
/// satisfies (Sym), (Ext) and reflexivity.
EventStructure contact_to_event(const BottomlessStructure& s);

/// Restriction to the named events.
EventStructure induced_events(const EventStructure& e, const std::vector<std::string>& names);

struct EventAmalgamResult {
  AmalgamResult contact;  // amalgam of the translated structures
  EventStructure d;
  EventReport validity;
  bool restriction_a = false;  // d restricted to A's events equals A
  bool restriction_b = false;
  bool strong_size = false;

  bool ok() const { return contact.ok() && validity.ok() && restriction_a && restriction_b && strong_size; }
};

/// Translates A, B, C to contact posets with a shared adjoined bottom,
/// amalgamates, removes the bottom and translates back.
/// Throws Errc::PreconditionViolation if C is not a common induced substructure.
EventAmalgamResult thm8_amalgamate_events(const EventStructure& a, const EventStructure& b, const EventStructure& c);

}  // namespace contact
