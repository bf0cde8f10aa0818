#include "contact/events.hpp"

#include <unordered_map>

#include "contact/axioms.hpp"

namespace contact {

EventStructure::EventStructure(std::vector<std::string> names, BitMatrix leq, BitMatrix conflict)
    : names_(std::move(names)), leq_(std::move(leq)), conflict_(std::move(conflict)) {
  const std::size_t n = names_.size();
  if (leq_.size() != n || conflict_.size() != n) throw Error(Errc::InvalidOrder, "table size mismatch");
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (names_[i] == kReservedBottom) throw Error(Errc::PreconditionViolation, "event name is reserved");
    if (!seen.emplace(names_[i], i).second) throw Error(Errc::DuplicateElement, "'" + names_[i] + "'");
  }
  if (auto defect = order_defect(leq_)) throw Error(Errc::InvalidOrder, *defect);
}

EventStructure EventStructure::from_pairs(std::vector<std::string> names, const std::vector<NamePair>& order_pairs,
                                          const std::vector<NamePair>& conflict_pairs) {
  std::unordered_map<std::string, std::size_t> ix;
  for (std::size_t i = 0; i < names.size(); ++i) ix.emplace(names[i], i);
  auto lookup = [&](const std::string& name) {
    auto it = ix.find(name);
    if (it == ix.end()) throw Error(Errc::UnknownElement, "'" + name + "'");
    return it->second;
  };
  const std::size_t n = names.size();
  BitMatrix leq(n), conflict(n);
  for (const auto& [a, b] : order_pairs) leq.set(lookup(a), lookup(b));
  leq.close_reflexive_transitive();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (leq.test(a, b) && leq.test(b, a))
        throw Error(Errc::Cycle, "'" + names[a] + "' and '" + names[b] + "' lie on a cycle");
  for (const auto& [a, b] : conflict_pairs) {
    conflict.set(lookup(a), lookup(b));
    conflict.set(lookup(b), lookup(a));
  }
  return EventStructure(std::move(names), std::move(leq), std::move(conflict));
}

std::optional<std::size_t> EventStructure::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

EventReport check_event_structure(const EventStructure& e) {
  EventReport r;
  const std::size_t n = e.size();
  auto q = [&](std::size_t i) { return "'" + e.name(i) + "'"; };
  for (std::size_t a = 0; a < n; ++a)
    if (e.conflict(a, a) && r.irreflexive) {
      r.irreflexive = false;
      r.witness = {a};
      r.detail = q(a) + " # " + q(a);
    }
  for (std::size_t a = 0; a < n && r.ok(); ++a)
    for (std::size_t b = 0; b < n && r.ok(); ++b)
      if (e.conflict(a, b) && !e.conflict(b, a)) {
        r.symmetric = false;
        r.witness = {a, b};
        r.detail = q(a) + " # " + q(b) + " but not conversely";
      }
  for (std::size_t a = 0; a < n && r.ok(); ++a)
    e.conflict_table().row(a).for_each([&](std::size_t b) {
      if (!r.ok()) return;
      // b's causal successors must all conflict with a
      const Bitset missing = e.order().row(b) - e.conflict_table().row(a);
      if (missing.any()) {
        const std::size_t c = missing.find_first();
        r.inheritance = false;
        r.witness = {a, b, c};
        r.detail = q(a) + " # " + q(b) + ", " + q(b) + " ≤ " + q(c) + ", but not " + q(a) + " # " + q(c);
      }
    });
  return r;
}

BottomlessStructure event_to_contact(const EventStructure& e) {
  const EventReport report = check_event_structure(e);
  if (!report.ok()) throw Error(Errc::AxiomViolation, report.detail);
  const std::size_t n = e.size();
  BitMatrix rel(n);
  for (std::size_t a = 0; a < n; ++a) rel.row(a) = e.conflict_table().row(a).complement();
  BottomlessStructure out(e.names(), e.order().transpose(), std::move(rel));
  if (!check_bottomless_axioms(out).all_pass())
    throw Error(Errc::Internal, "dual of a valid event structure fails the bottomless contact axioms");
  return out;
}

ContactStructure event_to_contact_with_bottom(const EventStructure& e) {
  return adjoin_bottom(event_to_contact(e), std::string(kReservedBottom));
}

EventStructure contact_to_event(const BottomlessStructure& s) {
  const AxiomReport report = check_bottomless_axioms(s);
  for (const auto& r : report.results)
    if (!r.holds) throw Error(Errc::AxiomViolation, "(" + std::string(axiom_name(r.axiom)) + ") " + r.detail);
  const std::size_t n = s.size();
  BitMatrix conflict(n);
  for (std::size_t a = 0; a < n; ++a) conflict.row(a) = s.contact_table().row(a).complement();
  return EventStructure(s.names(), s.order().transpose(), std::move(conflict));
}

EventStructure induced_events(const EventStructure& e, const std::vector<std::string>& names) {
  std::vector<std::size_t> keep;
  for (const auto& name : names) {
    auto i = e.find(name);
    if (!i) throw Error(Errc::UnknownElement, "'" + name + "'");
    keep.push_back(*i);
  }
  const std::size_t m = keep.size();
  BitMatrix leq(m), conflict(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      leq.assign(i, j, e.leq(keep[i], keep[j]));
      conflict.assign(i, j, e.conflict(keep[i], keep[j]));
    }
  return EventStructure(names, std::move(leq), std::move(conflict));
}

EventAmalgamResult thm8_amalgamate_events(const EventStructure& a, const EventStructure& b, const EventStructure& c) {
  for (const auto* e : {&a, &b, &c})
    if (!check_event_structure(*e).ok()) throw Error(Errc::PreconditionViolation, "an input is not an event structure");
  std::optional<AmalgamInstance> inst;
  inst.emplace(event_to_contact_with_bottom(a), event_to_contact_with_bottom(b), event_to_contact_with_bottom(c));
  AmalgamResult contact = thm5_contact_amalgam(*inst);
  EventStructure d = contact_to_event(drop_bottom(contact.d));
  EventReport validity = check_event_structure(d);
  const bool restriction_a = induced_events(d, a.names()) == a;
  const bool restriction_b = induced_events(d, b.names()) == b;
  const bool strong_size = d.size() + c.size() == a.size() + b.size();
  return {std::move(contact), std::move(d), std::move(validity), restriction_a, restriction_b, strong_size};
}

}  // namespace contact
