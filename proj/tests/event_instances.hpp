#pragma once
// Event structures and event amalgamation instances for exhaustive tests.

#include <functional>
#include <vector>

#include "contact/amalgam.hpp"
#include "contact/axioms.hpp"
#include "contact/enumerate.hpp"
#include "contact/events.hpp"
#include "contact/structure_map.hpp"
#include "oracles.hpp"

namespace events_fixture {

using contact::EventStructure;

// Conflict validity straight from the definition.
inline bool valid_events(const oracle::Rel& leq, const oracle::Rel& conflict) {
  const std::size_t n = leq.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (conflict[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (conflict[a][b] != conflict[b][a]) return false;
      for (std::size_t c = 0; c < n; ++c)
        if (conflict[a][b] && leq[b][c] && !conflict[a][c]) return false;
    }
  }
  return true;
}

// Every valid conflict relation on one representative of each order with n events.
inline std::vector<EventStructure> all_event_structures(std::size_t n) {
  std::vector<EventStructure> out;
  for (const oracle::Rel& with_bottom : oracle::posets_with_bottom(n + 1)) {
    oracle::Rel leq = oracle::empty(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) leq[a][b] = with_bottom[a + 1][b + 1];
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    for (unsigned long mask = 0; mask < (1UL << slots.size()); ++mask) {
      oracle::Rel conflict = oracle::empty(n);
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) conflict[slots[i].first][slots[i].second] = conflict[slots[i].second][slots[i].first] = true;
      if (!valid_events(leq, conflict)) continue;
      std::vector<std::string> names;
      contact::BitMatrix l(n), c(n);
      for (std::size_t a = 0; a < n; ++a) {
        names.push_back("e" + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) {
          l.assign(a, b, leq[a][b]);
          c.assign(a, b, conflict[a][b]);
        }
      }
      out.emplace_back(names, l, c);
    }
  }
  return out;
}

inline EventStructure to_events(const contact::ContactStructure& s) {
  return contact::contact_to_event(contact::drop_bottom(s));
}

// Calls f(A, B, C) for every instance with |A|, |B| <= max_events built from
// catalog items: C ranges over the substructures of A and every embedding of C into B.
inline std::size_t for_each_event_instance(
    std::size_t max_events,
    const std::function<void(const EventStructure&, const EventStructure&, const EventStructure&)>& f) {
  const contact::AgeCatalog cat = contact::build_catalog(max_events + 1, contact::Kind::Poset);
  std::size_t count = 0;
  for (const auto& a : cat.items())
    for (const contact::Bitset& sub : contact::substructure_subsets(a)) {
      const contact::ContactStructure c = contact::induced_substructure(a, sub);
      std::vector<std::size_t> into_a;
      for (const auto& name : c.names()) into_a.push_back(a.index(name));
      for (const auto& b : cat.items())
        for (const auto& into_b : contact::find_embeddings(c, b)) {
          const contact::AmalgamInstance inst = contact::glue(a, b, c, into_a, into_b);
          f(to_events(inst.a()), to_events(inst.b()), to_events(inst.c()));
          ++count;
        }
    }
  return count;
}

}  // namespace events_fixture
