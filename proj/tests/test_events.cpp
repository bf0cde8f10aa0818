#include <doctest.h>

#include "contact/axioms.hpp"
#include "contact/enumerate.hpp"
#include "contact/error.hpp"
#include "contact/events.hpp"
#include "event_instances.hpp"
#include "oracles.hpp"

using namespace contact;
using events_fixture::all_event_structures;

namespace {

EventStructure ev(std::vector<std::string> names, std::vector<NamePair> order, std::vector<NamePair> conflict) {
  return EventStructure::from_pairs(std::move(names), order, conflict);
}

EventStructure three_events() { return ev({"e1", "e2", "e3"}, {{"e1", "e2"}}, {{"e2", "e3"}}); }

}  // namespace

TEST_CASE("event structure validation") {
  CHECK(check_event_structure(three_events()).ok());

  BitMatrix self(1);
  self.set(0, 0);
  const EventReport r = check_event_structure(EventStructure({"e"}, BitMatrix::identity(1), self));
  CHECK(!r.irreflexive);
  CHECK(!r.ok());

  const EventReport inherit = check_event_structure(ev({"e", "f", "g"}, {{"f", "g"}}, {{"e", "f"}}));
  CHECK(!inherit.inheritance);
  CHECK(inherit.witness == std::vector<std::size_t>{0, 1, 2});

  BitMatrix one_way(2);
  one_way.set(0, 1);
  CHECK(!check_event_structure(EventStructure({"e", "f"}, BitMatrix::identity(2), one_way)).symmetric);

  CHECK_THROWS_AS(ev({"e", std::string(kReservedBottom)}, {}, {}), Error);
  CHECK_THROWS_AS(ev({"e", "f"}, {{"e", "f"}, {"f", "e"}}, {}), Error);
}

TEST_CASE("event structures as bottomless contact structures") {
  SUBCASE("conflict-free chain") {
    const auto s = event_to_contact(ev({"e1", "e2"}, {{"e1", "e2"}}, {}));
    CHECK(s.leq(1, 0));
    CHECK(!s.leq(0, 1));
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) CHECK(s.contact(a, b));
  }
  SUBCASE("three events") {
    const auto s = event_to_contact(three_events());
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) CHECK(s.contact(a, b) == !((a == 1 && b == 2) || (a == 2 && b == 1)));
    CHECK(check_bottomless_axioms(s).all_pass());
  }
  SUBCASE("single event") {
    const auto s = event_to_contact(ev({"e"}, {}, {}));
    CHECK(s.contact(0, 0));
    const auto b = event_to_contact_with_bottom(ev({"e"}, {}, {}));
    CHECK(b.size() == 2);
    CHECK(b.name(b.bottom()) == kReservedBottom);
    CHECK(check_contact_axioms(b).all_pass());
  }
  SUBCASE("invalid events are refused") {
    CHECK_THROWS_AS(event_to_contact(ev({"e", "f", "g"}, {{"f", "g"}}, {{"e", "f"}})), Error);
  }
  SUBCASE("contact side") {
    const BottomlessStructure missing({"e"}, BitMatrix::identity(1), BitMatrix(1));
    CHECK_THROWS_AS(contact_to_event(missing), Error);
    BitMatrix total(2);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) total.set(a, b);
    const auto e = contact_to_event(BottomlessStructure({"x", "y"}, BitMatrix::identity(2), total));
    CHECK(e.conflict_table() == BitMatrix(2));
  }
}

TEST_CASE("duality round trips on every event structure with up to 4 events") {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const EventStructure& e : all_event_structures(n)) {
      CHECK(check_event_structure(e).ok());
      const BottomlessStructure s = event_to_contact(e);
      CHECK(check_bottomless_axioms(s).all_pass());
      CHECK(contact_to_event(s) == e);
      CHECK(drop_bottom(event_to_contact_with_bottom(e)) == s);
      ++checked;
    }
  CHECK(checked > 100);
}

TEST_CASE("inheritance is (Ext) in the dual order") {
  // every symmetric irreflexive conflict on every order with up to 3 events
  for (std::size_t n = 1; n <= 3; ++n)
    for (const oracle::Rel& wb : oracle::posets_with_bottom(n + 1)) {
      BitMatrix leq(n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) leq.assign(a, b, wb[a + 1][b + 1]);
      for (unsigned mask = 0; mask < (1U << (n * n)); ++mask) {
        BitMatrix conflict(n);
        for (std::size_t i = 0; i < n * n; ++i)
          if (mask >> i & 1) conflict.set(i / n, i % n);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
        const EventStructure e(names, leq, conflict);
        const EventReport r = check_event_structure(e);
        BitMatrix delta(n);
        for (std::size_t a = 0; a < n; ++a) delta.row(a) = conflict.row(a).complement();
        const BottomlessStructure s(names, leq.transpose(), delta);
        const AxiomReport ax = check_bottomless_axioms(s);
        CHECK(r.ok() == ax.all_pass());
        if (r.irreflexive && r.symmetric) CHECK(r.inheritance == ax.holds(Axiom::Ext));
      }
    }
}

TEST_CASE("event structures up to isomorphism match contact posets one larger") {
  const AgeCatalog cat = build_catalog(5, Kind::Poset);
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<EventStructure> reps;
    for (const auto& e : all_event_structures(n)) {
      oracle::Rel l = oracle::empty(n), c = oracle::empty(n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          l[a][b] = e.leq(a, b);
          c[a][b] = e.conflict(a, b);
        }
      bool seen = false;
      for (const auto& r : reps) {
        oracle::Rel rl = oracle::empty(n), rc = oracle::empty(n);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            rl[a][b] = r.leq(a, b);
            rc[a][b] = r.conflict(a, b);
          }
        // events have no fixed point, so try all permutations
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
          if (oracle::same_under(l, rl, p) && oracle::same_under(c, rc, p)) seen = true;
        } while (!seen && std::next_permutation(p.begin(), p.end()));
      }
      if (!seen) reps.push_back(e);
    }
    CAPTURE(n);
    CHECK(reps.size() == cat.count_of_size(n + 1));
  }
}

TEST_CASE("event amalgamation examples") {
  SUBCASE("c below a in A, b in conflict with c in B") {
    const auto a = ev({"c", "a"}, {{"c", "a"}}, {});
    const auto b = ev({"c", "b"}, {}, {{"b", "c"}});
    const auto c = ev({"c"}, {}, {});
    const auto r = thm8_amalgamate_events(a, b, c);
    CHECK(r.ok());
    const auto& d = r.d;
    const auto ia = *d.find("a"), ib = *d.find("b"), ic = *d.find("c");
    CHECK(d.conflict(ib, ic));
    CHECK(d.conflict(ib, ia));  // inherited along c ≤ a
    CHECK(d.size() == 3);
  }
  SUBCASE("degenerate") {
    const auto e = three_events();
    const auto r = thm8_amalgamate_events(e, e, e);
    CHECK(r.ok());
    CHECK(r.d == e);
  }
  SUBCASE("conflict-free inputs: least contact puts unrelated new events in conflict") {
    const auto a = ev({"c", "a"}, {{"c", "a"}}, {});
    const auto b = ev({"c", "b"}, {}, {});
    const auto r = thm8_amalgamate_events(a, b, ev({"c"}, {}, {}));
    CHECK(r.ok());
    const auto ia = *r.d.find("a"), ib = *r.d.find("b"), ic = *r.d.find("c");
    CHECK(r.d.conflict(ia, ib));
    CHECK(!r.d.conflict(ia, ic));
    CHECK(!r.d.conflict(ib, ic));
    CHECK(r.d.conflict_table().count() == 2);
  }
  SUBCASE("conflict-free inputs below a shared event stay conflict-free") {
    const auto a = ev({"c", "a"}, {{"a", "c"}}, {});
    const auto b = ev({"c", "b"}, {{"b", "c"}}, {});
    const auto r = thm8_amalgamate_events(a, b, ev({"c"}, {}, {}));
    CHECK(r.ok());
    CHECK(r.d.conflict_table() == BitMatrix(3));
  }
  SUBCASE("invalid input") {
    const auto bad = ev({"e", "f", "g"}, {{"f", "g"}}, {{"e", "f"}});
    CHECK_THROWS_AS(thm8_amalgamate_events(bad, bad, bad), Error);
  }
}

TEST_CASE("exhaustive event amalgamation with up to 3 events per side") {
  std::size_t failures = 0;
  const std::size_t count = events_fixture::for_each_event_instance(
      3, [&](const EventStructure& a, const EventStructure& b, const EventStructure& c) {
        const auto r = thm8_amalgamate_events(a, b, c);
        if (!r.ok()) ++failures;
        CHECK(events_fixture::valid_events(
            [&] {
              oracle::Rel l = oracle::empty(r.d.size());
              for (std::size_t x = 0; x < r.d.size(); ++x)
                for (std::size_t y = 0; y < r.d.size(); ++y) l[x][y] = r.d.leq(x, y);
              return l;
            }(),
            [&] {
              oracle::Rel k = oracle::empty(r.d.size());
              for (std::size_t x = 0; x < r.d.size(); ++x)
                for (std::size_t y = 0; y < r.d.size(); ++y) k[x][y] = r.d.conflict(x, y);
              return k;
            }()));
      });
  CHECK(count > 100);
  CHECK(failures == 0);
}
