#include <doctest.h>

#include <chrono>
#include <random>

#include "contact/axioms.hpp"
#include "contact/enumerate.hpp"
#include "contact/structure_map.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace contact;
using namespace fixture;

namespace {

std::vector<std::size_t> random_relabel(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("posets with bottom: known counts") {
  const std::size_t expected[] = {1, 1, 2, 5, 16, 63, 318, 2045};
  for (std::size_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(enumerate_posets_with_bottom(n).size() == expected[n - 1]);
  }
}

TEST_CASE("posets with bottom agree with brute force up to isomorphism") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto brute = oracle::posets_with_bottom(n);
    const auto& ours = enumerate_posets_with_bottom(n);
    REQUIRE(brute.size() == ours.size());
    const oracle::Rel none = oracle::empty(n);
    for (const BitMatrix& leq : ours) {
      const oracle::Rel r = oracle::leq_of(carrier(leq));
      CHECK(oracle::is_partial_order(r));
      CHECK(oracle::is_least(r, 0));
      std::size_t matches = 0;
      for (const auto& b : brute) matches += oracle::isomorphic(b, none, r, none);
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("contact relations per carrier") {
  CHECK(contact_relations(carrier(chain2().order())).size() == 1);
  CHECK(enumerate_contact_structures(carrier(chain2().order())).size() == 1);
  CHECK(enumerate_contact_structures(carrier(v_overlap().order())).size() == 2);
  CHECK(enumerate_contact_structures(carrier(chain3().order())).size() == 1);
  const auto v = enumerate_contact_structures(carrier(v_overlap().order()));
  bool has_ab = false;
  for (const auto& s : v) has_ab = has_ab || s.contact(1, 2);
  CHECK(has_ab);
}

TEST_CASE("contact relations by up-closure equal contact relations by axioms") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const BitMatrix& leq : enumerate_posets_with_bottom(n)) {
      const ContactStructure base = carrier(leq);
      auto a = contact_relations(base), b = contact_relations_by_axioms(base);
      auto tables = [](const std::vector<ContactStructure>& v) {
        std::vector<std::vector<Bitset>> out;
        for (const auto& s : v) {
          std::vector<Bitset> rows;
          for (std::size_t i = 0; i < s.size(); ++i) rows.push_back(s.contact_table().row(i));
          out.push_back(rows);
        }
        std::sort(out.begin(), out.end());
        return out;
      };
      CHECK(tables(a) == tables(b));
      CHECK(a.size() == oracle::valid_contacts(oracle::leq_of(base)).size());
    }
}

TEST_CASE("contact structure counts agree with brute-force orbit counting") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const BitMatrix& leq : enumerate_posets_with_bottom(n)) {
      const ContactStructure base = carrier(leq);
      CHECK(enumerate_contact_structures(base).size() == oracle::contact_classes(oracle::leq_of(base)));
    }
}

TEST_CASE("catalog items are valid, pairwise non-isomorphic, and complete") {
  for (Kind kind : {Kind::Poset, Kind::Semilattice}) {
    const AgeCatalog cat = build_catalog(4, kind);
    for (const auto& s : cat.items()) {
      CHECK(check_contact_axioms(s).all_pass());
      CHECK(s.kind() == kind);
    }
    for (std::size_t i = 0; i < cat.items().size(); ++i)
      for (std::size_t j = i + 1; j < cat.items().size(); ++j) {
        const auto &a = cat.items()[i], &b = cat.items()[j];
        CHECK(!oracle::isomorphic(oracle::leq_of(a), oracle::contact_of(a), oracle::leq_of(b), oracle::contact_of(b)));
      }
    std::size_t expected = 0;
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& p : oracle::posets_with_bottom(n))
        if (kind == Kind::Poset || oracle::all_joins(p)) expected += oracle::contact_classes(p);
    CHECK(cat.items().size() == expected);
  }
}

TEST_CASE("catalog counts do not depend on construction order") {
  const AgeCatalog a = build_catalog(4, Kind::Poset);
  const AgeCatalog b = build_catalog(4, Kind::Poset);
  CHECK(a.items() == b.items());
  CHECK(a.count_of_size(3) == 3);
  CHECK(a.count_of_size(4) == 11);
}

TEST_CASE("canonical keys") {
  std::mt19937_64 rng(99);
  SUBCASE("relabelings of M3 share a key") {
    const auto m3 = m3_overlap();
    CHECK(canonical_form(permute(m3, {0, 3, 1, 2, 4})).key == canonical_form(m3).key);
  }
  SUBCASE("different contact, different key") {
    CHECK(canonical_form(v_overlap()).key != canonical_form(v_ab()).key);
  }
  SUBCASE("key is stable under 100 random relabelings of every item") {
    for (Kind kind : {Kind::Poset, Kind::Semilattice}) {
      const AgeCatalog cat = build_catalog(4, kind);
      for (const auto& s : cat.items()) {
        const std::string key = canonical_form(s).key;
        for (int round = 0; round < 100; ++round) {
          auto p = random_relabel(s.size(), rng);
          CHECK(canonical_form(permute(s, p)).key == key);
        }
      }
    }
  }
  SUBCASE("relabel maps the canonical structure back to the input") {
    const AgeCatalog cat = build_catalog(5, Kind::Poset);
    for (const auto& s : cat.items()) {
      const CanonicalForm f = canonical_form(s);
      const ContactStructure c = permute(s, f.relabel);
      CHECK(c.bottom() == 0);
      std::vector<std::size_t> back(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) back[f.relabel[i]] = i;
      CHECK(oracle::strong_embedding(s, c, back));
    }
  }
  SUBCASE("equal keys exactly when isomorphic, on size 5") {
    const AgeCatalog cat = build_catalog(5, Kind::Poset);
    const auto items = cat.items_of_size(5);
    for (int round = 0; round < 300; ++round) {
      const auto* a = items[rng() % items.size()];
      const auto* b = items[rng() % items.size()];
      const auto pb = permute(*b, random_relabel(5, rng));
      const bool iso =
          oracle::isomorphic(oracle::leq_of(*a), oracle::contact_of(*a), oracle::leq_of(pb), oracle::contact_of(pb));
      CHECK((canonical_form(*a).key == canonical_form(pb).key) == iso);
      CHECK(isomorphic(*a, pb) == iso);
    }
  }
}

TEST_CASE("catalog lookup by isomorphism") {
  const AgeCatalog cat = build_catalog(5, Kind::Semilattice);
  const auto sub = induced_substructure(m3_overlap(), std::vector<std::string>{"0", "a", "1"});
  const auto hit = cat.find(sub);
  REQUIRE(hit);
  CHECK(isomorphic(cat.items()[*hit], chain3(Kind::Semilattice)));
  CHECK(cat.find(m3_overlap()).has_value());
}

TEST_CASE("lattice predicates") {
  CHECK(is_lattice(m3_overlap()));
  CHECK(!is_distributive(m3_overlap()));
  CHECK(!is_distributive_by_sublattices(m3_overlap()));
  CHECK(is_distributive(diamond()));
  CHECK(!is_lattice(v_overlap()));
  CHECK(!is_join_semilattice(v_overlap()));
  const auto n5 = with_overlap({"0", "x", "y", "z", "1"}, {{"x", "y"}, {"y", "1"}, {"z", "1"}});
  CHECK(is_lattice(n5));
  CHECK(!is_distributive(n5));
  CHECK(!is_distributive_by_sublattices(n5));
}

TEST_CASE("both distributivity tests agree with the triple identity on all lattices up to 7 elements") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const BitMatrix& leq : enumerate_posets_with_bottom(n)) {
      const ContactStructure s = carrier(leq);
      const oracle::Rel r = oracle::leq_of(s);
      CHECK(is_lattice(s) == oracle::lattice(r));
      CHECK(is_join_semilattice(s) == oracle::all_joins(r));
      if (!is_lattice(s)) continue;
      const bool d = oracle::distributive(r);
      CHECK(is_distributive(s) == d);
      CHECK(is_distributive_by_sublattices(s) == d);
    }
}

TEST_CASE("distributive lattice counts") {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 5, 8, 15};
  const auto all = distributive_lattices(8);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t count = 0;
    for (const auto& s : all) count += s.size() == n;
    CAPTURE(n);
    CHECK(count == expected[n - 1]);
  }
}

TEST_CASE("catalogs at n <= 4 build quickly") {
  const auto start = std::chrono::steady_clock::now();
  build_catalog(4, Kind::Poset);
  build_catalog(4, Kind::Semilattice);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(seconds < 10.0);
}
