// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "../event_instances.hpp"
#include "../oracles.hpp"
#include "contact/amalgam.hpp"
#include "contact/axioms.hpp"
#include "contact/enumerate.hpp"
#include "contact/events.hpp"
#include "contact/fraisse.hpp"
#include "contact/gallery.hpp"
#include "contact/represent.hpp"

using namespace contact;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failed = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failed;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

oracle::Rel witness_overlap(const SetFamilyStructure& f) {
  const std::size_t m = f.size();
  oracle::Rel d = oracle::empty(m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (const Bitset& q : f.sets())
        if (q.any() && q.is_subset_of(f.set(x)) && q.is_subset_of(f.set(y))) d[x][y] = true;
  return d;
}

bool restricts_to(const ContactStructure& d, const ContactStructure& part) {
  for (std::size_t x = 0; x < part.size(); ++x)
    for (std::size_t y = 0; y < part.size(); ++y) {
      const auto dx = d.find(part.name(x)), dy = d.find(part.name(y));
      if (!dx || !dy) return false;
      if (d.leq(*dx, *dy) != part.leq(x, y) || d.contact(*dx, *dy) != part.contact(x, y)) return false;
    }
  return true;
}

// Every cross comparability between A and B in D passes through C.
bool superamalgamated(const AmalgamInstance& inst, const ContactStructure& d) {
  const auto &a = inst.a(), &b = inst.b(), &c = inst.c();
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) {
      const std::size_t dx = d.index(a.name(x)), dy = d.index(b.name(y));
      for (int dir = 0; dir < 2; ++dir) {
        if (!(dir == 0 ? d.leq(dx, dy) : d.leq(dy, dx))) continue;
        bool witness = false;
        for (const auto& cn : c.names()) {
          const std::size_t ca = a.index(cn), cb = b.index(cn);
          witness = witness || (dir == 0 ? a.leq(x, ca) && b.leq(cb, y) : b.leq(y, cb) && a.leq(ca, x));
        }
        if (!witness) return false;
      }
    }
  return true;
}

bool amalgam_checks(const AmalgamInstance& inst, bool semilattice) {
  const AmalgamResult r = thm5_contact_amalgam(inst);
  const ContactStructure& d = r.d;
  bool ok = r.ok() && oracle::is_partial_order(oracle::leq_of(d)) &&
            oracle::valid_contact(oracle::leq_of(d), oracle::contact_of(d), d.bottom()) &&
            restricts_to(d, inst.a()) && restricts_to(d, inst.b()) &&
            d.size() == inst.a().size() + inst.b().size() - inst.c().size() && superamalgamated(inst, d);
  if (semilattice && ok) {
    const SemilatticeAmalgamResult s = thm5_semilattice_amalgam(inst);
    ok = s.ok() && oracle::all_joins(oracle::leq_of(s.e)) &&
         oracle::strong_embedding(inst.a(), s.e, s.from_a.map()) &&
         oracle::strong_embedding(inst.b(), s.e, s.from_b.map());
  }
  return ok;
}

void criterion1() {
  const std::size_t expected[] = {1, 1, 2, 5, 16};
  bool counts = true;
  for (std::size_t n = 1; n <= 5; ++n) counts = counts && enumerate_posets_with_bottom(n).size() == expected[n - 1];
  auto carrier_of = [](std::vector<NamePair> order, std::vector<std::string> names) {
    return ContactStructure::from_pairs(std::move(names), "0", order, {});
  };
  const std::size_t c2 = enumerate_contact_structures(carrier_of({}, {"0", "1"})).size();
  const std::size_t v = enumerate_contact_structures(carrier_of({}, {"0", "a", "b"})).size();
  const std::size_t c3 = enumerate_contact_structures(carrier_of({{"c", "1"}}, {"0", "c", "1"})).size();
  const auto t = Clock::now();
  const AgeCatalog p = build_catalog(4, Kind::Poset);
  const AgeCatalog s = build_catalog(4, Kind::Semilattice);
  const double secs = seconds_since(t);
  report(1, counts && c2 == 1 && v == 2 && c3 == 1 && secs < 10.0,
         "poset counts 1,1,2,5,16 " + std::string(counts ? "reproduced" : "WRONG") + "; contact counts 2-chain " +
             std::to_string(c2) + ", V " + std::to_string(v) + ", 3-chain " + std::to_string(c3) + "; catalogs (" +
             std::to_string(p.items().size()) + " posets, " + std::to_string(s.items().size()) +
             " semilattices) in " + num(secs) + " s (limit 10 s)");
}

void criterion2() {
  std::size_t checked = 0, failures = 0;
  for (Kind kind : {Kind::Poset, Kind::Semilattice}) {
    const AgeCatalog cat = build_catalog(4, kind);
    for (const auto& s : cat.items()) {
      const Representation rep = kind == Kind::Poset ? prop2_poset(s) : prop2_semilattice(s);
      const ContactStructure& t = rep.family.structure();
      const bool ok = rep.map.report().is_strong_embedding() &&
                      oracle::strong_embedding(s, t, rep.map.map()) && oracle::contact_of(t) == witness_overlap(rep.family);
      ++checked;
      if (!ok) ++failures;
    }
  }
  report(2, failures == 0,
         std::to_string(checked) + " catalog structures embedded, contact recomputed from sets; " +
             std::to_string(failures) + " failures");
}

void criterion3() {
  const AgeCatalog cat = build_catalog(4, Kind::Poset);
  std::size_t joins = 0, failures = 0;
  for (const auto& s : cat.items()) {
    const Representation rep = cor3_embed(s);
    const oracle::Rel l = oracle::leq_of(s);
    const std::size_t n = s.size();
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      // least upper bound of the subset, by definition
      std::optional<std::size_t> lub;
      for (std::size_t u = 0; u < n && !lub; ++u) {
        bool upper = true, least = true;
        for (std::size_t x = 0; x < n; ++x)
          if (mask >> x & 1) upper = upper && l[x][u];
        if (!upper) continue;
        for (std::size_t v = 0; v < n; ++v) {
          bool vu = true;
          for (std::size_t x = 0; x < n; ++x)
            if (mask >> x & 1) vu = vu && l[x][v];
          if (vu && !l[u][v]) least = false;
        }
        if (least) lub = u;
      }
      if (!lub) continue;
      Bitset uni(rep.family.universe().size());
      for (std::size_t x = 0; x < n; ++x)
        if (mask >> x & 1) uni |= rep.family.set(rep.map(x));
      ++joins;
      if (rep.family.set(rep.map(*lub)) != uni) ++failures;
    }
    if (!rep.map.report().is_strong_embedding()) ++failures;
  }
  report(3, failures == 0,
         std::to_string(joins) + " existing joins over " + std::to_string(cat.items().size()) +
             " catalog posets sent to unions; " + std::to_string(failures) + " failures");
}

void criterion4() {
  const AgeCatalog cat = build_catalog(4, Kind::Poset);
  std::size_t failures = 0;
  for (const auto& s : cat.items()) {
    const BooleanRepresentation rep = thm4a_boolean(s);
    const SetFamilyStructure& r = rep.powerset;
    const std::size_t m = r.universe().size();
    bool ok = rep.total.report().is_strong_embedding() && oracle::strong_embedding(s, r.structure(), rep.total.map()) &&
              check_powerset(r).ok() && r.size() == (std::size_t{1} << m);
    for (std::size_t x = 0; x < r.size() && ok; ++x)
      for (std::size_t y = 0; y < r.size() && ok; ++y) {
        ok = r.find(r.set(x) | r.set(y)) && r.find(r.set(x) & r.set(y)) && r.find(r.set(x) - r.set(y)) &&
             r.structure().contact(x, y) == r.set(x).intersects(r.set(y));
      }
    // atoms: minimal nonempty members are singletons
    for (std::size_t x = 0; x < r.size() && ok; ++x) {
      bool atom = r.set(x).any();
      for (std::size_t y = 0; y < r.size(); ++y)
        if (r.set(y).any() && r.set(y) != r.set(x) && r.set(y).is_subset_of(r.set(x))) atom = false;
      if (atom) ok = r.set(x).count() == 1;
    }
    if (!ok) ++failures;
  }
  report(4, failures == 0,
         std::to_string(cat.items().size()) + " catalog posets embedded into literal powersets with overlap; " +
             std::to_string(failures) + " failures");
}

void criterion5() {
  const AgeCatalog cat = build_catalog(4, Kind::Semilattice);
  std::size_t failures = 0;
  for (const auto& s : cat.items()) {
    const LatticeRepresentation rep = thm4b_lattice(s);
    const ContactStructure& t = rep.completion.family.structure();
    const oracle::Rel l = oracle::leq_of(t);
    const bool ok = oracle::lattice(l) && oracle::contact_of(t) == oracle::overlap(l, t.bottom()) &&
                    rep.total.report().is_strong_embedding() &&
                    rep.total.report().join_preserving == std::optional<bool>(true) &&
                    oracle::strong_embedding(s, t, rep.total.map());
    if (!ok) ++failures;
  }
  report(5, failures == 0,
         std::to_string(cat.items().size()) + " catalog semilattices embedded into bounded lattices with overlap; " +
             std::to_string(failures) + " failures");
}

void criterion6() {
  const auto t = Clock::now();
  std::size_t exhaustive = 0, random = 0, failures = 0;
  for (Kind kind : {Kind::Poset, Kind::Semilattice}) {
    const AgeCatalog cat = build_catalog(4, kind);
    for (const auto& a : cat.items())
      for (const Bitset& sub : substructure_subsets(a)) {
        const ContactStructure c = induced_substructure(a, sub);
        std::vector<std::size_t> into_a;
        for (const auto& name : c.names()) into_a.push_back(a.index(name));
        for (const auto& b : cat.items())
          for (const auto& into_b : find_embeddings(c, b)) {
            ++exhaustive;
            if (!amalgam_checks(glue(a, b, c, into_a, into_b), kind == Kind::Semilattice)) ++failures;
          }
      }
    const AgeCatalog big = build_catalog(6, kind);
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 1000; ++i) {
      ++random;
      if (!amalgam_checks(random_instance(big, 6, rng), kind == Kind::Semilattice)) ++failures;
    }
  }
  const double secs = seconds_since(t);
  report(6, failures == 0 && random >= 1000 && secs < 60.0,
         std::to_string(exhaustive) + " exhaustive and " + std::to_string(random) +
             " seeded random instances (posets and semilattices); " + std::to_string(failures) + " failures; " +
             num(secs) + " s (limit 60 s)");
}

void criterion7() {
  bool ok = true;
  std::string detail;
  for (Kind kind : {Kind::Poset, Kind::Semilattice}) {
    const LimitStage st = build_limit_stage(kind, 2, 2, 64);
    const ExtensionCheck pred = check_extension_property(st, 2, ExtensionScope::Predecessor);
    const ExtensionCheck abs = check_extension_property(st, 2, ExtensionScope::Absolute);
    ok = ok && !st.budget_exceeded && pred.fraction() == 1.0;
    detail += std::string(kind_name(kind)) + " stage " + std::to_string(st.stage) + " (" +
              std::to_string(st.structure.size()) + " elements): fraction " + num(pred.fraction()) + " over " +
              std::to_string(pred.obligations) + " extensions of the previous stage, " + num(abs.fraction()) +
              " counting the stage's own substructures; ";
  }
  detail += "budget 64 elements";
  report(7, ok, detail);
}

void criterion8() {
  std::size_t instances = 0, failures = 0;
  instances = events_fixture::for_each_event_instance(
      4, [&](const EventStructure& a, const EventStructure& b, const EventStructure& c) {
        const EventAmalgamResult r = thm8_amalgamate_events(a, b, c);
        oracle::Rel l = oracle::empty(r.d.size()), k = oracle::empty(r.d.size());
        for (std::size_t x = 0; x < r.d.size(); ++x)
          for (std::size_t y = 0; y < r.d.size(); ++y) {
            l[x][y] = r.d.leq(x, y);
            k[x][y] = r.d.conflict(x, y);
          }
        const bool ok = r.ok() && oracle::is_partial_order(l) && events_fixture::valid_events(l, k) &&
                        induced_events(r.d, a.names()) == a && induced_events(r.d, b.names()) == b &&
                        r.d.size() == a.size() + b.size() - c.size();
        if (!ok) ++failures;
      });
  std::size_t round_trips = 0, bad_trips = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const EventStructure& e : events_fixture::all_event_structures(n)) {
      ++round_trips;
      if (!(contact_to_event(event_to_contact(e)) == e)) ++bad_trips;
    }
  report(8, failures == 0 && bad_trips == 0 && instances > 0,
         std::to_string(instances) + " event amalgamation instances, " + std::to_string(failures) + " failures; " +
             std::to_string(round_trips) + " duality round trips, " + std::to_string(bad_trips) + " failures");
}

void criterion9() {
  const auto w1 = verify_add_fails(m3_fixture(M3Variant::Overlap));
  const auto w2 = verify_add_fails(m3_fixture(M3Variant::WithAB));
  const AdditivityReport add = distributive_overlap_additivity(5);
  const ComplementReport comp = complement_uniqueness(6);
  const DistributiveFailureReport fail = distributive_amalgam_failure(8);
  const bool ok = w1 && w2 && add.ok() && comp.ok() && fail.ok();
  report(9, ok,
         std::string("M3 witnesses ") + (w1 && w2 ? "found in both variants" : "MISSING") + "; additivity on " +
             std::to_string(add.lattices_checked) + " distributive lattices up to 5; unique complements in " +
             std::to_string(comp.lattices_checked) + " up to 6; failure search up to 8: " +
             std::to_string(fail.amalgams_found) + " amalgams, " + std::to_string(fail.identified) + "/" +
             std::to_string(fail.candidate_pairs) + " candidate pairs identify a and b, poset amalgam " +
             (fail.poset_amalgam_ok ? "ok" : "FAILED") + ", semilattice amalgam " +
             (fail.semilattice_amalgam_ok ? "ok" : "FAILED"));
}

}  // namespace

int main() {
  const std::function<void()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                            criterion6, criterion7, criterion8, criterion9};
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), false, std::string("threw: ") + e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
