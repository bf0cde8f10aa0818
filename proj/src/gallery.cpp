#include "contact/gallery.hpp"

#include "contact/axioms.hpp"
#include "contact/enumerate.hpp"
#include "contact/represent.hpp"

namespace contact {

ContactStructure m3_fixture(M3Variant variant) {
  ContactStructure m3 = ContactStructure::from_pairs(
      {"0", "a", "b", "c", "1"}, "0", {{"a", "1"}, {"b", "1"}, {"c", "1"}}, {}, Kind::Semilattice);
  if (variant == M3Variant::Overlap) return m3.with_contact(overlap_relation(m3));
  return close_contact(m3, {{m3.index("a"), m3.index("b")}});
}

std::optional<std::array<std::size_t, 3>> verify_add_fails(const ContactStructure& s) {
  if (!s.is_semilattice()) throw Error(Errc::NotSemilattice, "(Add) needs joins");
  const AxiomReport report = check_contact_axioms(s, true);
  const AxiomResult* add = report.find(Axiom::Add);
  if (add->holds) return std::nullopt;
  return std::array<std::size_t, 3>{add->witness[0], add->witness[1], add->witness[2]};
}

namespace {

ContactStructure boolean_lattice(std::size_t atoms) {
  const std::size_t n = std::size_t{1} << atoms;
  BitMatrix leq(n);
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) {
    names.push_back("m" + std::to_string(x));
    for (std::size_t y = 0; y < n; ++y) leq.assign(x, y, (x & ~y) == 0);
  }
  ContactStructure s(std::move(names), 0, std::move(leq), BitMatrix(n), Kind::Semilattice);
  return s.with_contact(overlap_relation(s));
}

std::optional<std::size_t> top_of(const ContactStructure& s) { return s.lub(Bitset::full(s.size())); }

}  // namespace

AdditivityReport distributive_overlap_additivity(std::size_t bound) {
  AdditivityReport out;
  out.bound = bound;
  for (const auto& lattice : distributive_lattices(bound)) {
    ++out.lattices_checked;
    if (verify_add_fails(lattice) && !out.counterexample) out.counterexample = lattice;
  }
  for (std::size_t atoms = 1; atoms <= 3; ++atoms) {
    const ContactStructure b = boolean_lattice(atoms);
    ++out.boolean_checked;
    if (verify_add_fails(b) && !out.counterexample) out.counterexample = b;
  }
  out.m3_contrast_fails = verify_add_fails(m3_fixture(M3Variant::Overlap)).has_value();
  return out;
}

std::vector<std::size_t> complements(const ContactStructure& lattice, std::size_t x) {
  const auto top = top_of(lattice);
  if (!top) throw Error(Errc::PreconditionViolation, "lattice has no top");
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < lattice.size(); ++y) {
    const auto j = lattice.join(x, y);
    const auto m = lattice.meet(x, y);
    if (j && m && *j == *top && *m == lattice.bottom()) out.push_back(y);
  }
  return out;
}

ComplementReport complement_uniqueness(std::size_t bound) {
  ComplementReport out;
  out.bound = bound;
  for (const auto& lattice : distributive_lattices(bound)) {
    ++out.lattices_checked;
    for (std::size_t x = 0; x < lattice.size(); ++x) {
      const auto comps = complements(lattice, x);
      if (!comps.empty()) ++out.complemented_elements;
      if (comps.size() > 1 && !out.counterexample) out.counterexample = lattice;
    }
  }
  const ContactStructure m3 = m3_fixture(M3Variant::Overlap);
  out.m3_complements_of_c = complements(m3, m3.index("c")).size();
  return out;
}

AmalgamInstance distributive_failure_instance() {
  const ContactStructure chain =
      ContactStructure::from_pairs({"0", "c", "1"}, "0", {{"c", "1"}}, {}, Kind::Semilattice);
  const ContactStructure c = chain.with_contact(overlap_relation(chain));
  const ContactStructure square_a =
      ContactStructure::from_pairs({"0", "c", "1", "a"}, "0", {{"c", "1"}, {"a", "1"}}, {}, Kind::Semilattice);
  const ContactStructure a = square_a.with_contact(overlap_relation(square_a));
  const ContactStructure square_b =
      ContactStructure::from_pairs({"0", "c", "1", "b"}, "0", {{"c", "1"}, {"b", "1"}}, {}, Kind::Semilattice);
  const ContactStructure b = close_contact(square_b, {{square_b.index("b"), square_b.index("c")}});
  return AmalgamInstance(a, b, c);
}

namespace {

// Injective maps preserving bottom, binary joins and binary meets.
bool lattice_embedding(const ContactStructure& src, const ContactStructure& dst, const std::vector<std::size_t>& f) {
  if (f[src.bottom()] != dst.bottom()) return false;
  for (std::size_t x = 0; x < src.size(); ++x)
    for (std::size_t y = 0; y < src.size(); ++y) {
      if (x != y && f[x] == f[y]) return false;
      if (f[*src.join(x, y)] != *dst.join(f[x], f[y])) return false;
      if (f[*src.meet(x, y)] != *dst.meet(f[x], f[y])) return false;
    }
  return true;
}

std::vector<std::vector<std::size_t>> lattice_embeddings(const ContactStructure& src, const ContactStructure& dst) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(src.size(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == src.size()) {
      if (lattice_embedding(src, dst, f)) out.push_back(f);
      return;
    }
    for (std::size_t y = 0; y < dst.size(); ++y) {
      f[i] = y;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

DistributiveFailureReport distributive_amalgam_failure(std::size_t bound) {
  DistributiveFailureReport out;
  out.bound = bound;
  const AmalgamInstance inst = distributive_failure_instance();
  const ContactStructure& a = inst.a();
  const ContactStructure& b = inst.b();
  const std::size_t a_el = a.index("a"), b_el = b.index("b");

  for (const auto& lattice : distributive_lattices(bound)) {
    ++out.lattices_scanned;
    for (const auto& fa : lattice_embeddings(a, lattice)) {
      // g must agree with f on C; only the image of b is free.
      std::vector<std::size_t> gb(b.size());
      for (std::size_t y = 0; y < b.size(); ++y)
        if (y != b_el) gb[y] = fa[a.index(b.name(y))];
      for (std::size_t img = 0; img < lattice.size(); ++img) {
        gb[b_el] = img;
        if (!lattice_embedding(b, lattice, gb)) continue;
        ++out.candidate_pairs;
        if (fa[a_el] == gb[b_el]) ++out.identified;
        // The least contact relation forced by the positive requirements
        // decides whether any valid relation meets all requirements.
        std::vector<IndexPair> positives;
        std::vector<IndexPair> negatives;
        for (const auto* side : {&a, &b}) {
          const auto& f = side == &a ? fa : gb;
          for (std::size_t x = 0; x < side->size(); ++x)
            for (std::size_t y = 0; y < side->size(); ++y)
              (side->contact(x, y) ? positives : negatives).emplace_back(f[x], f[y]);
        }
        const ContactStructure least = close_contact(lattice, positives);
        bool feasible = true;
        for (auto [x, y] : negatives) feasible = feasible && !least.contact(x, y);
        if (feasible) ++out.amalgams_found;
      }
    }
  }

  out.poset_amalgam_ok =
      thm5_contact_amalgam(AmalgamInstance(a.with_kind(Kind::Poset), b.with_kind(Kind::Poset),
                                           inst.c().with_kind(Kind::Poset)))
          .ok();
  out.semilattice_amalgam_ok = thm5_semilattice_amalgam(inst).ok();
  return out;
}

AdditiveSurvey additive_representation_survey(std::size_t bound) {
  AdditiveSurvey out;
  for (const auto& s : build_catalog(bound, Kind::Semilattice).items()) {
    if (verify_add_fails(s)) continue;
    ++out.additive_sources;
    const Representation rep = prop2_semilattice(s);
    if (!verify_add_fails(rep.family.structure())) ++out.additive_targets;
  }
  return out;
}

}  // namespace contact
