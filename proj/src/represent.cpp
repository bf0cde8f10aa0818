#include "contact/represent.hpp"

#include <unordered_map>

#include "contact/axioms.hpp"
#include "contact/enumerate.hpp"

namespace contact {

std::string_view origin_name(Origin origin) {
  switch (origin) {
    case Origin::ElementImage: return "element-image";
    case Origin::PairIntersection: return "pair-intersection";
    case Origin::Union: return "union";
    case Origin::Subset: return "subset";
    case Origin::Cut: return "cut";
  }
  return "?";
}

std::string set_literal(const Bitset& set, const std::vector<std::string>& universe) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += universe[i];
    first = false;
  });
  return out + "}";
}

namespace {

ContactStructure family_structure(const std::vector<std::string>& universe, const std::vector<Bitset>& sets,
                                  ContactRule rule, Kind kind) {
  const std::size_t n = sets.size();
  if (n == 0) throw Error(Errc::PreconditionViolation, "empty set family");
  BitMatrix leq(n);
  std::optional<std::size_t> bottom;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) leq.assign(i, j, sets[i].is_subset_of(sets[j]));
    if (leq.row(i).count() == n) bottom = i;
  }
  if (!bottom) throw Error(Errc::PreconditionViolation, "set family has no least member");
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& s : sets) names.push_back(set_literal(s, universe));
  ContactStructure plain(std::move(names), *bottom, std::move(leq), BitMatrix(n), kind);
  BitMatrix rel(n);
  switch (rule) {
    case ContactRule::WitnessInFamily: {
      std::vector<Bitset> witnesses(n, Bitset(n));
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t q = 0; q < n; ++q)
          if (sets[q].any() && sets[q].is_subset_of(sets[x])) witnesses[x].set(q);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) rel.assign(x, y, witnesses[x].intersects(witnesses[y]));
      break;
    }
    case ContactRule::Intersecting:
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) rel.assign(x, y, sets[x].intersects(sets[y]));
      break;
    case ContactRule::OrderOverlap:
      rel = overlap_relation(plain);
      break;
  }
  return plain.with_contact(std::move(rel));
}

class FamilyBuilder {
 public:
  explicit FamilyBuilder(std::size_t universe) : universe_(universe) {}

  /// Adds the set unless present; returns its index either way.
  std::size_t add(Bitset set, Provenance why) {
    auto it = index_.find(set);
    if (it != index_.end()) return it->second;
    const std::size_t i = sets.size();
    index_.emplace(set, i);
    sets.push_back(std::move(set));
    provenance.push_back(std::move(why));
    return i;
  }

  std::optional<std::size_t> find(const Bitset& set) const {
    auto it = index_.find(set);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<Bitset> sets;
  std::vector<Provenance> provenance;

 private:
  std::size_t universe_;
  std::unordered_map<Bitset, std::size_t, BitsetHash> index_;
};

Bitset phi(const ContactStructure& s, std::size_t a) { return s.up(a).complement(); }

// Q = Im φ ∪ {φ(a) ∩ φ(b) | a δ b}. Returns the builder and the image indices.
FamilyBuilder build_q(const ContactStructure& s, std::vector<std::size_t>& image) {
  FamilyBuilder q(s.size());
  image.resize(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) image[a] = q.add(phi(s, a), {Origin::ElementImage, {a}});
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a; b < s.size(); ++b)
      if (s.contact(a, b)) q.add(phi(s, a) & phi(s, b), {Origin::PairIntersection, {a, b}});
  return q;
}

void close_under_unions(FamilyBuilder& q, std::size_t max_sets) {
  for (std::size_t i = 0; i < q.sets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Bitset u = q.sets[i] | q.sets[j];
      if (!q.find(u)) {
        if (q.sets.size() >= max_sets) throw Error(Errc::BudgetExceeded, "union closure exceeds the set budget");
        q.add(std::move(u), {Origin::Union, {j, i}});
      }
    }
}

Representation finish(const ContactStructure& s, FamilyBuilder&& q, const std::vector<std::size_t>& image,
                      ContactRule rule, Kind kind) {
  SetFamilyStructure family(s.names(), std::move(q.sets), std::move(q.provenance), rule, kind);
  StructureMap map(s, family.structure(), image);
  return {std::move(family), std::move(map)};
}

}  // namespace

SetFamilyStructure::SetFamilyStructure(std::vector<std::string> universe, std::vector<Bitset> sets,
                                       std::vector<Provenance> provenance, ContactRule rule, Kind kind)
    : universe_(std::move(universe)),
      sets_(std::move(sets)),
      provenance_(std::move(provenance)),
      rule_(rule),
      structure_(family_structure(universe_, sets_, rule_, kind)) {}

std::optional<std::size_t> SetFamilyStructure::find(const Bitset& set) const {
  for (std::size_t i = 0; i < sets_.size(); ++i)
    if (sets_[i] == set) return i;
  return std::nullopt;
}

BitMatrix SetFamilyStructure::declared_contact() const {
  return family_structure(universe_, sets_, rule_, structure_.kind()).contact_table();
}

Representation prop2_poset(const ContactStructure& s) {
  require_valid(s);
  std::vector<std::size_t> image;
  FamilyBuilder q = build_q(s, image);
  return finish(s, std::move(q), image, ContactRule::WitnessInFamily, Kind::Poset);
}

Representation prop2_semilattice(const ContactStructure& s) {
  if (!s.is_semilattice()) throw Error(Errc::NotSemilattice, "input is not tagged as a semilattice");
  require_valid(s);
  std::vector<std::size_t> image;
  FamilyBuilder q = build_q(s, image);
  close_under_unions(q, 1U << 14);
  return finish(s, std::move(q), image, ContactRule::WitnessInFamily, Kind::Semilattice);
}

Representation cor3_embed(const ContactStructure& s, std::size_t max_sets) {
  require_valid(s);
  std::vector<std::size_t> image;
  FamilyBuilder q = build_q(s, image);
  close_under_unions(q, max_sets);
  return finish(s, std::move(q), image, ContactRule::WitnessInFamily, Kind::Semilattice);
}

JoinPreservation check_union_preservation(const Representation& rep) {
  const ContactStructure& src = rep.map.source();
  const std::size_t n = src.size();
  if (n > 24) throw Error(Errc::PreconditionViolation, "subset scan limited to 24 elements");
  JoinPreservation out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Bitset subset(n), images(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) {
        subset.set(i);
        images |= rep.family.set(rep.map(i));
      }
    ++out.subsets_checked;
    auto join = src.lub(subset);
    if (!join) continue;
    ++out.with_join;
    if (rep.family.set(rep.map(*join)) != images) out.failures.push_back(subset);
  }
  return out;
}

BooleanRepresentation thm4a_boolean(const ContactStructure& s) {
  Representation p2 = prop2_poset(s);
  const ContactStructure& q = p2.family.structure();
  if (!(q.contact_table() == overlap_relation(q)))
    throw Error(Errc::Internal, "Q does not carry the overlap relation");

  std::vector<std::size_t> atoms;  // Q ∖ {∅}
  for (std::size_t i = 0; i < q.size(); ++i)
    if (p2.family.set(i).any()) atoms.push_back(i);
  const std::size_t m = atoms.size();
  if (m > 12) throw Error(Errc::BudgetExceeded, "powerset target would exceed 2^12 elements");

  std::vector<std::string> universe;
  for (std::size_t i : atoms) universe.push_back(q.name(i));
  std::vector<Bitset> sets;
  std::vector<Provenance> provenance;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Bitset x(m);
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1U) {
        x.set(i);
        members.push_back(i);
      }
    sets.push_back(std::move(x));
    provenance.push_back({Origin::Subset, std::move(members)});
  }
  SetFamilyStructure r(std::move(universe), std::move(sets), std::move(provenance), ContactRule::Intersecting,
                       Kind::Semilattice);

  // ψ(q) = {x ∈ Q | ∅ ≠ x ⊆ q}; the set with bitmask M sits at index M.
  std::vector<std::size_t> psi(q.size());
  for (std::size_t qi = 0; qi < q.size(); ++qi) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (p2.family.set(atoms[i]).is_subset_of(p2.family.set(qi))) mask |= std::size_t{1} << i;
    psi[qi] = mask;
  }
  StructureMap psi_map(q, r.structure(), std::move(psi));
  StructureMap total = compose(p2.map, psi_map);
  return {std::move(p2), std::move(r), std::move(psi_map), std::move(total)};
}

PowersetCheck check_powerset(const SetFamilyStructure& family) {
  PowersetCheck out;
  const std::size_t m = family.universe().size();
  std::unordered_map<Bitset, std::size_t, BitsetHash> present;
  for (std::size_t i = 0; i < family.size(); ++i) present.emplace(family.set(i), i);
  out.literal_powerset = m < 30 && present.size() == family.size() && family.size() == (std::size_t{1} << m);
  out.union_closed = out.intersection_closed = out.complement_closed = true;
  for (const auto& x : family.sets()) {
    if (!present.count(x.complement())) out.complement_closed = false;
    for (const auto& y : family.sets()) {
      if (!present.count(x | y)) out.union_closed = false;
      if (!present.count(x & y)) out.intersection_closed = false;
    }
  }
  // Atoms: members covering the least member.
  const ContactStructure& s = family.structure();
  out.atoms_are_singletons = true;
  std::size_t atoms = 0;
  for (auto [a, b] : s.covers())
    if (a == s.bottom()) {
      ++atoms;
      if (family.set(b).count() != 1) out.atoms_are_singletons = false;
    }
  if (atoms != m) out.atoms_are_singletons = false;
  return out;
}

Representation dm_completion(const ContactStructure& s) {
  const std::size_t n = s.size();
  // Closed lower sets are intersections of principal down-sets (the empty
  // intersection being the whole carrier).
  FamilyBuilder lowers(n);
  std::vector<std::size_t> image(n);
  auto upper_bounds = [&](const Bitset& lower) {
    Bitset ub = Bitset::full(n);
    lower.for_each([&](std::size_t x) { ub &= s.up(x); });
    return ub;
  };
  for (std::size_t a = 0; a < n; ++a) image[a] = lowers.add(s.down(a), {Origin::Cut, s.up(a).indices()});
  lowers.add(Bitset::full(n), {Origin::Cut, upper_bounds(Bitset::full(n)).indices()});
  for (std::size_t i = 0; i < lowers.sets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Bitset meet = lowers.sets[i] & lowers.sets[j];
      if (!lowers.find(meet)) {
        Bitset ub = upper_bounds(meet);
        lowers.add(std::move(meet), {Origin::Cut, ub.indices()});
      }
    }
  return finish(s, std::move(lowers), image, ContactRule::OrderOverlap, Kind::Semilattice);
}

LatticeRepresentation thm4b_lattice(const ContactStructure& s) {
  if (!s.is_semilattice()) throw Error(Errc::NotSemilattice, "input is not tagged as a semilattice");
  Representation p2 = prop2_semilattice(s);
  Representation completion = dm_completion(p2.family.structure());
  StructureMap total = compose(p2.map, completion.map);
  return {std::move(p2), std::move(completion), std::move(total)};
}

}  // namespace contact
