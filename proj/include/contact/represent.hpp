#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contact/structure.hpp"
#include "contact/structure_map.hpp"

namespace contact {

enum class Origin {
  ElementImage,      // φ(a); args = {a}
  PairIntersection,  // φ(a) ∩ φ(b) for a δ b; args = {a, b}
  Union,             // union of two family members; args = their set indices
  Subset,            // a member of a literal powerset; args = the universe indices it contains
  Cut,               // (lower, upper) with each the bounds of the other; args = the upper set
};

std::string_view origin_name(Origin origin);

struct Provenance {
  Origin origin;
  std::vector<std::size_t> args;
};

/// How the contact relation of a set family is declared.
enum class ContactRule {
  WitnessInFamily,  // x δ y iff a nonempty member q of the family has q ⊆ x and q ⊆ y
  Intersecting,     // x δ y iff x ∩ y ≠ ∅
  OrderOverlap,     // the overlap relation of the inclusion order
};

/// A family of subsets of a finite universe ordered by inclusion, carrying a
/// contact relation computed from the sets themselves.
class SetFamilyStructure {
 public:
  SetFamilyStructure(std::vector<std::string> universe, std::vector<Bitset> sets, std::vector<Provenance> provenance,
                     ContactRule rule, Kind kind);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<Bitset>& sets() const { return sets_; }
  const Bitset& set(std::size_t i) const { return sets_[i]; }
  const std::vector<Provenance>& provenance() const { return provenance_; }
  ContactRule rule() const { return rule_; }
  std::size_t size() const { return sets_.size(); }
  std::optional<std::size_t> find(const Bitset& set) const;
  /// Element view: names are set literals over the universe names.
  const ContactStructure& structure() const { return structure_; }

  /// Recomputes the declared contact from the sets alone.
  BitMatrix declared_contact() const;

 private:
  std::vector<std::string> universe_;
  std::vector<Bitset> sets_;
  std::vector<Provenance> provenance_;
  ContactRule rule_;
  ContactStructure structure_;
};

std::string set_literal(const Bitset& set, const std::vector<std::string>& universe);

struct Representation {
  SetFamilyStructure family;
  StructureMap map;
};

/// φ(a) = {x | a ≰ x} into Q = Im φ ∪ {φ(a) ∩ φ(b) | a δ b} with contact
/// witnessed inside Q. Throws Errc::AxiomViolation for invalid input.
Representation prop2_poset(const ContactStructure& s);

/// The same map into Q⁺, the closure of Q under finite unions.
/// Throws Errc::NotSemilattice unless s is a semilattice.
Representation prop2_semilattice(const ContactStructure& s);

/// Q⁺ construction applied to any contact poset; the target is a semilattice.
/// max_sets bounds the union closure (Errc::BudgetExceeded).
Representation cor3_embed(const ContactStructure& s, std::size_t max_sets = 1U << 14);

/// For every subset S of the source whose join exists, φ(⋁S) = ⋃ φ(S),
/// evaluated on the sets directly. Source size is limited to 24.
JoinPreservation check_union_preservation(const Representation& rep);

struct BooleanRepresentation {
  Representation prop2;          // P -> Q
  SetFamilyStructure powerset;   // R = all subsets of Q ∖ {∅}
  StructureMap psi;              // Q -> R, q ↦ {x ∈ Q | ∅ ≠ x ⊆ q}
  StructureMap total;            // ψ ∘ φ
};

/// Embedding into the powerset of Q ∖ {∅} with intersection contact.
BooleanRepresentation thm4a_boolean(const ContactStructure& s);

struct PowersetCheck {
  bool literal_powerset = false;  // exactly the 2^m subsets of the universe
  bool union_closed = false;
  bool intersection_closed = false;
  bool complement_closed = false;
  bool atoms_are_singletons = false;
  bool ok() const {
    return literal_powerset && union_closed && intersection_closed && complement_closed && atoms_are_singletons;
  }
};

PowersetCheck check_powerset(const SetFamilyStructure& family);

/// Completion by cuts. Members are the lower halves of cuts, ordered by
/// inclusion, with overlap contact; χ(a) = ↓a.
Representation dm_completion(const ContactStructure& s);

struct LatticeRepresentation {
  Representation prop2;       // S -> Q⁺
  Representation completion;  // Q⁺ -> completion
  StructureMap total;
};

/// Throws Errc::NotSemilattice unless s is a semilattice.
LatticeRepresentation thm4b_lattice(const ContactStructure& s);

}  // namespace contact
