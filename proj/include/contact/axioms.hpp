#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contact/structure.hpp"

namespace contact {

enum class Axiom { Sym, Emp, Ext, Ref, Inh, Add, RefStar };

std::string_view axiom_name(Axiom axiom);

struct AxiomResult {
  Axiom axiom;
  bool holds = true;
  /// Element indices of the first counterexample found, in the order the
  /// axiom quantifies them. Empty when the axiom holds.
  std::vector<std::size_t> witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool all_pass() const;
  const AxiomResult* find(Axiom axiom) const;
  bool holds(Axiom axiom) const;
  std::string describe() const;
};

/// Checks (Sym), (Emp), (Ext), (Ref) and the derived (Inh); with require_add
/// also (Add). Throws Errc::AddOnPoset if require_add is set on a poset.
AxiomReport check_contact_axioms(const ContactStructure& s, bool require_add = false);

/// Checks (Sym), (Ext) and reflexivity everywhere.
AxiomReport check_bottomless_axioms(const BottomlessStructure& s);

/// Throws Errc::AxiomViolation with the first witness unless all axioms pass.
void require_valid(const ContactStructure& s);

/// a δ b iff some element other than bottom lies below both.
BitMatrix overlap_relation(const ContactStructure& s);

/// Smallest relation containing rel that is up-closed in both coordinates.
/// Symmetric input yields symmetric output.
BitMatrix up_closure(const BitMatrix& rel, const BitMatrix& leq);

/// Least valid contact relation containing the overlap relation and the
/// (symmetrized) seed pairs. Throws Errc::BottomInSeed.
ContactStructure close_contact(const ContactStructure& s, const std::vector<IndexPair>& seed);

/// δ(a, b) iff some nonzero n lies below both k(a) and k(b).
ContactStructure contact_from_closure(const ClosureOperator& k);

/// For closed c, d: the induced δ(c, d) holds iff some nonzero closed element
/// lies below both. Returns the first disagreeing pair, if any.
std::optional<IndexPair> closed_overlap_mismatch(const ClosureOperator& k);

/// The closed elements with the order and contact induced from
/// contact_from_closure(k). Requires k(bottom) = bottom (Errc::MissingBottom).
ContactStructure closed_subposet(const ClosureOperator& k);

/// Induced substructure on subset, keeping the original element order.
/// Throws Errc::MissingBottom, or Errc::NotJoinClosed for semilattices.
ContactStructure induced_substructure(const ContactStructure& s, const Bitset& subset);
ContactStructure induced_substructure(const ContactStructure& s, const std::vector<std::string>& subset);

/// Adds a fresh least element, in contact with nothing, placed first.
/// Throws Errc::AxiomViolation if the input fails (Sym), (Ext) or reflexivity.
ContactStructure adjoin_bottom(const BottomlessStructure& s, const std::string& bottom_name = "0");

/// Removes the bottom; inverse of adjoin_bottom.
BottomlessStructure drop_bottom(const ContactStructure& s);

/// Bottom together with joins of all nonempty subsets of gens.
/// Throws Errc::NotSemilattice if a needed join is missing.
Bitset generated_subsemilattice(const ContactStructure& s, const Bitset& gens);

}  // namespace contact
