#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contact/structure.hpp"

namespace contact {

struct CanonicalForm {
  /// Identical for isomorphic structures of the same kind, distinct otherwise.
  std::string key;
  /// relabel[p] = index in the input of the element placed at canonical position p.
  /// Position 0 is always the bottom.
  std::vector<std::size_t> relabel;
};

/// Lexicographically least encoding over all relabelings that respect an
/// invariant-refined partition of the elements; the bottom is fixed first.
CanonicalForm canonical_form(const ContactStructure& s);

/// Reorders elements so that new position p holds old element order[p].
/// Names travel with their elements unless names is given.
ContactStructure permute(const ContactStructure& s, const std::vector<std::size_t>& order,
                         std::optional<std::vector<std::string>> names = std::nullopt);

/// The canonical relabeling of s, with elements named "0", "1", ... .
ContactStructure canonical_structure(const ContactStructure& s);

/// All posets with a least element on n points up to isomorphism, as order
/// tables with the bottom at index 0. n = 1..5 gives 1, 1, 2, 5, 16.
/// Results are cached per n. Sizes above 8 are refused.
const std::vector<BitMatrix>& enumerate_posets_with_bottom(std::size_t n);

/// Carrier of an order table with names "0", "1", ... and empty contact.
ContactStructure carrier(const BitMatrix& leq, Kind kind = Kind::Poset);

/// Every valid contact relation on the carrier (labeled, not deduplicated),
/// produced as symmetric up-closed supersets of the overlap relation.
std::vector<ContactStructure> contact_relations(const ContactStructure& carrier);

/// Same set, found by testing every binary relation against the axioms.
/// Only for carriers of at most 4 elements.
std::vector<ContactStructure> contact_relations_by_axioms(const ContactStructure& carrier);

/// Canonical representatives of all contact structures of a kind up to a size bound.
class AgeCatalog {
 public:
  AgeCatalog(std::size_t bound, Kind kind, std::vector<ContactStructure> items);

  std::size_t bound() const { return bound_; }
  Kind kind() const { return kind_; }
  const std::vector<ContactStructure>& items() const { return items_; }
  std::vector<const ContactStructure*> items_of_size(std::size_t n) const;
  std::size_t count_of_size(std::size_t n) const;

  /// Index of the item isomorphic to s, if any.
  std::optional<std::size_t> find(const ContactStructure& s) const;

 private:
  std::size_t bound_;
  Kind kind_;
  std::vector<ContactStructure> items_;
  std::map<std::string, std::size_t> index_;
};

/// Deduplicates every valid contact relation on each carrier of the kind.
AgeCatalog build_catalog(std::size_t bound, Kind kind);

/// All contact structures on one carrier up to isomorphism.
std::vector<ContactStructure> enumerate_contact_structures(const ContactStructure& carrier);

bool is_join_semilattice(const ContactStructure& s);
bool is_lattice(const ContactStructure& s);
/// Distributive law a(b + c) = ab + ac over all triples.
bool is_distributive(const ContactStructure& s);
/// No 5-element sublattice isomorphic to M3 or N5.
bool is_distributive_by_sublattices(const ContactStructure& s);

/// Every distributive lattice of at most max_size elements up to isomorphism,
/// as semilattice-kind structures carrying the overlap contact.
std::vector<ContactStructure> distributive_lattices(std::size_t max_size);

}  // namespace contact
