#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contact/structure.hpp"

namespace contact {

/// Properties of a map between carriers. Every flag is recomputed from the
/// tables when the map is built.
struct MapReport {
  bool injective = false;
  bool bottom_preserving = false;
  bool order_preserving = false;
  bool order_reflecting = false;
  bool contact_preserving = false;
  bool contact_reflecting = false;
  /// Present only when source and target are both semilattices.
  std::optional<bool> join_preserving;
  std::vector<std::string> failures;

  /// Injective, 0- and order-preserving, contact-preserving and reflecting,
  /// and join-preserving when that applies. Order reflection is reported
  /// separately and is not part of this predicate.
  bool is_embedding() const;
  /// is_embedding() together with order reflection.
  bool is_strong_embedding() const { return is_embedding() && order_reflecting; }
  std::string describe() const;
};

class StructureMap {
 public:
  StructureMap(ContactStructure source, ContactStructure target, std::vector<std::size_t> map);

  const ContactStructure& source() const { return source_; }
  const ContactStructure& target() const { return target_; }
  const std::vector<std::size_t>& map() const { return map_; }
  std::size_t operator()(std::size_t x) const { return map_[x]; }
  const MapReport& report() const { return report_; }

 private:
  ContactStructure source_;
  ContactStructure target_;
  std::vector<std::size_t> map_;
  MapReport report_;
};

StructureMap verify_map(ContactStructure source, ContactStructure target, std::vector<std::size_t> map);

/// second ∘ first. Throws Errc::PreconditionViolation if the middle carriers differ.
StructureMap compose(const StructureMap& first, const StructureMap& second);

/// Sends each source element to the target element of the same name.
/// Throws Errc::UnknownElement if a name is missing.
StructureMap inclusion_by_name(const ContactStructure& source, const ContactStructure& target);

struct JoinPreservation {
  std::size_t subsets_checked = 0;
  std::size_t with_join = 0;
  /// Source subsets whose existing least upper bound was not sent to the
  /// least upper bound of the images.
  std::vector<Bitset> failures;
  bool ok() const { return failures.empty(); }
};

/// Exhaustive over all subsets of the source (the empty set included).
JoinPreservation check_existing_joins(const StructureMap& m);
/// Same for greatest lower bounds.
JoinPreservation check_existing_meets(const StructureMap& m);

/// All model-theoretic embeddings from -> to: injective, bottom to bottom,
/// order and contact preserved and reflected, joins preserved when both are
/// semilattices. Stops after limit results when limit > 0.
std::vector<std::vector<std::size_t>> find_embeddings(const ContactStructure& from, const ContactStructure& to,
                                                      std::size_t limit = 0);

bool isomorphic(const ContactStructure& a, const ContactStructure& b);

}  // namespace contact
