#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contact/enumerate.hpp"
#include "contact/structure.hpp"

namespace contact {

/// How a new point p sits over a structure S: a complete invariant of a
/// one-point extension up to isomorphism over S.
struct ExtensionType {
  Bitset below;    // s ≤ p
  Bitset above;    // p ≤ s
  Bitset contact;  // p δ s
  /// Semilattices only: joins[s] is the index in S of p + s, or kSelf for p.
  std::vector<std::size_t> joins;
  static constexpr std::size_t kSelf = static_cast<std::size_t>(-1);

  friend auto operator<=>(const ExtensionType&, const ExtensionType&) = default;
  friend bool operator==(const ExtensionType&, const ExtensionType&) = default;
};

std::string describe(const ExtensionType& type, const ContactStructure& s);

struct OnePointExtension {
  const ContactStructure* item;       // catalog item T
  std::vector<std::size_t> inclusion;  // S index -> T index
  std::size_t new_point;               // T index outside the image
  ExtensionType type;                  // over S's indices
};

/// All catalog items T with |T| = |S| + 1 containing a copy of S, one entry
/// per extension type. Empty when |S| already reaches the catalog bound.
std::vector<OnePointExtension> one_point_extensions(const ContactStructure& s, const AgeCatalog& catalog);

/// Whether an element of m outside the image of subset realizes the type over
/// the subset (listed in index order). Returns the element.
std::optional<std::size_t> realizes(const ContactStructure& m, const std::vector<std::size_t>& subset,
                                    const ExtensionType& type);

struct StageLogEntry {
  std::size_t sweep = 0;
  std::vector<std::string> substructure;  // names in the stage
  std::string type;                       // human-readable ExtensionType
  std::string new_element;
  std::size_t size_after = 0;
};

struct LimitStage {
  Kind kind = Kind::Poset;
  std::size_t cap = 0;
  ContactStructure structure;
  /// The stage before the last sweep, when at least one sweep ran.
  std::optional<ContactStructure> previous;
  std::size_t stage = 0;
  std::vector<StageLogEntry> log;
  bool fixpoint = false;
  bool budget_exceeded = false;
};

/// The one-element structure of a kind.
ContactStructure trivial_structure(Kind kind);

/// Sweeps realize, by amalgamation, every one-point extension of every
/// substructure of at most cap elements of the stage as it stood when the
/// sweep began. Stops after sweeps sweeps, at a fixpoint, or once the stage
/// exceeds element_budget elements (budget_exceeded, partial stage).
LimitStage build_limit_stage(Kind kind, std::size_t cap, std::size_t sweeps, std::size_t element_budget = 64);

enum class ExtensionScope {
  /// Embeddings into the previous stage, extended inside the current one.
  /// This is the property each finite approximation can have.
  Predecessor,
  /// Embeddings into the current stage, extended inside itself.
  Absolute,
};

struct ExtensionMiss {
  std::vector<std::string> substructure;
  std::string type;
};

struct ExtensionCheck {
  std::size_t obligations = 0;
  std::size_t realized = 0;
  std::vector<ExtensionMiss> misses;
  double fraction() const { return obligations ? static_cast<double>(realized) / obligations : 1.0; }
};

/// Fraction of (substructure of at most cap elements, one-point extension)
/// pairs that extend. Predecessor scope on a stage with no sweeps falls back
/// to the stage itself.
ExtensionCheck check_extension_property(const LimitStage& stage, std::size_t cap,
                                        ExtensionScope scope = ExtensionScope::Predecessor);

struct ClassPropertiesReport {
  std::size_t hp_checked = 0;
  std::vector<std::string> hp_failures;
  std::size_t jep_checked = 0;
  std::vector<std::string> jep_failures;
  std::size_t ap_exhaustive = 0;
  std::size_t ap_random = 0;
  std::vector<std::string> ap_failures;
  bool ok() const { return hp_failures.empty() && jep_failures.empty() && ap_failures.empty(); }
};

/// HP over every substructure of every item; JEP over every pair over the
/// trivial structure; AP exhaustively over items of at most exhaustive_size
/// elements and over random_instances seeded random instances.
ClassPropertiesReport check_class_properties(const AgeCatalog& catalog, std::size_t exhaustive_size,
                                             std::size_t random_instances = 0, std::uint64_t seed = 1);

}  // namespace contact
