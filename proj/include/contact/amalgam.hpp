#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "contact/axioms.hpp"
#include "contact/represent.hpp"
#include "contact/structure.hpp"
#include "contact/structure_map.hpp"

namespace contact {

class AgeCatalog;

/// Two structures whose shared element names are exactly those of the base c,
/// on which both induce c.
class AmalgamInstance {
 public:
  /// Throws Errc::PreconditionViolation describing the first mismatch.
  AmalgamInstance(ContactStructure a, ContactStructure b, ContactStructure c);

  const ContactStructure& a() const { return a_; }
  const ContactStructure& b() const { return b_; }
  const ContactStructure& c() const { return c_; }
  /// True when all three are semilattices.
  bool semilattice() const;

 private:
  ContactStructure a_, b_, c_;
};

/// Builds an instance from abstract embeddings c -> a and c -> b by renaming
/// apart: images of c take c's names, other elements of a get prefix_a, of b prefix_b.
AmalgamInstance glue(const ContactStructure& a, const ContactStructure& b, const ContactStructure& c,
                     const std::vector<std::size_t>& into_a, const std::vector<std::size_t>& into_b,
                     const std::string& prefix_a = "a.", const std::string& prefix_b = "b.");

/// Carrier of the amalgam: a's elements in order, then b's elements outside c.
struct OrderAmalgam {
  std::vector<std::string> names;
  std::size_t bottom = 0;
  BitMatrix leq;
  std::vector<std::size_t> from_a;  // a index -> amalgam index
  std::vector<std::size_t> from_b;  // b index -> amalgam index
};

/// ≤_A ∪ ≤_B ∪ (≤_A ∘ ≤_B) ∪ (≤_B ∘ ≤_A), composing through shared elements.
/// A failure of antisymmetry or transitivity is an internal error.
OrderAmalgam jonsson_order_amalgam(const AmalgamInstance& inst);

struct SuperWitness {
  std::size_t lower;   // amalgam index
  std::size_t upper;   // amalgam index
  std::size_t middle;  // amalgam index of the element of c between them
};

struct SuperamalgamationReport {
  std::size_t obligations = 0;
  std::vector<SuperWitness> witnesses;
  /// Pairs (lower, upper) across a and b with no element of c between them.
  std::vector<IndexPair> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

/// For every a ∈ A, b ∈ B with a ≤ b in the amalgam, finds c ∈ C with
/// a ≤_A c ≤_B b; symmetrically for b ≤ a. less_eq decides the amalgam order
/// on amalgam indices.
template <typename LessEq>
SuperamalgamationReport verify_superamalgamation(const AmalgamInstance& inst, const OrderAmalgam& carrier,
                                                 LessEq less_eq);

/// Convenience overload reading the order from the amalgam structure d.
SuperamalgamationReport verify_superamalgamation(const AmalgamInstance& inst, const OrderAmalgam& carrier,
                                                 const ContactStructure& d);

struct AmalgamResult {
  OrderAmalgam carrier;
  ContactStructure d;
  StructureMap from_a;
  StructureMap from_b;
  AxiomReport axioms;
  SuperamalgamationReport super;
  bool strong_size = false;  // |D| = |A| + |B| - |C|

  bool ok() const {
    return axioms.all_pass() && from_a.report().is_strong_embedding() && from_b.report().is_strong_embedding() &&
           super.ok() && strong_size;
  }
};

/// δ_D: up-closure in ≤_D of δ_A ∪ δ_B.
AmalgamResult thm5_contact_amalgam(const AmalgamInstance& inst);

struct SemilatticeAmalgamResult {
  AmalgamResult poset;          // D
  Representation closure;       // D -> E
  ContactStructure e;           // E, images named after their D preimages
  StructureMap from_a;          // A -> E
  StructureMap from_b;          // B -> E
  SuperamalgamationReport super;
  std::size_t joins_checked = 0;

  bool ok() const {
    return poset.ok() && from_a.report().is_strong_embedding() && from_b.report().is_strong_embedding() &&
           super.ok();
  }
};

/// D as above, a check that joins of A and B stay least upper bounds in D
/// (Errc::JoinNotPreserved otherwise), then E = cor3_embed(D).
SemilatticeAmalgamResult thm5_semilattice_amalgam(const AmalgamInstance& inst);

/// A random instance from catalog items of size at most max_size: a random
/// substructure of a random item is embedded, in a random way, into another.
AmalgamInstance random_instance(const AgeCatalog& catalog, std::size_t max_size, std::mt19937_64& rng);

/// Every subset of s containing bottom (join-closed for semilattices),
/// optionally limited to max_size elements.
std::vector<Bitset> substructure_subsets(const ContactStructure& s, std::size_t max_size = 0);

template <typename LessEq>
SuperamalgamationReport verify_superamalgamation(const AmalgamInstance& inst, const OrderAmalgam& carrier,
                                                 LessEq less_eq) {
  SuperamalgamationReport report;
  const ContactStructure& a = inst.a();
  const ContactStructure& b = inst.b();
  const ContactStructure& c = inst.c();
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) {
      const std::size_t dx = carrier.from_a[x], dy = carrier.from_b[y];
      for (int direction = 0; direction < 2; ++direction) {
        const bool a_below = direction == 0;
        if (!(a_below ? less_eq(dx, dy) : less_eq(dy, dx))) continue;
        ++report.obligations;
        std::optional<std::size_t> middle;
        for (std::size_t z = 0; z < c.size() && !middle; ++z) {
          const std::size_t za = a.index(c.name(z)), zb = b.index(c.name(z));
          if (a_below ? (a.leq(x, za) && b.leq(zb, y)) : (b.leq(y, zb) && a.leq(za, x))) middle = za;
        }
        if (middle)
          report.witnesses.push_back({a_below ? dx : dy, a_below ? dy : dx, carrier.from_a[*middle]});
        else
          report.counterexamples.emplace_back(a_below ? dx : dy, a_below ? dy : dx);
      }
    }
  return report;
}

}  // namespace contact
