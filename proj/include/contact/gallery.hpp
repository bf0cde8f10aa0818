#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "contact/amalgam.hpp"
#include "contact/structure.hpp"

namespace contact {

enum class M3Variant { Overlap, WithAB };

/// M3 on {0, a, b, c, 1}. WithAB adds a δ b as the only contact beyond overlap.
ContactStructure m3_fixture(M3Variant variant);

/// (x, y, z) with x δ y+z, not x δ y, not x δ z; first in element order.
/// Throws Errc::NotSemilattice for posets.
std::optional<std::array<std::size_t, 3>> verify_add_fails(const ContactStructure& s);

struct AdditivityReport {
  std::size_t bound = 0;
  std::size_t lattices_checked = 0;
  std::size_t boolean_checked = 0;
  /// A distributive overlap lattice failing (Add); never expected.
  std::optional<ContactStructure> counterexample;
  /// M3 with overlap fails (Add), shown for contrast.
  bool m3_contrast_fails = false;
  bool ok() const { return !counterexample && m3_contrast_fails && lattices_checked > 0; }
};

/// (Add) on every distributive lattice of at most bound elements with overlap
/// contact, plus the Boolean powersets of 2, 4 and 8 elements.
AdditivityReport distributive_overlap_additivity(std::size_t bound);

/// All complements of x in a bounded lattice.
std::vector<std::size_t> complements(const ContactStructure& lattice, std::size_t x);

struct ComplementReport {
  std::size_t bound = 0;
  std::size_t lattices_checked = 0;
  std::size_t complemented_elements = 0;
  std::optional<ContactStructure> counterexample;
  /// Complements of c in M3, for contrast (a and b and c's sibling atoms).
  std::size_t m3_complements_of_c = 0;
  bool ok() const { return !counterexample && m3_complements_of_c > 1 && lattices_checked > 0; }
};

ComplementReport complement_uniqueness(std::size_t bound);

struct DistributiveFailureReport {
  std::size_t bound = 0;
  std::size_t lattices_scanned = 0;
  /// Pairs of lattice embeddings of A and B agreeing on C.
  std::size_t candidate_pairs = 0;
  /// Candidates in which the images of a and b coincide.
  std::size_t identified = 0;
  /// Candidates admitting a contact relation making both maps contact embeddings.
  std::size_t amalgams_found = 0;
  bool poset_amalgam_ok = false;
  bool semilattice_amalgam_ok = false;

  bool ok() const {
    return amalgams_found == 0 && identified == candidate_pairs && poset_amalgam_ok && semilattice_amalgam_ok;
  }
};

/// The 3-element chain C = {0, c, 1}; A adds a complement a of c with overlap
/// contact; B adds a complement b of c with b δ c.
AmalgamInstance distributive_failure_instance();

DistributiveFailureReport distributive_amalgam_failure(std::size_t bound);

struct AdditiveSurvey {
  std::size_t additive_sources = 0;
  std::size_t additive_targets = 0;  // of those, how many Q⁺ targets are additive
};

/// For each additive catalog semilattice, whether its Q⁺ representation is
/// additive too. Asserts nothing.
AdditiveSurvey additive_representation_survey(std::size_t bound);

}  // namespace contact
