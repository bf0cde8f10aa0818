#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "contact/bitset.hpp"
#include "contact/error.hpp"

namespace contact {

enum class Kind { Poset, Semilattice };

std::string_view kind_name(Kind kind);

using NamePair = std::pair<std::string, std::string>;
using IndexPair = std::pair<std::size_t, std::size_t>;

/// Reflexive-transitive closure of raw_pairs plus (bottom, x) for every x.
/// Throws Errc::Cycle when the closure is not antisymmetric.
BitMatrix normalize_order(const std::vector<IndexPair>& raw_pairs, std::size_t n, std::size_t bottom);

/// Name-based overload; unknown names raise Errc::UnknownElement.
BitMatrix normalize_order(const std::vector<NamePair>& raw_pairs, const std::vector<std::string>& elements,
                          const std::string& bottom);

/// Order-only checks shared by every carrier type. Returns a description of the
/// first defect, or nothing when leq is a partial order.
std::optional<std::string> order_defect(const BitMatrix& leq);

/// A finite poset with least element plus a binary relation meant to be a
/// contact relation. Construction validates the order, the bottom and (for the
/// semilattice kind) existence of binary joins. The contact axioms are not
/// enforced here; see check_contact_axioms and validated().
///
/// Element i's up-set is row i of the order table; its down-set is row i of
/// the transpose, cached at construction.
class ContactStructure {
 public:
  ContactStructure(std::vector<std::string> names, std::size_t bottom, BitMatrix leq, BitMatrix contact,
                   Kind kind = Kind::Poset);

  /// Builds from generating pairs; contact pairs are symmetrized.
  static ContactStructure from_pairs(std::vector<std::string> names, const std::string& bottom,
                                     const std::vector<NamePair>& order_pairs,
                                     const std::vector<NamePair>& contact_pairs, Kind kind = Kind::Poset);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> find(const std::string& name) const;
  /// Throws Errc::UnknownElement.
  std::size_t index(const std::string& name) const;

  std::size_t bottom() const { return bottom_; }
  Kind kind() const { return kind_; }
  bool is_semilattice() const { return kind_ == Kind::Semilattice; }

  bool leq(std::size_t a, std::size_t b) const { return leq_.test(a, b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq_.test(a, b); }
  bool contact(std::size_t a, std::size_t b) const { return contact_.test(a, b); }

  const BitMatrix& order() const { return leq_; }
  const BitMatrix& contact_table() const { return contact_; }
  const Bitset& up(std::size_t a) const { return leq_.row(a); }
  const Bitset& down(std::size_t a) const { return geq_.row(a); }
  /// Down-set of a without the bottom.
  Bitset nonzero_down(std::size_t a) const;

  /// Least upper bound of the set, if it exists. The empty set's lub is bottom.
  std::optional<std::size_t> lub(const Bitset& set) const;
  std::optional<std::size_t> glb(const Bitset& set) const;
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  /// Semilattice join; throws Errc::NotSemilattice when absent.
  std::size_t join_or_throw(std::size_t a, std::size_t b) const;

  /// Hasse diagram: pairs (a, b) with a < b and nothing strictly between.
  std::vector<IndexPair> covers() const;

  ContactStructure with_contact(BitMatrix contact) const;
  ContactStructure with_kind(Kind kind) const;
  ContactStructure renamed(std::vector<std::string> names) const;

  friend bool operator==(const ContactStructure& a, const ContactStructure& b) {
    return a.names_ == b.names_ && a.bottom_ == b.bottom_ && a.leq_ == b.leq_ && a.contact_ == b.contact_ &&
           a.kind_ == b.kind_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::size_t bottom_;
  BitMatrix leq_;
  BitMatrix geq_;
  BitMatrix contact_;
  Kind kind_;
};

/// A poset without designated bottom carrying a relation meant to satisfy
/// (Sym), (Ext) and reflexivity on every element.
class BottomlessStructure {
 public:
  BottomlessStructure(std::vector<std::string> names, BitMatrix leq, BitMatrix contact);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  bool leq(std::size_t a, std::size_t b) const { return leq_.test(a, b); }
  bool contact(std::size_t a, std::size_t b) const { return contact_.test(a, b); }
  const BitMatrix& order() const { return leq_; }
  const BitMatrix& contact_table() const { return contact_; }

  friend bool operator==(const BottomlessStructure&, const BottomlessStructure&) = default;

 private:
  std::vector<std::string> names_;
  BitMatrix leq_;
  BitMatrix contact_;
};

/// A closure operator k on the order of base: isotone, idempotent, extensive.
/// The contact table of base is ignored.
class ClosureOperator {
 public:
  /// Throws Errc::InvalidClosure naming the failed law.
  ClosureOperator(ContactStructure base, std::vector<std::size_t> k);

  const ContactStructure& base() const { return base_; }
  std::size_t operator()(std::size_t a) const { return k_[a]; }
  const std::vector<std::size_t>& table() const { return k_; }
  bool is_closed(std::size_t a) const { return k_[a] == a; }

 private:
  ContactStructure base_;
  std::vector<std::size_t> k_;
};

}  // namespace contact
