#include "contact/structure.hpp"

#include <sstream>

namespace contact {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::Cycle: return "CycleError";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::DuplicateElement: return "DuplicateElement";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::AddOnPoset: return "AddOnPoset";
    case Errc::BottomInSeed: return "BottomInSeed";
    case Errc::MissingBottom: return "MissingBottom";
    case Errc::NotJoinClosed: return "NotJoinClosed";
    case Errc::AxiomViolation: return "AxiomViolation";
    case Errc::NotSemilattice: return "NotSemilattice";
    case Errc::InvalidClosure: return "InvalidClosure";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::JoinNotPreserved: return "JoinNotPreserved";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::Parse: return "ParseError";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::Internal: return "InternalError";
  }
  return "Error";
}

std::string_view kind_name(Kind kind) { return kind == Kind::Semilattice ? "semilattice" : "poset"; }

namespace {

BitMatrix closed_pairs(const std::vector<IndexPair>& raw_pairs, std::size_t n, std::size_t bottom) {
  if (n == 0) throw Error(Errc::InvalidOrder, "empty carrier");
  if (bottom >= n) throw Error(Errc::UnknownElement, "bottom index out of range");
  BitMatrix leq(n);
  for (auto [a, b] : raw_pairs) {
    if (a >= n || b >= n) throw Error(Errc::UnknownElement, "order pair index out of range");
    leq.set(a, b);
  }
  for (std::size_t x = 0; x < n; ++x) leq.set(bottom, x);
  leq.close_reflexive_transitive();
  return leq;
}

std::optional<IndexPair> first_cycle(const BitMatrix& leq) {
  for (std::size_t a = 0; a < leq.size(); ++a)
    for (std::size_t b = a + 1; b < leq.size(); ++b)
      if (leq.test(a, b) && leq.test(b, a)) return IndexPair{a, b};
  return std::nullopt;
}

}  // namespace

BitMatrix normalize_order(const std::vector<IndexPair>& raw_pairs, std::size_t n, std::size_t bottom) {
  BitMatrix leq = closed_pairs(raw_pairs, n, bottom);
  if (auto c = first_cycle(leq))
    throw Error(Errc::Cycle, "elements " + std::to_string(c->first) + " and " + std::to_string(c->second) +
                                 " lie on a cycle");
  return leq;
}

BitMatrix normalize_order(const std::vector<NamePair>& raw_pairs, const std::vector<std::string>& elements,
                          const std::string& bottom) {
  std::unordered_map<std::string, std::size_t> ix;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!ix.emplace(elements[i], i).second) throw Error(Errc::DuplicateElement, "'" + elements[i] + "'");
  auto lookup = [&](const std::string& name) {
    auto it = ix.find(name);
    if (it == ix.end()) throw Error(Errc::UnknownElement, "'" + name + "'");
    return it->second;
  };
  std::vector<IndexPair> pairs;
  pairs.reserve(raw_pairs.size());
  for (const auto& [a, b] : raw_pairs) pairs.emplace_back(lookup(a), lookup(b));
  BitMatrix leq = closed_pairs(pairs, elements.size(), lookup(bottom));
  if (auto c = first_cycle(leq))
    throw Error(Errc::Cycle, "'" + elements[c->first] + "' and '" + elements[c->second] + "' lie on a cycle");
  return leq;
}

std::optional<std::string> order_defect(const BitMatrix& leq) {
  const std::size_t n = leq.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq.test(a, a)) return "not reflexive at " + std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq.test(a, b) && leq.test(b, a))
        return "not antisymmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      // a <= b implies up(b) is a subset of up(a)
      if (leq.test(a, b) && !leq.row(b).is_subset_of(leq.row(a)))
        return "not transitive through (" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
  }
  return std::nullopt;
}

ContactStructure::ContactStructure(std::vector<std::string> names, std::size_t bottom, BitMatrix leq,
                                   BitMatrix contact, Kind kind)
    : names_(std::move(names)), bottom_(bottom), leq_(std::move(leq)), contact_(std::move(contact)), kind_(kind) {
  const std::size_t n = names_.size();
  if (n == 0) throw Error(Errc::InvalidOrder, "empty carrier");
  if (leq_.size() != n || contact_.size() != n) throw Error(Errc::InvalidOrder, "table size mismatch");
  if (bottom_ >= n) throw Error(Errc::UnknownElement, "bottom index out of range");
  for (std::size_t i = 0; i < n; ++i)
    if (!lookup_.emplace(names_[i], i).second) throw Error(Errc::DuplicateElement, "'" + names_[i] + "'");
  if (auto defect = order_defect(leq_)) throw Error(Errc::InvalidOrder, *defect);
  if (leq_.row(bottom_).count() != n) throw Error(Errc::InvalidOrder, "'" + names_[bottom_] + "' is not least");
  geq_ = leq_.transpose();
  if (kind_ == Kind::Semilattice)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (!join(a, b))
          throw Error(Errc::NotSemilattice, "no join of '" + names_[a] + "' and '" + names_[b] + "'");
}

ContactStructure ContactStructure::from_pairs(std::vector<std::string> names, const std::string& bottom,
                                              const std::vector<NamePair>& order_pairs,
                                              const std::vector<NamePair>& contact_pairs, Kind kind) {
  BitMatrix leq = normalize_order(order_pairs, names, bottom);
  std::unordered_map<std::string, std::size_t> ix;
  for (std::size_t i = 0; i < names.size(); ++i) ix.emplace(names[i], i);
  BitMatrix contact(names.size());
  for (const auto& [a, b] : contact_pairs) {
    auto ia = ix.find(a), ib = ix.find(b);
    if (ia == ix.end()) throw Error(Errc::UnknownElement, "'" + a + "'");
    if (ib == ix.end()) throw Error(Errc::UnknownElement, "'" + b + "'");
    contact.set(ia->second, ib->second);
    contact.set(ib->second, ia->second);
  }
  const std::size_t bot = ix.at(bottom);
  return ContactStructure(std::move(names), bot, std::move(leq), std::move(contact), kind);
}

std::optional<std::size_t> ContactStructure::find(const std::string& name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t ContactStructure::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw Error(Errc::UnknownElement, "'" + name + "'");
  return *i;
}

Bitset ContactStructure::nonzero_down(std::size_t a) const {
  Bitset d = down(a);
  d.reset(bottom_);
  return d;
}

std::optional<std::size_t> ContactStructure::lub(const Bitset& set) const {
  Bitset ub = Bitset::full(size());
  set.for_each([&](std::size_t x) { ub &= up(x); });
  // The least upper bound is the upper bound whose up-set contains every upper bound.
  std::optional<std::size_t> result;
  ub.for_each([&](std::size_t u) {
    if (!result && ub.is_subset_of(up(u))) result = u;
  });
  return result;
}

std::optional<std::size_t> ContactStructure::glb(const Bitset& set) const {
  Bitset lb = Bitset::full(size());
  set.for_each([&](std::size_t x) { lb &= down(x); });
  std::optional<std::size_t> result;
  lb.for_each([&](std::size_t l) {
    if (!result && lb.is_subset_of(down(l))) result = l;
  });
  return result;
}

std::optional<std::size_t> ContactStructure::join(std::size_t a, std::size_t b) const {
  Bitset s(size());
  s.set(a);
  s.set(b);
  return lub(s);
}

std::optional<std::size_t> ContactStructure::meet(std::size_t a, std::size_t b) const {
  Bitset s(size());
  s.set(a);
  s.set(b);
  return glb(s);
}

std::size_t ContactStructure::join_or_throw(std::size_t a, std::size_t b) const {
  auto j = join(a, b);
  if (!j) throw Error(Errc::NotSemilattice, "no join of '" + names_[a] + "' and '" + names_[b] + "'");
  return *j;
}

std::vector<IndexPair> ContactStructure::covers() const {
  std::vector<IndexPair> out;
  for (std::size_t a = 0; a < size(); ++a)
    up(a).for_each([&](std::size_t b) {
      if (a == b) return;
      // a < b is a cover iff up(a) ∩ down(b) = {a, b}
      if ((up(a) & down(b)).count() == 2) out.emplace_back(a, b);
    });
  return out;
}

ContactStructure ContactStructure::with_contact(BitMatrix contact) const {
  return ContactStructure(names_, bottom_, leq_, std::move(contact), kind_);
}

ContactStructure ContactStructure::with_kind(Kind kind) const {
  return ContactStructure(names_, bottom_, leq_, contact_, kind);
}

ContactStructure ContactStructure::renamed(std::vector<std::string> names) const {
  return ContactStructure(std::move(names), bottom_, leq_, contact_, kind_);
}

BottomlessStructure::BottomlessStructure(std::vector<std::string> names, BitMatrix leq, BitMatrix contact)
    : names_(std::move(names)), leq_(std::move(leq)), contact_(std::move(contact)) {
  const std::size_t n = names_.size();
  if (leq_.size() != n || contact_.size() != n) throw Error(Errc::InvalidOrder, "table size mismatch");
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i)
    if (!seen.emplace(names_[i], i).second) throw Error(Errc::DuplicateElement, "'" + names_[i] + "'");
  if (auto defect = order_defect(leq_)) throw Error(Errc::InvalidOrder, *defect);
}

ClosureOperator::ClosureOperator(ContactStructure base, std::vector<std::size_t> k)
    : base_(std::move(base)), k_(std::move(k)) {
  const std::size_t n = base_.size();
  if (k_.size() != n) throw Error(Errc::InvalidClosure, "table size mismatch");
  for (std::size_t a = 0; a < n; ++a) {
    if (k_[a] >= n) throw Error(Errc::InvalidClosure, "image out of range");
    if (!base_.leq(a, k_[a])) throw Error(Errc::InvalidClosure, "not extensive at '" + base_.name(a) + "'");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (k_[k_[a]] != k_[a]) throw Error(Errc::InvalidClosure, "not idempotent at '" + base_.name(a) + "'");
    for (std::size_t b = 0; b < n; ++b)
      if (base_.leq(a, b) && !base_.leq(k_[a], k_[b]))
        throw Error(Errc::InvalidClosure,
                    "not isotone at ('" + base_.name(a) + "','" + base_.name(b) + "')");
  }
}

}  // namespace contact
