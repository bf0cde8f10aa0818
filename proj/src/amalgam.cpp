#include "contact/amalgam.hpp"

#include <algorithm>
#include <set>

#include "contact/enumerate.hpp"

namespace contact {

namespace {

[[noreturn]] void precondition(const std::string& what) { throw Error(Errc::PreconditionViolation, what); }

void require_induced(const ContactStructure& outer, const ContactStructure& base, const char* label) {
  for (std::size_t x = 0; x < base.size(); ++x) {
    auto ox = outer.find(base.name(x));
    if (!ox) precondition(std::string("'") + base.name(x) + "' from C is missing in " + label);
    for (std::size_t y = 0; y < base.size(); ++y) {
      const std::size_t oy = outer.index(base.name(y));
      const std::string pair = "('" + base.name(x) + "','" + base.name(y) + "')";
      if (outer.leq(*ox, oy) != base.leq(x, y)) precondition("order of C disagrees with " + std::string(label) + " at " + pair);
      if (outer.contact(*ox, oy) != base.contact(x, y))
        precondition("contact of C disagrees with " + std::string(label) + " at " + pair);
      if (outer.is_semilattice() && base.is_semilattice() &&
          outer.join_or_throw(*ox, oy) != outer.index(base.name(base.join_or_throw(x, y))))
        precondition("C is not join-closed in " + std::string(label) + " at " + pair);
    }
  }
}

}  // namespace

AmalgamInstance::AmalgamInstance(ContactStructure a, ContactStructure b, ContactStructure c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  const std::string& bot = c_.name(c_.bottom());
  if (a_.name(a_.bottom()) != bot || b_.name(b_.bottom()) != bot) precondition("bottoms of A, B and C differ");
  for (const auto& name : c_.names())
    if (!a_.find(name) || !b_.find(name)) precondition("'" + name + "' of C is missing from A or B");
  require_induced(a_, c_, "A");
  require_induced(b_, c_, "B");
  for (const auto& name : a_.names())
    if (b_.find(name) && !c_.find(name)) precondition("'" + name + "' is shared by A and B but not in C");
  for (const auto* s : {&a_, &b_, &c_})
    if (!check_contact_axioms(*s).all_pass()) precondition("an input structure fails the contact axioms");
}

bool AmalgamInstance::semilattice() const {
  return a_.is_semilattice() && b_.is_semilattice() && c_.is_semilattice();
}

AmalgamInstance glue(const ContactStructure& a, const ContactStructure& b, const ContactStructure& c,
                     const std::vector<std::size_t>& into_a, const std::vector<std::size_t>& into_b,
                     const std::string& prefix_a, const std::string& prefix_b) {
  auto rename = [&](const ContactStructure& s, const std::vector<std::size_t>& into, const std::string& prefix) {
    std::vector<std::string> names(s.size());
    std::vector<bool> hit(s.size(), false);
    for (std::size_t z = 0; z < c.size(); ++z) {
      names[into[z]] = c.name(z);
      hit[into[z]] = true;
    }
    for (std::size_t x = 0; x < s.size(); ++x)
      if (!hit[x]) names[x] = prefix + s.name(x);
    return s.renamed(std::move(names));
  };
  return AmalgamInstance(rename(a, into_a, prefix_a), rename(b, into_b, prefix_b), c);
}

OrderAmalgam jonsson_order_amalgam(const AmalgamInstance& inst) {
  const ContactStructure& a = inst.a();
  const ContactStructure& b = inst.b();
  OrderAmalgam out;
  out.names = a.names();
  out.bottom = a.bottom();
  for (std::size_t x = 0; x < a.size(); ++x) out.from_a.push_back(x);
  for (std::size_t y = 0; y < b.size(); ++y) {
    if (auto shared = a.find(b.name(y))) {
      out.from_b.push_back(*shared);
    } else {
      out.from_b.push_back(out.names.size());
      out.names.push_back(b.name(y));
    }
  }
  const std::size_t n = out.names.size();
  auto lift = [n](const Bitset& row, const std::vector<std::size_t>& into) {
    Bitset r(n);
    row.for_each([&](std::size_t i) { r.set(into[i]); });
    return r;
  };
  std::vector<Bitset> up_a, up_b;
  for (std::size_t x = 0; x < a.size(); ++x) up_a.push_back(lift(a.up(x), out.from_a));
  for (std::size_t y = 0; y < b.size(); ++y) up_b.push_back(lift(b.up(y), out.from_b));
  // Shared elements, as amalgam indices with their positions in a and b.
  std::vector<std::pair<std::size_t, std::size_t>> shared;  // (a index, b index)
  for (std::size_t y = 0; y < b.size(); ++y)
    if (auto x = a.find(b.name(y))) shared.emplace_back(*x, y);

  out.leq = BitMatrix(n);
  for (std::size_t x = 0; x < a.size(); ++x) {
    Bitset& row = out.leq.row(out.from_a[x]);
    row |= up_a[x];
    for (auto [za, zb] : shared)
      if (a.leq(x, za)) row |= up_b[zb];
  }
  for (std::size_t y = 0; y < b.size(); ++y) {
    Bitset& row = out.leq.row(out.from_b[y]);
    row |= up_b[y];
    for (auto [za, zb] : shared)
      if (b.leq(y, zb)) row |= up_a[za];
  }
  if (auto defect = order_defect(out.leq))
    throw Error(Errc::Internal, "amalgamated order is not a partial order: " + *defect);
  return out;
}

SuperamalgamationReport verify_superamalgamation(const AmalgamInstance& inst, const OrderAmalgam& carrier,
                                                 const ContactStructure& d) {
  return verify_superamalgamation(inst, carrier, [&](std::size_t x, std::size_t y) { return d.leq(x, y); });
}

AmalgamResult thm5_contact_amalgam(const AmalgamInstance& inst) {
  OrderAmalgam carrier = jonsson_order_amalgam(inst);
  const std::size_t n = carrier.names.size();
  BitMatrix seed(n);
  for (std::size_t x = 0; x < inst.a().size(); ++x)
    inst.a().contact_table().row(x).for_each([&](std::size_t y) { seed.set(carrier.from_a[x], carrier.from_a[y]); });
  for (std::size_t x = 0; x < inst.b().size(); ++x)
    inst.b().contact_table().row(x).for_each([&](std::size_t y) { seed.set(carrier.from_b[x], carrier.from_b[y]); });
  ContactStructure d(carrier.names, carrier.bottom, carrier.leq, up_closure(seed, carrier.leq), Kind::Poset);
  StructureMap from_a(inst.a().with_kind(Kind::Poset), d, carrier.from_a);
  StructureMap from_b(inst.b().with_kind(Kind::Poset), d, carrier.from_b);
  AxiomReport axioms = check_contact_axioms(d);
  SuperamalgamationReport super = verify_superamalgamation(inst, carrier, d);
  const bool strong_size = d.size() + inst.c().size() == inst.a().size() + inst.b().size();
  return {std::move(carrier), std::move(d), std::move(from_a), std::move(from_b), std::move(axioms), std::move(super),
          strong_size};
}

SemilatticeAmalgamResult thm5_semilattice_amalgam(const AmalgamInstance& inst) {
  if (!inst.semilattice()) throw Error(Errc::NotSemilattice, "semilattice amalgamation needs A, B and C semilattices");
  AmalgamResult poset = thm5_contact_amalgam(inst);
  const ContactStructure& d = poset.d;

  std::size_t joins_checked = 0;
  for (const auto* side : {&inst.a(), &inst.b()}) {
    const auto& into = side == &inst.a() ? poset.carrier.from_a : poset.carrier.from_b;
    for (std::size_t x = 0; x < side->size(); ++x)
      for (std::size_t y = x + 1; y < side->size(); ++y) {
        ++joins_checked;
        const auto lub = d.join(into[x], into[y]);
        if (!lub || *lub != into[side->join_or_throw(x, y)])
          throw Error(Errc::JoinNotPreserved, "join of '" + side->name(x) + "' and '" + side->name(y) +
                                                  "' is not a least upper bound in the amalgam");
      }
  }

  Representation closure = cor3_embed(d);
  const ContactStructure& raw = closure.family.structure();
  std::vector<std::string> names = raw.names();
  std::set<std::string> taken(d.names().begin(), d.names().end());
  for (std::size_t i = 0; i < names.size(); ++i) {
    while (taken.count(names[i])) names[i] = "~" + names[i];
    taken.insert(names[i]);
  }
  for (std::size_t x = 0; x < d.size(); ++x) names[closure.map(x)] = d.name(x);
  ContactStructure e = raw.renamed(std::move(names));

  std::vector<std::size_t> fa, fb;
  for (std::size_t x : poset.carrier.from_a) fa.push_back(closure.map(x));
  for (std::size_t y : poset.carrier.from_b) fb.push_back(closure.map(y));
  StructureMap from_a(inst.a(), e, std::move(fa));
  StructureMap from_b(inst.b(), e, std::move(fb));
  // Order in E between images, pulled back to amalgam indices.
  SuperamalgamationReport super = verify_superamalgamation(
      inst, poset.carrier, [&](std::size_t x, std::size_t y) { return e.leq(closure.map(x), closure.map(y)); });
  return {std::move(poset), std::move(closure), std::move(e), std::move(from_a), std::move(from_b), std::move(super),
          joins_checked};
}

std::vector<Bitset> substructure_subsets(const ContactStructure& s, std::size_t max_size) {
  const std::size_t n = s.size();
  if (!max_size && n > 20) throw Error(Errc::PreconditionViolation, "unbounded subset scan limited to 20 elements");
  const std::size_t limit = max_size ? max_size : n;
  std::vector<std::size_t> others;
  for (std::size_t x = 0; x < n; ++x)
    if (x != s.bottom()) others.push_back(x);
  std::vector<Bitset> out;
  Bitset current(n);
  current.set(s.bottom());
  auto join_closed = [&](const Bitset& sub) {
    if (!s.is_semilattice()) return true;
    for (std::size_t x : sub.indices())
      for (std::size_t y : sub.indices())
        if (!sub.test(s.join_or_throw(x, y))) return false;
    return true;
  };
  // Combinations of the non-bottom elements, by size and then lexicographically.
  for (std::size_t extra = 0; extra + 1 <= limit && extra <= others.size(); ++extra) {
    std::vector<std::size_t> pick(extra);
    auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
      if (depth == extra) {
        if (join_closed(current)) out.push_back(current);
        return;
      }
      for (std::size_t i = from; i + (extra - depth) <= others.size(); ++i) {
        current.set(others[i]);
        self(self, depth + 1, i + 1);
        current.reset(others[i]);
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

AmalgamInstance random_instance(const AgeCatalog& catalog, std::size_t max_size, std::mt19937_64& rng) {
  std::vector<const ContactStructure*> pool;
  for (const auto& item : catalog.items())
    if (item.size() <= max_size) pool.push_back(&item);
  if (pool.empty()) throw Error(Errc::PreconditionViolation, "catalog has no items within the size bound");
  auto pick = [&](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const ContactStructure& a = *pool[pick(pool.size())];
    const std::vector<Bitset> subs = substructure_subsets(a);
    const ContactStructure c = induced_substructure(a, subs[pick(subs.size())]);
    const ContactStructure& b = *pool[pick(pool.size())];
    auto into_b = find_embeddings(c, b);
    if (into_b.empty()) continue;
    std::vector<std::size_t> into_a;
    for (const auto& name : c.names()) into_a.push_back(a.index(name));
    return glue(a, b, c, into_a, into_b[pick(into_b.size())]);
  }
  throw Error(Errc::Internal, "could not assemble a random amalgamation instance");
}

}  // namespace contact
