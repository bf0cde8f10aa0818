#include "contact/axioms.hpp"

#include <sstream>

namespace contact {

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Sym: return "Sym";
    case Axiom::Emp: return "Emp";
    case Axiom::Ext: return "Ext";
    case Axiom::Ref: return "Ref";
    case Axiom::Inh: return "Inh";
    case Axiom::Add: return "Add";
    case Axiom::RefStar: return "Ref*";
  }
  return "?";
}

bool AxiomReport::all_pass() const {
  for (const auto& r : results)
    if (!r.holds) return false;
  return true;
}

const AxiomResult* AxiomReport::find(Axiom axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return &r;
  return nullptr;
}

bool AxiomReport::holds(Axiom axiom) const {
  const auto* r = find(axiom);
  return r && r->holds;
}

std::string AxiomReport::describe() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << "(" << axiom_name(r.axiom) << ") " << (r.holds ? "pass" : "FAIL");
    if (!r.holds) out << ": " << r.detail;
    out << "\n";
  }
  return out.str();
}

namespace {

AxiomResult pass(Axiom axiom) { return {axiom, true, {}, {}}; }

AxiomResult fail(Axiom axiom, std::vector<std::size_t> witness, std::string detail) {
  return {axiom, false, std::move(witness), std::move(detail)};
}

template <typename Names>
std::string nm(const Names& s, std::size_t i) {
  return "'" + s.name(i) + "'";
}

template <typename S>
AxiomResult check_sym(const S& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (s.contact(a, b) && !s.contact(b, a))
        return fail(Axiom::Sym, {a, b}, nm(s, a) + " δ " + nm(s, b) + " but not conversely");
  return pass(Axiom::Sym);
}

// (Ext) is equivalent to: every row is an up-set, and rows grow along the order.
template <typename S>
AxiomResult check_ext(const S& s) {
  const BitMatrix& leq = s.order();
  const BitMatrix& rel = s.contact_table();
  for (std::size_t a = 0; a < s.size(); ++a) {
    const Bitset& row = rel.row(a);
    std::optional<AxiomResult> bad;
    row.for_each([&](std::size_t b) {
      if (bad || leq.row(b).is_subset_of(row)) return;
      const std::size_t b1 = (leq.row(b) - row).find_first();
      bad = fail(Axiom::Ext, {a, b, a, b1},
                 nm(s, a) + " δ " + nm(s, b) + ", " + nm(s, b) + " ≤ " + nm(s, b1) + ", but not " + nm(s, a) +
                     " δ " + nm(s, b1));
    });
    if (bad) return *bad;
    leq.row(a).for_each([&](std::size_t a1) {
      if (bad || row.is_subset_of(rel.row(a1))) return;
      const std::size_t b = (row - rel.row(a1)).find_first();
      bad = fail(Axiom::Ext, {a, b, a1, b},
                 nm(s, a) + " δ " + nm(s, b) + ", " + nm(s, a) + " ≤ " + nm(s, a1) + ", but not " + nm(s, a1) +
                     " δ " + nm(s, b));
    });
    if (bad) return *bad;
  }
  return pass(Axiom::Ext);
}

}  // namespace

AxiomReport check_contact_axioms(const ContactStructure& s, bool require_add) {
  if (require_add && !s.is_semilattice())
    throw Error(Errc::AddOnPoset, "(Add) is not expressible on a poset without joins");
  const std::size_t n = s.size();
  const std::size_t zero = s.bottom();
  AxiomReport report;

  report.results.push_back(check_sym(s));

  {
    AxiomResult r = pass(Axiom::Emp);
    for (std::size_t x = 0; x < n && r.holds; ++x)
      if (s.contact(zero, x)) r = fail(Axiom::Emp, {zero, x}, "bottom " + nm(s, zero) + " δ " + nm(s, x));
      else if (s.contact(x, zero)) r = fail(Axiom::Emp, {x, zero}, nm(s, x) + " δ bottom " + nm(s, zero));
    report.results.push_back(r);
  }

  report.results.push_back(check_ext(s));

  {
    AxiomResult r = pass(Axiom::Ref);
    for (std::size_t x = 0; x < n && r.holds; ++x)
      if (x != zero && !s.contact(x, x)) r = fail(Axiom::Ref, {x}, "not " + nm(s, x) + " δ " + nm(s, x));
    report.results.push_back(r);
  }

  {
    // n ≠ 0, n ≤ a, n ≤ b ⇒ a δ b, i.e. up(n) × up(n) ⊆ δ.
    AxiomResult r = pass(Axiom::Inh);
    for (std::size_t m = 0; m < n && r.holds; ++m) {
      if (m == zero) continue;
      const Bitset& up = s.up(m);
      up.for_each([&](std::size_t a) {
        if (!r.holds || up.is_subset_of(s.contact_table().row(a))) return;
        const std::size_t b = (up - s.contact_table().row(a)).find_first();
        r = fail(Axiom::Inh, {m, a, b},
                 nm(s, m) + " ≤ " + nm(s, a) + ", " + nm(s, m) + " ≤ " + nm(s, b) + ", but not " + nm(s, a) +
                     " δ " + nm(s, b));
      });
    }
    report.results.push_back(r);
  }

  if (require_add) {
    AxiomResult r = pass(Axiom::Add);
    for (std::size_t a = 0; a < n && r.holds; ++a)
      for (std::size_t b = 0; b < n && r.holds; ++b)
        for (std::size_t c = 0; c < n && r.holds; ++c) {
          const std::size_t bc = s.join_or_throw(b, c);
          if (s.contact(a, bc) && !s.contact(a, b) && !s.contact(a, c))
            r = fail(Axiom::Add, {a, b, c},
                     nm(s, a) + " δ " + nm(s, b) + "+" + nm(s, c) + " = " + nm(s, bc) + ", but neither " + nm(s, a) +
                         " δ " + nm(s, b) + " nor " + nm(s, a) + " δ " + nm(s, c));
        }
    report.results.push_back(r);
  }
  return report;
}

AxiomReport check_bottomless_axioms(const BottomlessStructure& s) {
  AxiomReport report;
  report.results.push_back(check_sym(s));
  report.results.push_back(check_ext(s));
  AxiomResult r = pass(Axiom::RefStar);
  for (std::size_t x = 0; x < s.size() && r.holds; ++x)
    if (!s.contact(x, x)) r = fail(Axiom::RefStar, {x}, "not " + nm(s, x) + " δ " + nm(s, x));
  report.results.push_back(r);
  return report;
}

void require_valid(const ContactStructure& s) {
  const AxiomReport report = check_contact_axioms(s);
  for (const auto& r : report.results)
    if (!r.holds) throw Error(Errc::AxiomViolation, "(" + std::string(axiom_name(r.axiom)) + ") " + r.detail);
}

BitMatrix overlap_relation(const ContactStructure& s) {
  const std::size_t n = s.size();
  std::vector<Bitset> below;
  below.reserve(n);
  for (std::size_t a = 0; a < n; ++a) below.push_back(s.nonzero_down(a));
  BitMatrix out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      if (below[a].intersects(below[b])) {
        out.set(a, b);
        out.set(b, a);
      }
  return out;
}

BitMatrix up_closure(const BitMatrix& rel, const BitMatrix& leq) {
  const std::size_t n = rel.size();
  // step[a] = union of up(b) over b with (a, b) in rel
  BitMatrix step(n);
  for (std::size_t a = 0; a < n; ++a) rel.row(a).for_each([&](std::size_t b) { step.row(a) |= leq.row(b); });
  BitMatrix out(n);
  for (std::size_t a = 0; a < n; ++a) leq.row(a).for_each([&](std::size_t a1) { out.row(a1) |= step.row(a); });
  return out;
}

ContactStructure close_contact(const ContactStructure& s, const std::vector<IndexPair>& seed) {
  BitMatrix rel = overlap_relation(s);
  for (auto [a, b] : seed) {
    if (a >= s.size() || b >= s.size()) throw Error(Errc::UnknownElement, "seed index out of range");
    if (a == s.bottom() || b == s.bottom())
      throw Error(Errc::BottomInSeed, "seed pair ('" + s.name(a) + "','" + s.name(b) + "') touches bottom");
    rel.set(a, b);
    rel.set(b, a);
  }
  ContactStructure out = s.with_contact(up_closure(rel, s.order()));
  if (!check_contact_axioms(out).all_pass()) throw Error(Errc::Internal, "close_contact produced an invalid relation");
  return out;
}

ContactStructure contact_from_closure(const ClosureOperator& k) {
  const ContactStructure& base = k.base();
  const std::size_t n = base.size();
  BitMatrix rel(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Bitset da = base.nonzero_down(k(a));
    for (std::size_t b = 0; b < n; ++b)
      if (da.intersects(base.nonzero_down(k(b)))) rel.set(a, b);
  }
  return base.with_contact(std::move(rel));
}

std::optional<IndexPair> closed_overlap_mismatch(const ClosureOperator& k) {
  const ContactStructure induced = contact_from_closure(k);
  const ContactStructure& base = k.base();
  const std::size_t n = base.size();
  Bitset closed_nonzero(n);
  for (std::size_t x = 0; x < n; ++x)
    if (k.is_closed(x) && x != base.bottom()) closed_nonzero.set(x);
  for (std::size_t c = 0; c < n; ++c) {
    if (!k.is_closed(c)) continue;
    for (std::size_t d = 0; d < n; ++d) {
      if (!k.is_closed(d)) continue;
      const bool overlap = (closed_nonzero & base.down(c) & base.down(d)).any();
      if (overlap != induced.contact(c, d)) return IndexPair{c, d};
    }
  }
  return std::nullopt;
}

ContactStructure closed_subposet(const ClosureOperator& k) {
  const ContactStructure& base = k.base();
  if (!k.is_closed(base.bottom())) throw Error(Errc::MissingBottom, "bottom is not closed");
  Bitset closed(base.size());
  for (std::size_t x = 0; x < base.size(); ++x)
    if (k.is_closed(x)) closed.set(x);
  return induced_substructure(contact_from_closure(k).with_kind(Kind::Poset), closed);
}

ContactStructure induced_substructure(const ContactStructure& s, const Bitset& subset) {
  if (!subset.test(s.bottom())) throw Error(Errc::MissingBottom, "subset omits bottom '" + s.name(s.bottom()) + "'");
  if (s.is_semilattice()) {
    for (std::size_t a : subset.indices())
      for (std::size_t b : subset.indices()) {
        const std::size_t j = s.join_or_throw(a, b);
        if (!subset.test(j))
          throw Error(Errc::NotJoinClosed, "'" + s.name(a) + "' + '" + s.name(b) + "' = '" + s.name(j) +
                                                "' is missing from the subset");
      }
  }
  const std::vector<std::size_t> keep = subset.indices();
  const std::size_t m = keep.size();
  std::vector<std::string> names;
  std::size_t bottom = 0;
  BitMatrix leq(m), rel(m);
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(s.name(keep[i]));
    if (keep[i] == s.bottom()) bottom = i;
    for (std::size_t j = 0; j < m; ++j) {
      leq.assign(i, j, s.leq(keep[i], keep[j]));
      rel.assign(i, j, s.contact(keep[i], keep[j]));
    }
  }
  return ContactStructure(std::move(names), bottom, std::move(leq), std::move(rel), s.kind());
}

ContactStructure induced_substructure(const ContactStructure& s, const std::vector<std::string>& subset) {
  Bitset bits(s.size());
  for (const auto& name : subset) bits.set(s.index(name));
  return induced_substructure(s, bits);
}

ContactStructure adjoin_bottom(const BottomlessStructure& s, const std::string& bottom_name) {
  const AxiomReport report = check_bottomless_axioms(s);
  for (const auto& r : report.results)
    if (!r.holds) throw Error(Errc::AxiomViolation, "(" + std::string(axiom_name(r.axiom)) + ") " + r.detail);
  for (const auto& name : s.names())
    if (name == bottom_name) throw Error(Errc::DuplicateElement, "bottom name '" + bottom_name + "' already used");
  const std::size_t n = s.size() + 1;
  std::vector<std::string> names{bottom_name};
  names.insert(names.end(), s.names().begin(), s.names().end());
  BitMatrix leq(n), rel(n);
  for (std::size_t x = 0; x < n; ++x) leq.set(0, x);
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      leq.assign(a + 1, b + 1, s.leq(a, b));
      rel.assign(a + 1, b + 1, s.contact(a, b));
    }
  return ContactStructure(std::move(names), 0, std::move(leq), std::move(rel), Kind::Poset);
}

BottomlessStructure drop_bottom(const ContactStructure& s) {
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (x != s.bottom()) keep.push_back(x);
  const std::size_t m = keep.size();
  std::vector<std::string> names;
  BitMatrix leq(m), rel(m);
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(s.name(keep[i]));
    for (std::size_t j = 0; j < m; ++j) {
      leq.assign(i, j, s.leq(keep[i], keep[j]));
      rel.assign(i, j, s.contact(keep[i], keep[j]));
    }
  }
  return BottomlessStructure(std::move(names), std::move(leq), std::move(rel));
}

Bitset generated_subsemilattice(const ContactStructure& s, const Bitset& gens) {
  Bitset out = gens;
  out.set(s.bottom());
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a : out.indices())
      for (std::size_t b : out.indices()) {
        const std::size_t j = s.join_or_throw(a, b);
        if (!out.test(j)) {
          out.set(j);
          grew = true;
        }
      }
  }
  return out;
}

}  // namespace contact
