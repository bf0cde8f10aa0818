#include "contact/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "contact/axioms.hpp"

namespace contact {

namespace {

using Signature = std::vector<std::size_t>;

std::vector<std::size_t> refine_colors(const ContactStructure& s) {
  const std::size_t n = s.size();
  std::vector<Signature> sig(n);
  for (std::size_t x = 0; x < n; ++x)
    sig[x] = {x == s.bottom() ? 0U : 1U, s.down(x).count(), s.up(x).count(), s.contact_table().row(x).count(),
              s.contact(x, x) ? 1U : 0U};
  std::vector<std::size_t> color(n);
  std::size_t classes = 0;
  while (true) {
    std::vector<Signature> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t x = 0; x < n; ++x)
      color[x] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin());
    if (sorted.size() == classes) break;
    classes = sorted.size();
    for (std::size_t x = 0; x < n; ++x) {
      auto gather = [&](const Bitset& row) {
        std::vector<std::size_t> cs;
        row.for_each([&](std::size_t y) {
          if (y != x) cs.push_back(color[y]);
        });
        std::sort(cs.begin(), cs.end());
        return cs;
      };
      Signature next{color[x]};
      for (const auto* row : {&s.up(x), &s.down(x), &s.contact_table().row(x)}) {
        auto cs = gather(*row);
        next.push_back(cs.size());
        next.insert(next.end(), cs.begin(), cs.end());
      }
      sig[x] = std::move(next);
    }
  }
  return color;
}

std::string encode(const ContactStructure& s, const std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  std::string out;
  out.reserve(2 + n * n + n * (n + 1) / 2);
  out.push_back(s.is_semilattice() ? 'S' : 'P');
  out.push_back(static_cast<char>('A' + n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back(s.leq(order[i], order[j]) ? '1' : '0');
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.push_back(s.contact(order[i], order[j]) ? '1' : '0');
  return out;
}

}  // namespace

CanonicalForm canonical_form(const ContactStructure& s) {
  const std::vector<std::size_t> color = refine_colors(s);
  const std::size_t n = s.size();
  const std::size_t classes = *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<std::size_t>> members(classes);
  for (std::size_t x = 0; x < n; ++x) members[color[x]].push_back(x);

  CanonicalForm best;
  std::vector<std::size_t> order;
  order.reserve(n);
  // Cartesian product of the permutations of each class.
  auto search = [&](auto&& self, std::size_t cls) -> void {
    if (cls == classes) {
      std::string key = encode(s, order);
      if (best.key.empty() || key < best.key) {
        best.key = std::move(key);
        best.relabel = order;
      }
      return;
    }
    std::vector<std::size_t> group = members[cls];
    do {
      order.insert(order.end(), group.begin(), group.end());
      self(self, cls + 1);
      order.resize(order.size() - group.size());
    } while (std::next_permutation(group.begin(), group.end()));
  };
  search(search, 0);
  return best;
}

ContactStructure permute(const ContactStructure& s, const std::vector<std::size_t>& order,
                         std::optional<std::vector<std::string>> names) {
  const std::size_t n = s.size();
  if (order.size() != n) throw Error(Errc::PreconditionViolation, "permutation size mismatch");
  BitMatrix leq(n), rel(n);
  std::size_t bottom = 0;
  std::vector<std::string> new_names;
  for (std::size_t p = 0; p < n; ++p) {
    if (order[p] == s.bottom()) bottom = p;
    new_names.push_back(s.name(order[p]));
    for (std::size_t q = 0; q < n; ++q) {
      leq.assign(p, q, s.leq(order[p], order[q]));
      rel.assign(p, q, s.contact(order[p], order[q]));
    }
  }
  return ContactStructure(names ? std::move(*names) : std::move(new_names), bottom, std::move(leq), std::move(rel),
                          s.kind());
}

namespace {
std::vector<std::string> numeric_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}
}  // namespace

ContactStructure canonical_structure(const ContactStructure& s) {
  return permute(s, canonical_form(s).relabel, numeric_names(s.size()));
}

ContactStructure carrier(const BitMatrix& leq, Kind kind) {
  return ContactStructure(numeric_names(leq.size()), 0, leq, BitMatrix(leq.size()), kind);
}

const std::vector<BitMatrix>& enumerate_posets_with_bottom(std::size_t n) {
  if (n == 0 || n > 8) throw Error(Errc::PreconditionViolation, "poset enumeration supports 1 to 8 elements");
  static std::mutex mutex;
  static std::vector<std::vector<BitMatrix>> cache;
  std::lock_guard lock(mutex);
  if (cache.empty()) cache.push_back({BitMatrix::identity(1)});
  // Level m + 1 arises from level m by adding a new maximal element whose
  // strict down-set is an order ideal containing the bottom.
  while (cache.size() < n) {
    const std::size_t m = cache.size();
    std::map<std::string, BitMatrix> next;
    for (const BitMatrix& leq : cache.back()) {
      const ContactStructure base = carrier(leq);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (!(mask & 1U)) continue;
        Bitset ideal(m);
        for (std::size_t i = 0; i < m; ++i)
          if (mask >> i & 1U) ideal.set(i);
        bool closed = true;
        ideal.for_each([&](std::size_t x) { closed = closed && base.down(x).is_subset_of(ideal); });
        if (!closed) continue;
        BitMatrix grown(m + 1);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) grown.assign(i, j, leq.test(i, j));
        ideal.for_each([&](std::size_t x) { grown.set(x, m); });
        grown.set(m, m);
        const ContactStructure c = carrier(grown);
        const CanonicalForm form = canonical_form(c);
        if (!next.count(form.key)) next.emplace(form.key, permute(c, form.relabel).order());
      }
    }
    std::vector<BitMatrix> level;
    for (auto& [key, leq] : next) level.push_back(std::move(leq));
    cache.push_back(std::move(level));
  }
  return cache[n - 1];
}

std::vector<ContactStructure> contact_relations(const ContactStructure& base) {
  const BitMatrix overlap = overlap_relation(base);
  std::vector<IndexPair> free_pairs;
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = a; b < base.size(); ++b)
      if (a != base.bottom() && b != base.bottom() && !overlap.test(a, b)) free_pairs.emplace_back(a, b);
  if (free_pairs.size() > 24) throw Error(Errc::PreconditionViolation, "too many free pairs to enumerate");
  std::vector<ContactStructure> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_pairs.size()); ++mask) {
    BitMatrix rel = overlap;
    for (std::size_t i = 0; i < free_pairs.size(); ++i)
      if (mask >> i & 1U) {
        rel.set(free_pairs[i].first, free_pairs[i].second);
        rel.set(free_pairs[i].second, free_pairs[i].first);
      }
    if (up_closure(rel, base.order()) == rel) out.push_back(base.with_contact(std::move(rel)));
  }
  return out;
}

std::vector<ContactStructure> contact_relations_by_axioms(const ContactStructure& base) {
  const std::size_t n = base.size();
  if (n > 4) throw Error(Errc::PreconditionViolation, "direct relation scan limited to 4 elements");
  std::vector<ContactStructure> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
    BitMatrix rel(n);
    for (std::size_t i = 0; i < n * n; ++i)
      if (mask >> i & 1U) rel.set(i / n, i % n);
    ContactStructure s = base.with_contact(std::move(rel));
    if (check_contact_axioms(s).all_pass()) out.push_back(std::move(s));
  }
  return out;
}

AgeCatalog::AgeCatalog(std::size_t bound, Kind kind, std::vector<ContactStructure> items)
    : bound_(bound), kind_(kind), items_(std::move(items)) {
  for (std::size_t i = 0; i < items_.size(); ++i)
    if (!index_.emplace(canonical_form(items_[i]).key, i).second)
      throw Error(Errc::Internal, "catalog holds two isomorphic items");
}

std::vector<const ContactStructure*> AgeCatalog::items_of_size(std::size_t n) const {
  std::vector<const ContactStructure*> out;
  for (const auto& item : items_)
    if (item.size() == n) out.push_back(&item);
  return out;
}

std::size_t AgeCatalog::count_of_size(std::size_t n) const { return items_of_size(n).size(); }

std::optional<std::size_t> AgeCatalog::find(const ContactStructure& s) const {
  if (s.kind() != kind_) return std::nullopt;
  auto it = index_.find(canonical_form(s).key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<ContactStructure> enumerate_contact_structures(const ContactStructure& base) {
  std::map<std::string, ContactStructure> unique;
  for (auto& s : contact_relations(base)) {
    CanonicalForm form = canonical_form(s);
    if (!unique.count(form.key))
      unique.emplace(form.key, permute(s, form.relabel, numeric_names(s.size())));
  }
  std::vector<ContactStructure> out;
  for (auto& [key, s] : unique) out.push_back(std::move(s));
  return out;
}

AgeCatalog build_catalog(std::size_t bound, Kind kind) {
  std::vector<ContactStructure> items;
  for (std::size_t n = 1; n <= bound; ++n)
    for (const BitMatrix& leq : enumerate_posets_with_bottom(n)) {
      ContactStructure base = carrier(leq);
      if (kind == Kind::Semilattice) {
        if (!is_join_semilattice(base)) continue;
        base = base.with_kind(Kind::Semilattice);
      }
      for (auto& s : enumerate_contact_structures(base)) items.push_back(std::move(s));
    }
  return AgeCatalog(bound, kind, std::move(items));
}

bool is_join_semilattice(const ContactStructure& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!s.join(a, b)) return false;
  return true;
}

bool is_lattice(const ContactStructure& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!s.join(a, b) || !s.meet(a, b)) return false;
  return true;
}

bool is_distributive(const ContactStructure& s) {
  if (!is_lattice(s)) return false;
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t lhs = *s.meet(a, *s.join(b, c));
        const std::size_t rhs = *s.join(*s.meet(a, b), *s.meet(a, c));
        if (lhs != rhs) return false;
      }
  return true;
}

bool is_distributive_by_sublattices(const ContactStructure& s) {
  if (!is_lattice(s)) return false;
  const std::size_t n = s.size();
  if (n < 5) return true;
  std::vector<std::size_t> pick(5);
  // Iterate 5-element subsets in lexicographic order.
  std::vector<bool> chosen(n, false);
  std::fill(chosen.end() - 5, chosen.end(), true);
  do {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (chosen[i]) pick[k++] = i;
    Bitset set(n);
    for (std::size_t x : pick) set.set(x);
    bool closed = true;
    for (std::size_t i = 0; i < 5 && closed; ++i)
      for (std::size_t j = i + 1; j < 5 && closed; ++j)
        closed = set.test(*s.join(pick[i], pick[j])) && set.test(*s.meet(pick[i], pick[j]));
    if (!closed) continue;
    // A 5-element lattice is M3 or N5 iff its three middle elements have
    // zero or exactly one comparable pair.
    const std::size_t top = *s.lub(set), bot = *s.glb(set);
    std::vector<std::size_t> mid;
    for (std::size_t x : pick)
      if (x != top && x != bot) mid.push_back(x);
    std::size_t comparable = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (s.leq(mid[i], mid[j]) || s.leq(mid[j], mid[i])) ++comparable;
    if (comparable <= 1) return false;
  } while (std::next_permutation(chosen.begin(), chosen.end()));
  return true;
}

std::vector<ContactStructure> distributive_lattices(std::size_t max_size) {
  std::vector<ContactStructure> out;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (const BitMatrix& leq : enumerate_posets_with_bottom(n)) {
      const ContactStructure base = carrier(leq);
      if (!is_distributive(base)) continue;
      const ContactStructure lattice = base.with_kind(Kind::Semilattice);
      out.push_back(lattice.with_contact(overlap_relation(lattice)));
    }
  return out;
}

}  // namespace contact
