#include "contact/fraisse.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "contact/amalgam.hpp"
#include "contact/axioms.hpp"
#include "contact/structure_map.hpp"

namespace contact {

std::string describe(const ExtensionType& type, const ContactStructure& s) {
  auto list = [&](const Bitset& set) {
    std::string out = "{";
    bool first = true;
    set.for_each([&](std::size_t i) {
      out += (first ? "" : ",") + s.name(i);
      first = false;
    });
    return out + "}";
  };
  std::string out = "below " + list(type.below) + " above " + list(type.above) + " contact " + list(type.contact);
  if (!type.joins.empty()) {
    out += " joins [";
    for (std::size_t i = 0; i < type.joins.size(); ++i)
      out += (i ? "," : "") + (type.joins[i] == ExtensionType::kSelf ? std::string("p") : s.name(type.joins[i]));
    out += "]";
  }
  return out;
}

namespace {

ExtensionType type_of(const ContactStructure& t, const std::vector<std::size_t>& inclusion, std::size_t p) {
  const std::size_t n = inclusion.size();
  ExtensionType type{Bitset(n), Bitset(n), Bitset(n), {}};
  for (std::size_t q = 0; q < n; ++q) {
    type.below.assign(q, t.leq(inclusion[q], p));
    type.above.assign(q, t.leq(p, inclusion[q]));
    type.contact.assign(q, t.contact(p, inclusion[q]));
  }
  if (t.is_semilattice()) {
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t j = t.join_or_throw(p, inclusion[q]);
      if (j == p) {
        type.joins.push_back(ExtensionType::kSelf);
      } else {
        auto it = std::find(inclusion.begin(), inclusion.end(), j);
        type.joins.push_back(static_cast<std::size_t>(it - inclusion.begin()));
      }
    }
  }
  return type;
}

struct CanonicalExtension {
  std::size_t item;
  std::vector<std::size_t> inclusion;  // canonical position -> item index
  std::size_t new_point;
  ExtensionType type;                  // over canonical positions
};

const std::vector<CanonicalExtension>& canonical_extensions(const ContactStructure& canonical,
                                                            const std::string& key, const AgeCatalog& catalog) {
  static std::mutex mutex;
  static std::map<std::pair<const AgeCatalog*, std::string>, std::vector<CanonicalExtension>> cache;
  std::lock_guard lock(mutex);
  auto [it, fresh] = cache.try_emplace({&catalog, key});
  if (!fresh) return it->second;
  std::map<ExtensionType, CanonicalExtension> unique;
  const auto& items = catalog.items();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].size() != canonical.size() + 1) continue;
    for (auto& inclusion : find_embeddings(canonical, items[i])) {
      std::vector<bool> hit(items[i].size(), false);
      for (std::size_t x : inclusion) hit[x] = true;
      const std::size_t p = static_cast<std::size_t>(std::find(hit.begin(), hit.end(), false) - hit.begin());
      ExtensionType type = type_of(items[i], inclusion, p);
      unique.try_emplace(type, CanonicalExtension{i, inclusion, p, type});
    }
  }
  for (auto& [type, ext] : unique) it->second.push_back(std::move(ext));
  return it->second;
}

}  // namespace

std::vector<OnePointExtension> one_point_extensions(const ContactStructure& s, const AgeCatalog& catalog) {
  if (s.size() + 1 > catalog.bound()) return {};
  if (s.kind() != catalog.kind()) throw Error(Errc::KindMismatch, "structure and catalog kinds differ");
  const CanonicalForm form = canonical_form(s);
  const ContactStructure canonical = permute(s, form.relabel);
  const std::size_t n = s.size();
  std::vector<OnePointExtension> out;
  for (const auto& ext : canonical_extensions(canonical, form.key, catalog)) {
    // Canonical position q is element form.relabel[q] of s.
    OnePointExtension e{&catalog.items()[ext.item], std::vector<std::size_t>(n), ext.new_point,
                        ExtensionType{Bitset(n), Bitset(n), Bitset(n), {}}};
    if (!ext.type.joins.empty()) e.type.joins.assign(n, 0);
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t x = form.relabel[q];
      e.inclusion[x] = ext.inclusion[q];
      e.type.below.assign(x, ext.type.below.test(q));
      e.type.above.assign(x, ext.type.above.test(q));
      e.type.contact.assign(x, ext.type.contact.test(q));
      if (!ext.type.joins.empty())
        e.type.joins[x] = ext.type.joins[q] == ExtensionType::kSelf ? ExtensionType::kSelf : form.relabel[ext.type.joins[q]];
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.type < r.type; });
  return out;
}

std::optional<std::size_t> realizes(const ContactStructure& m, const std::vector<std::size_t>& subset,
                                    const ExtensionType& type) {
  std::vector<bool> in_subset(m.size(), false);
  for (std::size_t x : subset) in_subset[x] = true;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (in_subset[x]) continue;
    bool match = true;
    for (std::size_t i = 0; i < subset.size() && match; ++i) {
      const std::size_t s = subset[i];
      match = m.leq(s, x) == type.below.test(i) && m.leq(x, s) == type.above.test(i) &&
              m.contact(x, s) == type.contact.test(i);
      if (match && !type.joins.empty()) {
        const auto j = m.join(x, s);
        match = j && *j == (type.joins[i] == ExtensionType::kSelf ? x : subset[type.joins[i]]);
      }
    }
    if (match) return x;
  }
  return std::nullopt;
}

ContactStructure trivial_structure(Kind kind) {
  return ContactStructure({"0"}, 0, BitMatrix::identity(1), BitMatrix(1), kind);
}

namespace {

std::vector<std::size_t> indices_in(const ContactStructure& m, const ContactStructure& sub) {
  std::vector<std::size_t> out;
  for (const auto& name : sub.names()) out.push_back(m.index(name));
  return out;
}

}  // namespace

LimitStage build_limit_stage(Kind kind, std::size_t cap, std::size_t sweeps, std::size_t element_budget) {
  if (cap == 0) throw Error(Errc::PreconditionViolation, "extension size cap must be positive");
  const AgeCatalog catalog = build_catalog(cap + 1, kind);
  LimitStage st{kind, cap, trivial_structure(kind), std::nullopt, 0, {}, false, false};
  std::size_t fresh = 0;
  auto fresh_name = [&](const ContactStructure& m) {
    std::string name;
    do name = "e" + std::to_string(++fresh);
    while (m.find(name));
    return name;
  };

  for (std::size_t sweep = 1; sweep <= sweeps; ++sweep) {
    const ContactStructure base = st.structure;
    bool added = false;
    for (const Bitset& sub : substructure_subsets(base, cap)) {
      const ContactStructure s = induced_substructure(base, sub);
      for (const auto& ext : one_point_extensions(s, catalog)) {
        ContactStructure& m = st.structure;
        if (realizes(m, indices_in(m, s), ext.type)) continue;
        std::vector<std::string> t_names(ext.item->size());
        for (std::size_t i = 0; i < s.size(); ++i) t_names[ext.inclusion[i]] = s.name(i);
        const std::string point = fresh_name(m);
        t_names[ext.new_point] = point;
        const AmalgamInstance inst(m, ext.item->renamed(std::move(t_names)), induced_substructure(m, s.names()));
        if (kind == Kind::Poset) {
          AmalgamResult r = thm5_contact_amalgam(inst);
          if (!r.ok()) throw Error(Errc::Internal, "stage amalgamation failed verification");
          m = std::move(r.d);
        } else {
          SemilatticeAmalgamResult r = thm5_semilattice_amalgam(inst);
          if (!r.ok()) throw Error(Errc::Internal, "stage amalgamation failed verification");
          // Elements added by the semilattice closure get short fresh names.
          std::vector<std::string> names = r.e.names();
          for (auto& name : names)
            if (!r.poset.d.find(name)) name = "u" + std::to_string(++fresh);
          m = r.e.renamed(std::move(names));
        }
        added = true;
        st.log.push_back({sweep, s.names(), describe(ext.type, s), point, m.size()});
        if (m.size() > element_budget) {
          st.budget_exceeded = true;
          st.previous = base;
          st.stage = sweep;
          return st;
        }
      }
    }
    st.previous = base;
    st.stage = sweep;
    if (!added) {
      st.fixpoint = true;
      break;
    }
  }
  return st;
}

ExtensionCheck check_extension_property(const LimitStage& stage, std::size_t cap, ExtensionScope scope) {
  const ContactStructure& m = stage.structure;
  const ContactStructure& base =
      scope == ExtensionScope::Predecessor && stage.previous ? *stage.previous : stage.structure;
  const AgeCatalog catalog = build_catalog(cap + 1, stage.kind);
  ExtensionCheck out;
  for (const Bitset& sub : substructure_subsets(base, cap)) {
    const ContactStructure s = induced_substructure(base, sub);
    const std::vector<std::size_t> idx = indices_in(m, s);
    for (const auto& ext : one_point_extensions(s, catalog)) {
      ++out.obligations;
      if (realizes(m, idx, ext.type))
        ++out.realized;
      else
        out.misses.push_back({s.names(), describe(ext.type, s)});
    }
  }
  return out;
}

ClassPropertiesReport check_class_properties(const AgeCatalog& catalog, std::size_t exhaustive_size,
                                             std::size_t random_instances, std::uint64_t seed) {
  ClassPropertiesReport out;
  const bool semilattice = catalog.kind() == Kind::Semilattice;
  auto amalgamates = [&](const AmalgamInstance& inst) {
    return semilattice ? thm5_semilattice_amalgam(inst).ok() : thm5_contact_amalgam(inst).ok();
  };
  auto label = [](const ContactStructure& s) {
    std::string out = "[";
    for (const auto& n : s.names()) out += n + " ";
    return out + "]";
  };
  const auto& items = catalog.items();

  for (const auto& item : items)
    for (const Bitset& sub : substructure_subsets(item)) {
      ++out.hp_checked;
      if (!catalog.find(induced_substructure(item, sub)))
        out.hp_failures.push_back("substructure of " + label(item) + " missing from the catalog");
    }

  const ContactStructure trivial = trivial_structure(catalog.kind());
  for (const auto& a : items)
    for (const auto& b : items) {
      ++out.jep_checked;
      const AmalgamInstance inst = glue(a, b, trivial, {a.bottom()}, {b.bottom()});
      if (!amalgamates(inst)) out.jep_failures.push_back("joint embedding of " + label(a) + " and " + label(b));
    }

  for (const auto& a : items) {
    if (a.size() > exhaustive_size) continue;
    for (const Bitset& sub : substructure_subsets(a)) {
      const ContactStructure c = induced_substructure(a, sub);
      std::vector<std::size_t> into_a;
      for (const auto& name : c.names()) into_a.push_back(a.index(name));
      for (const auto& b : items) {
        if (b.size() > exhaustive_size) continue;
        for (const auto& into_b : find_embeddings(c, b)) {
          ++out.ap_exhaustive;
          if (!amalgamates(glue(a, b, c, into_a, into_b)))
            out.ap_failures.push_back("amalgam of " + label(a) + " and " + label(b) + " over " + label(c));
        }
      }
    }
  }

  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_instances; ++i) {
    const AmalgamInstance inst = random_instance(catalog, catalog.bound(), rng);
    ++out.ap_random;
    if (!amalgamates(inst)) out.ap_failures.push_back("random instance " + std::to_string(i));
  }
  return out;
}

}  // namespace contact
