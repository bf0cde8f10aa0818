#include "contact/structure_map.hpp"

#include <sstream>

namespace contact {

bool MapReport::is_embedding() const {
  return injective && bottom_preserving && order_preserving && contact_preserving && contact_reflecting &&
         join_preserving.value_or(true);
}

std::string MapReport::describe() const {
  std::ostringstream out;
  auto flag = [&](const char* label, bool v) { out << label << ": " << (v ? "yes" : "NO") << "\n"; };
  flag("injective", injective);
  flag("bottom-preserving", bottom_preserving);
  flag("order-preserving", order_preserving);
  flag("order-reflecting", order_reflecting);
  flag("contact-preserving", contact_preserving);
  flag("contact-reflecting", contact_reflecting);
  if (join_preserving) flag("join-preserving", *join_preserving);
  for (const auto& f : failures) out << "  " << f << "\n";
  return out.str();
}

namespace {

MapReport compute_report(const ContactStructure& src, const ContactStructure& dst, const std::vector<std::size_t>& f) {
  MapReport r;
  r.injective = r.order_preserving = r.order_reflecting = r.contact_preserving = r.contact_reflecting = true;
  r.bottom_preserving = f[src.bottom()] == dst.bottom();
  if (!r.bottom_preserving) r.failures.push_back("bottom '" + src.name(src.bottom()) + "' not sent to bottom");
  const std::size_t n = src.size();
  auto note = [&](bool& flag, const std::string& msg) {
    if (flag) r.failures.push_back(msg);
    flag = false;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::string pair = "('" + src.name(a) + "','" + src.name(b) + "')";
      if (a != b && f[a] == f[b]) note(r.injective, "collapses " + pair);
      const bool le = src.leq(a, b), le_img = dst.leq(f[a], f[b]);
      if (le && !le_img) note(r.order_preserving, "order not preserved at " + pair);
      if (!le && le_img) note(r.order_reflecting, "order not reflected at " + pair);
      const bool c = src.contact(a, b), c_img = dst.contact(f[a], f[b]);
      if (c && !c_img) note(r.contact_preserving, "contact not preserved at " + pair);
      if (!c && c_img) note(r.contact_reflecting, "contact not reflected at " + pair);
    }
  if (src.is_semilattice() && dst.is_semilattice()) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (f[src.join_or_throw(a, b)] != dst.join_or_throw(f[a], f[b]))
          note(ok, "join not preserved at ('" + src.name(a) + "','" + src.name(b) + "')");
    r.join_preserving = ok;
  }
  return r;
}

template <typename Bound>
JoinPreservation check_bounds(const StructureMap& m, Bound bound) {
  const ContactStructure& src = m.source();
  const ContactStructure& dst = m.target();
  const std::size_t n = src.size();
  if (n > 24) throw Error(Errc::PreconditionViolation, "subset scan limited to 24 elements");
  JoinPreservation out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Bitset subset(n), image(dst.size());
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) {
        subset.set(i);
        image.set(m(i));
      }
    ++out.subsets_checked;
    auto b = bound(src, subset);
    if (!b) continue;
    ++out.with_join;
    auto b_img = bound(dst, image);
    if (!b_img || *b_img != m(*b)) out.failures.push_back(subset);
  }
  return out;
}

}  // namespace

StructureMap::StructureMap(ContactStructure source, ContactStructure target, std::vector<std::size_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.size()) throw Error(Errc::PreconditionViolation, "map is not total on the source");
  for (std::size_t x : map_)
    if (x >= target_.size()) throw Error(Errc::PreconditionViolation, "map leaves the target carrier");
  report_ = compute_report(source_, target_, map_);
}

StructureMap verify_map(ContactStructure source, ContactStructure target, std::vector<std::size_t> map) {
  return StructureMap(std::move(source), std::move(target), std::move(map));
}

StructureMap compose(const StructureMap& first, const StructureMap& second) {
  if (!(first.target() == second.source()))
    throw Error(Errc::PreconditionViolation, "composed maps do not share the middle structure");
  std::vector<std::size_t> f(first.map().size());
  for (std::size_t x = 0; x < f.size(); ++x) f[x] = second(first(x));
  return StructureMap(first.source(), second.target(), std::move(f));
}

StructureMap inclusion_by_name(const ContactStructure& source, const ContactStructure& target) {
  std::vector<std::size_t> f;
  f.reserve(source.size());
  for (const auto& name : source.names()) f.push_back(target.index(name));
  return StructureMap(source, target, std::move(f));
}

JoinPreservation check_existing_joins(const StructureMap& m) {
  return check_bounds(m, [](const ContactStructure& s, const Bitset& set) { return s.lub(set); });
}

JoinPreservation check_existing_meets(const StructureMap& m) {
  return check_bounds(m, [](const ContactStructure& s, const Bitset& set) { return s.glb(set); });
}

namespace {

struct EmbeddingSearch {
  const ContactStructure& from;
  const ContactStructure& to;
  std::size_t limit;
  std::vector<std::size_t> order;  // source elements in assignment order
  std::vector<std::size_t> image;
  std::vector<bool> used;
  std::vector<std::vector<std::size_t>> results;
  bool joins;

  bool consistent(std::size_t depth) const {
    const std::size_t a = order[depth];
    const std::size_t fa = image[a];
    for (std::size_t i = 0; i <= depth; ++i) {
      const std::size_t b = order[i];
      const std::size_t fb = image[b];
      if (from.leq(a, b) != to.leq(fa, fb) || from.leq(b, a) != to.leq(fb, fa)) return false;
      if (from.contact(a, b) != to.contact(fa, fb)) return false;
      if (joins) {
        const std::size_t j = from.join_or_throw(a, b);
        const std::size_t target_join = to.join_or_throw(fa, fb);
        // Only decidable once the join's image is assigned.
        for (std::size_t k = 0; k <= depth; ++k)
          if (order[k] == j && image[j] != target_join) return false;
      }
    }
    if (joins) {
      // Earlier pairs whose join is a.
      for (std::size_t i = 0; i <= depth; ++i)
        for (std::size_t k = i; k <= depth; ++k) {
          const std::size_t b = order[i], c = order[k];
          if (from.join_or_throw(b, c) == a && to.join_or_throw(image[b], image[c]) != fa) return false;
        }
    }
    return true;
  }

  void run(std::size_t depth) {
    if (limit && results.size() >= limit) return;
    if (depth == order.size()) {
      results.push_back(image);
      return;
    }
    const std::size_t a = order[depth];
    for (std::size_t y = 0; y < to.size(); ++y) {
      if (used[y]) continue;
      if ((a == from.bottom()) != (y == to.bottom())) continue;
      image[a] = y;
      used[y] = true;
      if (consistent(depth)) run(depth + 1);
      used[y] = false;
    }
  }
};

}  // namespace

std::vector<std::vector<std::size_t>> find_embeddings(const ContactStructure& from, const ContactStructure& to,
                                                      std::size_t limit) {
  if (from.size() > to.size()) return {};
  EmbeddingSearch search{from, to, limit, {}, std::vector<std::size_t>(from.size()),
                         std::vector<bool>(to.size(), false), {}, from.is_semilattice() && to.is_semilattice()};
  search.order.push_back(from.bottom());
  for (std::size_t x = 0; x < from.size(); ++x)
    if (x != from.bottom()) search.order.push_back(x);
  search.run(0);
  return std::move(search.results);
}

bool isomorphic(const ContactStructure& a, const ContactStructure& b) {
  return a.size() == b.size() && a.kind() == b.kind() && !find_embeddings(a, b, 1).empty();
}

}  // namespace contact
