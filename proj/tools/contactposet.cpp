// contactposet: command-line front end for the contact library.
// Exit codes: 0 success, 1 verification failure, 2 parse/format/precondition error, 3 budget.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "contact/amalgam.hpp"
#include "contact/axioms.hpp"
#include "contact/enumerate.hpp"
#include "contact/events.hpp"
#include "contact/fraisse.hpp"
#include "contact/gallery.hpp"
#include "contact/io.hpp"
#include "contact/kernels.hpp"
#include "contact/represent.hpp"

using namespace contact;

namespace {

struct Options {
  bool json = false;
  std::uint64_t seed = 20240611;
};

int finish(const Options& opt, const Json& summary, const std::string& text, bool ok) {
  if (opt.json)
    std::cout << summary.dump(2) << "\n";
  else
    std::cout << text;
  return ok ? 0 : 1;
}

void maybe_write(const std::string& out, const Json& doc) {
  if (!out.empty()) write_json_file(out, doc);
}

std::string yes(bool b) { return b ? "yes" : "NO"; }

// ---- check

int cmd_check(const Options& opt, const std::string& path, bool add, const std::string& kind, bool close) {
  const Json doc = read_json_file(path);
  if (is_event_document(doc)) {
    const EventStructure e = events_from_json(doc);
    const EventReport r = check_event_structure(e);
    Json summary{{"type", "event"}, {"events", e.size()}, {"ok", r.ok()}, {"irreflexive", r.irreflexive},
                 {"symmetric", r.symmetric}, {"inheritance", r.inheritance}};
    std::string text = "event structure, " + std::to_string(e.size()) + " events\n";
    text += "  irreflexive " + yes(r.irreflexive) + "\n  symmetric " + yes(r.symmetric) + "\n  inheritance " +
            yes(r.inheritance) + "\n";
    if (!r.ok()) {
      Json w = Json::array();
      for (std::size_t i : r.witness) w.push_back(e.name(i));
      summary["witness"] = w;
      summary["detail"] = r.detail;
      text += "  witness: " + r.detail + "\n";
    }
    return finish(opt, summary, text, r.ok());
  }
  ContactStructure s = structure_from_json(doc, close ? ContactLoad::Close : ContactLoad::Raw);
  if (!kind.empty()) {
    const Kind k = parse_kind(kind);
    if (k != s.kind()) s = s.with_kind(k);
  }
  const AxiomReport report = check_contact_axioms(s, add);
  Json summary = to_json(report, s);
  summary["kind"] = kind_name(s.kind());
  summary["elements"] = s.size();
  std::string text = std::string(kind_name(s.kind())) + ", " + std::to_string(s.size()) + " elements\n" +
                     report.describe();
  return finish(opt, summary, text, report.all_pass());
}

// ---- embed

int cmd_embed(const Options& opt, const std::string& path, const std::string& theorem, const std::string& out) {
  const ContactStructure s = load_structure(path);
  Json bundle;
  bundle["theorem"] = theorem;
  bundle["source"] = to_json(s);
  std::string text;
  bool ok = false;

  auto describe_map = [&](const StructureMap& m, std::size_t target_size, const std::string& label) {
    text += label + ": " + std::to_string(target_size) + " sets\n" + m.report().describe();
  };

  if (theorem == "prop2" || theorem == "cor3") {
    const Representation rep =
        theorem == "cor3" ? cor3_embed(s) : (s.is_semilattice() ? prop2_semilattice(s) : prop2_poset(s));
    const JoinPreservation joins = check_union_preservation(rep);
    bundle["target"] = to_json(rep.family);
    bundle["map"] = to_json(rep.map);
    bundle["existing_joins"] = {{"checked", joins.with_join}, {"ok", joins.ok()}};
    describe_map(rep.map, rep.family.size(), "target");
    text += "existing joins sent to unions: " + std::to_string(joins.with_join) + " checked, " +
            (joins.ok() ? "all preserved" : std::to_string(joins.failures.size()) + " FAILED") + "\n";
    ok = rep.map.report().is_strong_embedding() && (theorem == "prop2" || joins.ok());
  } else if (theorem == "4a") {
    const BooleanRepresentation rep = thm4a_boolean(s);
    const PowersetCheck pc = check_powerset(rep.powerset);
    bundle["intermediate"] = to_json(rep.prop2.family);
    bundle["target"] = to_json(rep.powerset);
    bundle["map"] = to_json(rep.total);
    bundle["powerset"] = {{"literal_powerset", pc.literal_powerset}, {"union_closed", pc.union_closed},
                          {"intersection_closed", pc.intersection_closed},
                          {"complement_closed", pc.complement_closed},
                          {"atoms_are_singletons", pc.atoms_are_singletons}};
    describe_map(rep.total, rep.powerset.size(), "powerset target");
    text += "Boolean target checks: " + std::string(pc.ok() ? "pass" : "FAIL") + "\n";
    ok = rep.total.report().is_strong_embedding() && pc.ok();
  } else if (theorem == "4b") {
    if (!s.is_semilattice()) throw Error(Errc::KindMismatch, "the lattice completion needs a semilattice input");
    const LatticeRepresentation rep = thm4b_lattice(s);
    bundle["intermediate"] = to_json(rep.prop2.family);
    bundle["target"] = to_json(rep.completion.family);
    bundle["map"] = to_json(rep.total);
    describe_map(rep.total, rep.completion.family.size(), "lattice target");
    ok = rep.total.report().is_strong_embedding();
  } else {
    throw Error(Errc::Parse, "unknown theorem '" + theorem + "' (prop2, cor3, 4a, 4b)");
  }
  bundle["ok"] = ok;
  maybe_write(out, bundle);
  return finish(opt, bundle, text, ok);
}

// ---- amalgamate

int cmd_amalgamate(const Options& opt, const std::string& pa, const std::string& pb, const std::string& pc,
                   const std::string& kind, const std::string& out) {
  Json bundle;
  std::string text;
  bool ok = false;
  if (kind == "event") {
    const EventAmalgamResult r = thm8_amalgamate_events(load_events(pa), load_events(pb), load_events(pc));
    ok = r.ok();
    bundle["d"] = to_json(r.d);
    bundle["valid"] = r.validity.ok();
    bundle["restriction_a"] = r.restriction_a;
    bundle["restriction_b"] = r.restriction_b;
    bundle["strong_size"] = r.strong_size;
    bundle["superamalgamation"] = to_json(r.contact.super, r.contact.d.names());
    text = "D: " + std::to_string(r.d.size()) + " events\n  valid event structure " + yes(r.validity.ok()) +
           "\n  restricts to A " + yes(r.restriction_a) + "\n  restricts to B " + yes(r.restriction_b) +
           "\n  |D| = |A|+|B|-|C| " + yes(r.strong_size) + "\n";
  } else {
    const Kind k = parse_kind(kind);
    auto load = [&](const std::string& p) {
      ContactStructure s = load_structure(p);
      return s.kind() == k ? s : s.with_kind(k);
    };
    const AmalgamInstance inst(load(pa), load(pb), load(pc));
    const AmalgamResult* poset = nullptr;
    std::optional<SemilatticeAmalgamResult> semi;
    std::optional<AmalgamResult> plain;
    if (k == Kind::Semilattice) {
      semi = thm5_semilattice_amalgam(inst);
      poset = &semi->poset;
      ok = semi->ok();
    } else {
      plain = thm5_contact_amalgam(inst);
      poset = &*plain;
      ok = plain->ok();
    }
    const AmalgamResult& r = *poset;
    bundle["d"] = to_json(r.d);
    bundle["axioms"] = to_json(r.axioms, r.d);
    bundle["from_a"] = to_json(r.from_a);
    bundle["from_b"] = to_json(r.from_b);
    bundle["strong_size"] = r.strong_size;
    bundle["superamalgamation"] = to_json(r.super, r.d.names());
    text = "D: " + std::to_string(r.d.size()) + " elements\n  contact axioms " + yes(r.axioms.all_pass()) +
           "\n  A embeds " + yes(r.from_a.report().is_strong_embedding()) + "\n  B embeds " +
           yes(r.from_b.report().is_strong_embedding()) + "\n  |D| = |A|+|B|-|C| " + yes(r.strong_size) +
           "\n  superamalgamation " + yes(r.super.ok()) + " (" + std::to_string(r.super.obligations) +
           " cross comparabilities)\n";
    if (semi) {
      bundle["e"] = to_json(semi->e);
      bundle["e_from_a"] = to_json(semi->from_a);
      bundle["e_from_b"] = to_json(semi->from_b);
      bundle["e_superamalgamation"] = to_json(semi->super, semi->e.names());
      text += "E: " + std::to_string(semi->e.size()) + " elements\n  A embeds " +
              yes(semi->from_a.report().is_strong_embedding()) + "\n  B embeds " +
              yes(semi->from_b.report().is_strong_embedding()) + "\n  superamalgamation " + yes(semi->super.ok()) +
              "\n";
    }
  }
  bundle["ok"] = ok;
  maybe_write(out, bundle);
  return finish(opt, bundle, text, ok);
}

// ---- fraisse

int cmd_fraisse(const Options& opt, const std::string& kind, std::size_t cap, std::size_t sweeps,
                std::size_t elements, const std::string& out) {
  const LimitStage stage = build_limit_stage(parse_kind(kind), cap, sweeps, elements);
  Json bundle = to_json(stage);
  std::string text = "stage " + std::to_string(stage.stage) + ": " + std::to_string(stage.structure.size()) +
                     " elements, " + std::to_string(stage.log.size()) + " extensions realized" +
                     (stage.fixpoint ? ", fixpoint" : "") + "\n";
  bool ok = true;
  if (stage.budget_exceeded) {
    text += "element budget of " + std::to_string(elements) + " exceeded; partial stage written\n";
  } else {
    const ExtensionCheck pred = check_extension_property(stage, cap, ExtensionScope::Predecessor);
    const ExtensionCheck abs = check_extension_property(stage, cap, ExtensionScope::Absolute);
    bundle["extension_property"] = to_json(pred);
    bundle["extension_property_absolute"] = to_json(abs);
    text += "extension property at k = " + std::to_string(cap) + ": " + std::to_string(pred.fraction()) + " (" +
            std::to_string(pred.realized) + "/" + std::to_string(pred.obligations) + ")\n";
    text += "  counting the stage's own substructures: " + std::to_string(abs.fraction()) + " (" +
            std::to_string(abs.realized) + "/" + std::to_string(abs.obligations) + ")\n";
    ok = pred.fraction() == 1.0;
  }
  maybe_write(out, bundle);
  if (stage.budget_exceeded) {
    if (opt.json) std::cout << bundle.dump(2) << "\n";
    else std::cout << text;
    return 3;
  }
  return finish(opt, bundle, text, ok);
}

// ---- enumerate

int cmd_enumerate(const Options& opt, std::size_t size, const std::string& kind, const std::string& out,
                  std::size_t random) {
  const Kind k = parse_kind(kind);
  const AgeCatalog catalog = build_catalog(size, k);
  Json summary;
  summary["kind"] = kind;
  Json counts = Json::array();
  std::string text;
  for (std::size_t n = 1; n <= size; ++n) {
    std::size_t carriers = 0;
    for (const auto& p : enumerate_posets_with_bottom(n))
      if (k == Kind::Poset || is_join_semilattice(carrier(p, Kind::Poset))) ++carriers;
    const std::size_t structures = catalog.count_of_size(n);
    counts.push_back({{"size", n}, {"carriers", carriers}, {"structures", structures}});
    text += "size " + std::to_string(n) + ": " + std::to_string(carriers) + " carriers, " +
            std::to_string(structures) + " contact structures\n";
    if (!out.empty()) {
      Json file;
      file["kind"] = kind;
      file["size"] = n;
      file["count"] = structures;
      Json items = Json::array();
      for (const auto* s : catalog.items_of_size(n)) items.push_back(to_json(*s));
      file["structures"] = std::move(items);
      write_json_file(std::filesystem::path(out) / (kind + "_" + std::to_string(n) + ".json"), file);
    }
  }
  summary["counts"] = std::move(counts);
  bool ok = true;
  if (random > 0) {
    const ClassPropertiesReport r = check_class_properties(catalog, size, random, opt.seed);
    ok = r.hp_failures.empty() && r.jep_failures.empty() && r.ap_failures.empty();
    summary["class_properties"] = {{"hp_checked", r.hp_checked}, {"jep_checked", r.jep_checked},
                                   {"ap_exhaustive", r.ap_exhaustive}, {"ap_random", r.ap_random},
                                   {"failures", r.hp_failures.size() + r.jep_failures.size() + r.ap_failures.size()},
                                   {"seed", opt.seed}};
    text += "hereditary " + yes(r.hp_failures.empty()) + ", joint embedding " + yes(r.jep_failures.empty()) +
            ", amalgamation " + yes(r.ap_failures.empty()) + " (" + std::to_string(r.ap_exhaustive) +
            " exhaustive, " + std::to_string(r.ap_random) + " random)\n";
  }
  return finish(opt, summary, text, ok);
}

// ---- gallery

int cmd_gallery(const Options& opt, std::size_t bound) {
  Json summary;
  std::string text;
  bool ok = true;
  for (auto [variant, label] : {std::pair{M3Variant::Overlap, "overlap"}, std::pair{M3Variant::WithAB, "with_ab"}}) {
    const ContactStructure m3 = m3_fixture(variant);
    const auto w = verify_add_fails(m3);
    ok = ok && w.has_value();
    if (w) {
      summary["m3_" + std::string(label)] = {m3.name((*w)[0]), m3.name((*w)[1]), m3.name((*w)[2])};
      text += "M3 (" + std::string(label) + "): additivity fails at a=" + m3.name((*w)[0]) + " b=" +
              m3.name((*w)[1]) + " c=" + m3.name((*w)[2]) + "\n";
    } else {
      summary["m3_" + std::string(label)] = nullptr;
      text += "M3 (" + std::string(label) + "): NO additivity failure found\n";
    }
  }
  const AdditivityReport add = distributive_overlap_additivity(bound);
  ok = ok && add.ok();
  summary["additivity"] = {{"ok", add.ok()}, {"lattices", add.lattices_checked}, {"boolean", add.boolean_checked}};
  text += "overlap is additive on all " + std::to_string(add.lattices_checked) + " distributive lattices up to " +
          std::to_string(bound) + " elements: " + yes(add.ok()) + "\n";
  const ComplementReport comp = complement_uniqueness(bound);
  ok = ok && comp.ok();
  summary["complements"] = {{"ok", comp.ok()}, {"lattices", comp.lattices_checked},
                            {"m3_complements_of_c", comp.m3_complements_of_c}};
  text += "complements unique in " + std::to_string(comp.lattices_checked) + " distributive lattices: " +
          yes(comp.ok()) + " (c has " + std::to_string(comp.m3_complements_of_c) + " complements in M3)\n";
  const DistributiveFailureReport fail = distributive_amalgam_failure(bound);
  ok = ok && fail.ok();
  summary["distributive_amalgam_failure"] = {
      {"ok", fail.ok()},           {"bound", fail.bound},
      {"lattices", fail.lattices_scanned}, {"candidate_pairs", fail.candidate_pairs},
      {"identified", fail.identified},     {"amalgams_found", fail.amalgams_found},
      {"poset_amalgam_ok", fail.poset_amalgam_ok}, {"semilattice_amalgam_ok", fail.semilattice_amalgam_ok}};
  text += "distributive amalgam search up to " + std::to_string(bound) + " elements: " +
          std::to_string(fail.amalgams_found) + " amalgams, " + std::to_string(fail.identified) + "/" +
          std::to_string(fail.candidate_pairs) + " embedding pairs identify a and b; poset amalgam " +
          yes(fail.poset_amalgam_ok) + ", semilattice amalgam " + yes(fail.semilattice_amalgam_ok) + "\n";
  summary["ok"] = ok;
  return finish(opt, summary, text, ok);
}

// ---- dot

int cmd_dot(const std::string& path, const std::string& mode) {
  std::cout << to_dot(load_structure(path, ContactLoad::Raw), parse_dot_contact(mode));
  return 0;
}

int exit_code(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded:
      return 3;
    case Errc::AxiomViolation:
    case Errc::JoinNotPreserved:
    case Errc::Internal:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite contact posets, contact semilattices and event structures"};
  app.require_subcommand(1);
  Options opt;
  std::string backend;
  app.add_flag("--json", opt.json, "Print a machine-readable summary instead of text");
  app.add_option("--seed", opt.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--kernels", backend, "Bit-row kernel backend (scalar, avx2)");

  std::string path, kind, amalg_kind = "poset", fraisse_kind = "poset", enum_kind = "poset", theorem = "prop2", out, contact_mode = "extra", pa, pb, pc;
  bool add = false, close = false;
  std::size_t cap = 2, sweeps = 2, elements = 64, size = 4, bound = 6, random = 0;
  std::function<int()> run;

  auto* check = app.add_subcommand("check", "Check the axioms of a structure or event structure file");
  check->add_option("path", path)->required();
  check->add_flag("--add", add, "Also require additivity (semilattices)");
  check->add_option("--kind", kind, "Override the file's kind (poset, semilattice)");
  check->add_flag("--close", close, "Close the contact pairs to the least valid relation");
  check->callback([&] { run = [&] { return cmd_check(opt, path, add, kind, close); }; });

  auto* embed = app.add_subcommand("embed", "Embed into a set structure");
  embed->add_option("path", path)->required();
  embed->add_option("--theorem", theorem, "prop2, cor3, 4a or 4b")->capture_default_str();
  embed->add_option("--out", out, "Write the result bundle here");
  embed->callback([&] { run = [&] { return cmd_embed(opt, path, theorem, out); }; });

  auto* amalg = app.add_subcommand("amalgamate", "Amalgamate A and B over C");
  amalg->add_option("a", pa)->required();
  amalg->add_option("b", pb)->required();
  amalg->add_option("c", pc)->required();
  amalg->add_option("--kind", amalg_kind, "poset, semilattice or event")->capture_default_str();
  amalg->add_option("--out", out, "Write the result bundle here");
  amalg->callback([&] { run = [&] { return cmd_amalgamate(opt, pa, pb, pc, amalg_kind, out); }; });

  auto* fraisse = app.add_subcommand("fraisse", "Build a finite stage of the limit");
  fraisse->add_option("--kind", fraisse_kind, "poset or semilattice")->capture_default_str();
  fraisse->add_option("--cap", cap, "Size of the substructures to extend")->capture_default_str();
  fraisse->add_option("--budget", sweeps, "Number of sweeps")->capture_default_str();
  fraisse->add_option("--elements", elements, "Element budget")->capture_default_str();
  fraisse->add_option("--out", out, "Write the stage and log here");
  fraisse->callback([&] { run = [&] { return cmd_fraisse(opt, fraisse_kind, cap, sweeps, elements, out); }; });

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate contact structures up to isomorphism");
  enumerate->add_option("--size", size, "Largest size")->capture_default_str();
  enumerate->add_option("--kind", enum_kind, "poset or semilattice")->capture_default_str();
  enumerate->add_option("--out", out, "Directory for one catalog file per size");
  enumerate->add_option("--random", random, "Also check class properties with this many random amalgams");
  enumerate->callback([&] { run = [&] { return cmd_enumerate(opt, size, enum_kind, out, random); }; });

  auto* gallery = app.add_subcommand("gallery", "Run the counterexample gallery");
  gallery->add_option("--bound", bound, "Largest lattice size scanned")->capture_default_str();
  gallery->callback([&] { run = [&] { return cmd_gallery(opt, bound); }; });

  auto* dot = app.add_subcommand("dot", "Export a structure as a DOT graph");
  dot->add_option("path", path)->required();
  dot->add_option("--contact", contact_mode, "full, extra or none")->capture_default_str();
  dot->callback([&] { run = [&] { return cmd_dot(path, contact_mode); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!backend.empty()) {
      bool found = false;
      for (auto b : kernels::available_backends())
        if (kernels::backend_name(b) == backend) found = kernels::set_backend(b);
      if (!found) throw Error(Errc::Parse, "unknown or unavailable kernel backend '" + backend + "'");
    }
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
