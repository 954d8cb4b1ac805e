// Command-line front end: constructs branched-cover tuples, computes genus
// and group classifications, decomposes classes into braid orbits, evaluates
// spin lifting invariants, and runs the registry of named claims.
//
// Report bytes are deterministic: field order is fixed, wall times are
// emitted only behind --timing, and worker counts never appear in output.
//
// Exit codes: 0 success / all claims pass; 1 error or any claim fails;
// 2 a resource cap was hit (claims report it as inconclusive, never a pass).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/claims.hpp"

namespace {

using namespace hurwitz;

// Print to standard output and, when requested, mirror the same bytes to a
// file.
void emit(const std::string& text, const std::string& out_file) {
  std::cout << text;
  if (out_file.empty()) return;
  std::ofstream out(out_file);
  if (!out) throw TupleIoError("cannot open output file: " + out_file);
  out << text;
}

std::vector<std::vector<Perm>> load_tuples(const std::string& seed_file) {
  if (!seed_file.empty()) return read_tuples_file(seed_file);
  return read_tuples_jsonl(std::cin);
}

GroupKind group_kind_named(const std::string& name) {
  if (name == "gl32") return GroupKind::GL32;
  if (name == "agl32") return GroupKind::AGL32;
  if (name == "agl42") return GroupKind::AGL42;
  throw std::invalid_argument("unknown group name: " + name);
}

int natural_degree(GroupKind kind) {
  switch (kind) {
    case GroupKind::GL32: return 7;
    case GroupKind::AGL32: return 8;
    case GroupKind::AGL42: return 16;
    default: throw std::invalid_argument("group has no fixed natural degree");
  }
}

CycleStructure entry_class_named(const std::string& kind) {
  if (kind == "dt") return CycleStructure{{2, 2}};
  if (kind == "tc") return CycleStructure{{3}};
  if (kind == "transpositions") return CycleStructure{{2}};
  throw std::invalid_argument("unknown entry kind: " + kind);
}

struct GlobalOptions {
  int workers = 1;
  uint64_t cap_memory_mib = 2048;
  bool timing = false;

  OrbitOptions orbit() const {
    validate();
    OrbitOptions o;
    o.workers = workers;
    o.memory_cap = cap_memory_mib * uint64_t{1024} * 1024;
    return o;
  }
  ClaimOptions claim() const {
    validate();
    ClaimOptions o;
    o.workers = workers;
    o.memory_cap = cap_memory_mib * uint64_t{1024} * 1024;
    return o;
  }

 private:
  void validate() const {
    if (workers < 1) throw std::invalid_argument("--workers must be >= 1");
    if (cap_memory_mib < 1)
      throw std::invalid_argument("--cap-memory must be >= 1 MiB");
  }
};

int run_construct(const std::string& family, int n, int g,
                  const std::string& kind, const std::string& which_case,
                  const std::string& out_file) {
  std::vector<std::vector<Perm>> tuples;
  auto need_n = [&](int lo, const char* what) {
    if (n < lo)
      throw std::invalid_argument(std::string("--n is required (>= ") +
                                  std::to_string(lo) + ") for " + what);
  };
  if (family == "dt0") {
    need_n(4, "dt0");
    tuples.push_back(dt_genus0(n).entries());
  } else if (family == "tc0") {
    need_n(3, "tc0");
    tuples.push_back(tc_genus0(n).entries());
  } else if (family == "dta1") {
    need_n(5, "dta1");
    tuples.push_back(dta_genus1(n).entries());
  } else if (family == "family") {
    need_n(3, "family");
    if (g < 0) throw std::invalid_argument("--g is required for family");
    const FamilyKind fk = kind == "tc" ? FamilyKind::ThreeCycles
                                       : FamilyKind::DoubleTranspositions;
    if (kind != "dt" && kind != "tc")
      throw std::invalid_argument("family needs --kind dt or tc");
    tuples.push_back(build_family(n, g, fk).entries());
  } else if (family == "tau") {
    tuples.push_back(tau_genus2().entries());
  } else if (family == "exceptional") {
    if (which_case.empty())
      throw std::invalid_argument("exceptional needs --case gl32 or agl32");
    tuples.push_back(
        exceptional_genus3(group_kind_named(which_case)).entries());
  } else if (family == "linear-group") {
    if (which_case.empty())
      throw std::invalid_argument(
          "linear-group needs --case gl32, agl32, or agl42");
    tuples.push_back(linear_group(group_kind_named(which_case)).generators);
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  emit(write_tuples_jsonl(tuples), out_file);
  return 0;
}

int run_genus(const std::string& seed_file, const std::string& out_file) {
  std::string lines;
  for (const std::vector<Perm>& entries : load_tuples(seed_file)) {
    const NielsenTuple t = make_tuple(entries);
    const ModuliCheck mc = moduli_necessary(t);
    ordered_json j;
    j["n"] = t.degree();
    j["length"] = t.length();
    j["shape"] = to_string(t.shape());
    j["genus"] = t.genus();
    j["dim_moduli"] = mc.dim_moduli;
    j["moduli_necessary_ok"] = mc.necessary_ok;
    lines += j.dump() + "\n";
  }
  emit(lines, out_file);
  return 0;
}

int run_classify(const std::string& seed_file, const std::string& out_file) {
  std::string lines;
  for (const std::vector<Perm>& entries : load_tuples(seed_file)) {
    const GroupId id = classify_group(entries);
    ordered_json j;
    j["n"] = entries.front().degree();
    j["order"] = id.order;
    j["kind"] = to_string(id.kind);
    j["transitive"] = id.transitive;
    j["primitive"] = id.primitive;
    if (id.block_system) j["block_system"] = *id.block_system;
    lines += j.dump() + "\n";
  }
  emit(lines, out_file);
  return 0;
}

int run_invariant(const std::string& seed_file, const std::string& out_file) {
  std::string lines;
  for (const std::vector<Perm>& entries : load_tuples(seed_file)) {
    ordered_json j;
    j["n"] = entries.front().degree();
    j["length"] = entries.size();
    j["lifting_invariant"] = lifting_invariant(entries);
    lines += j.dump() + "\n";
  }
  emit(lines, out_file);
  return 0;
}

int run_orbit(const GlobalOptions& global, const std::string& seed_file,
              int n, int r, const std::string& kind,
              const std::string& product, const std::string& group_filter,
              const std::string& out_file) {
  if (!seed_file.empty()) {
    // Seeded mode: one full-orbit report per input tuple.
    std::vector<ordered_json> reports;
    for (const std::vector<Perm>& seed : load_tuples(seed_file))
      reports.push_back(
          report_to_json(orbit_report_of(seed, global.orbit()), global.timing));
    if (reports.size() == 1) {
      emit(reports.front().dump(2) + "\n", out_file);
    } else {
      emit(ordered_json(reports).dump(2) + "\n", out_file);
    }
    return 0;
  }

  if (n <= 0 || r <= 0 || kind.empty())
    throw std::invalid_argument(
        "orbit needs --n, --r, and --kind (or --seed-file)");
  ClassSpec spec;
  spec.degree = n;
  spec.length = r;
  spec.entry_classes = {entry_class_named(kind)};
  if (!product.empty() && product != "id") {
    Perm p = parse_perm(product, n);
    if (!p.is_identity()) spec.product = std::move(p);
  }
  spec.group_filter = group_filter;
  if (group_filter == "gl32" || group_filter == "agl32" ||
      group_filter == "agl42") {
    // Anchor the search in the standard copy of the named group: entries are
    // drawn from it rather than from the whole symmetric class.
    const GroupKind gk = group_kind_named(group_filter);
    if (n != natural_degree(gk))
      throw std::invalid_argument("--group-filter " + group_filter +
                                  " needs --n " +
                                  std::to_string(natural_degree(gk)));
    spec.ambient_generators = linear_group(gk).generators;
    spec.ambient_name = group_filter;
  }
  const BraidOrbitReport report = orbit_decomposition(spec, global.orbit());
  emit(report_to_json(report, global.timing).dump(2) + "\n", out_file);
  return 0;
}

int run_verify(const GlobalOptions& global,
               const std::vector<std::string>& claim_ids, bool include_long,
               const std::string& out_file) {
  std::vector<const Claim*> selected;
  if (claim_ids.empty()) {
    for (const Claim& c : claim_registry())
      if (!c.long_running || include_long) selected.push_back(&c);
  } else {
    // Naming a claim runs it, long-running or not.
    for (const std::string& id : claim_ids) {
      const Claim* c = find_claim(id);
      if (c == nullptr) throw std::invalid_argument("unknown claim: " + id);
      selected.push_back(c);
    }
  }

  bool any_fail = false, any_inconclusive = false;
  ordered_json results = ordered_json::array();
  for (const Claim* c : selected) {
    const ClaimResult r = run_claim(*c, global.claim());
    any_fail = any_fail || r.status == ClaimStatus::Fail;
    any_inconclusive = any_inconclusive || r.status == ClaimStatus::Inconclusive;
    results.push_back(claim_result_to_json(r, global.timing));
  }
  emit(results.dump(2) + "\n", out_file);
  if (any_fail) return 1;
  if (any_inconclusive) return 2;
  return 0;
}

int run_list_claims(const std::string& out_file) {
  ordered_json rows = ordered_json::array();
  for (const Claim& c : claim_registry())
    rows.push_back({{"claim", c.id},
                    {"criterion", c.criterion},
                    {"long_running", c.long_running},
                    {"statement", c.statement}});
  emit(rows.dump(2) + "\n", out_file);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Permutation-tuple calculator for branched covers: constructions, "
      "braid-orbit decompositions, lifting invariants, and claim checks"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--workers", global.workers,
                 "Worker threads for orbit searches")
      ->capture_default_str();
  app.add_option("--cap-memory", global.cap_memory_mib,
                 "Memory cap for orbit searches, in MiB")
      ->capture_default_str();
  app.add_flag("--timing", global.timing,
               "Include wall times in JSON output (breaks byte-for-byte "
               "reproducibility)");

  // construct
  auto* construct = app.add_subcommand(
      "construct", "Emit tuples from the built-in families as JSON lines");
  std::string family;
  int con_n = 0, con_g = -1;
  std::string con_kind, con_case, con_out;
  construct->add_option("family", family, "One of: dt0 tc0 dta1 family tau exceptional linear-group")
      ->required()
      ->check(CLI::IsMember({"dt0", "tc0", "dta1", "family", "tau",
                             "exceptional", "linear-group"}));
  construct->add_option("--n", con_n, "Degree (number of sheets)");
  construct->add_option("--g", con_g, "Genus (family only)");
  construct->add_option("--kind", con_kind, "Entry kind for family: dt or tc")
      ->check(CLI::IsMember({"dt", "tc"}));
  construct->add_option("--case", con_case,
                        "Group for exceptional/linear-group")
      ->check(CLI::IsMember({"gl32", "agl32", "agl42"}));
  construct->add_option("--out", con_out, "Also write the output to FILE");

  // genus / classify / invariant: per-tuple pipelines over JSON lines.
  std::string gen_seed, gen_out;
  auto* genus = app.add_subcommand(
      "genus", "Genus and shape of each input tuple (JSON lines)");
  genus->add_option("--seed-file", gen_seed,
                    "Read tuples from FILE instead of standard input");
  genus->add_option("--out", gen_out, "Also write the output to FILE");

  std::string cls_seed, cls_out;
  auto* classify = app.add_subcommand(
      "classify", "Order, kind, and transitivity of each input tuple's group");
  classify->add_option("--seed-file", cls_seed,
                       "Read tuples from FILE instead of standard input");
  classify->add_option("--out", cls_out, "Also write the output to FILE");

  std::string inv_seed, inv_out;
  auto* invariant = app.add_subcommand(
      "invariant", "Spin lifting invariant of each input three-cycle tuple");
  invariant->add_option("--seed-file", inv_seed,
                        "Read tuples from FILE instead of standard input");
  invariant->add_option("--out", inv_out, "Also write the output to FILE");

  // orbit
  auto* orbit = app.add_subcommand(
      "orbit",
      "Decompose a class into braid orbits (exhaustive), or search the "
      "orbits of seed tuples (--seed-file)");
  int orb_n = 0, orb_r = 0;
  std::string orb_kind, orb_product, orb_filter, orb_seed, orb_out;
  orbit->add_option("--n", orb_n, "Degree");
  orbit->add_option("--r", orb_r, "Tuple length");
  orbit->add_option("--kind", orb_kind,
                    "Entry class: dt (2+2), tc (3), or transpositions (2)")
      ->check(CLI::IsMember({"dt", "tc", "transpositions"}));
  orbit->add_option("--product", orb_product,
                    "Required left-to-right product, in cycle notation "
                    "(default: identity)");
  orbit->add_option(
      "--group-filter", orb_filter,
      "Keep tuples whose group satisfies: transitive, alternating, "
      "symmetric, gl32, agl32, agl42, or full-ambient")
      ->check(CLI::IsMember({"transitive", "alternating", "symmetric", "gl32",
                             "agl32", "agl42", "full-ambient"}));
  orbit->add_option("--seed-file", orb_seed,
                    "Seeded mode: report the full orbit of each tuple in FILE");
  orbit->add_option("--out", orb_out, "Also write the report to FILE");

  // verify / list-claims
  auto* verify = app.add_subcommand(
      "verify", "Run registered claims and report pass/fail/inconclusive");
  std::vector<std::string> claim_ids;
  bool include_long = false;
  std::string ver_out;
  verify->add_option("--claim", claim_ids,
                     "Run only this claim (repeatable); named claims run "
                     "even if long-running");
  verify->add_flag("--long", include_long,
                   "Include long-running claims in the default selection");
  verify->add_option("--out", ver_out, "Also write the report to FILE");

  std::string list_out;
  auto* list_claims =
      app.add_subcommand("list-claims", "List the registered claims");
  list_claims->add_option("--out", list_out, "Also write the list to FILE");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed())
      return run_construct(family, con_n, con_g, con_kind, con_case, con_out);
    if (genus->parsed()) return run_genus(gen_seed, gen_out);
    if (classify->parsed()) return run_classify(cls_seed, cls_out);
    if (invariant->parsed()) return run_invariant(inv_seed, inv_out);
    if (orbit->parsed())
      return run_orbit(global, orb_seed, orb_n, orb_r, orb_kind, orb_product,
                       orb_filter, orb_out);
    if (verify->parsed())
      return run_verify(global, claim_ids, include_long, ver_out);
    if (list_claims->parsed()) return run_list_claims(list_out);
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
