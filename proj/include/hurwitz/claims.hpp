#pragma once

// A registry of named, machine-checkable claims about small branched-cover
// classes, each with a one-sentence statement, an expected outcome fixed in
// advance, and a body that recomputes the observed outcome from scratch.
// A claim passes exactly when observed equals expected; hitting a resource
// cap is reported as inconclusive, never as a pass.
//
// The registry also carries independent counting machinery (multiplication
// tables, the full subgroup lattice, tuple-count dynamic programming) used
// to cross-check orbit enumerations against closed-form counts: for a
// self-normalizing-up-to-itself subgroup copy G inside the symmetric group,
// every simultaneous-conjugation class of tuples generating a copy of G
// meets the fixed copy in exactly |N(G)| / |C(tuple)| tuples, so
//
//   (number of canonical forms) * |N(G)| = (generating tuples in the copy)
//
// whenever tuple centralizers are trivial. The right-hand side comes from a
// dynamic program sieved down the subgroup lattice, with no braid moves
// involved, which turns a seeded orbit search into an exhaustiveness proof.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/braid.hpp"
#include "hurwitz/construct.hpp"
#include "hurwitz/group.hpp"
#include "hurwitz/nielsen.hpp"
#include "hurwitz/perm.hpp"
#include "hurwitz/spin.hpp"
#include "hurwitz/tuple_io.hpp"

namespace hurwitz {

// ---------------------------------------------------------------------------
// Small-group machinery: explicit element lists with a multiplication table.

class ClaimError : public std::runtime_error {
 public:
  explicit ClaimError(const std::string& what) : std::runtime_error(what) {}
};

struct SmallGroup {
  std::vector<Perm> elements;              // sorted
  std::vector<std::vector<uint16_t>> mul;  // mul[i][j] = index of e_i * e_j
  std::vector<uint16_t> inv;
  uint16_t identity = 0;

  size_t size() const { return elements.size(); }

  uint16_t index_of(const Perm& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p)
      throw ClaimError("permutation is not an element of the group");
    return static_cast<uint16_t>(it - elements.begin());
  }
};

inline SmallGroup make_small_group(const std::vector<Perm>& generators) {
  constexpr uint64_t kMaxOrder = 4096;
  StabilizerChain chain(generators);
  if (chain.order() > kMaxOrder)
    throw ClaimError("group too large for a multiplication table: order " +
                     std::to_string(chain.order()));
  SmallGroup g;
  g.elements = chain.elements();
  std::sort(g.elements.begin(), g.elements.end());
  const size_t n = g.elements.size();
  g.mul.assign(n, std::vector<uint16_t>(n));
  g.inv.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (g.elements[i].is_identity()) g.identity = static_cast<uint16_t>(i);
    for (size_t j = 0; j < n; ++j)
      g.mul[i][j] = g.index_of(compose(g.elements[i], g.elements[j]));
  }
  for (size_t i = 0; i < n; ++i)
    g.inv[i] = g.index_of(inverse(g.elements[i]));
  return g;
}

// Conjugacy classes as sorted index sets, ordered by their least element.
inline std::vector<std::vector<uint16_t>> conjugacy_classes(
    const SmallGroup& g) {
  const size_t n = g.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<uint16_t>> classes;
  for (uint16_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<uint16_t> cls, frontier{start};
    seen[start] = 1;
    while (!frontier.empty()) {
      uint16_t x = frontier.back();
      frontier.pop_back();
      cls.push_back(x);
      for (uint16_t h = 0; h < n; ++h) {
        uint16_t y = g.mul[g.inv[h]][g.mul[x][h]];  // h^-1 x h
        if (!seen[y]) {
          seen[y] = 1;
          frontier.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Subgroup generated by the given element indices, as a sorted index set.
inline std::vector<uint16_t> generated_subgroup(const SmallGroup& g,
                                                const std::vector<uint16_t>& gens) {
  std::vector<char> in(g.size(), 0);
  in[g.identity] = 1;
  std::vector<uint16_t> members{g.identity}, frontier{g.identity};
  while (!frontier.empty()) {
    uint16_t x = frontier.back();
    frontier.pop_back();
    for (uint16_t s : gens) {
      uint16_t y = g.mul[x][s];
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// The complete subgroup lattice, found by closing the cyclic subgroups
// under single-element extensions. Subgroups are sorted index sets, listed
// in order of (size, elements); the last entry is the whole group.
inline std::vector<std::vector<uint16_t>> subgroup_lattice(
    const SmallGroup& g) {
  struct Item {
    std::vector<uint16_t> members;
    std::vector<uint16_t> gens;
  };
  std::set<std::vector<uint16_t>> seen;
  std::vector<Item> items;
  auto add = [&](std::vector<uint16_t> members, std::vector<uint16_t> gens) {
    if (seen.insert(members).second)
      items.push_back({std::move(members), std::move(gens)});
  };
  add(generated_subgroup(g, {}), {});
  for (uint16_t x = 0; x < g.size(); ++x)
    add(generated_subgroup(g, {x}), {x});
  for (size_t k = 0; k < items.size(); ++k) {
    // items grows while we walk it; the loop reaches every new item.
    for (uint16_t x = 0; x < g.size(); ++x) {
      if (std::binary_search(items[k].members.begin(), items[k].members.end(),
                             x))
        continue;
      std::vector<uint16_t> gens = items[k].gens;
      gens.push_back(x);
      std::vector<uint16_t> members = generated_subgroup(g, gens);
      add(std::move(members), std::move(gens));
    }
  }
  std::vector<std::vector<uint16_t>> subgroups;
  subgroups.reserve(items.size());
  for (Item& it : items) subgroups.push_back(std::move(it.members));
  std::sort(subgroups.begin(), subgroups.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return subgroups;
}

// Indices (into the lattice) of the maximal proper subgroups.
inline std::vector<size_t> maximal_proper_subgroups(
    const std::vector<std::vector<uint16_t>>& lattice) {
  std::vector<size_t> maximal;
  const size_t whole = lattice.size() - 1;
  for (size_t i = 0; i + 1 < lattice.size(); ++i) {
    bool is_maximal = true;
    for (size_t j = i + 1; j < whole && is_maximal; ++j)
      if (lattice[j].size() > lattice[i].size() &&
          std::includes(lattice[j].begin(), lattice[j].end(),
                        lattice[i].begin(), lattice[i].end()))
        is_maximal = false;
    if (is_maximal) maximal.push_back(i);
  }
  return maximal;
}

// Number of length-r sequences over the allowed subset whose product (left
// to right) is the prescribed element.
inline uint64_t count_tuples_with_product(const SmallGroup& g,
                                          const std::vector<char>& allowed,
                                          int length, uint16_t product) {
  if (length < 0 || allowed.size() != g.size())
    throw ClaimError("bad arguments to count_tuples_with_product");
  std::vector<uint16_t> allowed_list;
  for (uint16_t s = 0; s < g.size(); ++s)
    if (allowed[s]) allowed_list.push_back(s);
  std::vector<uint64_t> f(g.size(), 0);
  f[g.identity] = 1;
  for (int step = 0; step < length; ++step) {
    std::vector<uint64_t> next(g.size(), 0);
    for (uint16_t x = 0; x < g.size(); ++x) {
      if (!f[x]) continue;
      for (uint16_t s : allowed_list) next[g.mul[x][s]] += f[x];
    }
    f.swap(next);
  }
  return f[product];
}

// Number of such sequences that additionally generate the whole group,
// obtained by subtracting, down the subgroup lattice, the sequences whose
// entries all lie in a proper subgroup.
inline uint64_t count_generating_tuples(const SmallGroup& g,
                                        const std::vector<char>& allowed,
                                        int length, uint16_t product) {
  const auto lattice = subgroup_lattice(g);
  std::vector<uint64_t> exact(lattice.size(), 0);
  for (size_t i = 0; i < lattice.size(); ++i) {
    const auto& h = lattice[i];
    if (!std::binary_search(h.begin(), h.end(), product)) continue;
    std::vector<char> sub_allowed(g.size(), 0);
    bool any = false;
    for (uint16_t x : h)
      if (allowed[x]) {
        sub_allowed[x] = 1;
        any = true;
      }
    if (!any && length > 0) continue;
    uint64_t total = count_tuples_with_product(g, sub_allowed, length, product);
    for (size_t j = 0; j < i; ++j)
      if (lattice[j].size() < h.size() &&
          std::includes(h.begin(), h.end(), lattice[j].begin(),
                        lattice[j].end()))
        total -= exact[j];
    exact[i] = total;
  }
  return exact.back();
}

// Order of the normalizer of the set `elements` (a subgroup's element list)
// inside the full symmetric group on `degree` points, by brute force.
inline uint64_t symmetric_normalizer_order(std::vector<Perm> elements,
                                           int degree) {
  if (degree < 1 || degree > 8)
    throw ClaimError("normalizer brute force supports degree 1..8");
  std::sort(elements.begin(), elements.end());
  std::vector<uint8_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<uint8_t>(i + 1);
  uint64_t count = 0;
  do {
    const Perm pi = Perm::from_images(img);
    bool closed = true;
    for (const Perm& x : elements)
      if (!std::binary_search(elements.begin(), elements.end(),
                              conjugate(x, pi))) {
        closed = false;
        break;
      }
    if (closed) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

// Order of the centralizer of a tuple (all entries at once) in the full
// symmetric group on `degree` points, by brute force.
inline uint64_t tuple_centralizer_order(const std::vector<Perm>& entries,
                                        int degree) {
  if (degree < 1 || degree > 8)
    throw ClaimError("centralizer brute force supports degree 1..8");
  std::vector<uint8_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<uint8_t>(i + 1);
  uint64_t count = 0;
  do {
    const Perm pi = Perm::from_images(img);
    bool commutes = true;
    for (const Perm& x : entries)
      if (conjugate(x, pi) != x) {
        commutes = false;
        break;
      }
    if (commutes) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

// ---------------------------------------------------------------------------
// Claim framework.

struct ClaimOptions {
  int workers = 1;
  uint64_t memory_cap = uint64_t{2} << 30;
};

enum class ClaimStatus { Pass, Fail, Inconclusive };

inline const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

struct ClaimOutcome {
  ordered_json parameters;
  ordered_json expected;
  ordered_json observed;
  ordered_json details;
};

struct Claim {
  std::string id;
  std::string statement;
  int criterion = 0;  // grouping used by the acceptance harness
  bool long_running = false;
  std::function<ClaimOutcome(const ClaimOptions&)> body;
};

struct ClaimResult {
  std::string claim_id;
  std::string statement;
  int criterion = 0;
  ClaimStatus status = ClaimStatus::Inconclusive;
  ordered_json parameters;
  ordered_json expected;
  ordered_json observed;
  ordered_json details;
  double wall_time_s = 0.0;
};

inline ClaimResult run_claim(const Claim& claim,
                             const ClaimOptions& options = {}) {
  ClaimResult result;
  result.claim_id = claim.id;
  result.statement = claim.statement;
  result.criterion = claim.criterion;
  const auto start = std::chrono::steady_clock::now();
  try {
    ClaimOutcome outcome = claim.body(options);
    result.parameters = std::move(outcome.parameters);
    result.expected = std::move(outcome.expected);
    result.observed = std::move(outcome.observed);
    result.details = std::move(outcome.details);
    result.status = result.expected == result.observed ? ClaimStatus::Pass
                                                       : ClaimStatus::Fail;
  } catch (const ResourceCapError& e) {
    result.status = ClaimStatus::Inconclusive;
    result.details["resource_limit"] = e.what();
  } catch (const std::exception& e) {
    result.status = ClaimStatus::Fail;
    result.details["error"] = e.what();
  }
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

inline ordered_json claim_result_to_json(const ClaimResult& r,
                                         bool include_timing = false) {
  ordered_json j;
  j["claim"] = r.claim_id;
  j["statement"] = r.statement;
  j["parameters"] = r.parameters;
  j["expected"] = r.expected;
  j["observed"] = r.observed;
  j["status"] = to_string(r.status);
  if (!r.details.is_null()) j["details"] = r.details;
  if (include_timing) j["wall_time_s"] = r.wall_time_s;
  return j;
}

// ---------------------------------------------------------------------------
// Claim bodies.

namespace claims_detail {

inline OrbitOptions orbit_options(const ClaimOptions& o) {
  OrbitOptions opts;
  opts.workers = o.workers;
  opts.memory_cap = o.memory_cap;
  return opts;
}

inline ClassSpec uniform_class(int degree, int length,
                               std::vector<int> cycle_lengths) {
  ClassSpec spec;
  spec.degree = degree;
  spec.length = length;
  spec.entry_classes = {CycleStructure{std::move(cycle_lengths)}};
  return spec;
}

// Double-transposition classes anchored in the standard copy of the
// 168-element linear group on 7 points.
inline ClassSpec anchored_gl32_class(int length,
                                     std::optional<Perm> product) {
  ClassSpec spec = uniform_class(7, length, {2, 2});
  spec.product = std::move(product);
  spec.group_filter = "gl32";
  const LinearGroupSpec gl = linear_group(GroupKind::GL32);
  spec.ambient_generators = gl.generators;
  spec.ambient_name = "gl32";
  return spec;
}

inline ordered_json sorted_invariants(const BraidOrbitReport& report) {
  std::vector<int> inv;
  for (const OrbitSummary& o : report.orbits)
    inv.push_back(o.lifting_invariant.value());
  std::sort(inv.begin(), inv.end());
  return ordered_json(inv);
}

inline ordered_json orbit_sizes(const BraidOrbitReport& report) {
  ordered_json sizes = ordered_json::array();
  for (const OrbitSummary& o : report.orbits) sizes.push_back(o.size);
  return sizes;
}

inline ClaimOutcome single_orbit_transpositions(int degree, int length,
                                                const ClaimOptions& options) {
  ClaimOutcome out;
  out.parameters = {{"degree", degree},
                    {"length", length},
                    {"entry_class", "2"},
                    {"product", "id"}};
  out.expected = {{"orbit_count", 1}};
  const BraidOrbitReport report = orbit_decomposition(
      uniform_class(degree, length, {2}), orbit_options(options));
  out.observed = {{"orbit_count", report.orbit_count()}};
  out.details = {{"raw_tuple_count", report.raw_tuple_count},
                 {"canonical_forms", report.total_class_size},
                 {"orbit_sizes", orbit_sizes(report)}};
  return out;
}

inline ClaimOutcome three_cycle_genus0(int degree, int invariant,
                                       const ClaimOptions& options) {
  ClaimOutcome out;
  out.parameters = {{"degree", degree},
                    {"length", degree - 1},
                    {"entry_class", "3"},
                    {"genus", 0}};
  out.expected = {{"orbit_count", 1},
                  {"lifting_invariants", ordered_json::array({invariant})}};
  const BraidOrbitReport report = orbit_decomposition(
      uniform_class(degree, degree - 1, {3}), orbit_options(options));
  out.observed = {{"orbit_count", report.orbit_count()},
                  {"lifting_invariants", sorted_invariants(report)}};
  out.details = {{"raw_tuple_count", report.raw_tuple_count},
                 {"canonical_forms", report.total_class_size},
                 {"orbit_sizes", orbit_sizes(report)}};
  return out;
}

inline ClaimOutcome three_cycle_genus1(const ClaimOptions& options) {
  ClaimOutcome out;
  out.parameters = {{"degree", 5},
                    {"length", 5},
                    {"entry_class", "3"},
                    {"genus", 1}};
  out.expected = {{"orbit_count", 2},
                  {"lifting_invariants", ordered_json::array({-1, 1})}};
  const BraidOrbitReport report =
      orbit_decomposition(uniform_class(5, 5, {3}), orbit_options(options));
  out.observed = {{"orbit_count", report.orbit_count()},
                  {"lifting_invariants", sorted_invariants(report)}};
  out.details = {{"raw_tuple_count", report.raw_tuple_count},
                 {"canonical_forms", report.total_class_size},
                 {"orbit_sizes", orbit_sizes(report)}};
  return out;
}

// Streams every product-one three-cycle tuple of the given class and
// classifies the transitive ones.
inline ClaimOutcome three_cycles_generate_alternating(const ClaimOptions&) {
  ClaimOutcome out;
  ordered_json classes = ordered_json::array();
  bool all_alternating = true;
  uint64_t checked_total = 0;
  const std::vector<std::pair<int, int>> cases = {{5, 4}, {6, 5}, {5, 5}};
  for (const auto& [degree, length] : cases) {
    const ClassSpec spec = uniform_class(degree, length, {3});
    const detail::ClassPools pools = detail::build_class_pools(spec);
    uint64_t admissible = 0, alternating = 0;
    detail::for_each_product_tuple(spec, pools, [&](const uint8_t* flat) {
      const std::vector<Perm> entries =
          detail::entries_from_flat(flat, spec.degree, spec.length);
      const GroupId id = classify_group(entries);
      if (!id.transitive) return;
      ++admissible;
      if (id.kind == GroupKind::Alternating) ++alternating;
    });
    all_alternating = all_alternating && admissible == alternating;
    checked_total += admissible;
    classes.push_back({{"degree", degree},
                       {"length", length},
                       {"admissible", admissible},
                       {"alternating", alternating}});
  }
  out.parameters = {{"entry_class", "3"},
                    {"classes", "(5,4), (6,5), (5,5)"}};
  out.expected = {{"all_alternating", true}};
  out.observed = {{"all_alternating", all_alternating}};
  out.details = {{"tuples_checked", checked_total}, {"classes", classes}};
  return out;
}

inline ClaimOutcome gl32_involutions(const ClaimOptions&) {
  ClaimOutcome out;
  const LinearGroupSpec gl = linear_group(GroupKind::GL32);
  const std::vector<Perm> elements =
      StabilizerChain(gl.generators).elements();
  uint64_t involutions = 0;
  bool all_double_transpositions = true;
  for (const Perm& x : elements) {
    if (x.is_identity() || compose(x, x) != Perm(7)) continue;
    ++involutions;
    all_double_transpositions =
        all_double_transpositions && cycle_structure(x).is_double_transposition();
  }
  out.parameters = {{"group", "gl32"}, {"degree", 7}};
  out.expected = {{"group_order", 168},
                  {"involution_count", 21},
                  {"all_double_transpositions", true}};
  out.observed = {{"group_order", elements.size()},
                  {"involution_count", involutions},
                  {"all_double_transpositions", all_double_transpositions}};
  return out;
}

// Shared by the 7-tuple claim and the long 9-tuple claim: decide whether the
// braid orbit of the canonical seed covers every product-one generating
// tuple, using the subgroup-lattice count as the independent total.
inline ClaimOutcome gl32_tuples_single_orbit(int length, bool exhaustive,
                                             const ClaimOptions& options) {
  ClaimOutcome out;
  out.parameters = {{"group", "gl32"},
                    {"degree", 7},
                    {"length", length},
                    {"entry_class", "2+2"},
                    {"product", "id"}};
  out.expected = {{"orbit_count", 1}, {"covers_all_generating_tuples", true}};

  const LinearGroupSpec gl = linear_group(GroupKind::GL32);
  const SmallGroup group = make_small_group(gl.generators);
  std::vector<char> involutions(group.size(), 0);
  for (uint16_t i = 0; i < group.size(); ++i)
    if (!group.elements[i].is_identity() &&
        group.mul[i][i] == group.identity)
      involutions[i] = 1;
  const uint64_t generating = count_generating_tuples(
      group, involutions, length, group.identity);
  const uint64_t normalizer =
      symmetric_normalizer_order(group.elements, 7);

  uint64_t orbit_count = 0, covered_forms = 0;
  ordered_json sizes = ordered_json::array();
  uint64_t raw = 0;
  if (exhaustive) {
    const BraidOrbitReport report = orbit_decomposition(
        anchored_gl32_class(length, std::nullopt), orbit_options(options));
    orbit_count = report.orbit_count();
    covered_forms = report.total_class_size;
    sizes = orbit_sizes(report);
    raw = report.raw_tuple_count;
  } else {
    // Seeded search: the orbit of the constructed genus-3 tuple. If that
    // orbit accounts for every generating tuple it is the only orbit; a
    // reported count of 0 means the search alone could not determine it.
    const NielsenTuple seed = exceptional_genus3(GroupKind::GL32);
    if (seed.length() != length)
      throw ClaimError("seed length mismatch for the long orbit claim");
    const OrbitResult orbit = orbit_of(seed.entries(), orbit_options(options));
    covered_forms = orbit.size;
    orbit_count = covered_forms * normalizer == generating ? 1 : 0;
    sizes.push_back(orbit.size);
  }
  const bool covered = covered_forms * normalizer == generating;
  out.observed = {{"orbit_count", orbit_count},
                  {"covers_all_generating_tuples", covered}};
  out.details = {{"canonical_forms", covered_forms},
                 {"orbit_sizes", sizes},
                 {"generating_tuple_count", generating},
                 {"normalizer_order", normalizer},
                 {"mode", exhaustive ? "exhaustive" : "seeded"}};
  if (exhaustive) out.details["raw_tuple_count"] = raw;
  return out;
}

inline ClaimOutcome gl32_prescribed_products(const ClaimOptions& options) {
  ClaimOutcome out;
  const LinearGroupSpec gl = linear_group(GroupKind::GL32);
  const SmallGroup group = make_small_group(gl.generators);
  const auto classes = conjugacy_classes(group);

  ordered_json expected_counts = ordered_json::array();
  ordered_json observed_counts = ordered_json::array();
  ordered_json per_class = ordered_json::array();
  for (const auto& cls : classes) {
    const Perm rep = group.elements[cls.front()];
    std::optional<Perm> product;
    if (!rep.is_identity()) product = rep;
    const BraidOrbitReport report = orbit_decomposition(
        anchored_gl32_class(6, product), orbit_options(options));
    expected_counts.push_back(1);
    observed_counts.push_back(report.orbit_count());
    per_class.push_back({{"product", format_perm(rep)},
                         {"class_size", cls.size()},
                         {"raw_tuple_count", report.raw_tuple_count},
                         {"canonical_forms", report.total_class_size},
                         {"orbit_sizes", orbit_sizes(report)}});
  }
  out.parameters = {{"group", "gl32"},
                    {"degree", 7},
                    {"length", 6},
                    {"entry_class", "2+2"},
                    {"products", "one representative per conjugacy class"}};
  out.expected = {{"orbit_counts", expected_counts}};
  out.observed = {{"orbit_counts", observed_counts}};
  out.details = {{"conjugacy_classes", classes.size()},
                 {"per_class", per_class}};
  return out;
}

inline ClaimOutcome construction_suite(const ClaimOptions&) {
  ClaimOutcome out;
  int cases = 0, admissible = 0, genus_exact = 0, length_exact = 0;
  bool alternating_ok = true;
  ordered_json rows = ordered_json::array();

  auto check = [&](const std::string& family, int n, int g,
                   const NielsenTuple& t, TupleShape shape,
                   bool require_alternating) {
    ++cases;
    const bool valid = !validate_tuple(t.entries()) && t.shape() == shape &&
                       t.degree() == n;
    if (valid) ++admissible;
    if (t.genus() == g) ++genus_exact;
    if (t.length() == n + g - 1) ++length_exact;
    bool alt = true;
    if (require_alternating) {
      alt = classify_group(t.entries()).kind == GroupKind::Alternating;
      alternating_ok = alternating_ok && alt;
    }
    rows.push_back({{"family", family},
                    {"n", n},
                    {"g", g},
                    {"admissible", valid},
                    {"alternating_required", require_alternating},
                    {"alternating", require_alternating ? alt : true}});
  };

  for (int n = 4; n <= 10; ++n)
    check("dt0", n, 0, dt_genus0(n), TupleShape::DoubleTranspositions, false);
  for (int n = 3; n <= 10; ++n)
    check("tc0", n, 0, tc_genus0(n), TupleShape::ThreeCycles, true);
  for (int n = 5; n <= 9; ++n)
    check("dta1", n, 1, dta_genus1(n), TupleShape::DoubleTranspositions,
          true);
  const std::vector<std::pair<int, int>> grid = {{5, 1}, {6, 2}, {7, 3},
                                                 {9, 4}};
  for (const auto& [n, g] : grid) {
    check("family-dt", n, g,
          build_family(n, g, FamilyKind::DoubleTranspositions),
          TupleShape::DoubleTranspositions, true);
    check("family-tc", n, g, build_family(n, g, FamilyKind::ThreeCycles),
          TupleShape::ThreeCycles, true);
  }

  out.parameters = {{"families", "dt0 4..10, tc0 3..10, dta1 5..9, "
                                 "family (5,1),(6,2),(7,3),(9,4) both kinds"}};
  out.expected = {{"cases", 28},
                  {"admissible", 28},
                  {"genus_exact", 28},
                  {"length_exact", 28},
                  {"alternating_where_required", true}};
  out.observed = {{"cases", cases},
                  {"admissible", admissible},
                  {"genus_exact", genus_exact},
                  {"length_exact", length_exact},
                  {"alternating_where_required", alternating_ok}};
  out.details = {{"cases", rows}};
  return out;
}

inline ClaimOutcome exceptional_family(GroupKind which,
                                       const ClaimOptions&) {
  ClaimOutcome out;
  const bool seven = which == GroupKind::GL32;
  const NielsenTuple t = exceptional_genus3(which);
  const GroupId id = classify_group(t.entries());
  bool all_dt = true;
  for (const Perm& g : t.entries())
    all_dt = all_dt && cycle_structure(g).is_double_transposition();
  const ModuliCheck mc = moduli_necessary(t);

  out.parameters = {{"group", seven ? "gl32" : "agl32"}};
  out.expected = {{"degree", seven ? 7 : 8},
                  {"length", seven ? 9 : 10},
                  {"genus", 3},
                  {"all_double_transpositions", true},
                  {"group", seven ? "gl32" : "agl32"},
                  {"group_order", seven ? 168 : 1344},
                  {"moduli_dimension", 6},
                  {"parameters_meet_moduli", true}};
  out.observed = {{"degree", t.degree()},
                  {"length", t.length()},
                  {"genus", t.genus()},
                  {"all_double_transpositions", all_dt},
                  {"group", to_string(id.kind)},
                  {"group_order", id.order},
                  {"moduli_dimension", mc.dim_moduli},
                  {"parameters_meet_moduli", mc.necessary_ok}};
  out.details = {{"parameter_count", t.length() - 3},
                 {"admissible", !validate_tuple(t.entries())}};
  if (seven) {
    out.expected["parameter_count_equals_moduli_dimension"] = true;
    out.observed["parameter_count_equals_moduli_dimension"] =
        t.length() - 3 == mc.dim_moduli;
  }
  return out;
}

inline ClaimOutcome tau_imprimitive(const ClaimOptions&) {
  ClaimOutcome out;
  const NielsenTuple t = tau_genus2();
  const GroupId id = classify_group(t.entries());
  int block_count = 0, block_size = 0;
  if (id.block_system) {
    block_count = static_cast<int>(id.block_system->size());
    block_size = block_count ? static_cast<int>(id.block_system->front().size())
                             : 0;
  }
  out.parameters = {{"family", "tau"}};
  out.expected = {{"degree", 6},
                  {"length", 7},
                  {"genus", 2},
                  {"shape", "double-transpositions"},
                  {"group_order", 24},
                  {"primitive", false},
                  {"block_count", 3},
                  {"block_size", 2}};
  out.observed = {{"degree", t.degree()},
                  {"length", t.length()},
                  {"genus", t.genus()},
                  {"shape", to_string(t.shape())},
                  {"group_order", id.order},
                  {"primitive", id.primitive},
                  {"block_count", block_count},
                  {"block_size", block_size}};
  out.details = {{"admissible", !validate_tuple(t.entries())}};
  return out;
}

// --- property-suite bodies (criterion-8 style randomized checks) ---

inline Perm random_perm_of(int n, std::mt19937_64& rng) {
  std::vector<uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<uint8_t>(i + 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm::from_images(std::move(img));
}

inline std::vector<Perm> conjugate_entries(const std::vector<Perm>& t,
                                           const Perm& by) {
  std::vector<Perm> out;
  out.reserve(t.size());
  for (const Perm& g : t) out.push_back(conjugate(g, by));
  return out;
}

inline std::vector<Perm> random_word(std::vector<Perm> t,
                                     std::mt19937_64& rng, int steps) {
  for (int s = 0; s < steps; ++s)
    t = braid_move(t, 1 + static_cast<int>(rng() % (t.size() - 1)),
                   rng() % 2 == 0);
  return t;
}

inline ClaimOutcome braid_relations(const ClaimOptions&) {
  ClaimOutcome out;
  std::mt19937_64 rng(1);
  uint64_t checks = 0, violations = 0;
  const std::vector<std::vector<Perm>> seeds = {
      tc_genus0(6).entries(), dt_genus0(7).entries(),
      build_family(6, 2, FamilyKind::ThreeCycles).entries()};
  for (std::vector<Perm> t : seeds) {
    const int r = static_cast<int>(t.size());
    for (int trial = 0; trial < 50; ++trial) {
      t = random_word(std::move(t), rng, 2);
      for (int i = 1; i + 1 <= r - 1; ++i) {
        ++checks;
        const auto lhs =
            braid_move(braid_move(braid_move(t, i), i + 1), i);
        const auto rhs =
            braid_move(braid_move(braid_move(t, i + 1), i), i + 1);
        if (lhs != rhs) ++violations;
      }
      for (int i = 1; i <= r - 1; ++i)
        for (int j = i + 2; j <= r - 1; ++j) {
          ++checks;
          if (braid_move(braid_move(t, i), j) !=
              braid_move(braid_move(t, j), i))
            ++violations;
        }
    }
  }
  out.parameters = {{"seeds", 3}, {"checks", checks}};
  out.expected = {{"violations", 0}};
  out.observed = {{"violations", violations}};
  return out;
}

inline ClaimOutcome braid_equivariance(const ClaimOptions&) {
  ClaimOutcome out;
  std::mt19937_64 rng(2);
  uint64_t checks = 0, violations = 0;
  std::vector<Perm> t = tc_genus0(7).entries();
  for (int trial = 0; trial < 200; ++trial) {
    const Perm pi = random_perm_of(7, rng);
    const int i = 1 + static_cast<int>(rng() % (t.size() - 1));
    for (bool forward : {true, false}) {
      ++checks;
      if (braid_move(conjugate_entries(t, pi), i, forward) !=
          conjugate_entries(braid_move(t, i, forward), pi))
        ++violations;
    }
    t = random_word(std::move(t), rng, 1);
  }
  out.parameters = {{"degree", 7}, {"checks", checks}};
  out.expected = {{"violations", 0}};
  out.observed = {{"violations", violations}};
  return out;
}

inline ClaimOutcome braid_preservation(const ClaimOptions&) {
  ClaimOutcome out;
  std::mt19937_64 rng(3);
  uint64_t words = 0, violations = 0;
  const std::vector<NielsenTuple> seeds = {
      tc_genus0(6), dt_genus0(7),
      build_family(7, 3, FamilyKind::DoubleTranspositions)};
  for (const NielsenTuple& seed : seeds) {
    const uint64_t order = group_order(seed.entries());
    const StabilizerChain chain(seed.entries());
    std::vector<Perm> t = seed.entries();
    for (int w = 0; w < 334; ++w) {
      ++words;
      t = random_word(std::move(t), rng, 5);
      Perm prod(seed.degree());
      for (const Perm& g : t) prod = compose(prod, g);
      const NielsenTuple nt = NielsenTuple::make(t);
      bool same_group = group_order(t) == order;
      for (const Perm& g : t) same_group = same_group && chain.contains(g);
      if (!prod.is_identity() || nt.genus() != seed.genus() ||
          nt.shape() != seed.shape() || !same_group)
        ++violations;
    }
  }
  out.parameters = {{"seeds", 3}, {"random_words", words}};
  out.expected = {{"violations", 0}};
  out.observed = {{"violations", violations}};
  return out;
}

inline ClaimOutcome invariant_constancy(const ClaimOptions&) {
  ClaimOutcome out;
  std::mt19937_64 rng(4);
  uint64_t braid_checks = 0, conjugation_checks = 0, violations = 0;
  for (int n : {5, 6, 7}) {
    const NielsenTuple seed = tc_genus0(n);
    const int expected_value = lifting_invariant(seed);
    std::vector<Perm> t = seed.entries();
    for (int w = 0; w < 334; ++w) {
      ++braid_checks;
      t = random_word(std::move(t), rng, 3);
      if (lifting_invariant(t) != expected_value) ++violations;
    }
    for (int c = 0; c < 34; ++c) {
      ++conjugation_checks;
      if (lifting_invariant(conjugate_entries(t, random_perm_of(n, rng))) !=
          expected_value)
        ++violations;
    }
  }
  out.parameters = {{"degrees", "5..7"},
                    {"braid_words", braid_checks},
                    {"conjugators", conjugation_checks}};
  out.expected = {{"violations", 0}};
  out.observed = {{"violations", violations}};
  return out;
}

inline ClaimOutcome stabilize_invariant(const ClaimOptions&) {
  ClaimOutcome out;
  uint64_t checks = 0, violations = 0;
  ordered_json rows = ordered_json::array();
  for (const auto& [n, g] : std::vector<std::pair<int, int>>{
           {5, 1}, {6, 2}, {7, 3}, {9, 4}}) {
    const NielsenTuple t = build_family(n, g, FamilyKind::ThreeCycles);
    const NielsenTuple up = stabilize(t, FamilyKind::ThreeCycles);
    const int before = lifting_invariant(t);
    const int after = lifting_invariant(up);
    ++checks;
    if (before != after || up.genus() != t.genus() + 1 ||
        up.degree() != t.degree() + 1)
      ++violations;
    rows.push_back({{"n", n}, {"g", g}, {"invariant", before},
                    {"stabilized_invariant", after}});
  }
  out.parameters = {{"kind", "tc"}, {"cases", checks}};
  out.expected = {{"violations", 0}};
  out.observed = {{"violations", violations}};
  out.details = {{"cases", rows}};
  return out;
}

inline bool clifford_equal(const CliffordElement& a,
                           const CliffordElement& b) {
  return a.terms() == b.terms();
}

inline ClaimOutcome clifford_relations(const ClaimOptions&) {
  ClaimOutcome out;
  std::mt19937_64 rng(5);
  uint64_t checks = 0, violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);  // 4..8
    const int i = 1 + static_cast<int>(rng() % n);
    int j = 1 + static_cast<int>(rng() % n);
    while (j == i) j = 1 + static_cast<int>(rng() % n);

    const CliffordElement ei = CliffordElement::generator(n, i);
    const CliffordElement ej = CliffordElement::generator(n, j);
    ++checks;
    if (!clifford_equal(ei * ei, CliffordElement::scalar(n, 1)))
      ++violations;
    ++checks;
    if (!clifford_equal(ei * ej, clifford_negate(ej * ei))) ++violations;

    // A transposition factor stands for (e_i - e_j)/sqrt(2), so its square
    // is +1 and two factors with disjoint support anticommute (they are odd).
    const CliffordElement vij =
        even_product(n, {lift_transposition(i, j), lift_transposition(i, j)});
    ++checks;
    if (!clifford_equal(vij, CliffordElement::scalar(n, 1))) ++violations;
    if (n >= 4) {
      int k = 1, l = 2;
      while (k == i || k == j) ++k;
      l = k + 1;
      while (l == i || l == j || l == k) ++l;
      if (l <= n) {
        const auto ab = even_product(
            n, {lift_transposition(i, j), lift_transposition(k, l)});
        const auto ba = even_product(
            n, {lift_transposition(k, l), lift_transposition(i, j)});
        ++checks;
        if (!clifford_equal(ab, clifford_negate(ba))) ++violations;
      }
    }

    // Associativity on random sparse elements.
    auto random_element = [&](int degree) {
      CliffordElement acc = CliffordElement::zero(degree);
      for (int t = 0; t < 3; ++t) {
        const uint32_t mask = static_cast<uint32_t>(rng()) &
                              ((uint32_t{1} << degree) - 1);
        const int num = 1 + static_cast<int>(rng() % 5);
        const int den = 1 + static_cast<int>(rng() % 4);
        CliffordElement mono = CliffordElement::scalar(degree, 1);
        for (int b = 0; b < degree; ++b)
          if (mask & (uint32_t{1} << b))
            mono = mono * CliffordElement::generator(degree, b + 1);
        acc = acc + clifford_scale(mono, mpq_class(num) / den);
      }
      return acc;
    };
    const CliffordElement a = random_element(n), b = random_element(n),
                          c = random_element(n);
    ++checks;
    if (!clifford_equal((a * b) * c, a * (b * c))) ++violations;
    ++checks;
    if (!clifford_equal(a * (b + c), a * b + a * c)) ++violations;
  }
  out.parameters = {{"checks", checks}};
  out.expected = {{"violations", 0}};
  out.observed = {{"violations", violations}};
  return out;
}

inline ClaimOutcome identity_factorization_signs(const ClaimOptions&) {
  ClaimOutcome out;
  std::mt19937_64 rng(6);
  uint64_t checks = 0, violations = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);  // 4..6
    // Random product-one three-cycle tuple: inverse pairs, then mixing.
    std::vector<Perm> t;
    const int pairs = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < pairs; ++k) {
      std::vector<int> pts(n);
      std::iota(pts.begin(), pts.end(), 1);
      std::shuffle(pts.begin(), pts.end(), rng);
      const Perm c = detail::make_cycles(n, {{pts[0], pts[1], pts[2]}});
      t.push_back(c);
      t.push_back(inverse(c));
    }
    t = random_word(std::move(t), rng, 30);

    const int m = t.front().degree();
    CliffordElement acc = CliffordElement::scalar(m, 1);
    for (const Perm& g : t) {
      int a = 0;
      for (int x = 1; x <= m; ++x)
        if (g.apply(x) != x) {
          a = x;
          break;
        }
      acc = acc * lift_3cycle(m, a, g.apply(a), g.apply(g.apply(a)));
    }
    ++checks;
    const auto s = acc.as_scalar();
    if (!s || (*s != 1 && *s != -1)) ++violations;
  }
  out.parameters = {{"factorizations", checks}};
  out.expected = {{"violations", 0}};
  out.observed = {{"violations", violations}};
  return out;
}

}  // namespace claims_detail

// ---------------------------------------------------------------------------
// Registry.

inline const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = [] {
    namespace d = claims_detail;
    std::vector<Claim> claims;

    claims.push_back(
        {"clebsch-degree3",
         "Transitive transposition 4-tuples on 3 points with product one "
         "form a single braid orbit (Clebsch).",
         1, false, [](const ClaimOptions& o) {
           return d::single_orbit_transpositions(3, 4, o);
         }});
    claims.push_back(
        {"clebsch-degree4",
         "Transitive transposition 6-tuples on 4 points with product one "
         "form a single braid orbit (Clebsch).",
         1, false, [](const ClaimOptions& o) {
           return d::single_orbit_transpositions(4, 6, o);
         }});

    claims.push_back(
        {"fried-genus0-degree5",
         "Genus-0 three-cycle tuples of degree 5 form a single braid orbit "
         "with lifting invariant +1 (Fried).",
         2, false, [](const ClaimOptions& o) {
           return d::three_cycle_genus0(5, 1, o);
         }});
    claims.push_back(
        {"fried-genus0-degree6",
         "Genus-0 three-cycle tuples of degree 6 form a single braid orbit "
         "with lifting invariant -1 (Fried; the sign is +1 exactly for odd "
         "degree).",
         2, false, [](const ClaimOptions& o) {
           return d::three_cycle_genus0(6, -1, o);
         }});

    claims.push_back(
        {"fried-genus1-degree5",
         "Genus-1 three-cycle tuples of degree 5 split into exactly two "
         "braid orbits, distinguished by the lifting invariant (Fried).",
         3, false,
         [](const ClaimOptions& o) { return d::three_cycle_genus1(o); }});

    claims.push_back(
        {"three-cycle-tuples-generate-alternating",
         "Every admissible three-cycle tuple in the degree-5 and degree-6 "
         "classes of genus 0 and 1 generates the full alternating group.",
         4, false, [](const ClaimOptions& o) {
           return d::three_cycles_generate_alternating(o);
         }});

    claims.push_back(
        {"gl32-involutions",
         "The 168-element simple linear group on 7 points has exactly 21 "
         "involutions, and each acts as a double transposition.",
         5, false,
         [](const ClaimOptions& o) { return d::gl32_involutions(o); }});
    claims.push_back(
        {"gl32-seven-tuples",
         "Product-one 7-tuples of involutions generating the 168-element "
         "linear group on 7 points form a single braid orbit.",
         5, false, [](const ClaimOptions& o) {
           return d::gl32_tuples_single_orbit(7, /*exhaustive=*/true, o);
         }});
    claims.push_back(
        {"gl32-six-tuples-prescribed-product",
         "For one representative per conjugacy class of the 168-element "
         "linear group, the 6-tuples of its involutions with that prescribed "
         "product form a single braid orbit.",
         5, false, [](const ClaimOptions& o) {
           return d::gl32_prescribed_products(o);
         }});

    claims.push_back(
        {"construction-suite",
         "Every constructed family member is admissible with the exact "
         "claimed genus and length n+g-1, and the alternating-group families "
         "classify as alternating.",
         6, false,
         [](const ClaimOptions& o) { return d::construction_suite(o); }});

    claims.push_back(
        {"exceptional-degree7",
         "The 9-entry genus-3 double-transposition tuple on 7 points "
         "generates the 168-element linear group and spends exactly "
         "dim(moduli of genus 3) = 6 branch-point parameters.",
         7, false, [](const ClaimOptions& o) {
           return d::exceptional_family(GroupKind::GL32, o);
         }});
    claims.push_back(
        {"exceptional-degree8",
         "The 10-entry genus-3 double-transposition tuple on 8 points "
         "generates the 1344-element affine linear group and meets the "
         "genus-3 moduli-dimension requirement.",
         7, false, [](const ClaimOptions& o) {
           return d::exceptional_family(GroupKind::AGL32, o);
         }});
    claims.push_back(
        {"tau-imprimitive",
         "The 7-entry genus-2 double-transposition tuple on 6 points "
         "generates an imprimitive group of order 24 preserving 3 blocks of "
         "size 2.",
         7, false,
         [](const ClaimOptions& o) { return d::tau_imprimitive(o); }});

    claims.push_back({"braid-relations",
                      "Adjacent elementary moves satisfy the braid relation "
                      "and distant moves commute, on random tuples.",
                      8, false, [](const ClaimOptions& o) {
                        return d::braid_relations(o);
                      }});
    claims.push_back({"braid-equivariance",
                      "Elementary moves commute with simultaneous relabeling "
                      "of the points, on random tuples and relabelings.",
                      8, false, [](const ClaimOptions& o) {
                        return d::braid_equivariance(o);
                      }});
    claims.push_back(
        {"braid-preservation",
         "Random braid words preserve the product, genus, entry shape, and "
         "the generated subgroup of a tuple.",
         8, false,
         [](const ClaimOptions& o) { return d::braid_preservation(o); }});
    claims.push_back(
        {"invariant-constancy",
         "The lifting invariant of three-cycle tuples of degree 5..7 is "
         "unchanged by random braid words and random relabelings.",
         8, false,
         [](const ClaimOptions& o) { return d::invariant_constancy(o); }});
    claims.push_back(
        {"stabilize-preserves-invariant",
         "Raising the genus of a three-cycle family by stabilization leaves "
         "the lifting invariant unchanged.",
         8, false,
         [](const ClaimOptions& o) { return d::stabilize_invariant(o); }});
    claims.push_back(
        {"clifford-relations",
         "The rational Clifford model satisfies the generator relations, "
         "unit squares of repeated transposition lifts, anticommutation of "
         "disjoint lifts, associativity, and distributivity on random "
         "elements.",
         8, false,
         [](const ClaimOptions& o) { return d::clifford_relations(o); }});
    claims.push_back(
        {"identity-factorization-signs",
         "The product of order-3 lifts over any product-one three-cycle "
         "tuple is a scalar, and that scalar is +1 or -1.",
         8, false, [](const ClaimOptions& o) {
           return d::identity_factorization_signs(o);
         }});

    claims.push_back(
        {"gl32-nine-tuples",
         "Product-one 9-tuples of involutions generating the 168-element "
         "linear group on 7 points form a single braid orbit.",
         9, true, [](const ClaimOptions& o) {
           return d::gl32_tuples_single_orbit(9, /*exhaustive=*/false, o);
         }});

    return claims;
  }();
  return registry;
}

inline const Claim* find_claim(const std::string& id) {
  for (const Claim& c : claim_registry())
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace hurwitz
