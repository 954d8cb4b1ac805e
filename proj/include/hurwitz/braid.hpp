#pragma once

// Braid moves on permutation tuples, canonical forms under simultaneous
// conjugation, exhaustive enumeration of tuple classes, and braid-orbit
// decomposition.
//
// Conventions (shared with the rest of the library):
//   - products are left-to-right: compose(a, b) applies a first;
//   - a tuple is a sequence of non-identity permutations of common degree;
//   - the forward braid move at position i (1-based, 1 <= i < r) replaces
//     (g_i, g_{i+1}) by (g_{i+1}, g_{i+1}^-1 g_i g_{i+1}) and its inverse
//     replaces them by (g_i g_{i+1} g_i^-1, g_i); both fix the product;
//   - tuples are compared up to simultaneous relabeling of the points
//     (conjugation by the full symmetric group); canonical_form picks the
//     relabeling whose concatenated image tables are lexicographically least.
//
// Orbit machinery works on canonical forms only: a braid orbit is explored
// as a breadth-first search where each edge is "apply one braid move, then
// re-canonicalize". This is well defined because braid moves commute with
// simultaneous conjugation. Visited sets store nibble-packed image tables in
// a flat arena with open addressing; insertion order is independent of the
// worker count, so all reports are reproducible bit for bit.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hurwitz/group.hpp"
#include "hurwitz/nielsen.hpp"
#include "hurwitz/perm.hpp"
#include "hurwitz/spin.hpp"

namespace hurwitz {

class BraidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a search or enumeration would exceed a configured resource
// budget. Callers treat this as "inconclusive", never as a result.
class ResourceCapError : public BraidError {
 public:
  using BraidError::BraidError;
};

// ---------------------------------------------------------------------------
// Braid moves.
// ---------------------------------------------------------------------------

inline std::vector<Perm> braid_move(const std::vector<Perm>& entries, int i,
                                    bool forward = true) {
  const int r = static_cast<int>(entries.size());
  if (i < 1 || i >= r)
    throw BraidError("braid move position " + std::to_string(i) +
                     " out of range 1.." + std::to_string(r - 1));
  std::vector<Perm> out = entries;
  const Perm& a = entries[i - 1];
  const Perm& b = entries[i];
  if (forward) {
    out[i - 1] = b;
    out[i] = conjugate(a, b);  // apply b^-1, then a, then b
  } else {
    out[i - 1] = conjugate(b, inverse(a));  // apply a, then b, then a^-1
    out[i] = a;
  }
  return out;
}

inline NielsenTuple braid_move(const NielsenTuple& t, int i,
                               bool forward = true) {
  return NielsenTuple::make(braid_move(t.entries(), i, forward));
}

// ---------------------------------------------------------------------------
// Canonical form under simultaneous conjugation.
//
// A tuple is stored flat as r rows of n bytes, row k holding the image table
// of entry k. canonical_word computes, over all relabelings pi of the points,
// the lexicographically least concatenation of the relabeled image tables.
// The search builds pi incrementally: walking the word positions in order,
// it keeps every partial relabeling that still achieves the least prefix and
// extends them one position at a time (branch and bound over partial maps).
// ---------------------------------------------------------------------------

namespace detail {

constexpr int kCanonMaxDegree = 15;  // images must fit in a nibble

struct RelabelState {
  std::array<uint8_t, kCanonMaxDegree + 1> fwd{};  // old point -> new point
  std::array<uint8_t, kCanonMaxDegree + 1> inv{};  // new point -> old point
  uint32_t used = 0;                               // bit p: new label p taken

  void bind(int old_pt, int new_pt) {
    fwd[old_pt] = static_cast<uint8_t>(new_pt);
    inv[new_pt] = static_cast<uint8_t>(old_pt);
    used |= uint32_t{1} << new_pt;
  }
  int smallest_unused() const {
    return std::countr_one(used >> 1) + 1;
  }
};

struct CanonScratch {
  std::vector<RelabelState> cur, next;
};

inline CanonScratch& canon_scratch() {
  thread_local CanonScratch scratch;
  return scratch;
}

constexpr size_t kCanonStateCap = 1u << 18;

// in: r rows of n image bytes. out: the canonical word, same layout.
inline void canonical_word(const uint8_t* in, int n, int r, uint8_t* out) {
  CanonScratch& scratch = canon_scratch();
  std::vector<RelabelState>& states = scratch.cur;
  std::vector<RelabelState>& next = scratch.next;
  states.assign(1, RelabelState{});

  for (int k = 0; k < r; ++k) {
    const uint8_t* row = in + size_t(k) * n;
    for (int x = 1; x <= n; ++x) {
      int best = n + 1;
      next.clear();
      auto offer = [&](RelabelState s, int old_x) {
        // With inv[x] = old_x settled, the value at this word position is
        // the new label of row[old_x]; an unlabeled image can take nothing
        // smaller than the least unused label.
        const int y_old = row[old_x - 1];
        const int bound_val = s.fwd[y_old];
        const int val = bound_val != 0 ? bound_val : s.smallest_unused();
        if (val > best) return;
        if (val < best) {
          best = val;
          next.clear();
        }
        if (bound_val == 0) s.bind(y_old, val);
        next.push_back(s);
      };
      for (const RelabelState& s : states) {
        if (s.inv[x] != 0) {
          offer(s, s.inv[x]);
        } else {
          for (int o = 1; o <= n; ++o) {
            if (s.fwd[o] != 0) continue;
            RelabelState s2 = s;
            s2.bind(o, x);
            offer(std::move(s2), o);
          }
        }
      }
      out[size_t(k) * n + x - 1] = static_cast<uint8_t>(best);
      std::sort(next.begin(), next.end(),
                [](const RelabelState& a, const RelabelState& b) {
                  return a.fwd < b.fwd;
                });
      next.erase(std::unique(next.begin(), next.end(),
                             [](const RelabelState& a, const RelabelState& b) {
                               return a.fwd == b.fwd;
                             }),
                 next.end());
      if (next.size() > kCanonStateCap)
        throw BraidError("canonical form search exceeded the state cap");
      states.swap(next);
    }
  }
}

inline void flatten_entries(const std::vector<Perm>& entries, uint8_t* out) {
  const int n = entries.front().degree();
  for (size_t k = 0; k < entries.size(); ++k)
    std::memcpy(out + k * n, entries[k].images().data(), n);
}

inline std::vector<Perm> entries_from_flat(const uint8_t* flat, int n, int r) {
  std::vector<Perm> out;
  out.reserve(r);
  for (int k = 0; k < r; ++k)
    out.push_back(Perm::from_images(
        std::vector<uint8_t>(flat + size_t(k) * n, flat + size_t(k + 1) * n)));
  return out;
}

// Forward/inverse braid move on the flat layout; i0 is 0-based.
inline void braid_move_flat(const uint8_t* in, int n, int r, int i0,
                            bool forward, uint8_t* out) {
  std::memcpy(out, in, size_t(r) * n);
  const uint8_t* a = in + size_t(i0) * n;
  const uint8_t* b = in + size_t(i0 + 1) * n;
  uint8_t* lo = out + size_t(i0) * n;
  uint8_t* hi = lo + n;
  if (forward) {
    std::memcpy(lo, b, n);
    for (int x = 1; x <= n; ++x) hi[b[x - 1] - 1] = b[a[x - 1] - 1];
  } else {
    uint8_t ainv[kCanonMaxDegree];
    for (int x = 1; x <= n; ++x) ainv[a[x - 1] - 1] = static_cast<uint8_t>(x);
    for (int x = 1; x <= n; ++x) lo[ainv[x - 1] - 1] = ainv[b[x - 1] - 1];
    std::memcpy(hi, a, n);
  }
}

inline int checked_canonical_degree(int n, int degree_limit) {
  if (degree_limit > kCanonMaxDegree)
    throw BraidError("canonical degree limit capped at " +
                     std::to_string(kCanonMaxDegree));
  if (n > degree_limit)
    throw ResourceCapError("canonical form limited to degree <= " +
                           std::to_string(degree_limit) + ", got " +
                           std::to_string(n) +
                           "; raise the canonical degree limit");
  return n;
}

}  // namespace detail

// Lexicographically least simultaneous relabeling of the tuple, comparing
// the concatenated image tables of all entries. Idempotent and constant on
// conjugacy classes of tuples.
inline std::vector<Perm> canonical_entries(const std::vector<Perm>& entries,
                                           int degree_limit = 9) {
  if (entries.empty()) throw BraidError("cannot canonicalize an empty tuple");
  const int n = detail::common_degree(entries);
  detail::checked_canonical_degree(n, degree_limit);
  const int r = static_cast<int>(entries.size());
  std::vector<uint8_t> flat(size_t(r) * n), word(size_t(r) * n);
  detail::flatten_entries(entries, flat.data());
  detail::canonical_word(flat.data(), n, r, word.data());
  return detail::entries_from_flat(word.data(), n, r);
}

inline NielsenTuple canonical_form(const NielsenTuple& t,
                                   int degree_limit = 9) {
  return NielsenTuple::make(canonical_entries(t.entries(), degree_limit));
}

// How tuples are identified during orbit searches: conjugation by the full
// symmetric group (the default equivalence), or only by elements of the
// subgroup the tuple itself generates (a strictly finer equivalence, used to
// probe how sensitive orbit counts are to the choice).
enum class ConjugationMode { SymmetricGroup, Inner };

// Least relabeled word over conjugation by the given group elements only.
inline std::vector<Perm> canonical_entries_inner(
    const std::vector<Perm>& entries, const std::vector<Perm>& group_elements) {
  if (entries.empty()) throw BraidError("cannot canonicalize an empty tuple");
  const int n = detail::common_degree(entries);
  const int r = static_cast<int>(entries.size());
  std::vector<uint8_t> best, cand;
  for (const Perm& h : group_elements) {
    cand.clear();
    cand.reserve(size_t(r) * n);
    for (const Perm& g : entries) {
      const Perm rel = conjugate(g, h);
      cand.insert(cand.end(), rel.images().begin(), rel.images().end());
    }
    if (best.empty() || cand < best) best = cand;
  }
  return detail::entries_from_flat(best.data(), n, r);
}

// ---------------------------------------------------------------------------
// Tuple classes: fixed degree, length, entry cycle types, and product, with
// an optional ambient group the entries must come from and an optional
// condition on the generated subgroup.
// ---------------------------------------------------------------------------

struct ClassSpec {
  int degree = 0;
  int length = 0;
  // One element = the same cycle type at every position; otherwise exactly
  // `length` types, one per position.
  std::vector<CycleStructure> entry_classes;
  // Required left-to-right product; disengaged means the identity.
  std::optional<Perm> product;
  // Condition on the subgroup generated by an enumerated tuple. One of:
  // "" (none), "transitive", "alternating", "symmetric", "gl32", "agl32",
  // "agl42", "full-ambient" (generates the whole ambient group).
  std::string group_filter;
  // When non-empty, entries are drawn from this group's elements instead of
  // the whole symmetric class in S_degree.
  std::vector<Perm> ambient_generators;
  std::string ambient_name;  // label used in reports
  // Bound on the estimated number of search nodes (product of the entry-pool
  // sizes over all positions but the last, whose entry is forced).
  uint64_t enumeration_cap = 200'000'000;
};

namespace detail {

inline const CycleStructure& class_at(const ClassSpec& spec, int position) {
  return spec.entry_classes.size() == 1
             ? spec.entry_classes.front()
             : spec.entry_classes[static_cast<size_t>(position)];
}

inline void check_class_spec(const ClassSpec& spec) {
  if (spec.degree < 2) throw BraidError("class degree must be at least 2");
  if (spec.length < 1) throw BraidError("class length must be at least 1");
  if (spec.entry_classes.size() != 1 &&
      spec.entry_classes.size() != static_cast<size_t>(spec.length))
    throw BraidError("entry classes: give one type or one per position");
  for (const CycleStructure& cs : spec.entry_classes) {
    if (cs.is_identity())
      throw BraidError("entry class may not be the identity type");
    int support = 0;
    for (int len : cs.lengths) support += len;
    if (support > spec.degree)
      throw BraidError("entry class " + cs.to_string() +
                       " does not fit in degree " +
                       std::to_string(spec.degree));
  }
  if (spec.product && spec.product->degree() != spec.degree)
    throw BraidError("product degree does not match the class degree");
  static const char* known_filters[] = {"",      "transitive", "alternating",
                                        "symmetric", "gl32",   "agl32",
                                        "agl42", "full-ambient"};
  bool ok = false;
  for (const char* f : known_filters) ok = ok || spec.group_filter == f;
  if (!ok) throw BraidError("unknown group filter: " + spec.group_filter);
  if (spec.group_filter == "full-ambient" && spec.ambient_generators.empty())
    throw BraidError("group filter 'full-ambient' needs an ambient group");
}

}  // namespace detail

// All elements of S_degree with the given cycle type, sorted. Degree is
// capped because the enumeration walks the whole symmetric group.
inline std::vector<Perm> class_elements(int degree,
                                        const CycleStructure& type) {
  constexpr int kClassDegreeCap = 9;
  if (degree < 1 || degree > kClassDegreeCap)
    throw ResourceCapError("symmetric class enumeration supports degree 1.." +
                           std::to_string(kClassDegreeCap) + ", got " +
                           std::to_string(degree));
  std::vector<uint8_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<uint8_t>(i + 1);
  std::vector<Perm> out;
  do {
    Perm p = Perm::from_images(img);
    if (cycle_structure(p) == type) out.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

constexpr int kFlatMaxDegree = 16;  // stack buffers in the enumeration walk

// One position's candidate entries, as permutations plus flat image tables
// (m rows of n bytes) and the matching inverse tables.
struct PositionPool {
  std::vector<Perm> perms;  // sorted
  std::vector<uint8_t> imgs;
  std::vector<uint8_t> invs;

  size_t count() const { return perms.size(); }
};

// Per-position entry pools plus the data the pruned search needs.
struct ClassPools {
  std::vector<PositionPool> pools;  // one per position
  std::vector<int> suffix_index;    // sum of class indices from here on
  uint64_t ambient_order = 0;       // 0 when no ambient group
  double estimate = 0;              // product of pool sizes, last excluded
};

inline ClassPools build_class_pools(const ClassSpec& spec) {
  check_class_spec(spec);
  if (spec.degree > kFlatMaxDegree)
    throw ResourceCapError("class enumeration supports degree <= " +
                           std::to_string(kFlatMaxDegree));
  const int n = spec.degree;
  ClassPools cp;
  std::vector<Perm> ambient_elements;
  if (!spec.ambient_generators.empty()) {
    StabilizerChain chain(spec.ambient_generators);
    if (common_degree(spec.ambient_generators) != n)
      throw BraidError("ambient group degree does not match the class degree");
    cp.ambient_order = chain.order();
    ambient_elements = chain.elements();
  }
  std::map<std::string, PositionPool> cache;
  for (int k = 0; k < spec.length; ++k) {
    const CycleStructure& type = class_at(spec, k);
    auto [it, fresh] = cache.try_emplace(type.to_string());
    if (fresh) {
      PositionPool& pool = it->second;
      if (!ambient_elements.empty()) {
        for (const Perm& g : ambient_elements)
          if (cycle_structure(g) == type) pool.perms.push_back(g);
        std::sort(pool.perms.begin(), pool.perms.end());
      } else {
        pool.perms = class_elements(n, type);
      }
      if (pool.perms.empty())
        throw BraidError("no elements of type " + type.to_string() +
                         " available for the class");
      for (const Perm& g : pool.perms) {
        const Perm gi = inverse(g);
        pool.imgs.insert(pool.imgs.end(), g.images().begin(),
                         g.images().end());
        pool.invs.insert(pool.invs.end(), gi.images().begin(),
                         gi.images().end());
      }
    }
    cp.pools.push_back(it->second);
  }
  cp.suffix_index.assign(spec.length + 1, 0);
  for (int k = spec.length - 1; k >= 0; --k)
    cp.suffix_index[k] = cp.suffix_index[k + 1] + class_at(spec, k).index();
  cp.estimate = 1;
  for (int k = 0; k + 1 < spec.length; ++k)
    cp.estimate *= static_cast<double>(cp.pools[k].count());
  if (cp.estimate > static_cast<double>(spec.enumeration_cap))
    throw ResourceCapError(
        "class enumeration estimate " + std::to_string(cp.estimate) +
        " exceeds the cap " + std::to_string(spec.enumeration_cap) +
        "; raise the cap to enumerate this class");
  return cp;
}

inline int flat_index(const uint8_t* img, int n) {
  uint32_t seen = 0;
  int cycles = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen & (uint32_t{1} << i)) continue;
    ++cycles;
    for (int j = i; !(seen & (uint32_t{1} << j)); j = img[j - 1])
      seen |= uint32_t{1} << j;
  }
  return n - cycles;
}

inline bool flat_pool_contains(const PositionPool& pool, const uint8_t* img,
                               int n) {
  size_t lo = 0, hi = pool.count();
  while (lo < hi) {
    const size_t mid = (lo + hi) / 2;
    const int cmp = std::memcmp(pool.imgs.data() + mid * n, img, n);
    if (cmp < 0)
      lo = mid + 1;
    else if (cmp > 0)
      hi = mid;
    else
      return true;
  }
  return false;
}

// Depth-first walk over all tuples with the prescribed entry types and
// product. The last entry is forced to close the product; interior nodes are
// pruned when the remaining positions cannot absorb what is still needed
// (ind(g h) <= ind(g) + ind(h), and parity adds up exactly). The callback
// receives every product-matching tuple as r rows of n image bytes; it is
// NOT checked for transitivity or the group filter. Returns the number of
// callbacks.
template <typename Visit>
inline uint64_t for_each_product_tuple(const ClassSpec& spec,
                                       const ClassPools& cp, Visit&& visit) {
  const int n = spec.degree;
  const int r = spec.length;
  uint8_t target[kFlatMaxDegree];
  {
    const Perm t = spec.product ? *spec.product : Perm(n);
    std::memcpy(target, t.images().data(), n);
  }
  // One inverse-of-prefix row per depth; the prefix itself is not needed:
  // needed = prefix^-1 * target, and (prefix*g)^-1 = g^-1 * prefix^-1 reads
  // prefixinv' [x] = prefixinv[ginv[x]].
  std::vector<uint8_t> prefixinv(size_t(r + 1) * n);
  for (int x = 0; x < n; ++x) prefixinv[x] = static_cast<uint8_t>(x + 1);
  std::vector<uint8_t> flat(size_t(r) * n);
  uint64_t count = 0;

  auto descend = [&](auto&& self, int depth) -> void {
    const uint8_t* pinv = prefixinv.data() + size_t(depth) * n;
    uint8_t needed[kFlatMaxDegree];
    for (int x = 0; x < n; ++x) needed[x] = target[pinv[x] - 1];
    const int need_idx = flat_index(needed, n);
    if (need_idx > cp.suffix_index[depth]) return;
    if ((need_idx + cp.suffix_index[depth]) % 2 != 0) return;
    if (depth == r - 1) {
      if (need_idx == 0) return;  // identity entry not allowed
      if (!flat_pool_contains(cp.pools[depth], needed, n)) return;
      std::memcpy(flat.data() + size_t(depth) * n, needed, n);
      ++count;
      visit(static_cast<const uint8_t*>(flat.data()));
      return;
    }
    const PositionPool& pool = cp.pools[depth];
    uint8_t* child_pinv = prefixinv.data() + size_t(depth + 1) * n;
    for (size_t e = 0; e < pool.count(); ++e) {
      const uint8_t* gimg = pool.imgs.data() + e * n;
      const uint8_t* ginv = pool.invs.data() + e * n;
      std::memcpy(flat.data() + size_t(depth) * n, gimg, n);
      for (int x = 0; x < n; ++x) child_pinv[x] = pinv[ginv[x] - 1];
      self(self, depth + 1);
    }
  };
  descend(descend, 0);
  return count;
}

inline bool passes_group_filter(const ClassSpec& spec,
                                const ClassPools& cp,
                                const std::vector<Perm>& entries) {
  if (spec.group_filter.empty()) return true;
  if (spec.group_filter == "full-ambient")
    return group_order(entries) == cp.ambient_order;
  GroupId id = classify_group(entries);
  if (spec.group_filter == "transitive") return id.transitive;
  if (spec.group_filter == "alternating")
    return id.kind == GroupKind::Alternating;
  if (spec.group_filter == "symmetric") return id.kind == GroupKind::Symmetric;
  if (spec.group_filter == "gl32") return id.kind == GroupKind::GL32;
  if (spec.group_filter == "agl32") return id.kind == GroupKind::AGL32;
  if (spec.group_filter == "agl42") return id.kind == GroupKind::AGL42;
  throw BraidError("unknown group filter: " + spec.group_filter);
}

}  // namespace detail

// Every tuple of the class: entry types and product as prescribed, entries
// transitive as a whole, and the group filter satisfied. Intended for small
// classes; orbit_decomposition streams instead of materializing.
inline std::vector<std::vector<Perm>> enumerate_class(const ClassSpec& spec) {
  detail::ClassPools cp = detail::build_class_pools(spec);
  std::vector<std::vector<Perm>> out;
  detail::for_each_product_tuple(spec, cp, [&](const uint8_t* flat) {
    std::vector<Perm> entries =
        detail::entries_from_flat(flat, spec.degree, spec.length);
    if (!transitivity_and_primitivity(entries).transitive) return;
    if (!detail::passes_group_filter(spec, cp, entries)) return;
    out.push_back(std::move(entries));
  });
  return out;
}

// ---------------------------------------------------------------------------
// Packed storage for visited canonical forms.
//
// A key is the tuple's concatenated image tables, two points per byte (high
// nibble first, so memcmp order equals image-sequence order). Keys live in
// one growable arena indexed by insertion id; an open-addressed table maps
// hashes to ids. All growth is checked against a byte budget.
// ---------------------------------------------------------------------------

namespace detail {

inline uint64_t fnv1a(const uint8_t* p, size_t len) {
  uint64_t h = 1469598103934665603ull;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline size_t packed_key_bytes(int degree, int length) {
  return (static_cast<size_t>(degree) * length + 1) / 2;
}

inline void pack_word(const uint8_t* word, size_t count, uint8_t* out) {
  size_t o = 0;
  for (size_t i = 0; i + 1 < count; i += 2)
    out[o++] = static_cast<uint8_t>((word[i] << 4) | word[i + 1]);
  if (count % 2 != 0) out[o] = static_cast<uint8_t>(word[count - 1] << 4);
}

inline void unpack_word(const uint8_t* key, size_t count, uint8_t* word) {
  for (size_t i = 0; i < count; ++i) {
    uint8_t byte = key[i / 2];
    word[i] = (i % 2 == 0) ? byte >> 4 : (byte & 0x0f);
  }
}

}  // namespace detail

class PackedTupleSet {
 public:
  PackedTupleSet(size_t key_bytes, uint64_t max_bytes)
      : key_bytes_(key_bytes), max_bytes_(max_bytes) {
    slots_.assign(kInitialSlots, 0);
    check_budget(memory_bytes());
  }

  size_t size() const { return count_; }
  size_t key_bytes() const { return key_bytes_; }
  const uint8_t* key(uint32_t id) const {
    return arena_.data() + size_t(id) * key_bytes_;
  }

  std::pair<uint32_t, bool> insert(const uint8_t* key_data) {
    if (10 * (count_ + 1) >= 7 * slots_.size()) grow_slots();
    size_t i = probe(key_data);
    if (slots_[i] != 0) return {slots_[i] - 1, false};
    if (count_ == std::numeric_limits<uint32_t>::max())
      throw ResourceCapError("visited set exceeded 2^32-1 tuples");
    reserve_arena();
    arena_.insert(arena_.end(), key_data, key_data + key_bytes_);
    const uint32_t id = static_cast<uint32_t>(count_++);
    slots_[i] = id + 1;
    return {id, true};
  }

  std::optional<uint32_t> find(const uint8_t* key_data) const {
    size_t i = probe(key_data);
    if (slots_[i] == 0) return std::nullopt;
    return slots_[i] - 1;
  }

  uint64_t memory_bytes() const {
    return arena_.capacity() + slots_.capacity() * sizeof(uint32_t);
  }

 private:
  static constexpr size_t kInitialSlots = 1u << 10;

  size_t probe(const uint8_t* key_data) const {
    const size_t mask = slots_.size() - 1;
    size_t i = detail::fnv1a(key_data, key_bytes_) & mask;
    while (slots_[i] != 0 &&
           std::memcmp(key(slots_[i] - 1), key_data, key_bytes_) != 0)
      i = (i + 1) & mask;
    return i;
  }

  void check_budget(uint64_t bytes) const {
    if (bytes > max_bytes_)
      throw ResourceCapError(
          "orbit search needs more than the memory cap (" +
          std::to_string(bytes) + " > " + std::to_string(max_bytes_) +
          " bytes after " + std::to_string(count_) +
          " tuples); raise the memory cap");
  }

  void reserve_arena() {
    if (arena_.size() + key_bytes_ <= arena_.capacity()) return;
    const size_t want = std::max<size_t>(arena_.capacity() * 2, 1u << 12);
    check_budget(want + slots_.capacity() * sizeof(uint32_t));
    arena_.reserve(want);
  }

  void grow_slots() {
    std::vector<uint32_t> bigger;
    check_budget(arena_.capacity() +
                 (slots_.size() * 2 + slots_.capacity()) * sizeof(uint32_t));
    bigger.assign(slots_.size() * 2, 0);
    const size_t mask = bigger.size() - 1;
    for (uint32_t stored : slots_) {
      if (stored == 0) continue;
      size_t i = detail::fnv1a(key(stored - 1), key_bytes_) & mask;
      while (bigger[i] != 0) i = (i + 1) & mask;
      bigger[i] = stored;
    }
    slots_ = std::move(bigger);
  }

  size_t key_bytes_;
  uint64_t max_bytes_;
  std::vector<uint8_t> arena_;
  std::vector<uint32_t> slots_;
  size_t count_ = 0;
};

// ---------------------------------------------------------------------------
// Orbit search.
// ---------------------------------------------------------------------------

struct OrbitOptions {
  int workers = 1;
  uint64_t memory_cap = uint64_t{2} * 1024 * 1024 * 1024;  // bytes
  int canonical_degree_limit = 9;
  ConjugationMode conjugation = ConjugationMode::SymmetricGroup;
};

namespace detail {

// Deterministic fan-out: fn(slot, begin, end) over contiguous ranges in slot
// order. Results gathered per slot are concatenated in slot order, so the
// visible output never depends on the worker count.
template <typename Fn>
inline void parallel_ranges(int workers, size_t count, Fn&& fn) {
  const int w = std::max(1, workers);
  if (w == 1 || count < 2) {
    if (count > 0) fn(0, size_t{0}, count);
    return;
  }
  const size_t per = (count + w - 1) / w;
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(w));
  for (int s = 0; s < w; ++s) {
    const size_t b = s * per;
    const size_t e = std::min(count, b + per);
    if (b >= e) break;
    threads.emplace_back([&, s, b, e] {
      try {
        fn(s, b, e);
      } catch (...) {
        errors[static_cast<size_t>(s)] = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& err : errors)
    if (err) std::rethrow_exception(err);
}

// Everything a breadth-first orbit walk needs, fixed once per search.
struct OrbitContext {
  int n = 0;
  int r = 0;
  int degree_limit = 9;
  ConjugationMode mode = ConjugationMode::SymmetricGroup;
  std::vector<Perm> inner_elements;  // conjugators when mode == Inner
  size_t key_bytes = 0;

  void canonical_key(const uint8_t* flat, uint8_t* key) const {
    const size_t len = size_t(r) * n;
    if (mode == ConjugationMode::SymmetricGroup) {
      thread_local std::vector<uint8_t> word;
      word.resize(len);
      canonical_word(flat, n, r, word.data());
      pack_word(word.data(), len, key);
    } else {
      std::vector<Perm> entries = entries_from_flat(flat, n, r);
      std::vector<Perm> least = canonical_entries_inner(entries, inner_elements);
      thread_local std::vector<uint8_t> word;
      word.resize(len);
      flatten_entries(least, word.data());
      pack_word(word.data(), len, key);
    }
  }

  // Canonical keys of all braid neighbors of the tuple behind `key`,
  // appended to `out` in a fixed order (position, then direction).
  void neighbor_keys(const uint8_t* key, std::vector<uint8_t>& out) const {
    const size_t len = size_t(r) * n;
    thread_local std::vector<uint8_t> flat, moved;
    flat.resize(len);
    moved.resize(len);
    unpack_word(key, len, flat.data());
    for (int i = 0; i + 1 < r; ++i) {
      for (bool forward : {true, false}) {
        braid_move_flat(flat.data(), n, r, i, forward, moved.data());
        out.resize(out.size() + key_bytes);
        canonical_key(moved.data(), out.data() + out.size() - key_bytes);
      }
    }
  }
};

inline OrbitContext make_orbit_context(int n, int r,
                                       const std::vector<Perm>& sample,
                                       const OrbitOptions& opts) {
  OrbitContext ctx;
  ctx.n = checked_canonical_degree(n, opts.canonical_degree_limit);
  ctx.r = r;
  ctx.degree_limit = opts.canonical_degree_limit;
  ctx.mode = opts.conjugation;
  ctx.key_bytes = packed_key_bytes(n, r);
  if (ctx.mode == ConjugationMode::Inner)
    ctx.inner_elements = StabilizerChain(sample).elements();
  return ctx;
}

// Level-synchronous breadth-first closure under braid moves starting from
// the seeds already in `set`. Candidate neighbor keys are produced in a
// deterministic order (frontier order, chunked; worker ranges concatenate in
// slot order) and inserted serially, so ids are reproducible. Returns the
// lexicographically least key id seen.
inline uint32_t braid_closure(const OrbitContext& ctx, PackedTupleSet& set,
                              std::vector<uint32_t> frontier, int workers) {
  constexpr size_t kChunk = 1u << 13;
  const size_t moves_per_node = 2 * (size_t(ctx.r) - 1);
  uint32_t least = 0;
  for (size_t id = 0; id < set.size(); ++id)
    if (std::memcmp(set.key(static_cast<uint32_t>(id)), set.key(least),
                    ctx.key_bytes) < 0)
      least = static_cast<uint32_t>(id);

  std::vector<uint32_t> next;
  std::vector<std::vector<uint8_t>> buffers(
      static_cast<size_t>(std::max(1, workers)));
  while (!frontier.empty()) {
    next.clear();
    for (size_t base = 0; base < frontier.size(); base += kChunk) {
      const size_t chunk = std::min(kChunk, frontier.size() - base);
      parallel_ranges(workers, chunk, [&](int slot, size_t b, size_t e) {
        std::vector<uint8_t>& buf = buffers[static_cast<size_t>(slot)];
        buf.clear();
        buf.reserve((e - b) * moves_per_node * ctx.key_bytes);
        for (size_t idx = b; idx < e; ++idx)
          ctx.neighbor_keys(set.key(frontier[base + idx]), buf);
      });
      for (size_t slot = 0; slot < buffers.size(); ++slot) {
        const std::vector<uint8_t>& buf = buffers[slot];
        for (size_t off = 0; off + ctx.key_bytes <= buf.size();
             off += ctx.key_bytes) {
          auto [id, fresh] = set.insert(buf.data() + off);
          if (fresh) {
            next.push_back(id);
            if (std::memcmp(set.key(id), set.key(least), ctx.key_bytes) < 0)
              least = id;
          }
        }
      }
    }
    frontier.swap(next);
  }
  return least;
}

}  // namespace detail

struct OrbitResult {
  std::vector<Perm> representative;  // least canonical form in the orbit
  uint64_t size = 0;                 // canonical forms in the orbit
};

// Braid orbit of one tuple: closure under braid moves and simultaneous
// conjugation (or inner conjugation when the options say so).
inline OrbitResult orbit_of(const std::vector<Perm>& seed,
                            const OrbitOptions& opts = {}) {
  if (seed.empty()) throw BraidError("orbit of an empty tuple");
  const int n = detail::common_degree(seed);
  const int r = static_cast<int>(seed.size());
  for (const Perm& g : seed)
    if (g.is_identity())
      throw BraidError("orbit seeds must have non-identity entries");
  detail::OrbitContext ctx = detail::make_orbit_context(n, r, seed, opts);
  PackedTupleSet set(ctx.key_bytes, opts.memory_cap);
  std::vector<uint8_t> flat(size_t(r) * n), key(ctx.key_bytes);
  detail::flatten_entries(seed, flat.data());
  ctx.canonical_key(flat.data(), key.data());
  set.insert(key.data());
  const uint32_t least = detail::braid_closure(ctx, set, {0}, opts.workers);
  OrbitResult res;
  res.size = set.size();
  std::vector<uint8_t> word(size_t(r) * n);
  detail::unpack_word(set.key(least), word.size(), word.data());
  res.representative = detail::entries_from_flat(word.data(), n, r);
  return res;
}

inline OrbitResult orbit_of(const NielsenTuple& seed,
                            const OrbitOptions& opts = {}) {
  return orbit_of(seed.entries(), opts);
}

// ---------------------------------------------------------------------------
// Orbit decomposition of a whole class.
// ---------------------------------------------------------------------------

enum class EnumerationMode { Exhaustive, SeededBFS };

inline const char* to_string(EnumerationMode m) {
  return m == EnumerationMode::Exhaustive ? "exhaustive" : "seeded";
}

struct OrbitSummary {
  std::vector<Perm> representative;  // least canonical form in the orbit
  uint64_t size = 0;                 // canonical forms in the orbit
  std::optional<int> lifting_invariant;
};

struct BraidOrbitReport {
  ClassSpec spec;
  EnumerationMode mode = EnumerationMode::Exhaustive;
  int workers = 1;
  uint64_t raw_tuple_count = 0;   // product-matching tuples walked (exhaustive)
  uint64_t total_class_size = 0;  // distinct canonical forms in the class
  std::vector<OrbitSummary> orbits;
  double wall_time_s = 0;  // informational; not part of serialized reports

  uint64_t orbit_count() const { return orbits.size(); }
};

namespace detail {

inline void attach_lifting_invariants(BraidOrbitReport& report) {
  for (OrbitSummary& orbit : report.orbits) {
    const std::vector<Perm>& rep = orbit.representative;
    if (rep.front().degree() < 4) continue;
    if (shape_of_entries(rep) != TupleShape::ThreeCycles) continue;
    Perm prod(rep.front().degree());
    for (const Perm& g : rep) prod = compose(prod, g);
    if (!prod.is_identity()) continue;
    orbit.lifting_invariant = lifting_invariant(rep);
  }
}

}  // namespace detail

// Exhaustive decomposition: enumerate the whole class, canonicalize every
// tuple, and partition the canonical forms into braid orbits. The search
// re-canonicalizes every braid neighbor and requires it to be one of the
// enumerated forms — a full consistency check that the class is closed under
// the braid action. Orbits are listed by their least representative.
inline BraidOrbitReport orbit_decomposition(const ClassSpec& spec,
                                            const OrbitOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  if (opts.conjugation != ConjugationMode::SymmetricGroup)
    throw BraidError(
        "exhaustive decomposition supports symmetric-group conjugation only");
  detail::ClassPools cp = detail::build_class_pools(spec);
  detail::OrbitContext ctx =
      detail::make_orbit_context(spec.degree, spec.length, {}, opts);

  BraidOrbitReport report;
  report.spec = spec;
  report.mode = EnumerationMode::Exhaustive;
  report.workers = std::max(1, opts.workers);

  // Pass 1: canonicalize every product-matching tuple of the class.
  // Canonicalization of a chunk fans out to workers; insertion stays serial
  // and in enumeration order, so ids are deterministic.
  PackedTupleSet set(ctx.key_bytes, opts.memory_cap);
  {
    constexpr size_t kChunk = 1u << 13;
    const size_t flat_len = size_t(spec.length) * spec.degree;
    std::vector<uint8_t> pending;
    pending.reserve(kChunk * flat_len);
    std::vector<std::vector<uint8_t>> key_buffers(
        static_cast<size_t>(report.workers));
    auto flush = [&] {
      const size_t count = pending.size() / flat_len;
      if (count == 0) return;
      detail::parallel_ranges(
          report.workers, count, [&](int slot, size_t b, size_t e) {
            std::vector<uint8_t>& buf = key_buffers[static_cast<size_t>(slot)];
            buf.clear();
            buf.reserve((e - b) * ctx.key_bytes);
            for (size_t i = b; i < e; ++i) {
              buf.resize(buf.size() + ctx.key_bytes);
              ctx.canonical_key(pending.data() + i * flat_len,
                                buf.data() + buf.size() - ctx.key_bytes);
            }
          });
      for (const std::vector<uint8_t>& buf : key_buffers)
        for (size_t off = 0; off + ctx.key_bytes <= buf.size();
             off += ctx.key_bytes)
          set.insert(buf.data() + off);
      pending.clear();
    };
    report.raw_tuple_count =
        detail::for_each_product_tuple(spec, cp, [&](const uint8_t* flat) {
          pending.insert(pending.end(), flat, flat + flat_len);
          if (pending.size() / flat_len >= kChunk) flush();
        });
    flush();
  }

  // Pass 2: keep the canonical forms that belong to the class proper —
  // transitive and passing the group filter (both are invariant under
  // relabeling, so checking canonical forms covers all tuples).
  const size_t total = set.size();
  std::vector<uint8_t> kept(total, 0);
  detail::parallel_ranges(
      report.workers, total, [&](int, size_t b, size_t e) {
        std::vector<uint8_t> word(size_t(spec.length) * spec.degree);
        for (size_t id = b; id < e; ++id) {
          detail::unpack_word(set.key(static_cast<uint32_t>(id)), word.size(),
                              word.data());
          std::vector<Perm> entries = detail::entries_from_flat(
              word.data(), spec.degree, spec.length);
          kept[id] = transitivity_and_primitivity(entries).transitive &&
                             detail::passes_group_filter(spec, cp, entries)
                         ? 1
                         : 0;
        }
      });
  for (size_t id = 0; id < total; ++id)
    if (kept[id]) ++report.total_class_size;

  // Pass 3: label orbits by breadth-first search over the kept forms. Every
  // neighbor must itself be a kept enumerated form.
  constexpr uint32_t kUnassigned = std::numeric_limits<uint32_t>::max();
  std::vector<uint32_t> orbit_id(total, kUnassigned);
  std::vector<std::pair<uint32_t, uint64_t>> found;  // (least id, size)
  std::vector<uint32_t> frontier, next;
  std::vector<uint8_t> neighbor_keys;
  for (size_t root = 0; root < total; ++root) {
    if (!kept[root] || orbit_id[root] != kUnassigned) continue;
    const uint32_t label = static_cast<uint32_t>(found.size());
    uint32_t least = static_cast<uint32_t>(root);
    uint64_t size = 0;
    frontier.assign(1, static_cast<uint32_t>(root));
    orbit_id[root] = label;
    while (!frontier.empty()) {
      next.clear();
      for (uint32_t id : frontier) {
        ++size;
        if (std::memcmp(set.key(id), set.key(least), ctx.key_bytes) < 0)
          least = id;
        neighbor_keys.clear();
        ctx.neighbor_keys(set.key(id), neighbor_keys);
        for (size_t off = 0; off + ctx.key_bytes <= neighbor_keys.size();
             off += ctx.key_bytes) {
          auto hit = set.find(neighbor_keys.data() + off);
          if (!hit || !kept[*hit])
            throw BraidError(
                "braid move left the enumerated class: enumeration and braid "
                "action disagree");
          if (orbit_id[*hit] == kUnassigned) {
            orbit_id[*hit] = label;
            next.push_back(*hit);
          }
        }
      }
      frontier.swap(next);
    }
    found.emplace_back(least, size);
  }

  uint64_t covered = 0;
  for (const auto& [least, size] : found) covered += size;
  if (covered != report.total_class_size)
    throw std::logic_error("orbit sizes do not add up to the class size");

  std::sort(found.begin(), found.end(),
            [&](const auto& a, const auto& b) {
              return std::memcmp(set.key(a.first), set.key(b.first),
                                 ctx.key_bytes) < 0;
            });
  std::vector<uint8_t> word(size_t(spec.length) * spec.degree);
  for (const auto& [least, size] : found) {
    OrbitSummary summary;
    detail::unpack_word(set.key(least), word.size(), word.data());
    summary.representative =
        detail::entries_from_flat(word.data(), spec.degree, spec.length);
    summary.size = size;
    report.orbits.push_back(std::move(summary));
  }
  detail::attach_lifting_invariants(report);
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

// Seeded decomposition: the braid orbit of one tuple, reported in the same
// shape as an exhaustive run (mode records that nothing was enumerated).
inline BraidOrbitReport orbit_report_of(const std::vector<Perm>& seed,
                                        const OrbitOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  OrbitResult orbit = orbit_of(seed, opts);
  BraidOrbitReport report;
  report.spec.degree = seed.front().degree();
  report.spec.length = static_cast<int>(seed.size());
  for (const Perm& g : seed)
    report.spec.entry_classes.push_back(cycle_structure(g));
  Perm prod(report.spec.degree);
  for (const Perm& g : seed) prod = compose(prod, g);
  if (!prod.is_identity()) report.spec.product = prod;
  report.mode = EnumerationMode::SeededBFS;
  report.workers = std::max(1, opts.workers);
  report.total_class_size = orbit.size;
  OrbitSummary summary;
  summary.representative = orbit.representative;
  summary.size = orbit.size;
  report.orbits.push_back(std::move(summary));
  detail::attach_lifting_invariants(report);
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

// ---------------------------------------------------------------------------
// Same-orbit decision.
// ---------------------------------------------------------------------------

namespace detail {

// Cheap conjugation- and braid-invariant data; any mismatch rules out a
// common orbit without searching.
inline bool quick_reject(const std::vector<Perm>& a,
                         const std::vector<Perm>& b) {
  if (a.size() != b.size()) return true;
  if (common_degree(a) != common_degree(b)) return true;
  auto type_multiset = [](const std::vector<Perm>& t) {
    std::vector<std::string> types;
    for (const Perm& g : t) types.push_back(cycle_structure(g).to_string());
    std::sort(types.begin(), types.end());
    return types;
  };
  if (type_multiset(a) != type_multiset(b)) return true;
  auto product_type = [](const std::vector<Perm>& t) {
    Perm prod(t.front().degree());
    for (const Perm& g : t) prod = compose(prod, g);
    return cycle_structure(prod);
  };
  if (!(product_type(a) == product_type(b))) return true;
  GroupId ga = classify_group(a), gb = classify_group(b);
  if (ga.order != gb.order || ga.kind != gb.kind ||
      ga.transitive != gb.transitive || ga.primitive != gb.primitive)
    return true;
  if (common_degree(a) >= 4 && shape_of_entries(a) == TupleShape::ThreeCycles &&
      shape_of_entries(b) == TupleShape::ThreeCycles) {
    Perm prod(a.front().degree());
    for (const Perm& g : a) prod = compose(prod, g);
    if (prod.is_identity() &&
        lifting_invariant(a) != lifting_invariant(b))
      return true;
  }
  return false;
}

}  // namespace detail

// Whether two tuples lie in one braid orbit. Invariant mismatches answer
// "no" immediately; otherwise two breadth-first searches grow toward each
// other, and the answer is definitive either way (an exhausted side proves
// disjointness).
inline bool same_orbit(const std::vector<Perm>& a, const std::vector<Perm>& b,
                       const OrbitOptions& opts = {},
                       bool use_quick_rejects = true) {
  if (a.empty() || b.empty()) throw BraidError("same_orbit on an empty tuple");
  if (use_quick_rejects && detail::quick_reject(a, b)) return false;
  if (a.size() != b.size() || detail::common_degree(a) != detail::common_degree(b))
    return false;
  const int n = detail::common_degree(a);
  const int r = static_cast<int>(a.size());

  detail::OrbitContext ctx = detail::make_orbit_context(n, r, a, opts);
  if (ctx.mode == ConjugationMode::Inner) {
    // Inner conjugation fixes the generated group along an orbit, so the
    // two sides must generate the same subgroup element for element, or
    // the walks would identify tuples differently (and the answer is "no").
    if (StabilizerChain(b).elements() != ctx.inner_elements) return false;
  }
  PackedTupleSet side_a(ctx.key_bytes, opts.memory_cap / 2);
  PackedTupleSet side_b(ctx.key_bytes, opts.memory_cap / 2);
  std::vector<uint8_t> flat(size_t(r) * n), key_a(ctx.key_bytes),
      key_b(ctx.key_bytes);
  detail::flatten_entries(a, flat.data());
  ctx.canonical_key(flat.data(), key_a.data());
  detail::flatten_entries(b, flat.data());
  ctx.canonical_key(flat.data(), key_b.data());
  if (std::memcmp(key_a.data(), key_b.data(), ctx.key_bytes) == 0) return true;
  side_a.insert(key_a.data());
  side_b.insert(key_b.data());

  std::vector<uint32_t> frontier_a{0}, frontier_b{0};
  std::vector<uint8_t> neighbors;
  // Expand the smaller frontier; meeting the other side decides "yes",
  // exhausting either side decides "no".
  while (!frontier_a.empty() || !frontier_b.empty()) {
    const bool expand_a =
        !frontier_a.empty() &&
        (frontier_b.empty() || side_a.size() <= side_b.size());
    PackedTupleSet& mine = expand_a ? side_a : side_b;
    PackedTupleSet& theirs = expand_a ? side_b : side_a;
    std::vector<uint32_t>& frontier = expand_a ? frontier_a : frontier_b;
    std::vector<uint32_t> next;
    for (uint32_t id : frontier) {
      neighbors.clear();
      ctx.neighbor_keys(mine.key(id), neighbors);
      for (size_t off = 0; off + ctx.key_bytes <= neighbors.size();
           off += ctx.key_bytes) {
        const uint8_t* cand = neighbors.data() + off;
        if (theirs.find(cand)) return true;
        auto [nid, fresh] = mine.insert(cand);
        if (fresh) next.push_back(nid);
      }
    }
    frontier.swap(next);
    if (frontier.empty()) {
      // This side's orbit is fully explored and never met the other seed.
      return false;
    }
  }
  return false;
}

inline bool same_orbit(const NielsenTuple& a, const NielsenTuple& b,
                       const OrbitOptions& opts = {},
                       bool use_quick_rejects = true) {
  return same_orbit(a.entries(), b.entries(), opts, use_quick_rejects);
}

}  // namespace hurwitz
