#pragma once

// Permutation-group machinery on explicit generators: a deterministic
// Schreier-Sims stabilizer chain (order, membership, point stabilizers,
// element enumeration), orbit/block computations, and the coarse group
// classification used to tag tuple classes.
//
// All group-theoretic facts are computed from the chain; nothing is decided
// by matching generator lists against known presentations.

#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int common_degree(const std::vector<Perm>& gens) {
  if (gens.empty()) throw GroupError("empty generator list");
  const int n = gens.front().degree();
  if (n < 1) throw GroupError("generators must have degree >= 1");
  for (const Perm& g : gens)
    if (g.degree() != n) throw GroupError("generators of mixed degree");
  return n;
}

inline uint64_t checked_mul(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw GroupError("group order overflows 64 bits");
  return r;
}

}  // namespace detail

inline uint64_t factorial_u64(int n) {
  uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r = detail::checked_mul(r, i);
  return r;
}

// |AGL_m(2)| = 2^m * prod_{i<m} (2^m - 2^i), computed, not tabulated.
inline uint64_t affine_group_order_f2(int m) {
  uint64_t r = uint64_t{1} << m;
  for (int i = 0; i < m; ++i)
    r = detail::checked_mul(r, (uint64_t{1} << m) - (uint64_t{1} << i));
  return r;
}

inline uint64_t general_linear_order_f2(int m) {
  return affine_group_order_f2(m) >> m;
}

// Deterministic Schreier-Sims. The base is the full point sequence
// 1,2,...,n (optionally with a forced prefix for point stabilizers), so
// sifting always terminates at the identity. Each strong generator is stored
// at its natural level (the number of leading base points it fixes); the
// generator set of level j is therefore the union of levels >= j. The chain
// is verified bottom-up: Schreier generators of a level must sift to the
// identity through the already-complete deeper levels.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::vector<Perm> generators,
                           std::vector<int> base_prefix = {})
      : degree_(detail::common_degree(generators)) {
    std::vector<bool> in_base(degree_ + 1, false);
    for (int b : base_prefix) {
      if (b < 1 || b > degree_ || in_base[b])
        throw GroupError("invalid base prefix");
      in_base[b] = true;
      levels_.push_back(Level(b, degree_));
    }
    for (int b = 1; b <= degree_; ++b)
      if (!in_base[b]) levels_.push_back(Level(b, degree_));
    for (Perm& g : generators) place(std::move(g));
    ptrdiff_t i = static_cast<ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) i = verify_level(static_cast<size_t>(i));
  }

  int degree() const { return degree_; }

  uint64_t order() const {
    uint64_t r = 1;
    for (const Level& lv : levels_)
      r = detail::checked_mul(r, lv.orbit.size());
    return r;
  }

  bool contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    Perm g = p;
    for (const Level& lv : levels_) {
      const int x = g.apply(lv.base_point);
      if (x == lv.base_point) continue;
      if (!lv.transversal[x - 1]) return false;
      g = compose(g, inverse(*lv.transversal[x - 1]));
    }
    return g.is_identity();
  }

  const std::vector<int>& base() const {
    if (base_cache_.empty())
      for (const Level& lv : levels_) base_cache_.push_back(lv.base_point);
    return base_cache_;
  }

  // Strong generators fixing the first base point (they generate its
  // stabilizer). Returns {identity} for a trivial stabilizer so the result
  // is always a valid generating set.
  std::vector<Perm> stabilizer_generators() const {
    std::vector<Perm> out;
    for (size_t i = 1; i < levels_.size(); ++i)
      for (const Perm& g : levels_[i].gens) out.push_back(g);
    if (out.empty()) out.push_back(Perm(degree_));
    return out;
  }

  // Every group element, sorted by image sequence. Guarded by a cap since
  // this materializes the whole group.
  std::vector<Perm> elements(uint64_t cap = uint64_t{1} << 22) const {
    if (order() > cap) throw GroupError("element enumeration above cap");
    std::vector<Perm> out;
    out.reserve(order());
    Perm acc(degree_);
    collect_elements(levels_.size(), acc, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Level {
    Level(int b, int n) : base_point(b), transversal(n) {
      transversal[b - 1] = Perm(n);
      orbit.push_back(b);
    }
    int base_point;
    std::vector<Perm> gens;
    std::vector<std::optional<Perm>> transversal;  // [x-1] maps base -> x
    std::vector<int> orbit;                        // discovery order
  };

  // Store a generator at the deepest level whose earlier base points it all
  // fixes. Identity and duplicates are dropped.
  void place(Perm g) {
    size_t d = 0;
    while (d < levels_.size() &&
           g.apply(levels_[d].base_point) == levels_[d].base_point)
      ++d;
    if (d == levels_.size()) return;  // fixes every base point: identity
    auto& v = levels_[d].gens;
    if (std::find(v.begin(), v.end(), g) == v.end()) v.push_back(std::move(g));
  }

  // Generators of the stabilizer of the first j base points: everything
  // stored at levels >= j.
  std::vector<const Perm*> generators_from(size_t j) const {
    std::vector<const Perm*> out;
    for (size_t k = j; k < levels_.size(); ++k)
      for (const Perm& g : levels_[k].gens) out.push_back(&g);
    return out;
  }

  // Checks level j assuming levels > j are complete. On success returns j-1;
  // if a Schreier generator fails to sift, adopts the residue as a strong
  // generator and returns its level so verification resumes there.
  ptrdiff_t verify_level(size_t j) {
    Level& lv = levels_[j];
    const auto gens = generators_from(j);
    rebuild_orbit(lv, gens);
    for (int p : lv.orbit) {
      for (const Perm* s : gens) {
        Perm u = compose(*lv.transversal[p - 1], *s);
        const int q = u.apply(lv.base_point);
        Perm z = compose(u, inverse(*lv.transversal[q - 1]));
        // z fixes base points 0..j; strip it through the deeper levels.
        for (size_t k = j + 1; k < levels_.size() && !z.is_identity(); ++k) {
          const int x = z.apply(levels_[k].base_point);
          if (x == levels_[k].base_point) continue;
          if (!levels_[k].transversal[x - 1]) break;  // stuck: genuinely new
          z = compose(z, inverse(*levels_[k].transversal[x - 1]));
        }
        if (!z.is_identity()) {
          size_t d = 0;
          while (z.apply(levels_[d].base_point) == levels_[d].base_point) ++d;
          place(std::move(z));
          return static_cast<ptrdiff_t>(d);
        }
      }
    }
    return static_cast<ptrdiff_t>(j) - 1;
  }

  void rebuild_orbit(Level& lv, const std::vector<const Perm*>& gens) {
    for (auto& t : lv.transversal) t.reset();
    lv.orbit.clear();
    lv.transversal[lv.base_point - 1] = Perm(degree_);
    lv.orbit.push_back(lv.base_point);
    for (size_t head = 0; head < lv.orbit.size(); ++head) {
      const int p = lv.orbit[head];
      for (const Perm* s : gens) {
        const int q = s->apply(p);
        if (!lv.transversal[q - 1]) {
          lv.transversal[q - 1] = compose(*lv.transversal[p - 1], *s);
          lv.orbit.push_back(q);
        }
      }
    }
  }

  // Elements factor as g = h * t with h in the next stabilizer and t the
  // level's transversal representative applied last, so the accumulator
  // grows from the deepest level outward on the left.
  void collect_elements(size_t level, const Perm& acc,
                        std::vector<Perm>& out) const {
    if (level == 0) {
      out.push_back(acc);
      return;
    }
    const Level& lv = levels_[level - 1];
    for (int p : lv.orbit)
      collect_elements(level - 1, compose(acc, *lv.transversal[p - 1]), out);
  }

  int degree_;
  std::vector<Level> levels_;
  mutable std::vector<int> base_cache_;
};

// Order of the group generated by `gens`. Errors on an empty list: the
// trivial group must be passed as {identity}.
inline uint64_t group_order(const std::vector<Perm>& gens) {
  return StabilizerChain(gens).order();
}

struct TransitivityInfo {
  std::vector<std::vector<int>> orbits;  // sorted partition of {1..n}
  bool transitive = false;
  bool primitive = false;
  // Present iff transitive and imprimitive: the first nontrivial minimal
  // block system found (blocks sorted by least element).
  std::optional<std::vector<std::vector<int>>> block_system;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  // Returns false if already joined.
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep least element as representative
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

inline std::vector<std::vector<int>> partition_of(UnionFind& uf, int n) {
  std::vector<std::vector<int>> classes(n);
  for (int x = 1; x <= n; ++x) classes[uf.find(x - 1)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& c : classes)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

// Finest G-invariant partition in which `a` and `b` share a block
// (Atkinson's algorithm).
inline std::vector<std::vector<int>> finest_blocks(
    const std::vector<Perm>& gens, int n, int a, int b) {
  UnionFind uf(n);
  uf.join(a - 1, b - 1);
  std::vector<std::pair<int, int>> queue = {{a, b}};
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (const Perm& g : gens) {
      const int gx = uf.find(g.apply(x) - 1);
      const int gy = uf.find(g.apply(y) - 1);
      if (gx != gy) {
        uf.join(gx, gy);
        queue.emplace_back(gx + 1, gy + 1);
      }
    }
  }
  return partition_of(uf, n);
}

}  // namespace detail

inline TransitivityInfo transitivity_and_primitivity(
    const std::vector<Perm>& gens) {
  const int n = detail::common_degree(gens);
  TransitivityInfo info;
  detail::UnionFind uf(n);
  for (const Perm& g : gens)
    for (int x = 1; x <= n; ++x) uf.join(x - 1, g.apply(x) - 1);
  info.orbits = detail::partition_of(uf, n);
  info.transitive = info.orbits.size() == 1;
  if (!info.transitive) return info;  // primitivity not meaningful
  for (int x = 2; x <= n; ++x) {
    auto blocks = detail::finest_blocks(gens, n, 1, x);
    if (blocks.size() > 1 && static_cast<int>(blocks.size()) < n) {
      info.block_system = std::move(blocks);
      info.primitive = false;
      return info;
    }
  }
  info.primitive = true;
  return info;
}

enum class GroupKind { Symmetric, Alternating, GL32, AGL32, AGL42, Other };

inline const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::Symmetric: return "symmetric";
    case GroupKind::Alternating: return "alternating";
    case GroupKind::GL32: return "gl32";
    case GroupKind::AGL32: return "agl32";
    case GroupKind::AGL42: return "agl42";
    case GroupKind::Other: return "other";
  }
  return "other";
}

struct GroupId {
  uint64_t order = 0;
  GroupKind kind = GroupKind::Other;
  bool transitive = false;
  bool primitive = false;
  std::optional<std::vector<std::vector<int>>> block_system;
};

// Coarse classification from (degree, order, transitivity): full symmetric,
// alternating (order n!/2 with even generators), the three linear groups in
// their natural degrees, or Other.
inline GroupId classify_group(const std::vector<Perm>& gens) {
  const int n = detail::common_degree(gens);
  GroupId id;
  id.order = group_order(gens);
  TransitivityInfo info = transitivity_and_primitivity(gens);
  id.transitive = info.transitive;
  id.primitive = info.primitive;
  id.block_system = std::move(info.block_system);
  if (id.transitive && n == 7 && id.order == general_linear_order_f2(3)) {
    id.kind = GroupKind::GL32;
  } else if (id.transitive && n == 8 && id.order == affine_group_order_f2(3)) {
    id.kind = GroupKind::AGL32;
  } else if (id.transitive && n == 16 &&
             id.order == affine_group_order_f2(4)) {
    id.kind = GroupKind::AGL42;
  } else if (n <= 20 && id.order == factorial_u64(n)) {
    id.kind = GroupKind::Symmetric;
  } else if (n <= 20 && id.order * 2 == factorial_u64(n) &&
             std::all_of(gens.begin(), gens.end(),
                         [](const Perm& g) { return parity(g) == 1; })) {
    id.kind = GroupKind::Alternating;
  } else {
    id.kind = GroupKind::Other;
  }
  return id;
}

// The action of a single permutation fixing `point` on the remaining n-1
// points, relabeled 1..n-1 in increasing order of their original labels.
inline Perm restrict_action(const Perm& g, int point) {
  const int n = g.degree();
  if (point < 1 || point > n) throw GroupError("restricted point out of range");
  if (n < 2) throw GroupError("degree too small to restrict");
  if (g.apply(point) != point)
    throw GroupError("permutation moves the restricted point");
  std::vector<int> rank(n + 1, 0);
  int next = 0;
  for (int x = 1; x <= n; ++x)
    if (x != point) rank[x] = ++next;
  std::vector<uint8_t> img(n - 1);
  for (int x = 1; x <= n; ++x)
    if (x != point) img[rank[x] - 1] = static_cast<uint8_t>(rank[g.apply(x)]);
  return Perm::from_images(std::move(img));
}

// Generators of the stabilizer of `point`, acting on the remaining n-1
// points relabeled 1..n-1 in increasing order of their original labels.
inline std::vector<Perm> point_stabilizer_action(const std::vector<Perm>& gens,
                                                 int point) {
  const int n = detail::common_degree(gens);
  if (point < 1 || point > n) throw GroupError("stabilized point out of range");
  if (n < 2) throw GroupError("degree too small for a point stabilizer action");
  StabilizerChain chain(gens, {point});
  std::vector<int> rank(n + 1, 0);  // original label -> new label
  int next = 0;
  for (int x = 1; x <= n; ++x)
    if (x != point) rank[x] = ++next;
  std::vector<Perm> out;
  for (const Perm& g : chain.stabilizer_generators()) {
    std::vector<uint8_t> img(n - 1);
    for (int x = 1; x <= n; ++x)
      if (x != point) img[rank[x] - 1] = static_cast<uint8_t>(rank[g.apply(x)]);
    Perm h = Perm::from_images(std::move(img));
    if (!h.is_identity() &&
        std::find(out.begin(), out.end(), h) == out.end())
      out.push_back(h);
  }
  if (out.empty()) out.push_back(Perm(n - 1));
  return out;
}

}  // namespace hurwitz
