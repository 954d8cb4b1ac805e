#pragma once

// Deterministic constructors for the explicit tuples and groups the library
// computes with: genus-0 double-transposition and 3-cycle families and their
// recursions, the genus-raising stabilization, the genus-1 alternating
// family, GL/AGL groups over the 2-element field realized as permutation
// groups, the imprimitive genus-2 tuple from a point stabilizer, and the
// genus-3 exceptional tuples over GL_3(2) and AGL_3(2).
//
// Every "least" below means lexicographically least image sequence, and all
// searches are exhaustive with deterministic iteration order, so every
// output is reproducible byte for byte.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/group.hpp"
#include "hurwitz/nielsen.hpp"
#include "hurwitz/perm.hpp"

namespace hurwitz {

class ConstructError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FamilyKind { DoubleTranspositions, ThreeCycles };

inline const char* to_string(FamilyKind k) {
  return k == FamilyKind::DoubleTranspositions ? "dt" : "tc";
}

namespace detail {

// Permutation of degree n given by explicit disjoint cycles.
inline Perm make_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<uint8_t> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = static_cast<uint8_t>(i);
  for (const auto& cyc : cycles)
    for (size_t i = 0; i < cyc.size(); ++i) {
      const int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > n || img[from - 1] != from)
        throw ConstructError("malformed cycle data");
      img[from - 1] = static_cast<uint8_t>(to);
    }
  return Perm::from_images(std::move(img));
}

// All double transpositions of S_n, ascending by image sequence.
inline std::vector<Perm> double_transpositions(int n) {
  std::vector<Perm> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = a + 1; c <= n; ++c) {
        if (c == b) continue;
        for (int d = c + 1; d <= n; ++d) {
          if (d == b) continue;
          out.push_back(make_cycles(n, {{a, b}, {c, d}}));
        }
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Moved points of a double transposition or 3-cycle in canonical cycle
// order: (a,b)(c,d) -> a,b,c,d with a and c the least points of their
// cycles and a < c; (a,b,c) -> a,b,c with a least.
inline std::vector<int> pattern_points(const Perm& g) {
  std::vector<int> pts;
  std::vector<bool> seen(g.degree() + 1, false);
  for (int x = 1; x <= g.degree(); ++x) {
    if (seen[x] || g.apply(x) == x) continue;
    for (int y = x; !seen[y]; y = g.apply(y)) {
      seen[y] = true;
      pts.push_back(y);
    }
  }
  return pts;
}

// Conjugator sending the pattern points of g to 1,2,3,... and the remaining
// points, in increasing order, to the remaining labels in increasing order.
inline Perm conjugator_to_pattern(const Perm& g) {
  const int n = g.degree();
  const std::vector<int> pts = pattern_points(g);
  std::vector<uint8_t> img(n, 0);
  int next = 0;
  for (int p : pts) img[p - 1] = static_cast<uint8_t>(++next);
  for (int x = 1; x <= n; ++x)
    if (img[x - 1] == 0) img[x - 1] = static_cast<uint8_t>(++next);
  return Perm::from_images(std::move(img));
}

inline std::vector<Perm> conjugate_all(const std::vector<Perm>& v,
                                       const Perm& by) {
  std::vector<Perm> out;
  out.reserve(v.size());
  for (const Perm& g : v) out.push_back(conjugate(g, by));
  return out;
}

inline std::vector<Perm> extend_all(const std::vector<Perm>& v, int degree) {
  std::vector<Perm> out;
  out.reserve(v.size());
  for (const Perm& g : v) out.push_back(extend_degree(g, degree));
  return out;
}

// Degree n+1 permutation fixing point 1, acting as p on points 2..n+1
// shifted up by one. Realizes the stabilizer-of-a-point embedding.
inline Perm embed_fixing_first(const Perm& p) {
  const int n = p.degree();
  std::vector<uint8_t> img(n + 1);
  img[0] = 1;
  for (int x = 1; x <= n; ++x)
    img[x] = static_cast<uint8_t>(p.apply(x) + 1);
  return Perm::from_images(std::move(img));
}

// Appends the two genus-raising entries on a new point without any genus
// precondition; the public stabilize() enforces the genus > 0 hypothesis.
inline NielsenTuple extend_genus(const NielsenTuple& t, FamilyKind kind) {
  const int n = t.degree();
  if (n < 3) throw ConstructError("stabilization needs degree >= 3");
  std::vector<Perm> entries = extend_all(t.entries(), n + 1);
  if (kind == FamilyKind::DoubleTranspositions) {
    const Perm c = make_cycles(n + 1, {{1, 2}, {n, n + 1}});
    entries.push_back(c);
    entries.push_back(c);
  } else {
    const Perm c = make_cycles(n + 1, {{n - 1, n, n + 1}});
    entries.push_back(c);
    entries.push_back(inverse(c));
  }
  return NielsenTuple::make(std::move(entries));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Genus-0 families.

// All admissible degree-5 genus-0 completions of the fixed opening pair
// sigma_1 = (1,2)(3,4), sigma_2 = (1,3)(4,5), ascending. The opening pair's
// product is a 5-cycle, so every completion is transitive automatically.
inline std::vector<NielsenTuple> dt_genus0_degree5_completions() {
  const int n = 5;
  const Perm s1 = detail::make_cycles(n, {{1, 2}, {3, 4}});
  const Perm s2 = detail::make_cycles(n, {{1, 3}, {4, 5}});
  if (cycle_structure(compose(s1, s2)).lengths != std::vector<int>{5})
    throw std::logic_error("degree-5 opening pair lost its 5-cycle product");
  const Perm target = inverse(compose(s1, s2));
  std::vector<NielsenTuple> out;
  for (const Perm& s3 : detail::double_transpositions(n)) {
    const Perm s4 = compose(inverse(s3), target);
    if (!cycle_structure(s4).is_double_transposition()) continue;
    out.push_back(NielsenTuple::make({s1, s2, s3, s4}));
  }
  return out;
}

// Exhaustive search for the least degree-6 genus-0 double-transposition
// tuple generating the alternating group. Used once to freeze the seed in
// dt_genus0 and re-runnable to confirm it.
inline NielsenTuple dt_genus0_degree6_search() {
  const int n = 6;
  const std::vector<Perm> dts = detail::double_transpositions(n);
  for (const Perm& s1 : dts) {
    for (const Perm& s2 : dts) {
      const Perm p12 = compose(s1, s2);
      for (const Perm& s3 : dts) {
        const Perm p123 = compose(p12, s3);
        for (const Perm& s4 : dts) {
          const Perm s5 = inverse(compose(p123, s4));
          if (!cycle_structure(s5).is_double_transposition()) continue;
          std::vector<Perm> entries = {s1, s2, s3, s4, s5};
          if (validate_tuple(entries)) continue;
          if (group_order(entries) != factorial_u64(n) / 2) continue;
          return NielsenTuple::make(std::move(entries));
        }
      }
    }
  }
  throw ConstructError(
      "exhaustive search found no alternating degree-6 genus-0 tuple");
}

// Exploratory: does any degree-5 genus-0 double-transposition tuple generate
// the full alternating group? Exhaustive over all completions of all
// opening triples.
inline bool dta_genus0_degree5_exists() {
  const int n = 5;
  const std::vector<Perm> dts = detail::double_transpositions(n);
  for (const Perm& s1 : dts)
    for (const Perm& s2 : dts) {
      const Perm p12 = compose(s1, s2);
      for (const Perm& s3 : dts) {
        const Perm s4 = inverse(compose(p12, s3));
        if (!cycle_structure(s4).is_double_transposition()) continue;
        std::vector<Perm> entries = {s1, s2, s3, s4};
        if (validate_tuple(entries)) continue;
        if (group_order(entries) == factorial_u64(n) / 2) return true;
      }
    }
  return false;
}

// A genus-0 tuple of n-1 double transpositions in S_n. Seeds: n=4 the three
// double transpositions of the Klein four-group; n=5 a frozen completion of
// an opening pair whose product is a 5-cycle; n=6 a frozen search result
// generating A_6. For n >= 7: relabel the degree-(n-1) tuple so its last
// entry is (1,2)(3,4) and split that entry into (1,2)(n-1,n), (3,4)(n-1,n),
// whose product restores it and whose shared 2-cycle reaches the new point.
inline NielsenTuple dt_genus0(int n) {
  if (n < 4) throw ConstructError("dt_genus0 needs degree >= 4");
  if (n == 4)
    return NielsenTuple::make({detail::make_cycles(4, {{1, 2}, {3, 4}}),
                               detail::make_cycles(4, {{1, 3}, {2, 4}}),
                               detail::make_cycles(4, {{1, 4}, {2, 3}})});
  if (n == 5) {
    const Perm s1 = detail::make_cycles(5, {{1, 2}, {3, 4}});
    const Perm s2 = detail::make_cycles(5, {{1, 3}, {4, 5}});
    if (cycle_structure(compose(s1, s2)).lengths != std::vector<int>{5})
      throw std::logic_error("degree-5 opening pair lost its 5-cycle product");
    // Least completion; dt_genus0_degree5_completions() re-derives it.
    return NielsenTuple::make({s1, s2,
                               detail::make_cycles(5, {{2, 4}, {3, 5}}),
                               detail::make_cycles(5, {{1, 4}, {2, 5}})});
  }
  if (n == 6) {
    // Least alternating tuple; dt_genus0_degree6_search() re-derives it.
    return NielsenTuple::make({detail::make_cycles(6, {{3, 4}, {5, 6}}),
                               detail::make_cycles(6, {{3, 5}, {4, 6}}),
                               detail::make_cycles(6, {{2, 3}, {4, 5}}),
                               detail::make_cycles(6, {{1, 4}, {3, 6}}),
                               detail::make_cycles(6, {{1, 4}, {2, 6}})});
  }
  const NielsenTuple base = dt_genus0(n - 1);
  const Perm pi = detail::conjugator_to_pattern(base.entries().back());
  std::vector<Perm> entries =
      detail::extend_all(detail::conjugate_all(base.entries(), pi), n);
  entries.pop_back();
  entries.push_back(detail::make_cycles(n, {{1, 2}, {n - 1, n}}));
  entries.push_back(detail::make_cycles(n, {{3, 4}, {n - 1, n}}));
  return NielsenTuple::make(std::move(entries));
}

// A genus-0 tuple of n-1 three-cycles in S_n. Seed n=3: a cycle and its
// inverse. For n >= 4: relabel the degree-(n-1) tuple so its first entry is
// (1,2,3) and split that entry into (n,3,1), (3,n,2), whose product
// restores it and which reach the new point.
inline NielsenTuple tc_genus0(int n) {
  if (n < 3) throw ConstructError("tc_genus0 needs degree >= 3");
  if (n == 3)
    return NielsenTuple::make({detail::make_cycles(3, {{1, 2, 3}}),
                               detail::make_cycles(3, {{1, 3, 2}})});
  const NielsenTuple base = tc_genus0(n - 1);
  const Perm pi = detail::conjugator_to_pattern(base.entries().front());
  std::vector<Perm> rest =
      detail::extend_all(detail::conjugate_all(base.entries(), pi), n);
  std::vector<Perm> entries = {detail::make_cycles(n, {{n, 3, 1}}),
                               detail::make_cycles(n, {{3, n, 2}})};
  entries.insert(entries.end(), rest.begin() + 1, rest.end());
  return NielsenTuple::make(std::move(entries));
}

// ---------------------------------------------------------------------------
// Genus-raising operations.

// A genus-1 tuple of n double transpositions generating A_n, anchored at a
// fixed degree-5 tuple. Induction on degree: write the last entry
// (a,b)(c,d) as the product of (p,n)(a,b) and (p,n)(c,d) with p the least
// untouched point, reaching the new point n while preserving the product.
inline NielsenTuple dta_genus1(int n) {
  if (n < 5) throw ConstructError("dta_genus1 needs degree >= 5");
  if (n == 5) {
    const Perm s12 = detail::make_cycles(5, {{1, 2}, {3, 4}});
    return NielsenTuple::make({s12, s12,
                               detail::make_cycles(5, {{1, 2}, {4, 5}}),
                               detail::make_cycles(5, {{1, 4}, {2, 5}}),
                               detail::make_cycles(5, {{1, 5}, {2, 4}})});
  }
  const NielsenTuple base = dta_genus1(n - 1);
  const std::vector<int> pts = detail::pattern_points(base.entries().back());
  int p = 0;
  for (int x = 1; x <= n - 1; ++x)
    if (std::find(pts.begin(), pts.end(), x) == pts.end()) {
      p = x;
      break;
    }
  if (p == 0) throw std::logic_error("no spare point for the genus-1 split");
  std::vector<Perm> entries = detail::extend_all(base.entries(), n);
  entries.pop_back();
  entries.push_back(detail::make_cycles(n, {{p, n}, {pts[0], pts[1]}}));
  entries.push_back(detail::make_cycles(n, {{p, n}, {pts[2], pts[3]}}));
  return NielsenTuple::make(std::move(entries));
}

// Genus-raising stabilization: re-read the tuple one degree higher and
// append two entries multiplying to the identity that reach the new point —
// (1,2)(n,n+1) twice, or (n-1,n,n+1) and its inverse. Raises genus by
// exactly 1. The genus > 0 hypothesis is enforced; the combinatorics would
// go through at genus 0 but that relaxation is deliberately not exposed.
inline NielsenTuple stabilize(const NielsenTuple& t, FamilyKind kind) {
  if (t.genus() <= 0)
    throw ConstructError("stabilize requires a tuple of genus > 0");
  return detail::extend_genus(t, kind);
}

// A tuple of n+g-1 double transpositions (resp. 3-cycles) of genus g
// generating A_n, built by stabilizing the genus-1 family (resp. the
// genus-0 family extended once) upward.
inline NielsenTuple build_family(int n, int g, FamilyKind kind) {
  const bool supported =
      (g == 1 && n >= 5) || (g == 2 && n >= 6) || (g > 2 && n >= 2 * g + 1);
  if (!supported)
    throw ConstructError(
        "build_family supports g=1 with n>=5, g=2 with n>=6, and g>2 with "
        "n>=2g+1");
  NielsenTuple t =
      kind == FamilyKind::DoubleTranspositions
          ? dta_genus1(n - g + 1)
          : detail::extend_genus(tc_genus0(n - g), FamilyKind::ThreeCycles);
  for (int i = 1; i < g; ++i) t = detail::extend_genus(t, kind);
  return t;
}

// ---------------------------------------------------------------------------
// Linear groups over the 2-element field as permutation groups.

// GL_3(2) on the 7 nonzero vectors of F_2^3 labeled by binary value, and
// AGL_3(2) / AGL_4(2) on all vectors labeled value+1. Transvections are the
// non-identity elements fixing a linear or affine hyperplane pointwise.
struct LinearGroupSpec {
  GroupKind name = GroupKind::Other;
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> transvections;
};

namespace detail {

inline uint32_t apply_columns_f2(const std::vector<uint32_t>& cols,
                                 uint32_t v) {
  uint32_t out = 0;
  for (size_t k = 0; k < cols.size(); ++k)
    if (v >> k & 1) out ^= cols[k];
  return out;
}

// Invertible matrix (columns as bitmasks) acting on nonzero vectors,
// label = value.
inline Perm linear_point_perm(int m, const std::vector<uint32_t>& cols) {
  const int n = (1 << m) - 1;
  std::vector<uint8_t> img(n);
  for (int v = 1; v <= n; ++v)
    img[v - 1] = static_cast<uint8_t>(apply_columns_f2(cols, v));
  return Perm::from_images(std::move(img));
}

// Affine map v -> Av + b acting on all vectors, label = value + 1.
inline Perm affine_point_perm(int m, const std::vector<uint32_t>& cols,
                              uint32_t shift) {
  const int n = 1 << m;
  std::vector<uint8_t> img(n);
  for (int v = 0; v < n; ++v)
    img[v] = static_cast<uint8_t>((apply_columns_f2(cols, v) ^ shift) + 1);
  return Perm::from_images(std::move(img));
}

inline std::vector<uint32_t> identity_columns(int m) {
  std::vector<uint32_t> cols(m);
  for (int k = 0; k < m; ++k) cols[k] = uint32_t{1} << k;
  return cols;
}

}  // namespace detail

inline LinearGroupSpec linear_group(GroupKind name) {
  LinearGroupSpec spec;
  spec.name = name;
  int m = 0;
  bool affine = false;
  uint64_t expected_order = 0;
  // Generators: a companion matrix of a primitive polynomial (x^3+x+1 or
  // x^4+x+1), one transvection, and for the affine cases one translation.
  if (name == GroupKind::GL32) {
    m = 3;
    expected_order = general_linear_order_f2(3);
    spec.generators = {detail::linear_point_perm(3, {2, 4, 3}),
                       detail::linear_point_perm(3, {1, 2, 5})};
  } else if (name == GroupKind::AGL32) {
    m = 3;
    affine = true;
    expected_order = affine_group_order_f2(3);
    spec.generators = {
        detail::affine_point_perm(3, {2, 4, 3}, 0),
        detail::affine_point_perm(3, {1, 2, 5}, 0),
        detail::affine_point_perm(3, detail::identity_columns(3), 1)};
  } else if (name == GroupKind::AGL42) {
    m = 4;
    affine = true;
    expected_order = affine_group_order_f2(4);
    spec.generators = {
        detail::affine_point_perm(4, {2, 4, 8, 3}, 0),
        detail::affine_point_perm(4, {1, 2, 4, 9}, 0),
        detail::affine_point_perm(4, detail::identity_columns(4), 1)};
  } else {
    throw ConstructError("linear_group supports GL32, AGL32, and AGL42");
  }
  spec.degree = affine ? (1 << m) : (1 << m) - 1;

  StabilizerChain chain(spec.generators);
  if (chain.order() != expected_order)
    throw std::logic_error("linear group generators have the wrong order");

  // A hyperplane is {v : parity(v & w) = eps}; a linear map fixing an
  // eps = 1 coset pointwise would fix its span, the whole space, so only
  // affine groups see eps = 1.
  const uint32_t top = uint32_t{1} << m;
  std::vector<std::vector<int>> hyperplanes;  // as point labels
  for (uint32_t w = 1; w < top; ++w)
    for (uint32_t eps = 0; eps <= (affine ? 1u : 0u); ++eps) {
      std::vector<int> pts;
      for (uint32_t v = affine ? 0 : 1; v < top; ++v)
        if ((static_cast<uint32_t>(std::popcount(v & w)) & 1u) == eps)
          pts.push_back(static_cast<int>(v) + (affine ? 1 : 0));
      hyperplanes.push_back(std::move(pts));
    }
  for (const Perm& g : chain.elements()) {
    if (g.is_identity()) continue;
    for (const auto& h : hyperplanes) {
      bool fixes = true;
      for (int x : h)
        if (g.apply(x) != x) {
          fixes = false;
          break;
        }
      if (fixes) {
        spec.transvections.push_back(g);
        break;
      }
    }
  }
  return spec;
}

// ---------------------------------------------------------------------------
// The genus-2 imprimitive tuple and the genus-3 exceptional tuples.

namespace detail {

// The stabilizer H of point 1 in GL_3(2) on 7 points is S_4-sized; its
// involutions split into a conjugacy class of 3 (the Klein four-subgroup)
// and a class of 6. The tuple entries are the Klein class tau_1..tau_3 and
// the least class-of-6 pair rho_1, rho_2 whose product has order 3.
struct StabilizerParts {
  std::vector<Perm> tau;  // 3 elements on 7 points, each fixing point 1
  std::vector<Perm> rho;  // 2 elements on 7 points, each fixing point 1
};

inline StabilizerParts point_stabilizer_parts() {
  const LinearGroupSpec gl = linear_group(GroupKind::GL32);
  StabilizerChain chain(gl.generators, {1});
  StabilizerChain hchain(chain.stabilizer_generators());
  if (hchain.order() != 24)
    throw std::logic_error("point stabilizer in GL_3(2) is not of order 24");
  const std::vector<Perm> h = hchain.elements();
  StabilizerParts parts;
  std::vector<Perm> six;
  for (const Perm& x : h) {
    if (x.is_identity() || !compose(x, x).is_identity()) continue;
    std::set<Perm> cls;
    for (const Perm& c : h) cls.insert(conjugate(x, c));
    if (cls.size() == 3)
      parts.tau.push_back(x);
    else if (cls.size() == 6)
      six.push_back(x);
    else
      throw std::logic_error("unexpected involution class in the stabilizer");
  }
  if (parts.tau.size() != 3 || six.size() != 6)
    throw std::logic_error("stabilizer involutions did not split 3 + 6");
  for (const Perm& r1 : six) {
    for (const Perm& r2 : six) {
      if (r1 == r2) continue;
      const Perm p = compose(r1, r2);
      if (!p.is_identity() && compose(p, compose(p, p)).is_identity()) {
        parts.rho = {r1, r2};
        return parts;
      }
    }
  }
  throw std::logic_error("no order-6 dihedral pair in the stabilizer");
}

inline std::vector<Perm> seven_point_tuple_entries() {
  const StabilizerParts parts = point_stabilizer_parts();
  return {parts.tau[0], parts.tau[1], parts.tau[2], parts.rho[0],
          parts.rho[0], parts.rho[1], parts.rho[1]};
}

}  // namespace detail

// The 7-entry genus-2 tuple of double transpositions on 6 points obtained
// from the stabilizer of a point of GL_3(2) acting on the remaining points:
// its group is S_4-sized and imprimitive with 3 blocks of size 2.
inline NielsenTuple tau_genus2() {
  std::vector<Perm> entries;
  for (const Perm& g : detail::seven_point_tuple_entries())
    entries.push_back(restrict_action(g, 1));
  return NielsenTuple::make(std::move(entries));
}

// Genus-3 tuples of double transpositions generating GL_3(2) on 7 points
// (9 entries) or AGL_3(2) on 8 points (10 entries). The 7-point tuple is
// the genus-2 tuple read inside GL_3(2) plus two copies of the least double
// transposition moving point 1; the 8-point tuple re-reads it in the
// 0-stabilizer embedding and splits the final entry into the least pair of
// affine double transpositions outside the stabilizer with that product.
inline NielsenTuple exceptional_genus3(GroupKind which) {
  if (which != GroupKind::GL32 && which != GroupKind::AGL32)
    throw ConstructError("exceptional_genus3 supports GL32 and AGL32");
  std::vector<Perm> entries = detail::seven_point_tuple_entries();
  const LinearGroupSpec gl = linear_group(GroupKind::GL32);
  Perm sigma(7);
  bool found = false;
  for (const Perm& x : StabilizerChain(gl.generators).elements()) {
    if (cycle_structure(x).is_double_transposition() && x.apply(1) != 1) {
      sigma = x;
      found = true;
      break;
    }
  }
  if (!found)
    throw ConstructError(
        "no double transposition outside the point stabilizer");
  entries.push_back(sigma);
  entries.push_back(sigma);
  if (which == GroupKind::GL32) return NielsenTuple::make(std::move(entries));

  std::vector<Perm> embedded;
  for (const Perm& g : entries)
    embedded.push_back(detail::embed_fixing_first(g));
  const Perm last = embedded.back();
  embedded.pop_back();
  const LinearGroupSpec agl = linear_group(GroupKind::AGL32);
  for (const Perm& s : StabilizerChain(agl.generators).elements()) {
    if (!cycle_structure(s).is_double_transposition() || s.apply(1) == 1)
      continue;
    const Perm t = compose(s, last);  // s is an involution, so s*t = last
    if (!cycle_structure(t).is_double_transposition() || t.apply(1) == 1)
      continue;
    embedded.push_back(s);
    embedded.push_back(t);
    return NielsenTuple::make(std::move(embedded));
  }
  throw ConstructError(
      "no affine double-transposition factorization of the final entry");
}

}  // namespace hurwitz
