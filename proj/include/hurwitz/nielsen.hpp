#pragma once

// Admissible permutation tuples (branch descriptions of covers of the line)
// and their numeric invariants: genus from the ramification count, entry
// shape, and the dimension comparison against the moduli of curves.
//
// A tuple (g_1,...,g_r) of degree-n permutations is admissible when no entry
// is the identity, the left-to-right product is the identity, and the
// entries generate a transitive group.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/group.hpp"
#include "hurwitz/perm.hpp"

namespace hurwitz {

enum class TupleShape { Transpositions, DoubleTranspositions, ThreeCycles, Mixed };

inline const char* to_string(TupleShape s) {
  switch (s) {
    case TupleShape::Transpositions: return "transpositions";
    case TupleShape::DoubleTranspositions: return "double-transpositions";
    case TupleShape::ThreeCycles: return "three-cycles";
    case TupleShape::Mixed: return "mixed";
  }
  return "mixed";
}

// Structured admissibility rejection: which invariant failed, with the
// witness (offending index, residual product, or orbit partition).
struct TupleRejection {
  enum class Kind { EmptyTuple, IdentityEntry, ProductNotIdentity, NotTransitive };
  Kind kind;
  int entry_index = -1;                  // IdentityEntry: 1-based position
  std::optional<Perm> residual;          // ProductNotIdentity: the product
  std::vector<std::vector<int>> orbits;  // NotTransitive: orbit partition

  std::string describe() const {
    switch (kind) {
      case Kind::EmptyTuple:
        return "tuple has no entries";
      case Kind::IdentityEntry:
        return "entry " + std::to_string(entry_index) + " is the identity";
      case Kind::ProductNotIdentity:
        return "product of entries is " + format_perm(*residual) +
               ", not the identity";
      case Kind::NotTransitive: {
        std::string s = "entries generate an intransitive group (orbits:";
        for (const auto& orb : orbits) {
          s += " {";
          for (size_t i = 0; i < orb.size(); ++i)
            s += (i ? "," : "") + std::to_string(orb[i]);
          s += "}";
        }
        return s + ")";
      }
    }
    return "invalid tuple";
  }
};

class TupleError : public std::invalid_argument {
 public:
  explicit TupleError(TupleRejection r)
      : std::invalid_argument(r.describe()), rejection(std::move(r)) {}
  TupleRejection rejection;
};

inline std::optional<TupleRejection> validate_tuple(
    const std::vector<Perm>& entries) {
  if (entries.empty())
    return TupleRejection{TupleRejection::Kind::EmptyTuple, -1, {}, {}};
  const int n = detail::common_degree(entries);
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].is_identity())
      return TupleRejection{TupleRejection::Kind::IdentityEntry,
                            static_cast<int>(i) + 1, {}, {}};
  Perm prod(n);
  for (const Perm& g : entries) prod = compose(prod, g);
  if (!prod.is_identity())
    return TupleRejection{TupleRejection::Kind::ProductNotIdentity, -1,
                          std::move(prod), {}};
  TransitivityInfo info = transitivity_and_primitivity(entries);
  if (!info.transitive)
    return TupleRejection{TupleRejection::Kind::NotTransitive, -1, {},
                          std::move(info.orbits)};
  return std::nullopt;
}

// Genus of the cover determined by ramification data: for a transitive
// degree-n tuple, 2g - 2 = -2n + sum of entry indices. The arithmetic is
// checked loudly rather than assumed.
inline int genus_from_indices(int degree, const std::vector<int>& indices) {
  int total = -2 * degree + 2;
  for (int idx : indices) total += idx;
  if (total % 2 != 0)
    throw std::invalid_argument("ramification count is odd: no genus");
  const int g = total / 2;
  if (g < 0)
    throw std::invalid_argument("negative genus from ramification count");
  return g;
}

inline TupleShape shape_of_entries(const std::vector<Perm>& entries) {
  bool all_t = true, all_dt = true, all_tc = true;
  for (const Perm& g : entries) {
    CycleStructure cs = cycle_structure(g);
    all_t &= cs.is_transposition();
    all_dt &= cs.is_double_transposition();
    all_tc &= cs.is_three_cycle();
  }
  if (all_t) return TupleShape::Transpositions;
  if (all_dt) return TupleShape::DoubleTranspositions;
  if (all_tc) return TupleShape::ThreeCycles;
  return TupleShape::Mixed;
}

// A validated admissible tuple with its cached invariants.
class NielsenTuple {
 public:
  static NielsenTuple make(std::vector<Perm> entries) {
    if (auto rejection = validate_tuple(entries))
      throw TupleError(std::move(*rejection));
    return NielsenTuple(std::move(entries));
  }

  int degree() const { return entries_.front().degree(); }
  int length() const { return static_cast<int>(entries_.size()); }
  const std::vector<Perm>& entries() const { return entries_; }
  const Perm& entry(int i) const { return entries_[i - 1]; }  // 1-based
  int genus() const { return genus_; }
  TupleShape shape() const { return shape_; }

  friend bool operator==(const NielsenTuple&, const NielsenTuple&) = default;

 private:
  explicit NielsenTuple(std::vector<Perm> entries)
      : entries_(std::move(entries)) {
    std::vector<int> indices;
    indices.reserve(entries_.size());
    for (const Perm& g : entries_)
      indices.push_back(cycle_structure(g).index());
    genus_ = genus_from_indices(degree(), indices);
    shape_ = shape_of_entries(entries_);
  }

  std::vector<Perm> entries_;
  int genus_ = 0;
  TupleShape shape_ = TupleShape::Mixed;
};

inline NielsenTuple make_tuple(std::vector<Perm> entries) {
  return NielsenTuple::make(std::move(entries));
}

inline int genus_of(const NielsenTuple& t) { return t.genus(); }
inline TupleShape shape_of(const NielsenTuple& t) { return t.shape(); }

// dim of the moduli of genus-g curves: 0, 1, 3g-3 for g = 0, 1, >= 2.
inline int moduli_dimension(int genus) {
  if (genus < 0) throw std::invalid_argument("negative genus");
  if (genus == 0) return 0;
  if (genus == 1) return 1;
  return 3 * genus - 3;
}

// Numeric shadow of the dominance requirement: a family with r branch
// points has r - 3 parameters to spend against dim(moduli).
struct ModuliCheck {
  int genus = 0;
  int branch_points = 0;  // r
  int dim_moduli = 0;
  bool necessary_ok = false;  // r - 3 >= dim
  bool strict = false;        // r - 3 >  dim
  bool zariski_ok = false;    // g < 2 or r >= 3g
};

inline ModuliCheck moduli_necessary(const NielsenTuple& t) {
  ModuliCheck mc;
  mc.genus = t.genus();
  mc.branch_points = t.length();
  mc.dim_moduli = moduli_dimension(mc.genus);
  mc.necessary_ok = mc.branch_points - 3 >= mc.dim_moduli;
  mc.strict = mc.branch_points - 3 > mc.dim_moduli;
  mc.zariski_ok = mc.genus < 2 || mc.branch_points >= 3 * mc.genus;
  return mc;
}

}  // namespace hurwitz
