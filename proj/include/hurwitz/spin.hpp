#pragma once

// Sparse Clifford algebra over the rationals with e_i^2 = +1 and
// e_i e_j = -e_j e_i, and the spin lifting invariant of three-cycle tuples.
//
// A transposition (i,j) lifts to the unit vector v_ij = (e_i - e_j)/sqrt(2).
// Single factors are irrational, so the API only exposes even-length
// products, which are rational with dyadic coefficients. A 3-cycle (a,b,c)
// lifts to the unique order-3 element +-(v_ab * v_ac); the sign is fixed by
// requiring the cube to be +1.
//
// Orientation: with the library's left-to-right composition, the even
// sandwich x^-1 e x realizes the left-to-right product of the sandwiching
// transpositions, so the factor pair for (a,b,c) is (v_ab, v_ac) - apply
// (a,b) then (a,c). This makes the in-tuple-order product of entry lifts of
// an admissible tuple a scalar, which is asserted at runtime.

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/nielsen.hpp"
#include "hurwitz/perm.hpp"

namespace hurwitz {

class CliffordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// Sign from sorting the concatenation of two ascending generator words:
// each generator in b must pass every higher-index generator in a.
inline int reorder_sign(uint32_t a, uint32_t b) {
  int swaps = 0;
  while (b) {
    const int pb = std::countr_zero(b);
    swaps += std::popcount(a >> (pb + 1));
    b &= b - 1;
  }
  return (swaps & 1) ? -1 : 1;
}

inline void check_clifford_degree(int degree) {
  if (degree < 1 || degree > 30)
    throw CliffordError("Clifford degree out of range [1, 30]");
}

}  // namespace detail

// Exact element of the Clifford algebra on generators e_1..e_degree.
// Monomials are bitmasks (bit i-1 = e_i), terms are sorted by mask and
// never carry a zero coefficient.
class CliffordElement {
 public:
  using Term = std::pair<uint32_t, mpq_class>;

  static CliffordElement zero(int degree) {
    detail::check_clifford_degree(degree);
    return CliffordElement(degree, {});
  }

  static CliffordElement scalar(int degree, const mpq_class& c) {
    detail::check_clifford_degree(degree);
    if (c == 0) return zero(degree);
    return CliffordElement(degree, {{0u, c}});
  }

  static CliffordElement generator(int degree, int i) {
    detail::check_clifford_degree(degree);
    if (i < 1 || i > degree)
      throw CliffordError("generator index out of range");
    return CliffordElement(degree, {{uint32_t{1} << (i - 1), mpq_class(1)}});
  }

  int degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::optional<mpq_class> as_scalar() const {
    if (terms_.empty()) return mpq_class(0);
    if (terms_.size() == 1 && terms_[0].first == 0) return terms_[0].second;
    return std::nullopt;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t t = 0; t < terms_.size(); ++t) {
      if (t) out += " + ";
      out += terms_[t].second.get_str();
      for (uint32_t m = terms_[t].first; m;) {
        const int p = std::countr_zero(m);
        out += "*e" + std::to_string(p + 1);
        m &= m - 1;
      }
    }
    return out;
  }

  friend bool operator==(const CliffordElement&, const CliffordElement&) =
      default;

 private:
  friend CliffordElement clifford_mul(const CliffordElement&,
                                      const CliffordElement&);
  friend CliffordElement clifford_add(const CliffordElement&,
                                      const CliffordElement&);
  friend CliffordElement clifford_scale(const CliffordElement&,
                                        const mpq_class&);

  CliffordElement(int degree, std::vector<Term> terms)
      : degree_(degree), terms_(std::move(terms)) {}

  static CliffordElement from_accumulator(int degree,
                                          std::map<uint32_t, mpq_class>& acc) {
    std::vector<Term> terms;
    for (auto& [mask, coeff] : acc)
      if (coeff != 0) terms.emplace_back(mask, std::move(coeff));
    return CliffordElement(degree, std::move(terms));
  }

  int degree_;
  std::vector<Term> terms_;
};

inline CliffordElement clifford_mul(const CliffordElement& a,
                                    const CliffordElement& b) {
  if (a.degree() != b.degree())
    throw CliffordError("degree mismatch in Clifford product");
  std::map<uint32_t, mpq_class> acc;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      mpq_class c = ca * cb;
      if (detail::reorder_sign(ma, mb) < 0) c = -c;
      acc[ma ^ mb] += c;
    }
  return CliffordElement::from_accumulator(a.degree(), acc);
}

inline CliffordElement clifford_add(const CliffordElement& a,
                                    const CliffordElement& b) {
  if (a.degree() != b.degree())
    throw CliffordError("degree mismatch in Clifford sum");
  std::map<uint32_t, mpq_class> acc;
  for (const auto& [m, c] : a.terms()) acc[m] += c;
  for (const auto& [m, c] : b.terms()) acc[m] += c;
  return CliffordElement::from_accumulator(a.degree(), acc);
}

inline CliffordElement clifford_scale(const CliffordElement& a,
                                      const mpq_class& s) {
  std::map<uint32_t, mpq_class> acc;
  for (const auto& [m, c] : a.terms()) acc[m] = c * s;
  return CliffordElement::from_accumulator(a.degree(), acc);
}

inline CliffordElement clifford_negate(const CliffordElement& a) {
  return clifford_scale(a, mpq_class(-1));
}

inline CliffordElement operator*(const CliffordElement& a,
                                 const CliffordElement& b) {
  return clifford_mul(a, b);
}
inline CliffordElement operator+(const CliffordElement& a,
                                 const CliffordElement& b) {
  return clifford_add(a, b);
}

// The un-normalized lift of a transposition: stands for (e_i - e_j)/sqrt(2).
// Only even-length products of these are rational, so this is a symbolic
// token consumed by even_product, never a CliffordElement on its own.
struct TranspositionFactor {
  int i, j;
};

inline TranspositionFactor lift_transposition(int i, int j) {
  if (i == j || i < 1 || j < 1)
    throw CliffordError("transposition factor needs two distinct points");
  return TranspositionFactor{i, j};
}

// Product of an even number of transposition factors, left-to-right.
// Rational: each pair of sqrt(2) denominators contributes one factor 1/2.
inline CliffordElement even_product(
    int degree, const std::vector<TranspositionFactor>& factors) {
  detail::check_clifford_degree(degree);
  if (factors.size() % 2 != 0)
    throw CliffordError("only even-length products of lifts are rational");
  CliffordElement acc = CliffordElement::scalar(degree, 1);
  for (const TranspositionFactor& f : factors) {
    if (f.i > degree || f.j > degree)
      throw CliffordError("transposition factor exceeds degree");
    CliffordElement v = clifford_add(
        CliffordElement::generator(degree, f.i),
        clifford_negate(CliffordElement::generator(degree, f.j)));
    acc = clifford_mul(acc, v);
  }
  mpq_class half_power(1);
  for (size_t k = 0; k < factors.size() / 2; ++k) half_power /= 2;
  return clifford_scale(acc, half_power);
}

// The unique order-3 lift of the 3-cycle (a,b,c): w = +-(v_ab * v_ac) with
// the sign fixed so that w^3 = +1 (checked, not assumed).
inline CliffordElement lift_3cycle(int degree, int a, int b, int c) {
  if (a == b || b == c || a == c)
    throw CliffordError("3-cycle needs three distinct points");
  CliffordElement w = even_product(
      degree, {lift_transposition(a, b), lift_transposition(a, c)});
  CliffordElement cube = clifford_mul(clifford_mul(w, w), w);
  auto s = cube.as_scalar();
  if (!s || (*s != 1 && *s != -1))
    throw std::logic_error("cube of a 3-cycle lift is not a sign");
  if (*s == -1) w = clifford_negate(w);
  cube = clifford_mul(clifford_mul(w, w), w);
  if (cube.as_scalar().value_or(0) != 1)
    throw std::logic_error("3-cycle lift failed the order-3 check");
  return w;
}

// Spin lifting invariant of a three-cycle tuple: the product of the order-3
// entry lifts, in tuple order, is a scalar +-1 because the tuple's product
// is the identity. Requires degree >= 4 (below that the double cover does
// not separate anything).
inline int lifting_invariant(const std::vector<Perm>& entries) {
  if (shape_of_entries(entries) != TupleShape::ThreeCycles)
    throw CliffordError("lifting invariant needs a three-cycle tuple");
  const int n = entries.front().degree();
  if (n < 4) throw CliffordError("lifting invariant needs degree >= 4");
  Perm prod(n);
  for (const Perm& g : entries) prod = compose(prod, g);
  if (!prod.is_identity())
    throw CliffordError("lifting invariant needs product = id");
  CliffordElement acc = CliffordElement::scalar(n, 1);
  for (const Perm& g : entries) {
    int a = 0;
    for (int x = 1; x <= n; ++x)
      if (g.apply(x) != x) {
        a = x;
        break;
      }
    const int b = g.apply(a), c = g.apply(b);
    acc = clifford_mul(acc, lift_3cycle(n, a, b, c));
  }
  auto s = acc.as_scalar();
  if (!s || (*s != 1 && *s != -1))
    throw std::logic_error(
        "product of 3-cycle lifts of an admissible tuple is not a sign");
  return *s == 1 ? 1 : -1;
}

inline int lifting_invariant(const NielsenTuple& t) {
  return lifting_invariant(t.entries());
}

}  // namespace hurwitz
