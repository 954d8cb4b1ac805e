// Tests for the rational Clifford algebra and the spin lifting invariant.
//
// Sign oracle: an independent monomial multiplier that concatenates the two
// generator words, bubble-sorts with anticommutation, and cancels squares.
// Frozen values: v12*v34 expanded by hand; the degree-4 three-cycle tuple
// ((1,2,3),(1,4,2),(2,4,3)) has invariant -1 (hand Clifford computation);
// the degree-5 genus-0 tuple below has invariant +1.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <utility>
#include <vector>

#include "hurwitz/nielsen.hpp"
#include "hurwitz/perm.hpp"
#include "hurwitz/spin.hpp"

using namespace hurwitz;

namespace {

// Independent multiplication oracle on basis monomials.
std::pair<int, uint32_t> mul_monomials_oracle(uint32_t a, uint32_t b) {
  std::vector<int> word;
  for (int p = 0; p < 32; ++p)
    if (a >> p & 1) word.push_back(p);
  for (int p = 0; p < 32; ++p)
    if (b >> p & 1) word.push_back(p);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] > word[k + 1]) {
        std::swap(word[k], word[k + 1]);
        sign = -sign;
        changed = true;
      } else if (word[k] == word[k + 1]) {
        word.erase(word.begin() + k, word.begin() + k + 2);
        changed = true;
        break;
      }
    }
  }
  uint32_t mask = 0;
  for (int p : word) mask |= uint32_t{1} << p;
  return {sign, mask};
}

CliffordElement monomial(int degree, uint32_t mask) {
  CliffordElement acc = CliffordElement::scalar(degree, 1);
  for (int p = 0; p < degree; ++p)
    if (mask >> p & 1)
      acc = clifford_mul(acc, CliffordElement::generator(degree, p + 1));
  return acc;
}

NielsenTuple tuple_of(int n, const std::vector<std::string>& cycles) {
  std::vector<Perm> entries;
  for (const auto& c : cycles) entries.push_back(parse_perm(c, n));
  return NielsenTuple::make(std::move(entries));
}

}  // namespace

TEST_CASE("generator relations") {
  auto e1 = CliffordElement::generator(4, 1);
  auto e2 = CliffordElement::generator(4, 2);
  CHECK(clifford_mul(e1, e1) == CliffordElement::scalar(4, 1));
  CHECK(clifford_mul(e1, e2) == clifford_negate(clifford_mul(e2, e1)));
  CHECK(clifford_mul(e1, e2).terms().size() == 1);
  CHECK(clifford_mul(e1, e2).terms()[0].first == 0b11u);
  CHECK_FALSE(clifford_mul(e1, e2).as_scalar().has_value());
  CHECK(CliffordElement::zero(4).as_scalar().value() == 0);
  CHECK_THROWS_AS(CliffordElement::generator(4, 5), CliffordError);
  CHECK_THROWS_AS(CliffordElement::generator(0, 1), CliffordError);
  CHECK_THROWS_AS(
      clifford_mul(CliffordElement::generator(3, 1),
                   CliffordElement::generator(4, 1)),
      CliffordError);
}

TEST_CASE("monomial products match the bubble-sort oracle") {
  std::mt19937_64 rng(20260816);
  const int degree = 8;
  for (int trial = 0; trial < 400; ++trial) {
    const uint32_t a = static_cast<uint32_t>(rng()) & 0xffu;
    const uint32_t b = static_cast<uint32_t>(rng()) & 0xffu;
    auto [sign, mask] = mul_monomials_oracle(a, b);
    CliffordElement prod = clifford_mul(monomial(degree, a), monomial(degree, b));
    REQUIRE(prod.terms().size() == 1);
    CHECK(prod.terms()[0].first == mask);
    CHECK(prod.terms()[0].second == mpq_class(sign));
  }
}

TEST_CASE("multiplication is associative and distributes over addition") {
  std::mt19937_64 rng(7);
  const int degree = 5;
  auto random_element = [&]() {
    CliffordElement acc = CliffordElement::zero(degree);
    for (int t = 0; t < 3; ++t) {
      const uint32_t mask = static_cast<uint32_t>(rng()) & 0x1fu;
      const int num = static_cast<int>(rng() % 7) - 3;
      acc = clifford_add(
          acc, clifford_scale(monomial(degree, mask), mpq_class(num) / 2));
    }
    return acc;
  };
  for (int trial = 0; trial < 50; ++trial) {
    CliffordElement a = random_element(), b = random_element(),
                    c = random_element();
    CHECK(clifford_mul(clifford_mul(a, b), c) ==
          clifford_mul(a, clifford_mul(b, c)));
    CHECK(clifford_mul(a, clifford_add(b, c)) ==
          clifford_add(clifford_mul(a, b), clifford_mul(a, c)));
  }
}

TEST_CASE("even products of transposition lifts") {
  SECTION("v12 * v12 = 1") {
    auto p = even_product(4, {lift_transposition(1, 2),
                              lift_transposition(1, 2)});
    CHECK(p == CliffordElement::scalar(4, 1));
  }
  SECTION("v12 * v34 has four monomials with coefficients +-1/2") {
    auto p = even_product(4, {lift_transposition(1, 2),
                              lift_transposition(3, 4)});
    const std::vector<CliffordElement::Term> expected = {
        {0b0101u, mpq_class(1, 2)},   // e1 e3
        {0b0110u, mpq_class(-1, 2)},  // e2 e3
        {0b1001u, mpq_class(-1, 2)},  // e1 e4
        {0b1010u, mpq_class(1, 2)},   // e2 e4
    };
    CHECK(p.terms() == expected);
  }
  SECTION("odd-length products are rejected") {
    CHECK_THROWS_AS(even_product(4, {lift_transposition(1, 2)}),
                    CliffordError);
    CHECK_THROWS_AS(lift_transposition(2, 2), CliffordError);
    CHECK_THROWS_AS(even_product(3, {lift_transposition(1, 4),
                                     lift_transposition(1, 2)}),
                    CliffordError);
  }
}

TEST_CASE("even sandwiches realize left-to-right transposition products") {
  const int degree = 5;
  struct Case {
    std::vector<TranspositionFactor> factors;
    const char* as_perm;
  };
  const std::vector<Case> cases = {
      {{lift_transposition(1, 2), lift_transposition(3, 4)}, "(1,2)(3,4)"},
      {{lift_transposition(1, 2), lift_transposition(2, 3)}, "(1,3,2)"},
      {{lift_transposition(2, 5), lift_transposition(1, 2)}, "(1,2,5)"},
  };
  for (const auto& kase : cases) {
    Perm pi = parse_perm(kase.as_perm, degree);
    CliffordElement x = even_product(degree, kase.factors);
    std::vector<TranspositionFactor> reversed(kase.factors.rbegin(),
                                              kase.factors.rend());
    CliffordElement x_inv = even_product(degree, reversed);
    REQUIRE(clifford_mul(x, x_inv) == CliffordElement::scalar(degree, 1));
    for (int k = 1; k <= degree; ++k) {
      CliffordElement sandwich = clifford_mul(
          clifford_mul(x_inv, CliffordElement::generator(degree, k)), x);
      CHECK(sandwich == CliffordElement::generator(degree, pi.apply(k)));
    }
  }
}

TEST_CASE("3-cycle lifts have order 3 and invert cleanly") {
  const int degree = 5;
  CliffordElement w = lift_3cycle(degree, 1, 2, 3);
  CliffordElement w2 = clifford_mul(w, w);
  CHECK(clifford_mul(w2, w) == CliffordElement::scalar(degree, 1));
  CHECK_FALSE(w.as_scalar().has_value());

  // The normalized lift is the negative of the raw pair product.
  CHECK(w == clifford_negate(even_product(
                 degree,
                 {lift_transposition(1, 2), lift_transposition(1, 3)})));

  // The lift of the inverse cycle is the inverse lift.
  CliffordElement w_inv = lift_3cycle(degree, 1, 3, 2);
  CHECK(clifford_mul(w, w_inv) == CliffordElement::scalar(degree, 1));
  CHECK(w_inv == w2);

  // Sandwiching by w permutes generators by (1,2,3).
  Perm c = parse_perm("(1,2,3)", degree);
  for (int k = 1; k <= degree; ++k) {
    CliffordElement sandwich = clifford_mul(
        clifford_mul(w_inv, CliffordElement::generator(degree, k)), w);
    CHECK(sandwich == CliffordElement::generator(degree, c.apply(k)));
  }

  CHECK_THROWS_AS(lift_3cycle(degree, 1, 2, 2), CliffordError);
  CHECK_THROWS_AS(lift_3cycle(3, 1, 2, 4), CliffordError);
}

TEST_CASE("lifting invariant of frozen tuples") {
  // Degree 4, genus 0: hand computation gives -1.
  NielsenTuple t4 = tuple_of(4, {"(1,2,3)", "(1,4,2)", "(2,4,3)"});
  REQUIRE(t4.genus() == 0);
  CHECK(lifting_invariant(t4) == -1);

  // Degree 5, genus 0: the invariant is +1 for odd degree.
  NielsenTuple t5 =
      tuple_of(5, {"(5,3,1)", "(3,5,2)", "(2,4,3)", "(1,3,4)"});
  REQUIRE(t5.genus() == 0);
  REQUIRE(t5.shape() == TupleShape::ThreeCycles);
  CHECK(lifting_invariant(t5) == 1);
}

TEST_CASE("lifting invariant is unchanged by braid moves and relabeling") {
  NielsenTuple t4 = tuple_of(4, {"(1,2,3)", "(1,4,2)", "(2,4,3)"});

  // Hand-braided at position 1: (g2, g2^-1 g1 g2, g3).
  NielsenTuple braided = tuple_of(4, {"(1,4,2)", "(1,3,4)", "(2,4,3)"});
  CHECK(lifting_invariant(braided) == lifting_invariant(t4));

  // Hand-conjugated by (1,2).
  NielsenTuple relabeled = tuple_of(4, {"(1,3,2)", "(1,2,4)", "(1,4,3)"});
  CHECK(lifting_invariant(relabeled) == lifting_invariant(t4));

  // Random simultaneous conjugations, odd and even alike.
  std::mt19937_64 rng(99);
  NielsenTuple t5 =
      tuple_of(5, {"(5,3,1)", "(3,5,2)", "(2,4,3)", "(1,3,4)"});
  for (const NielsenTuple& base : {t4, t5}) {
    const int n = base.degree();
    std::vector<uint8_t> images(n);
    for (int i = 0; i < n; ++i) images[i] = static_cast<uint8_t>(i + 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(images.begin(), images.end(), rng);
      Perm pi = Perm::from_images(images);
      std::vector<Perm> conj;
      for (const Perm& g : base.entries()) conj.push_back(conjugate(g, pi));
      CHECK(lifting_invariant(NielsenTuple::make(std::move(conj))) ==
            lifting_invariant(base));
    }
  }
}

TEST_CASE("lifting invariant preconditions") {
  NielsenTuple mixed = tuple_of(3, {"(1,2)", "(2,3)", "(1,2,3)"});
  CHECK_THROWS_AS(lifting_invariant(mixed), CliffordError);
  NielsenTuple small = tuple_of(3, {"(1,2,3)", "(1,3,2)"});
  CHECK_THROWS_AS(lifting_invariant(small), CliffordError);
}

TEST_CASE("coefficients stay dyadic with bounded denominators") {
  NielsenTuple t5 =
      tuple_of(5, {"(5,3,1)", "(3,5,2)", "(2,4,3)", "(1,3,4)"});
  const int n = t5.degree();
  CliffordElement acc = CliffordElement::scalar(n, 1);
  mpz_class bound = 1;
  for (const Perm& g : t5.entries()) {
    int a = 0;
    for (int x = 1; x <= n; ++x)
      if (g.apply(x) != x) {
        a = x;
        break;
      }
    acc = clifford_mul(acc, lift_3cycle(n, a, g.apply(a), g.apply(g.apply(a))));
    bound *= 2;
    for (const auto& [mask, coeff] : acc.terms()) {
      CHECK(coeff.get_den() > 0);
      CHECK(bound % coeff.get_den() == 0);
    }
  }
}

TEST_CASE("identity factorizations into three-cycles lift to scalar signs") {
  // Build random product-one three-cycle tuples from inverse pairs, shuffle
  // them with random elementary moves (which preserve the product), and
  // check the product of lifts is always a scalar, and always +-1.
  std::mt19937_64 rng(20260816);
  auto random_three_cycle = [&rng](int n) {
    std::vector<int> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = i + 1;
    std::shuffle(pts.begin(), pts.end(), rng);
    return parse_perm("(" + std::to_string(pts[0]) + "," +
                          std::to_string(pts[1]) + "," +
                          std::to_string(pts[2]) + ")",
                      n);
  };
  auto mix = [&rng](std::vector<Perm> t, int steps) {
    for (int s = 0; s < steps; ++s) {
      const size_t i = rng() % (t.size() - 1);
      Perm a = t[i], b = t[i + 1];
      t[i] = b;
      t[i + 1] = conjugate(a, b);
    }
    return t;
  };
  auto lift_product_sign = [](const std::vector<Perm>& t) {
    const int n = t.front().degree();
    CliffordElement acc = CliffordElement::scalar(n, 1);
    for (const Perm& g : t) {
      int a = 0;
      for (int x = 1; x <= n; ++x)
        if (g.apply(x) != x) {
          a = x;
          break;
        }
      acc = clifford_mul(acc, lift_3cycle(n, a, g.apply(a), g.apply(g.apply(a))));
    }
    auto s = acc.as_scalar();
    REQUIRE(s.has_value());
    REQUIRE((*s == 1 || *s == -1));
    return *s == 1 ? 1 : -1;
  };

  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 3;
    std::vector<Perm> t;
    const int pairs = 1 + trial % 3;
    for (int k = 0; k < pairs; ++k) {
      Perm c = random_three_cycle(n);
      t.push_back(c);
      t.push_back(inverse(c));
    }
    // A lift and the lift of its inverse multiply to the cube of the lift,
    // which is normalized to +1, so pair tuples sit in the +1 fiber; mixing
    // must not change that.
    CHECK(lift_product_sign(t) == 1);
    CHECK(lift_product_sign(mix(t, 40)) == 1);
  }

  SECTION("signs multiply under concatenation") {
    const std::vector<Perm> plus = tuple_of(5, {"(5,3,1)", "(3,5,2)",
                                                "(2,4,3)", "(1,3,4)"})
                                       .entries();
    REQUIRE(lift_product_sign(plus) == 1);
    std::vector<Perm> doubled = plus;
    doubled.insert(doubled.end(), plus.begin(), plus.end());
    CHECK(lift_product_sign(doubled) == 1);

    const std::vector<Perm> minus =
        tuple_of(4, {"(1,2,3)", "(1,4,2)", "(2,4,3)"}).entries();
    REQUIRE(lift_product_sign(minus) == -1);
    std::vector<Perm> flipped = minus;
    for (int k = 0; k < 2; ++k) {
      Perm c = random_three_cycle(4);
      flipped.push_back(c);
      flipped.push_back(inverse(c));
    }
    CHECK(lift_product_sign(mix(flipped, 40)) == -1);

    std::vector<Perm> cancelled = minus;
    cancelled.insert(cancelled.end(), minus.begin(), minus.end());
    CHECK(lift_product_sign(cancelled) == 1);
  }
}
