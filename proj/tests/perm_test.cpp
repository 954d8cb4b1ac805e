#include "hurwitz/perm.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hurwitz;

namespace {

Perm p(const std::string& text, int degree) { return parse_perm(text, degree); }

Perm random_perm(std::mt19937_64& rng, int degree) {
  std::vector<uint8_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<uint8_t>(i + 1);
  for (int i = degree - 1; i > 0; --i) {
    std::uniform_int_distribution<int> d(0, i);
    std::swap(img[i], img[d(rng)]);
  }
  return Perm::from_images(std::move(img));
}

}  // namespace

TEST_CASE("parse and format round-trip on canonical forms") {
  // Frozen canonical strings; format(parse(s)) == s.
  const int n = 7;
  for (const char* s : {"id", "(1,2)", "(1,2)(3,4)", "(1,2,3)", "(2,7)(3,5)",
                        "(1,3,5,7)(2,4)", "(1,2,3,4,5,6,7)"}) {
    CHECK(format_perm(p(s, n)) == s);
  }
  // Non-canonical but valid input normalizes.
  CHECK(format_perm(p("(3,4)(1,2)", 4)) == "(1,2)(3,4)");
  CHECK(format_perm(p("(2,3,1)", 3)) == "(1,2,3)");
  CHECK(format_perm(p(" ( 1 , 2 ) ", 2)) == "(1,2)");
}

TEST_CASE("parse rejects malformed or invalid input") {
  CHECK_THROWS_AS(parse_perm("(1,8)", 7), PermError);    // out of range
  CHECK_THROWS_AS(parse_perm("(0,1)", 7), PermError);    // out of range
  CHECK_THROWS_AS(parse_perm("(1,2)(2,3)", 7), PermError);  // repeated point
  CHECK_THROWS_AS(parse_perm("(1,1)", 7), PermError);    // repeated point
  CHECK_THROWS_AS(parse_perm("(1)", 7), PermError);      // length-1 cycle
  CHECK_THROWS_AS(parse_perm("(1,2", 7), PermError);     // unclosed
  CHECK_THROWS_AS(parse_perm("", 7), PermError);         // empty
  CHECK_THROWS_AS(parse_perm("1,2", 7), PermError);      // missing parens
  CHECK_THROWS_AS(parse_perm("id junk", 7), PermError);  // trailing text
}

TEST_CASE("compose applies left-to-right") {
  // Frozen: apply (4,3,1) then (3,4,2); 1->4->2, 2->2->3, 3->1->1, 4->3->4.
  Perm a = p("(4,3,1)", 4);
  Perm b = p("(3,4,2)", 4);
  CHECK(compose(a, b) == p("(1,2,3)", 4));
  CHECK(compose(a, b).apply(4) == 4);

  // Order matters.
  Perm s = p("(1,2)", 3), t = p("(1,3)", 3);
  CHECK(format_perm(compose(s, t)) == "(1,2,3)");
  CHECK(format_perm(compose(t, s)) == "(1,3,2)");
}

TEST_CASE("inverse and identity") {
  CHECK(Perm(5).is_identity());
  CHECK(inverse(p("(1,2,3)", 5)) == p("(1,3,2)", 5));
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    Perm q = random_perm(rng, n);
    CHECK(compose(q, inverse(q)).is_identity());
    CHECK(compose(inverse(q), q).is_identity());
  }
}

TEST_CASE("conjugate relabels points") {
  // Frozen: (1,2) conjugated by (1,3) is (2,3).
  CHECK(conjugate(p("(1,2)", 3), p("(1,3)", 3)) == p("(2,3)", 3));
  // conjugate(p, by) == by^-1 * p * by, left-to-right.
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 15);
    Perm q = random_perm(rng, n), by = random_perm(rng, n);
    CHECK(conjugate(q, by) == compose(compose(inverse(by), q), by));
    CHECK(cycle_structure(conjugate(q, by)) == cycle_structure(q));
  }
}

TEST_CASE("cycle structure and ramification index") {
  CHECK(cycle_structure(Perm(6)).lengths.empty());
  CHECK(cycle_structure(Perm(6)).index() == 0);
  CHECK(cycle_structure(p("(1,2)(3,4)", 6)).lengths == std::vector<int>{2, 2});
  CHECK(cycle_structure(p("(1,2)(3,4)", 6)).index() == 2);
  CHECK(cycle_structure(p("(1,2,3)", 6)).is_three_cycle());
  CHECK(cycle_structure(p("(1,2)(3,4)", 6)).is_double_transposition());
  CHECK(cycle_structure(p("(1,2)", 6)).is_transposition());
  CHECK(cycle_structure(p("(1,4,2,5)(3,6)", 6)).lengths ==
        std::vector<int>{2, 4});
  CHECK(cycle_structure(p("(1,4,2,5)(3,6)", 6)).index() == 4);
  CHECK(cycle_structure(p("(1,2)(3,4)", 6)).to_string() == "2+2");
  CHECK(cycle_structure(Perm(3)).to_string() == "1");
}

TEST_CASE("parity is multiplicative") {
  CHECK(parity(p("(1,2)", 4)) == -1);
  CHECK(parity(p("(1,2)(3,4)", 4)) == 1);
  CHECK(parity(p("(1,2,3)", 4)) == 1);
  CHECK(parity(p("(1,2,3,4)", 4)) == -1);
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    Perm a = random_perm(rng, n), b = random_perm(rng, n);
    CHECK(parity(compose(a, b)) == parity(a) * parity(b));
  }
}

TEST_CASE("image-table validation") {
  CHECK_THROWS_AS(Perm::from_images({1, 1, 3}), PermError);
  CHECK_THROWS_AS(Perm::from_images({0, 2}), PermError);
  CHECK_THROWS_AS(Perm::from_images({2, 3}), PermError);
  CHECK(Perm::from_images({2, 1}) == p("(1,2)", 2));
}

TEST_CASE("format/parse round-trips on random permutations") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    Perm q = random_perm(rng, n);
    CHECK(parse_perm(format_perm(q), n) == q);
  }
}
