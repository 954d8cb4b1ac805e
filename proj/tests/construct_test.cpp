// Tests for the tuple and linear-group constructors.
//
// Frozen oracles: the degree-4/5/6 genus-0 seeds (the 5 and 6 seeds are
// re-derived by their exhaustive searches), the genus-1 anchor, the
// stabilizer-derived genus-2 tuple, and the appended entries of the genus-3
// exceptional tuples. Group-theoretic facts (orders, transvection counts,
// block structure) are checked through the stabilizer chain.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "hurwitz/construct.hpp"
#include "hurwitz/group.hpp"
#include "hurwitz/nielsen.hpp"
#include "hurwitz/perm.hpp"
#include "hurwitz/spin.hpp"

using namespace hurwitz;

namespace {

Perm p(const std::string& text, int degree) { return parse_perm(text, degree); }

NielsenTuple tuple_of(int n, const std::vector<std::string>& cycles) {
  std::vector<Perm> entries;
  for (const auto& c : cycles) entries.push_back(p(c, n));
  return NielsenTuple::make(std::move(entries));
}

}  // namespace

TEST_CASE("degree extension and point restriction") {
  Perm t = p("(1,2)", 3);
  Perm e = extend_degree(t, 5);
  CHECK(e.degree() == 5);
  CHECK(e == p("(1,2)", 5));
  CHECK(extend_degree(t, 3) == t);
  CHECK_THROWS_AS(extend_degree(t, 2), PermError);

  CHECK(restrict_action(p("(2,3)", 3), 1) == p("(1,2)", 2));
  CHECK(restrict_action(p("(1,3)", 3), 2) == p("(1,2)", 2));
  CHECK_THROWS_AS(restrict_action(p("(1,2)", 3), 1), GroupError);
}

TEST_CASE("genus-0 double-transposition family") {
  SECTION("degree 4 seed is the Klein triple") {
    CHECK(dt_genus0(4) ==
          tuple_of(4, {"(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"}));
  }
  SECTION("degree 5 seed: opening pair, completion count, frozen least") {
    NielsenTuple t = dt_genus0(5);
    CHECK(t == tuple_of(5, {"(1,2)(3,4)", "(1,3)(4,5)", "(2,4)(3,5)",
                            "(1,4)(2,5)"}));
    CHECK(cycle_structure(compose(t.entry(1), t.entry(2))).lengths ==
          std::vector<int>{5});
    auto completions = dt_genus0_degree5_completions();
    REQUIRE(completions.size() == 5);
    CHECK(completions.front() == t);
    for (const auto& c : completions) {
      CHECK(c.genus() == 0);
      CHECK(group_order(c.entries()) == 10);
    }
  }
  SECTION("degree 6 seed equals its exhaustive search") {
    NielsenTuple t = dt_genus0(6);
    CHECK(t == tuple_of(6, {"(3,4)(5,6)", "(3,5)(4,6)", "(2,3)(4,5)",
                            "(1,4)(3,6)", "(1,4)(2,6)"}));
    CHECK(t == dt_genus0_degree6_search());
  }
  SECTION("no degree-5 genus-0 tuple generates the alternating group") {
    CHECK_FALSE(dta_genus0_degree5_exists());
  }
  SECTION("recursion: shape, genus, length, generated group") {
    for (int n = 4; n <= 10; ++n) {
      NielsenTuple t = dt_genus0(n);
      CHECK(t.degree() == n);
      CHECK(t.length() == n - 1);
      CHECK(t.genus() == 0);
      CHECK(t.shape() == TupleShape::DoubleTranspositions);
      if (n >= 6) {
        GroupId id = classify_group(t.entries());
        CHECK(id.kind == GroupKind::Alternating);
      }
    }
    GroupId id7 = classify_group(dt_genus0(7).entries());
    CHECK(id7.kind == GroupKind::Alternating);
    CHECK(id7.order == 2520);
  }
  SECTION("replacement pair multiplies back to the split entry") {
    for (int n = 7; n <= 9; ++n) {
      Perm a = p("(1,2)(" + std::to_string(n - 1) + "," + std::to_string(n) +
                     ")",
                 n);
      Perm b = p("(3,4)(" + std::to_string(n - 1) + "," + std::to_string(n) +
                     ")",
                 n);
      CHECK(compose(a, b) == p("(1,2)(3,4)", n));
    }
  }
  CHECK_THROWS_AS(dt_genus0(3), ConstructError);
}

TEST_CASE("genus-0 three-cycle family") {
  CHECK(tc_genus0(3) == tuple_of(3, {"(1,2,3)", "(1,3,2)"}));
  SECTION("splitting pair multiplies back to (1,2,3)") {
    for (int n = 4; n <= 8; ++n) {
      Perm s = detail::make_cycles(n, {{n, 3, 1}});
      Perm t = detail::make_cycles(n, {{3, n, 2}});
      CHECK(compose(s, t) == p("(1,2,3)", n));
    }
  }
  SECTION("recursion: shape, genus, length, generated group") {
    for (int n = 3; n <= 9; ++n) {
      NielsenTuple t = tc_genus0(n);
      CHECK(t.degree() == n);
      CHECK(t.length() == n - 1);
      CHECK(t.genus() == 0);
      CHECK(t.shape() == TupleShape::ThreeCycles);
      CHECK(classify_group(t.entries()).kind == GroupKind::Alternating);
    }
    GroupId id6 = classify_group(tc_genus0(6).entries());
    CHECK(id6.order == 360);
  }
  CHECK_THROWS_AS(tc_genus0(2), ConstructError);
}

TEST_CASE("genus-1 double-transposition family") {
  SECTION("anchor") {
    CHECK(dta_genus1(5) ==
          tuple_of(5, {"(1,2)(3,4)", "(1,2)(3,4)", "(1,2)(4,5)", "(1,4)(2,5)",
                       "(1,5)(2,4)"}));
  }
  SECTION("first inductive split") {
    NielsenTuple t6 = dta_genus1(6);
    // Last entry (1,5)(2,4) of the anchor splits over spare point 3.
    CHECK(t6.entry(5) == p("(1,5)(3,6)", 6));
    CHECK(t6.entry(6) == p("(2,4)(3,6)", 6));
    CHECK(compose(t6.entry(5), t6.entry(6)) == p("(1,5)(2,4)", 6));
  }
  SECTION("induction: shape, genus, length, generated group") {
    for (int n = 5; n <= 9; ++n) {
      NielsenTuple t = dta_genus1(n);
      CHECK(t.degree() == n);
      CHECK(t.length() == n);
      CHECK(t.genus() == 1);
      CHECK(t.shape() == TupleShape::DoubleTranspositions);
      CHECK(classify_group(t.entries()).kind == GroupKind::Alternating);
    }
  }
  CHECK_THROWS_AS(dta_genus1(4), ConstructError);
}

TEST_CASE("stabilization raises genus by one") {
  NielsenTuple base = dta_genus1(5);
  NielsenTuple up = stabilize(base, FamilyKind::DoubleTranspositions);
  CHECK(up.degree() == 6);
  CHECK(up.length() == 7);
  CHECK(up.genus() == 2);
  CHECK(up.shape() == TupleShape::DoubleTranspositions);
  CHECK(up.entry(6) == up.entry(7));
  CHECK(compose(up.entry(6), up.entry(7)).is_identity());
  for (int i = 1; i <= 5; ++i)
    CHECK(up.entry(i) == extend_degree(base.entry(i), 6));

  NielsenTuple tc_base = build_family(5, 1, FamilyKind::ThreeCycles);
  NielsenTuple tc_up = stabilize(tc_base, FamilyKind::ThreeCycles);
  CHECK(tc_up.genus() == 2);
  CHECK(tc_up.shape() == TupleShape::ThreeCycles);
  CHECK(compose(tc_up.entry(6), tc_up.entry(7)).is_identity());

  SECTION("three-cycle stabilization preserves the lifting invariant") {
    CHECK(lifting_invariant(tc_up) == lifting_invariant(tc_base));
    NielsenTuple tc61 = build_family(6, 1, FamilyKind::ThreeCycles);
    CHECK(lifting_invariant(stabilize(tc61, FamilyKind::ThreeCycles)) ==
          lifting_invariant(tc61));
  }

  SECTION("genus-0 input is rejected") {
    CHECK_THROWS_AS(stabilize(tc_genus0(4), FamilyKind::ThreeCycles),
                    ConstructError);
    CHECK_THROWS_AS(stabilize(dt_genus0(6), FamilyKind::DoubleTranspositions),
                    ConstructError);
  }
}

TEST_CASE("family builder") {
  SECTION("boundary case n = 2g+1") {
    NielsenTuple t = build_family(7, 3, FamilyKind::DoubleTranspositions);
    CHECK(t.degree() == 7);
    CHECK(t.length() == 9);
    CHECK(t.genus() == 3);
    CHECK(t.shape() == TupleShape::DoubleTranspositions);
    CHECK(classify_group(t.entries()).kind == GroupKind::Alternating);
    ModuliCheck mc = moduli_necessary(t);
    CHECK(mc.necessary_ok);
    CHECK(mc.zariski_ok);
    CHECK(t.length() == 3 * t.genus());
  }
  SECTION("larger cases and the three-cycle kind") {
    NielsenTuple t94 = build_family(9, 4, FamilyKind::DoubleTranspositions);
    CHECK(t94.length() == 12);
    CHECK(t94.genus() == 4);
    CHECK(t94.length() >= 3 * t94.genus());

    NielsenTuple t62 = build_family(6, 2, FamilyKind::ThreeCycles);
    CHECK(t62.length() == 7);
    CHECK(t62.genus() == 2);
    CHECK(t62.shape() == TupleShape::ThreeCycles);
    CHECK(classify_group(t62.entries()).kind == GroupKind::Alternating);
  }
  SECTION("r = n + g - 1 across the supported grid") {
    for (int g = 1; g <= 4; ++g) {
      const int n_min = g == 1 ? 5 : (g == 2 ? 6 : 2 * g + 1);
      for (int n = n_min; n <= n_min + 2; ++n) {
        for (FamilyKind kind : {FamilyKind::DoubleTranspositions,
                                FamilyKind::ThreeCycles}) {
          NielsenTuple t = build_family(n, g, kind);
          CHECK(t.degree() == n);
          CHECK(t.genus() == g);
          CHECK(t.length() == n + g - 1);
        }
      }
    }
  }
  SECTION("parameters outside the ranges are rejected") {
    CHECK_THROWS_AS(build_family(4, 1, FamilyKind::DoubleTranspositions),
                    ConstructError);
    CHECK_THROWS_AS(build_family(5, 2, FamilyKind::DoubleTranspositions),
                    ConstructError);
    CHECK_THROWS_AS(build_family(6, 3, FamilyKind::ThreeCycles),
                    ConstructError);
    CHECK_THROWS_AS(build_family(7, 0, FamilyKind::DoubleTranspositions),
                    ConstructError);
  }
}

TEST_CASE("linear groups over the 2-element field") {
  SECTION("orders, degrees, classification") {
    LinearGroupSpec gl = linear_group(GroupKind::GL32);
    CHECK(gl.degree == 7);
    CHECK(group_order(gl.generators) == 168);
    CHECK(classify_group(gl.generators).kind == GroupKind::GL32);

    LinearGroupSpec agl3 = linear_group(GroupKind::AGL32);
    CHECK(agl3.degree == 8);
    CHECK(group_order(agl3.generators) == 1344);
    CHECK(classify_group(agl3.generators).kind == GroupKind::AGL32);

    LinearGroupSpec agl4 = linear_group(GroupKind::AGL42);
    CHECK(agl4.degree == 16);
    CHECK(group_order(agl4.generators) == affine_group_order_f2(4));
    CHECK(classify_group(agl4.generators).kind == GroupKind::AGL42);

    CHECK_THROWS_AS(linear_group(GroupKind::Symmetric), ConstructError);
  }
  SECTION("transvections of GL_3(2)") {
    LinearGroupSpec gl = linear_group(GroupKind::GL32);
    REQUIRE(gl.transvections.size() == 21);
    StabilizerChain chain(gl.generators);
    std::set<Perm> tv(gl.transvections.begin(), gl.transvections.end());
    for (const Perm& t : gl.transvections) {
      CHECK(cycle_structure(t).is_double_transposition());
      CHECK(chain.contains(t));
      // Fixed vectors together with 0 form an XOR-closed set: a hyperplane.
      std::vector<int> fixed = {0};
      for (int v = 1; v <= 7; ++v)
        if (t.apply(v) == v) fixed.push_back(v);
      REQUIRE(fixed.size() == 4);
      for (int a : fixed)
        for (int b : fixed)
          CHECK(std::find(fixed.begin(), fixed.end(), a ^ b) != fixed.end());
      // The set is closed under conjugation by the group's generators.
      for (const Perm& g : gl.generators) CHECK(tv.count(conjugate(t, g)));
    }
  }
  SECTION("transvections of the affine groups") {
    LinearGroupSpec agl3 = linear_group(GroupKind::AGL32);
    CHECK(agl3.transvections.size() == 42);
    for (const Perm& t : agl3.transvections) {
      CHECK(cycle_structure(t).is_double_transposition());
      // Fixed point set (as vectors, label-1) is affine: x^y^z stays inside.
      std::vector<int> fixed;
      for (int x = 1; x <= 8; ++x)
        if (t.apply(x) == x) fixed.push_back(x - 1);
      REQUIRE(fixed.size() == 4);
      for (int a : fixed)
        for (int b : fixed)
          for (int c : fixed)
            CHECK(std::find(fixed.begin(), fixed.end(), a ^ b ^ c) !=
                  fixed.end());
    }

    LinearGroupSpec agl4 = linear_group(GroupKind::AGL42);
    CHECK(agl4.transvections.size() == 210);
    for (const Perm& t : agl4.transvections)
      CHECK(cycle_structure(t).lengths == std::vector<int>{2, 2, 2, 2});
  }
}

TEST_CASE("genus-2 tuple from the point stabilizer") {
  NielsenTuple t = tau_genus2();
  CHECK(t == tuple_of(6, {"(3,4)(5,6)", "(1,2)(5,6)", "(1,2)(3,4)",
                          "(3,5)(4,6)", "(3,5)(4,6)", "(1,3)(2,4)",
                          "(1,3)(2,4)"}));
  CHECK(t.degree() == 6);
  CHECK(t.length() == 7);
  CHECK(t.genus() == 2);
  CHECK(t.shape() == TupleShape::DoubleTranspositions);

  GroupId id = classify_group(t.entries());
  CHECK(id.order == 24);
  CHECK(id.transitive);
  CHECK_FALSE(id.primitive);
  REQUIRE(id.block_system.has_value());
  REQUIRE(id.block_system->size() == 3);
  for (const auto& block : *id.block_system) CHECK(block.size() == 2);

  SECTION("kernel of the block action") {
    const auto& blocks = *id.block_system;
    std::vector<int> block_of(7, -1);
    for (size_t b = 0; b < blocks.size(); ++b)
      for (int x : blocks[b]) block_of[x] = static_cast<int>(b);
    std::vector<Perm> kernel;
    for (const Perm& g : StabilizerChain(t.entries()).elements()) {
      bool preserves = true;
      for (int x = 1; x <= 6; ++x)
        if (block_of[g.apply(x)] != block_of[x]) {
          preserves = false;
          break;
        }
      if (preserves) kernel.push_back(g);
    }
    CHECK(kernel.size() == 4);
    for (int i = 1; i <= 3; ++i)
      CHECK(std::find(kernel.begin(), kernel.end(), t.entry(i)) !=
            kernel.end());
  }
}

TEST_CASE("genus-3 exceptional tuples") {
  SECTION("7 points, 9 entries, GL_3(2)") {
    NielsenTuple t = exceptional_genus3(GroupKind::GL32);
    CHECK(t.degree() == 7);
    CHECK(t.length() == 9);
    CHECK(t.genus() == 3);
    CHECK(t.shape() == TupleShape::DoubleTranspositions);
    CHECK(classify_group(t.entries()).kind == GroupKind::GL32);
    CHECK(t.length() == 3 * t.genus());
    // Appended pair: two copies of the least double transposition moving 1.
    CHECK(t.entry(8) == p("(1,2)(5,6)", 7));
    CHECK(t.entry(9) == t.entry(8));
    // The first seven entries fix point 1 (they lie in the stabilizer).
    for (int i = 1; i <= 7; ++i) CHECK(t.entry(i).apply(1) == 1);
  }
  SECTION("8 points, 10 entries, AGL_3(2)") {
    NielsenTuple t = exceptional_genus3(GroupKind::AGL32);
    CHECK(t.degree() == 8);
    CHECK(t.length() == 10);
    CHECK(t.genus() == 3);
    CHECK(t.shape() == TupleShape::DoubleTranspositions);
    CHECK(classify_group(t.entries()).kind == GroupKind::AGL32);
    // The split pair multiplies back to the entry it replaced and lies
    // outside the point stabilizer; the stem entries fix point 1.
    CHECK(t.entry(9) == p("(1,4)(6,7)", 8));
    CHECK(t.entry(10) == p("(1,4)(2,3)", 8));
    CHECK(compose(t.entry(9), t.entry(10)) == t.entry(8));
    CHECK(t.entry(8) == p("(2,3)(6,7)", 8));
    CHECK(t.entry(9).apply(1) != 1);
    CHECK(t.entry(10).apply(1) != 1);
    for (int i = 1; i <= 8; ++i) CHECK(t.entry(i).apply(1) == 1);
  }
  CHECK_THROWS_AS(exceptional_genus3(GroupKind::Alternating), ConstructError);
}
