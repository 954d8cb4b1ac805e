#include "hurwitz/group.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace hurwitz;

namespace {

Perm p(const std::string& text, int degree) { return parse_perm(text, degree); }

// Independent oracle: the generated group by plain closure (no chain).
std::set<Perm> closure_elements(const std::vector<Perm>& gens) {
  std::set<Perm> elems;
  elems.insert(Perm(gens.front().degree()));
  std::vector<Perm> work(elems.begin(), elems.end());
  while (!work.empty()) {
    Perm g = work.back();
    work.pop_back();
    for (const Perm& s : gens) {
      Perm h = compose(g, s);
      if (elems.insert(h).second) work.push_back(h);
    }
  }
  return elems;
}

size_t closure_order(const std::vector<Perm>& gens) {
  return closure_elements(gens).size();
}

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

TEST_CASE("group order: frozen small cases") {
  // Two 3-cycles sharing one point generate the alternating group on the
  // union of their supports; oracle closure agrees.
  std::vector<Perm> a5 = {p("(1,2,3)", 5), p("(1,4,5)", 5)};
  CHECK(group_order(a5) == 60);
  CHECK(closure_order(a5) == 60);

  CHECK(group_order({p("(1,2)", 2)}) == 2);
  CHECK(group_order({Perm(4)}) == 1);
  CHECK_THROWS_AS(group_order({}), GroupError);
}

TEST_CASE("group order: symmetric groups up to degree 8") {
  for (int n = 2; n <= 8; ++n) {
    std::string big = "(1";
    for (int i = 2; i <= n; ++i) big += "," + std::to_string(i);
    big += ")";
    std::vector<Perm> gens = {p("(1,2)", n), p(big, n)};
    CHECK(group_order(gens) == factorial_u64(n));
  }
}

TEST_CASE("group order matches closure oracle on random generator sets") {
  std::mt19937_64 rng(20260816);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);  // degrees 3..6
    std::vector<Perm> gens = {random_perm(rng, n), random_perm(rng, n)};
    CHECK(group_order(gens) == closure_order(gens));
  }
}

TEST_CASE("stabilizer chain membership") {
  StabilizerChain a4({p("(1,2,3)", 4), p("(1,2)(3,4)", 4)});
  CHECK(a4.order() == 12);
  CHECK(a4.contains(p("(1,3,4)", 4)));
  CHECK(a4.contains(Perm(4)));
  CHECK_FALSE(a4.contains(p("(1,2)", 4)));
  CHECK_FALSE(a4.contains(p("(1,2,3,4)", 4)));

  // Membership agrees with closure on a random subgroup.
  std::mt19937_64 rng(5150);
  std::vector<Perm> gens = {random_perm(rng, 6), random_perm(rng, 6)};
  StabilizerChain chain(gens);
  std::set<Perm> elems;
  elems.insert(Perm(6));
  std::vector<Perm> work(elems.begin(), elems.end());
  while (!work.empty()) {
    Perm g = work.back();
    work.pop_back();
    for (const Perm& s : gens)
      if (elems.insert(compose(g, s)).second) work.push_back(compose(g, s));
  }
  for (int trial = 0; trial < 300; ++trial) {
    Perm q = random_perm(rng, 6);
    CHECK(chain.contains(q) == (elems.count(q) > 0));
  }
}

TEST_CASE("element enumeration is complete and sorted") {
  StabilizerChain s4({p("(1,2)", 4), p("(1,2,3,4)", 4)});
  auto elems = s4.elements();
  CHECK(elems.size() == 24);
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  CHECK(std::adjacent_find(elems.begin(), elems.end()) == elems.end());
  for (const Perm& g : elems) CHECK(s4.contains(g));
}

TEST_CASE("element enumeration matches closure for proper subgroups") {
  // Subgroups whose chains have nontrivial deeper levels: transversal
  // products must come out in the right order to avoid duplicates.
  const std::vector<std::vector<Perm>> cases = {
      {p("(1,2,3,4)", 4), p("(1,3)", 4)},            // dihedral of order 8
      {p("(1,2)(3,4)", 6), p("(1,3)(2,4)", 6)},      // Klein four, degree 6
      {p("(2,7)(3,6)", 7), p("(2,4)(3,5)", 7),
       p("(4,5)(6,7)", 7), p("(4,7)(5,6)", 7)},      // S4-sized, fixing 1
  };
  for (const auto& gens : cases) {
    StabilizerChain chain(gens);
    auto elems = chain.elements();
    std::set<Perm> closure(elems.begin(), elems.end());
    CHECK(elems.size() == chain.order());
    CHECK(closure.size() == elems.size());
    CHECK(closure == closure_elements(gens));
  }
}

TEST_CASE("transitivity and orbits") {
  auto info = transitivity_and_primitivity({p("(1,2)", 3)});
  CHECK_FALSE(info.transitive);
  CHECK(info.orbits == std::vector<std::vector<int>>{{1, 2}, {3}});

  info = transitivity_and_primitivity({p("(1,2,3,4,5)", 5)});
  CHECK(info.transitive);
  CHECK(info.orbits.size() == 1);
}

TEST_CASE("primitivity and block systems") {
  // Cyclic of order 4 on 4 points: blocks {1,3},{2,4}.
  auto info = transitivity_and_primitivity({p("(1,2,3,4)", 4)});
  CHECK(info.transitive);
  CHECK_FALSE(info.primitive);
  REQUIRE(info.block_system.has_value());
  CHECK(*info.block_system == std::vector<std::vector<int>>{{1, 3}, {2, 4}});

  // Full symmetric group is primitive.
  info = transitivity_and_primitivity({p("(1,2)", 4), p("(1,2,3,4)", 4)});
  CHECK(info.primitive);
  CHECK_FALSE(info.block_system.has_value());

  // Prime degree transitive is always primitive.
  info = transitivity_and_primitivity({p("(1,2,3,4,5)", 5)});
  CHECK(info.primitive);
}

TEST_CASE("classification by degree, order, transitivity") {
  GroupId id = classify_group({p("(1,2)", 5), p("(1,2,3,4,5)", 5)});
  CHECK(id.kind == GroupKind::Symmetric);
  CHECK(id.order == 120);
  CHECK(id.primitive);

  id = classify_group({p("(1,2,3)", 5), p("(1,4,5)", 5)});
  CHECK(id.kind == GroupKind::Alternating);
  CHECK(id.order == 60);

  // Klein four-group on 4 points: transitive, imprimitive, Other.
  id = classify_group({p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)});
  CHECK(id.kind == GroupKind::Other);
  CHECK(id.order == 4);
  CHECK(id.transitive);
  CHECK_FALSE(id.primitive);
  CHECK(id.block_system.has_value());

  id = classify_group({p("(1,2,3)", 3)});
  CHECK(id.kind == GroupKind::Alternating);
  id = classify_group({p("(1,2)", 3), p("(1,3)", 3)});
  CHECK(id.kind == GroupKind::Symmetric);
}

TEST_CASE("computed linear group orders") {
  CHECK(general_linear_order_f2(3) == 168);
  CHECK(affine_group_order_f2(3) == 8 * 168);
  CHECK(general_linear_order_f2(4) == 20160);
  CHECK(affine_group_order_f2(4) == 16 * 20160);
}

TEST_CASE("point stabilizer action") {
  // Stabilizer of 1 in S_4 acts as S_3 on the relabeled points {2,3,4}.
  auto stab = point_stabilizer_action({p("(1,2)", 4), p("(1,2,3,4)", 4)}, 1);
  CHECK(detail::common_degree(stab) == 3);
  CHECK(group_order(stab) == 6);

  // Stabilizer of 3 in <(1,2,3)>: trivial, reported as {identity}.
  stab = point_stabilizer_action({p("(1,2,3)", 3)}, 3);
  REQUIRE(stab.size() == 1);
  CHECK(stab[0].is_identity());
  CHECK(stab[0].degree() == 2);

  // Relabeling preserves increasing order of original labels: the
  // stabilizer of 2 in S_3 contains (1,3) acting on {1,3} -> (1,2).
  stab = point_stabilizer_action({p("(1,2)", 3), p("(1,2,3)", 3)}, 2);
  CHECK(group_order(stab) == 2);
  CHECK(stab[0] == p("(1,2)", 2));
}
