#include "doctest.h"

#include "corpus.hpp"
#include "pinext/error.hpp"
#include "pinext/group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace pinext;
using namespace pinext::testing;

namespace {

int index_of_order(const FiniteGroup& g, int order) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == order) return x;
  return -1;
}

}  // namespace

TEST_CASE("a single transposition generates C2") {
  auto gen = generate_permutation_group(2, {permutation_from_cycles(2, {{1, 2}})});
  CHECK(gen.group->order() == 2);
  CHECK(gen.generator_indices == std::vector<int>{1});
}

TEST_CASE("an explicit Q8 table loads and identifies") {
  GroupSpec spec;
  spec.table = q8()->table();
  auto gen = generate(spec);
  CHECK(gen.group->order() == 8);
  CHECK(identify(*gen.group) == "Q8");
}

TEST_CASE("table with identity away from index 0 is canonicalized") {
  // Z/3 written with the identity at index 2.
  std::vector<std::vector<int>> mul = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  auto g = make_group(mul);
  for (int x = 0; x < 3; ++x) CHECK(g->mul(0, x) == x);
  CHECK(g->label(0) == "2");
}

TEST_CASE("non-associative tables are rejected") {
  // A Latin square with identity 0 that is not a group.
  std::vector<std::vector<int>> mul = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(make_group(mul), Error);
}

TEST_CASE("coordinate reflections in O(2) generate the Klein four group") {
  auto gen = generate_matrix_group(2, {diag({-1, 1}), diag({1, -1})});
  CHECK(gen.group->order() == 4);
  CHECK(identify(*gen.group) == "C2xC2");
  CHECK(gen.generator_indices == std::vector<int>{1, 2});
  CHECK(gen.matrices[3] == diag({-1, -1}));
}

TEST_CASE("generation is deterministic") {
  std::vector<RationalMatrix> gens = {RationalMatrix::signed_permutation({1, 0, 2}, {1, -1, 1}),
                                      RationalMatrix::signed_permutation({0, 2, 1}, {-1, 1, 1})};
  auto a = generate_matrix_group(3, gens);
  auto b = generate_matrix_group(3, gens);
  CHECK(a.group->table() == b.group->table());
  CHECK(a.matrices == b.matrices);
}

TEST_CASE("generation errors") {
  CHECK_THROWS_WITH_AS(generate_permutation_group(8, {permutation_from_cycles(8, {{1, 2, 3, 4, 5, 6, 7, 8}}),
                                                      permutation_from_cycles(8, {{1, 2}})},
                                                  64),
                       doctest::Contains("ClosureExceedsCap"), Error);
  CHECK_THROWS_WITH_AS(generate_matrix_group(2, {diag({1, 0})}), doctest::Contains("NotInvertible"), Error);
  CHECK_THROWS_WITH_AS(generate_permutation_group(3, {{0, 0, 1}}), doctest::Contains("NotInvertible"), Error);
  RationalMatrix shear = RationalMatrix::identity(2);
  shear(0, 1) = 1;
  CHECK_THROWS_WITH_AS(generate_matrix_group(2, {shear}), doctest::Contains("NotOrthogonal"), Error);
}

TEST_CASE("generated groups satisfy the group axioms") {
  for (const auto& entry : small_group_catalog()) {
    const FiniteGroup& g = *entry.group;
    for (int a = 0; a < g.order(); ++a) {
      CHECK(g.mul(a, g.inv(a)) == 0);
      CHECK(g.mul(0, a) == a);
      for (int b = 0; b < g.order(); ++b)
        for (int c = 0; c < g.order(); ++c) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
  }
}

TEST_CASE("subgroups") {
  auto q = q8();
  int minus_one = q->center()[1];
  auto mu2 = subgroup(q, {minus_one});
  CHECK(mu2.group->order() == 2);
  CHECK(mu2.inclusion.map == std::vector<int>{0, minus_one});

  CHECK(subgroup(q, {}).group->order() == 1);

  auto gamma3 = gamma(3);
  auto pair = subgroup(gamma3.group, {gamma3.generator_indices[0], gamma3.generator_indices[2]});
  CHECK(pair.group->order() == 4);
  CHECK(identify(*pair.group) == "C2xC2");
}

TEST_CASE("abelianization") {
  for (auto g : {q8(), d4()}) {
    auto ab = abelianization(g);
    CHECK(identify(*ab.group) == "C2xC2");
    // The kernel is exactly the set generated by commutators: it contains
    // every commutator and has index |G^ab|.
    std::set<int> kernel;
    for (int x : ab.projection.kernel()) kernel.insert(x);
    for (int a = 0; a < g->order(); ++a)
      for (int b = 0; b < g->order(); ++b) CHECK(kernel.count(g->commutator(a, b)));
    CHECK(kernel.size() == 2);
  }
  auto c = cyclic_group(6);
  auto ab = abelianization(c);
  CHECK(ab.group->order() == 6);
  CHECK(ab.projection.is_injective());
  CHECK(abelian_invariants(klein()) == std::vector<long long>{2, 2});
  CHECK(abelian_invariants(cyclic_group(12)) == std::vector<long long>{12});
  CHECK(abelian_invariants(abelian_group({2, 4, 3})) == std::vector<long long>{2, 12});
  CHECK(abelian_invariants(q8()) == std::vector<long long>{2, 2});
}

TEST_CASE("order-8 groups are told apart by element orders") {
  CHECK(q8()->order_profile() == std::vector<int>{1, 2, 4, 4, 4, 4, 4, 4});
  CHECK(d4()->order_profile() == std::vector<int>{1, 2, 2, 2, 2, 2, 4, 4});
  CHECK(identify(*q8()) == "Q8");
  CHECK(identify(*d4()) == "D4");
  CHECK(identify(*abelian_group({2, 2, 2})) == "C2xC2xC2");
  CHECK(identify(*cyclic_group(17)) == "unknown");
}

TEST_CASE("catalog lists every group of order at most 16 exactly once") {
  const std::map<int, int> expected = {{1, 1}, {2, 1}, {3, 1},  {4, 2},  {5, 1},  {6, 2},  {7, 1},  {8, 5},
                                       {9, 2}, {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {16, 14}};
  std::map<int, int> counts;
  const auto& catalog = small_group_catalog();
  for (const auto& e : catalog) ++counts[e.group->order()];
  CHECK(counts == expected);
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = i + 1; j < catalog.size(); ++j)
      if (catalog[i].group->order() == catalog[j].group->order())
        CHECK_MESSAGE(!find_isomorphism(*catalog[i].group, *catalog[j].group),
                      catalog[i].name << " vs " << catalog[j].name);
  for (const auto& e : catalog) CHECK(identify(*e.group) == e.name);
}

TEST_CASE("identify is invariant under relabeling") {
  std::mt19937_64 rng(7);
  for (const auto& e : small_group_catalog()) {
    if (e.group->order() < 8) continue;
    auto shuffled = relabel(*e.group, rng);
    CHECK(identify(*shuffled) == e.name);
  }
}

TEST_CASE("homomorphisms from generator images") {
  auto q = q8();
  auto c = c2();
  int i = 1, j = 4;  // a and x in the dicyclic presentation
  auto phi = hom(q, c, {{i, 1}, {j, 1}});
  CHECK(phi.is_surjective());
  CHECK(phi(q->mul(i, j)) == 0);
  auto id = hom(q, q, {{i, i}, {j, j}});
  CHECK(id.map == identity_hom(q).map);

  auto four = c4();
  CHECK_THROWS_WITH_AS(hom(c, four, {{1, index_of_order(*four, 4)}}), doctest::Contains("NotAHomomorphism"),
                       Error);
}

TEST_CASE("quotients need normal subgroups") {
  auto s3 = dihedral_group(3);
  int reflection = index_of_order(*s3, 2);
  CHECK_THROWS_WITH_AS(quotient(s3, closure(*s3, {reflection})), doctest::Contains("NotNormal"), Error);
}
