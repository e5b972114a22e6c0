#include <doctest.h>

#include <algorithm>
#include <map>

#include "twconj/rng.hpp"
#include "twconj/structure.hpp"

using namespace twconj;

TEST_CASE("centerless predicate") {
  CHECK(is_centerless(preset("symmetric", {3})));
  CHECK_FALSE(is_centerless(preset("cyclic", {2})));
  CHECK_FALSE(is_centerless(preset("dihedral", {4})));
  CHECK(is_centerless(preset("symmetric", {4})));
}

TEST_CASE("normal subgroup enumeration") {
  auto s3_normals = normal_subgroups(preset("symmetric", {3}));
  REQUIRE(s3_normals.size() == 3);
  CHECK(s3_normals[0].order() == 1);
  CHECK(s3_normals[1].order() == 3);
  CHECK(s3_normals[2].order() == 6);

  CHECK(normal_subgroups(preset("cyclic", {4})).size() == 3);
  CHECK(normal_subgroups(preset("klein4")).size() == 5);
  // Q8: 1, <-1>, <i>, <j>, <k>, Q8.
  CHECK(normal_subgroups(preset("quaternion8")).size() == 6);

  for (const auto& n : normal_subgroups(preset("dihedral", {6}))) CHECK(n.is_normal());
}

TEST_CASE("direct indecomposability") {
  CHECK(is_directly_indecomposable(preset("cyclic", {4})));
  CHECK_FALSE(is_directly_indecomposable(preset("cyclic", {6})));
  CHECK(is_directly_indecomposable(preset("symmetric", {3})));
  CHECK(is_directly_indecomposable(preset("quaternion8")));
  CHECK_FALSE(is_directly_indecomposable(preset("klein4")));
  CHECK(is_directly_indecomposable(preset("cyclic", {1})));
}

TEST_CASE("subgroup_as_group reindexes faithfully") {
  GroupPtr s3 = preset("symmetric", {3});
  auto [a3, incl] = subgroup_as_group(Subgroup(s3, {0, 3, 4}));
  CHECK(a3->order() == 3);
  CHECK(a3->is_abelian());
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 3; ++y)
      CHECK(incl.map[a3->mul(x, y)] == s3->mul(incl.map[x], incl.map[y]));
}

TEST_CASE("isomorphism testing") {
  CHECK(are_isomorphic(preset("symmetric", {3}), preset("dihedral", {3})));
  CHECK_FALSE(are_isomorphic(preset("cyclic", {4}), preset("klein4")));
  CHECK_FALSE(are_isomorphic(preset("quaternion8"), preset("dihedral", {4})));
  ProductGroup p = direct_product({preset("cyclic", {2}), preset("cyclic", {3})});
  CHECK(are_isomorphic(p.group, preset("cyclic", {6})));
}

TEST_CASE("direct factors") {
  GroupPtr z6 = preset("cyclic", {6});
  auto factors = direct_factors(z6);
  REQUIRE(factors.size() == 3);  // Z2, Z3, Z6 itself
  CHECK(factors[0].order() == 2);
  CHECK(factors[1].order() == 3);
  CHECK(factors[2].order() == 6);

  auto s3_factors = direct_factors(preset("symmetric", {3}));
  REQUIRE(s3_factors.size() == 1);
  CHECK(s3_factors[0].order() == 6);
}

TEST_CASE("aut matrix pattern") {
  GroupPtr s3 = preset("symmetric", {3});

  SUBCASE("single factor") {
    AutPatternReport r = aut_matrix_pattern_check({s3});
    CHECK(r.hypothesis.ok);
    CHECK(r.pattern_holds);
    CHECK(r.automorphism_count == 6);
    for (const auto& p : r.row_permutations) CHECK(p == Perm{0});
  }
  SUBCASE("S3 x S3") {
    AutPatternReport r = aut_matrix_pattern_check({s3, s3});
    CHECK(r.hypothesis.ok);
    CHECK(r.pattern_holds);
    CHECK(r.automorphism_count == 72);
    int diagonal = 0, crossed = 0;
    for (const auto& p : r.row_permutations) {
      if (p == Perm{0, 1}) ++diagonal;
      if (p == Perm{1, 0}) ++crossed;
    }
    CHECK(diagonal == 36);
    CHECK(crossed == 36);
  }
  SUBCASE("non-isomorphic factors stay diagonal") {
    AutPatternReport r = aut_matrix_pattern_check({s3, preset("symmetric", {4})});
    CHECK(r.hypothesis.ok);
    CHECK(r.pattern_holds);
    CHECK(r.automorphism_count == 144);
    for (const auto& p : r.row_permutations) CHECK(p == Perm{0, 1});
  }
  SUBCASE("hypothesis guards") {
    AutPatternReport r = aut_matrix_pattern_check({preset("cyclic", {4})});
    CHECK_FALSE(r.hypothesis.ok);
  }
}

TEST_CASE("pattern map respects composition") {
  GroupPtr s3 = preset("symmetric", {3});
  ProductGroup p = direct_product({s3, s3});
  auto auts = enumerate_automorphisms(p.group);
  AutPatternReport r = aut_matrix_pattern_check({s3, s3});
  REQUIRE(r.row_permutations.size() == auts.size());
  std::map<std::vector<Elem>, size_t> index;
  for (size_t i = 0; i < auts.size(); ++i) index[auts[i].map] = i;
  Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    size_t i = rng.below(auts.size());
    size_t j = rng.below(auts.size());
    size_t k = index.at(compose(auts[i], auts[j]).map);
    // to_matrix(f.g) = to_matrix(f) to_matrix(g) makes the nontrivial
    // column of row r equal to p_g[p_f[r]].
    CHECK(r.row_permutations[k] == perm_compose(r.row_permutations[j], r.row_permutations[i]));
  }
}

TEST_CASE("johnson decomposition") {
  GroupPtr s3 = preset("symmetric", {3});

  SUBCASE("base case r = 1") {
    JohnsonReport r = johnson_decomposition_check({s3}, {1});
    CHECK(r.hypothesis.ok);
    CHECK(r.computed_order == 6);
    CHECK(r.expected_order == 6);
    CHECK(r.order_match);
    CHECK(r.block_structure_holds);
  }
  SUBCASE("S3 squared") {
    JohnsonReport r = johnson_decomposition_check({s3}, {2});
    CHECK(r.hypothesis.ok);
    CHECK(r.computed_order == 72);
    CHECK(r.expected_order == 72);
    CHECK(r.order_match);
    CHECK(r.block_structure_holds);
  }
  SUBCASE("mixed distinct factors") {
    JohnsonReport r = johnson_decomposition_check({s3, preset("symmetric", {4})}, {1, 1});
    CHECK(r.hypothesis.ok);
    CHECK(r.expected_order == 144);
    CHECK(r.order_match);
    CHECK(r.block_structure_holds);
  }
  SUBCASE("isomorphic duplicates are rejected") {
    JohnsonReport r = johnson_decomposition_check({s3, preset("dihedral", {3})}, {1, 1});
    CHECK_FALSE(r.hypothesis.ok);
  }
  SUBCASE("A5 base case") {
    JohnsonReport r = johnson_decomposition_check({preset("alternating", {5})}, {1});
    CHECK(r.hypothesis.ok);
    CHECK(r.computed_order == 120);  // Aut(A5) = S5
    CHECK(r.order_match);
  }
}

TEST_CASE("normal subgroup enumeration respects the budget") {
  std::vector<GroupPtr> six(6, preset("cyclic", {2}));
  GroupPtr cube = direct_product(six).group;  // 64 conjugacy classes
  try {
    normal_subgroups(cube);
    FAIL("expected SearchBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchBudgetExceeded);
  }
}

TEST_CASE("characteristic factor") {
  GroupPtr s3 = preset("symmetric", {3});

  SUBCASE("S3 x Z4") {
    CharFactorReport r = characteristic_factor_check({s3}, preset("cyclic", {4}));
    CHECK(r.hypothesis.ok);
    CHECK(r.computed_order == 24);
    CHECK(r.expected_order == 24);
    CHECK(r.order_match);
    CHECK(r.h_preserved);
    CHECK(r.triangular_shape);
  }
  SUBCASE("trivial H") {
    CharFactorReport r = characteristic_factor_check({s3}, preset("cyclic", {1}));
    CHECK(r.hypothesis.ok);
    CHECK(r.h_preserved);
    CHECK(r.order_match);
  }
  SUBCASE("H with a factor isomorphic to G is rejected") {
    CharFactorReport r = characteristic_factor_check({s3}, preset("symmetric", {3}));
    CHECK_FALSE(r.hypothesis.ok);
    CharFactorReport r2 = characteristic_factor_check(
        {s3}, direct_product({preset("dihedral", {3}), preset("cyclic", {2})}).group);
    CHECK_FALSE(r2.hypothesis.ok);
  }
  SUBCASE("S3 x Q8") {
    CharFactorReport r = characteristic_factor_check({s3}, preset("quaternion8"));
    CHECK(r.hypothesis.ok);
    CHECK(r.order_match);
    CHECK(r.h_preserved);
    CHECK(r.triangular_shape);
  }
}

TEST_CASE("spectrum of centerless products") {
  GroupPtr s3 = preset("symmetric", {3});
  Spectrum three(std::vector<ExtNat>{ExtNat(3)});
  Spectrum three_nine(std::vector<ExtNat>{ExtNat(3), ExtNat(9)});

  CHECK(spectrum_of_centreless_product({s3}, {1}) == three);
  CHECK(spectrum_of_centreless_product({s3}, {2}) == three_nine);

  SUBCASE("formula matches brute force for S3 x S4") {
    GroupPtr s4 = preset("symmetric", {4});
    Spectrum formula = spectrum_of_centreless_product({s3, s4}, {1, 1});
    ProductGroup p = direct_product({s3, s4});
    CHECK(formula == reidemeister_spectrum(p.group));
  }
  SUBCASE("hypotheses enforced") {
    CHECK_THROWS_AS(spectrum_of_centreless_product({preset("cyclic", {4})}, {1}), Error);
  }
}
