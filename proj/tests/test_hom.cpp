#include <doctest.h>

#include <algorithm>
#include <set>

#include "twconj/hom.hpp"
#include "twconj/rng.hpp"

using namespace twconj;

namespace {

// Full quadratic law check, independent of the generator-based validation.
bool full_law_holds(const GroupHom& f) {
  for (Elem x = 0; x < f.domain->order(); ++x)
    for (Elem y = 0; y < f.domain->order(); ++y)
      if (f.map[f.domain->mul(x, y)] != f.codomain->mul(f.map[x], f.map[y])) return false;
  return true;
}

}  // namespace

TEST_CASE("hom_from_generator_images") {
  GroupPtr z4 = preset("cyclic", {4});
  GroupPtr s3 = preset("symmetric", {3});

  GroupHom trivial = hom_from_generator_images(s3, z4, {0, 0});
  CHECK(trivial.is_trivial());

  GroupHom inv = hom_from_generator_images(z4, z4, {3});
  CHECK(inv.map == std::vector<Elem>{0, 3, 2, 1});
  CHECK(inv.is_bijective());

  // A transposition has order 2; element 1 of Z4 has order 4.
  try {
    hom_from_generator_images(s3, z4, {1, 0});
    FAIL("expected NotAHomomorphism");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAHomomorphism);
  }
}

TEST_CASE("enumerate_homs counts") {
  CHECK(enumerate_homs(preset("cyclic", {2}), preset("cyclic", {3})).size() == 1);
  CHECK(enumerate_homs(preset("symmetric", {3}), preset("cyclic", {4})).size() == 2);
  CHECK(enumerate_homs(preset("cyclic", {2}), preset("cyclic", {2})).size() == 2);
  CHECK(enumerate_homs(preset("cyclic", {6}), preset("cyclic", {6})).size() == 6);
}

TEST_CASE("enumerate_homs yields valid homs in lexicographic order exactly once") {
  GroupPtr s3 = preset("symmetric", {3});
  GroupPtr z6 = preset("cyclic", {6});
  for (const auto& [g, h] : {std::pair{s3, z6}, std::pair{z6, s3}, std::pair{s3, s3}}) {
    auto homs = enumerate_homs(g, h);
    std::set<std::vector<Elem>> unique;
    std::vector<std::vector<Elem>> gen_images;
    for (const auto& f : homs) {
      CHECK(full_law_holds(f));
      unique.insert(f.map);
      std::vector<Elem> imgs;
      for (Elem gen : g->generators()) imgs.push_back(f.map[gen]);
      gen_images.push_back(imgs);
    }
    CHECK(unique.size() == homs.size());
    CHECK(std::is_sorted(gen_images.begin(), gen_images.end()));
  }
}

TEST_CASE("search budget is enforced") {
  GroupPtr s3 = preset("symmetric", {3});
  try {
    enumerate_homs(s3, s3, 5);
    FAIL("expected SearchBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchBudgetExceeded);
  }
}

TEST_CASE("automorphism groups") {
  CHECK(enumerate_automorphisms(preset("cyclic", {2})).size() == 1);

  GroupPtr s3 = preset("symmetric", {3});
  auto auts = enumerate_automorphisms(s3);
  CHECK(auts.size() == 6);
  // All inner: every automorphism is some conjugation.
  for (const auto& aut : auts) {
    bool inner = false;
    for (Elem a = 0; a < s3->order() && !inner; ++a)
      inner = aut == inner_automorphism(s3, a);
    CHECK(inner);
  }

  CHECK(enumerate_automorphisms(preset("klein4")).size() == 6);
  CHECK(enumerate_automorphisms(preset("quaternion8")).size() == 24);
}

TEST_CASE("automorphisms form a group under composition") {
  for (const char* name : {"klein4", "quaternion8"}) {
    GroupPtr g = preset(name);
    auto auts = enumerate_automorphisms(g);
    std::set<std::vector<Elem>> maps;
    for (const auto& a : auts) maps.insert(a.map);
    CHECK(maps.count(identity_hom(g).map) == 1);
    for (const auto& a : auts) {
      CHECK(maps.count(inverse_automorphism(a).map) == 1);
      for (const auto& b : auts) CHECK(maps.count(compose(a, b).map) == 1);
    }
  }
}

TEST_CASE("compose") {
  GroupPtr z4 = preset("cyclic", {4});
  GroupPtr s3 = preset("symmetric", {3});
  GroupHom inv = hom_from_generator_images(z4, z4, {3});

  CHECK(compose(inv, identity_hom(z4)) == inv);
  CHECK(compose(inv, inv).is_identity());

  for (Elem g = 0; g < s3->order(); ++g)
    for (Elem h = 0; h < s3->order(); ++h)
      CHECK(compose(inner_automorphism(s3, g), inner_automorphism(s3, h)) ==
            inner_automorphism(s3, s3->mul(g, h)));

  try {
    compose(hom_from_generator_images(s3, z4, {0, 0}), inv);  // inner lands in Z4, outer needs S3
    FAIL("expected DomainMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainMismatch);
  }
}

TEST_CASE("pointwise_product") {
  GroupPtr z4 = preset("cyclic", {4});
  GroupHom inv = hom_from_generator_images(z4, z4, {3});

  CHECK(pointwise_product(inv, trivial_hom(z4, z4)) == inv);
  CHECK(pointwise_product(identity_hom(z4), inv).is_trivial());

  GroupPtr z2 = preset("cyclic", {2});
  ProductGroup v4 = direct_product({z2, z2});
  GroupHom left = hom_from_generator_images(z2, v4.group, {v4.embed[0].map[1]});
  GroupHom right = hom_from_generator_images(z2, v4.group, {v4.embed[1].map[1]});
  GroupHom diag = pointwise_product(left, right);
  CHECK(diag.map[1] == v4.group->mul(v4.embed[0].map[1], v4.embed[1].map[1]));

  GroupPtr s3 = preset("symmetric", {3});
  try {
    pointwise_product(identity_hom(s3), identity_hom(s3));
    FAIL("expected ImagesDoNotCommute");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ImagesDoNotCommute);
  }
}

TEST_CASE("inner automorphisms") {
  GroupPtr s3 = preset("symmetric", {3});
  CHECK(inner_automorphism(s3, 0).is_identity());
  GroupPtr z6 = preset("cyclic", {6});
  for (Elem a = 0; a < 6; ++a) CHECK(inner_automorphism(z6, a).is_identity());

  GroupHom tau = inner_automorphism(s3, 1);
  CHECK_FALSE(tau.is_identity());
  CHECK(compose(tau, tau).is_identity());
}

TEST_CASE("image and kernel") {
  GroupPtr s3 = preset("symmetric", {3});
  GroupPtr z2 = preset("cyclic", {2});

  CHECK(hom_image(identity_hom(s3)).order() == 6);
  CHECK(hom_kernel(identity_hom(s3)).order() == 1);
  CHECK(hom_image(trivial_hom(s3, z2)).order() == 1);
  CHECK(hom_kernel(trivial_hom(s3, z2)).order() == 6);

  GroupHom sign = hom_from_generator_images(s3, z2, {1, 0});
  CHECK(hom_image(sign).order() == 2);
  CHECK(hom_kernel(sign).elements() == std::vector<Elem>{0, 3, 4});

  for (const auto& f : enumerate_homs(s3, preset("cyclic", {4})))
    CHECK(hom_image(f).order() * hom_kernel(f).order() == s3->order());
}

TEST_CASE("normal images of product-automorphism components") {
  GroupPtr s3 = preset("symmetric", {3});
  GroupPtr z4 = preset("cyclic", {4});
  ProductGroup p = direct_product({s3, z4});
  auto auts = enumerate_automorphisms(p.group);
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    const GroupHom& aut = auts[rng.below(auts.size())];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        GroupHom comp = compose(p.project[i], compose(aut, p.embed[j]));
        CHECK(hom_image(comp).is_normal());
      }
  }
}

TEST_CASE("isomorphism existence") {
  CHECK(exists_isomorphism(preset("symmetric", {3}), preset("dihedral", {3})));
  CHECK_FALSE(exists_isomorphism(preset("cyclic", {4}), preset("klein4")));
  CHECK_FALSE(exists_isomorphism(preset("cyclic", {6}), preset("symmetric", {3})));
}
