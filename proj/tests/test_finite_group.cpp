#include <doctest.h>

#include <numeric>
#include <set>

#include "twconj/finite_group.hpp"
#include "twconj/hom.hpp"

using namespace twconj;

namespace {

std::vector<std::vector<Elem>> cyclic_table(int n) {
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

// Independent conjugacy oracle: pairwise scan, no orbit machinery.
int brute_class_count(const GroupPtr& g) {
  std::vector<int> cls(g->order(), -1);
  int count = 0;
  for (Elem x = 0; x < g->order(); ++x) {
    if (cls[x] != -1) continue;
    for (Elem y = 0; y < g->order(); ++y) {
      for (Elem a = 0; a < g->order(); ++a)
        if (g->conj(a, x) == y) {
          cls[y] = count;
          break;
        }
    }
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("from_cayley_table accepts the trivial group") {
  GroupPtr g = FiniteGroup::from_cayley_table({{0}});
  CHECK(g->order() == 1);
  CHECK(g->mul(0, 0) == 0);
  CHECK(g->inv(0) == 0);
}

TEST_CASE("from_cayley_table accepts Z2") {
  GroupPtr g = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}});
  CHECK(g->order() == 2);
  CHECK(g->element_order(1) == 2);
  CHECK(g->is_abelian());
}

TEST_CASE("from_cayley_table relabels the identity to index 0") {
  // Z3 written with identity at index 2.
  std::vector<std::vector<Elem>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  GroupPtr g = FiniteGroup::from_cayley_table(t);
  CHECK(g->mul(0, 1) == 1);
  CHECK(g->mul(1, 2) == 0);
  for (Elem x = 0; x < 3; ++x) CHECK(g->mul(0, x) == x);
}

TEST_CASE("from_cayley_table reports the first non-associative triple") {
  auto table = cyclic_table(6);
  table[2][2] = 5;  // was 4
  // Locate the violated triple exhaustively, independent of the library.
  int ex = -1, ey = -1, ez = -1;
  for (int x = 0; x < 6 && ex < 0; ++x)
    for (int y = 0; y < 6 && ex < 0; ++y)
      for (int z = 0; z < 6 && ex < 0; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]]) {
          ex = x;
          ey = y;
          ez = z;
        }
  REQUIRE(ex >= 0);
  try {
    FiniteGroup::from_cayley_table(table);
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAssociative);
    std::string expect = "(" + std::to_string(ex) + ", " + std::to_string(ey) + ", " +
                         std::to_string(ez) + ")";
    CHECK(std::string(e.what()).find(expect) != std::string::npos);
  }
}

TEST_CASE("from_cayley_table rejects out-of-range and identity-free tables") {
  try {
    FiniteGroup::from_cayley_table({{0, 1}, {1, 7}});
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotClosed);
  }
  try {
    // Left-zero semigroup: no identity.
    FiniteGroup::from_cayley_table({{0, 0}, {1, 1}});
    FAIL("expected NoIdentity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoIdentity);
  }
}

TEST_CASE("presets") {
  CHECK(preset("cyclic", {1})->order() == 1);

  GroupPtr s3 = preset("symmetric", {3});
  CHECK(s3->order() == 6);
  CHECK(brute_class_count(s3) == 3);
  CHECK(conjugacy_classes(s3).size() == 3);

  GroupPtr d4 = preset("dihedral", {4});
  CHECK(d4->order() == 8);
  // Brute center scan, independent of the center() implementation.
  int central = 0;
  for (Elem x = 0; x < 8; ++x) {
    bool c = true;
    for (Elem y = 0; y < 8; ++y)
      if (d4->mul(x, y) != d4->mul(y, x)) c = false;
    if (c) ++central;
  }
  CHECK(central == 2);
  CHECK(center(d4).order() == 2);

  CHECK(preset("quaternion8")->order() == 8);
  CHECK(preset("klein4")->order() == 4);
  CHECK(preset("alternating", {4})->order() == 12);
  CHECK(preset("alternating", {5})->order() == 60);

  CHECK_THROWS_AS(preset("frobenius", {20}), Error);
  try {
    preset("cyclic", {6000});
    FAIL("expected OrderCapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderCapExceeded);
  }
  CHECK(preset("cyclic", {6000}, 6000)->order() == 6000);
}

TEST_CASE("generators generate and words evaluate") {
  for (const auto& entry : catalog_groups(24)) {
    const auto& g = entry.group;
    CAPTURE(entry.name);
    std::set<Elem> closure{FiniteGroup::kIdentity};
    // Words: evaluating each element's word must reproduce it.
    for (Elem x = 0; x < g->order(); ++x) {
      Elem acc = FiniteGroup::kIdentity;
      for (int gi : g->words()[x]) acc = g->mul(acc, g->generators()[gi]);
      CHECK(acc == x);
      closure.insert(x);
    }
    CHECK(static_cast<int>(closure.size()) == g->order());
  }
}

TEST_CASE("direct products") {
  GroupPtr triv = preset("cyclic", {1});
  ProductGroup p1 = direct_product({triv});
  CHECK(p1.group->order() == 1);

  ProductGroup p6 = direct_product({preset("cyclic", {2}), preset("cyclic", {3})});
  CHECK(p6.group->order() == 6);
  CHECK(p6.group->is_abelian());

  GroupPtr s3 = preset("symmetric", {3});
  ProductGroup p36 = direct_product({s3, s3});
  CHECK(p36.group->order() == 36);
  CHECK(center(p36.group).order() == 1);

  SUBCASE("projections invert embeddings") {
    for (int i = 0; i < p36.arity(); ++i)
      for (Elem x = 0; x < s3->order(); ++x)
        CHECK(p36.project[i].map[p36.embed[i].map[x]] == x);
  }
  SUBCASE("embedded factors commute and meet trivially") {
    std::vector<Subgroup> parts;
    for (int i = 0; i < p36.arity(); ++i) parts.push_back(hom_image(p36.embed[i]));
    CHECK(internal_direct_product_check(p36.group, parts));
  }
  SUBCASE("order cap") {
    CHECK_THROWS_AS(direct_product({s3, s3}, 20), Error);
  }
}

TEST_CASE("center examples") {
  CHECK(center(preset("cyclic", {4})).order() == 4);
  CHECK(center(preset("symmetric", {3})).order() == 1);
  CHECK(center(preset("quaternion8")).order() == 2);
}

TEST_CASE("conjugacy class examples") {
  CHECK(conjugacy_classes(preset("cyclic", {1})).size() == 1);

  auto s3_classes = conjugacy_classes(preset("symmetric", {3}));
  std::multiset<size_t> sizes;
  for (const auto& c : s3_classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<size_t>{1, 2, 3});

  CHECK(conjugacy_classes(preset("cyclic", {7})).size() == 7);

  for (const auto& entry : catalog_groups(24)) {
    size_t total = 0;
    for (const auto& c : conjugacy_classes(entry.group)) total += c.size();
    CHECK(total == static_cast<size_t>(entry.group->order()));
  }
}

TEST_CASE("internal direct product check") {
  GroupPtr z6 = preset("cyclic", {6});
  Subgroup two(z6, {0, 3});
  Subgroup three(z6, {0, 2, 4});
  CHECK(internal_direct_product_check(z6, {two, three}));

  GroupPtr z4 = preset("cyclic", {4});
  Subgroup half(z4, {0, 2});
  CHECK_FALSE(internal_direct_product_check(z4, {half, half}));

  GroupPtr s3 = preset("symmetric", {3});
  Subgroup a3(s3, {0, 3, 4});
  Subgroup flip(s3, {0, 1});
  CHECK(a3.is_normal());
  CHECK_FALSE(flip.is_normal());
  CHECK_FALSE(internal_direct_product_check(s3, {a3, flip}));
}

TEST_CASE("subgroup orders divide the group order") {
  for (const auto& entry : catalog_groups(16)) {
    const auto& g = entry.group;
    CHECK(g->order() % center(g).order() == 0);
    for (Elem x = 0; x < g->order(); ++x) {
      Subgroup cyc = Subgroup::generated(g, {x});
      CHECK(g->order() % cyc.order() == 0);
    }
  }
}
