#include <doctest.h>

#include <algorithm>

#include "twconj/rng.hpp"
#include "twconj/spectra.hpp"

using namespace twconj;

namespace {

Spectrum spec(std::initializer_list<std::uint64_t> values) {
  std::vector<ExtNat> v;
  for (auto x : values) v.emplace_back(x);
  return Spectrum(std::move(v));
}

Spectrum with_inf(std::initializer_list<std::uint64_t> values) {
  std::vector<ExtNat> v;
  for (auto x : values) v.emplace_back(x);
  v.push_back(ExtNat::infinity());
  return Spectrum(std::move(v));
}

}  // namespace

TEST_CASE("ExtNat arithmetic") {
  CHECK(ExtNat(3) * ExtNat(4) == ExtNat(12));
  CHECK(ExtNat(3) + ExtNat(4) == ExtNat(7));
  CHECK((ExtNat(5) * ExtNat::infinity()).is_infinite());
  CHECK((ExtNat(0) * ExtNat::infinity()).is_infinite());
  CHECK((ExtNat::infinity() * ExtNat(0)).is_infinite());
  CHECK((ExtNat::infinity() + ExtNat(1)).is_infinite());
  CHECK(ExtNat(2) < ExtNat::infinity());
  CHECK_FALSE(ExtNat::infinity() < ExtNat(1000));
  CHECK(ExtNat::infinity().str() == "inf");
  CHECK(ExtNat(7).str() == "7");
}

TEST_CASE("spectrum ordering puts infinity last") {
  Spectrum s = with_inf({9, 1, 3});
  CHECK(s.str() == "{1, 3, 9, inf}");
}

TEST_CASE("spectrum products") {
  CHECK(spectrum_product({spec({1}), spec({5})}) == spec({5}));
  CHECK(spectrum_product({spec({1, 3}), spec({1, 3})}) == spec({1, 3, 9}));
  CHECK(spectrum_product({spec({2, 4}), with_inf({})}) ==
        Spectrum(std::vector<ExtNat>{ExtNat::infinity()}));
  CHECK(spectrum_product({}) == spec({1}));

  SUBCASE("associative, commutative, {1} neutral") {
    Spectrum a = spec({1, 2});
    Spectrum b = spec({3, 5});
    Spectrum c = with_inf({2});
    CHECK(spectrum_product({a, b}) == spectrum_product({b, a}));
    CHECK(spectrum_product({spectrum_product({a, b}), c}) ==
          spectrum_product({a, spectrum_product({b, c})}));
    CHECK(spectrum_product({a, spec({1})}) == a);
  }
}

TEST_CASE("n-fold unions") {
  CHECK(nfold_union(spec({3}), 2) == spec({3, 9}));
  CHECK(nfold_union(spec({1, 3}), 2) == spec({1, 3, 9}));
  CHECK(nfold_union(with_inf({}), 5) == with_inf({}));
  CHECK(nfold_union(spec({2}), 1) == spec({2}));
  CHECK_THROWS_AS(nfold_union(spec({2}), 0), Error);
}

TEST_CASE("infinity absorbs through any product position") {
  Spectrum m = with_inf({2});
  Spectrum plain = spec({3, 4});
  for (const auto& sets : {std::vector<Spectrum>{m, plain}, std::vector<Spectrum>{plain, m}}) {
    Spectrum result = spectrum_product(sets);
    CHECK(result.contains(ExtNat::infinity()));
  }
  CHECK(spectrum_product({with_inf({1}), spec({2})}) == with_inf({2}));
}

TEST_CASE("expression trees evaluate order-independently") {
  std::vector<Spectrum> leaves = {spec({1, 2}), spec({3}), with_inf({2}), spec({1, 5})};
  std::vector<SpectrumExpr> exprs;
  for (const auto& s : leaves) exprs.push_back(SpectrumExpr::lit(s));
  Spectrum reference = SpectrumExpr::product(exprs).eval();
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    for (size_t i = exprs.size(); i > 1; --i)
      std::swap(exprs[i - 1], exprs[rng.below(i)]);
    CHECK(SpectrumExpr::product(exprs).eval() == reference);
  }
  CHECK(SpectrumExpr::nfold_union_product(SpectrumExpr::lit(spec({3})), 2).eval() ==
        spec({3, 9}));
}

TEST_CASE("product containment reports") {
  SUBCASE("Z2 x Z3") {
    ContainmentReport r = check_product_containment({preset("cyclic", {2}), preset("cyclic", {3})});
    CHECK(r.product_of_spectra == spec({2, 6}));
    CHECK(r.product_spectrum == spec({2, 6}));
    CHECK(r.contained);
    CHECK(r.equal);
  }
  SUBCASE("S3 x S3") {
    ContainmentReport r = check_product_containment(
        {preset("symmetric", {3}), preset("symmetric", {3})});
    CHECK(r.product_of_spectra == spec({9}));
    CHECK(r.product_spectrum == spec({3, 9}));
    CHECK(r.contained);
    CHECK_FALSE(r.equal);
  }
  SUBCASE("trivial x G") {
    ContainmentReport r = check_product_containment(
        {preset("cyclic", {1}), preset("symmetric", {3})});
    CHECK(r.product_of_spectra == spec({3}));
    CHECK(r.contained);
    CHECK(r.equal);
  }
}

TEST_CASE("wreath spectrum equality reports") {
  SUBCASE("S3 squared reaches equality") {
    WreathSpectrumReport r = check_wreath_spectrum_equality(preset("symmetric", {3}), 2);
    CHECK(r.aut_power_order == 72);
    CHECK(r.wreath_order == 72);
    CHECK(r.order_match);
    CHECK(r.all_in_wreath_image);
    CHECK(r.equality_case);
    CHECK(r.spectra_equal);
    CHECK(r.brute == spec({3, 9}));
  }
  SUBCASE("Z3 squared has extra automorphisms") {
    WreathSpectrumReport r = check_wreath_spectrum_equality(preset("cyclic", {3}), 2);
    CHECK(r.aut_power_order == 48);  // GL(2, 3)
    CHECK(r.wreath_order == 8);
    CHECK_FALSE(r.equality_case);
    CHECK(r.brute.contains_all(r.formula));
  }
  SUBCASE("trivial group") {
    WreathSpectrumReport r = check_wreath_spectrum_equality(preset("cyclic", {1}), 3);
    CHECK(r.equality_case);
    CHECK(r.brute == spec({1}));
    CHECK(r.spectra_equal);
  }
}
