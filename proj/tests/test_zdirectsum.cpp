#include <doctest.h>

#include "twconj/errors.hpp"
#include "twconj/rng.hpp"
#include "twconj/zdirectsum.hpp"

using namespace twconj;

namespace {

FinSuppIntSeq random_seq(Rng& rng, int support, int max_index) {
  FinSuppIntSeq s;
  for (int i = 0; i < support; ++i)
    s.set(1 + static_cast<int>(rng.below(max_index)),
          static_cast<std::int64_t>(rng.below(41)) - 20);
  return s;
}

}  // namespace

TEST_CASE("sequences store no zeros") {
  FinSuppIntSeq s;
  s.set(3, 5);
  s.set(3, 0);
  CHECK(s.is_zero());
  CHECK_THROWS_AS(s.set(0, 1), Error);
  CHECK(FinSuppIntSeq::basis(4).at(4) == 1);
  CHECK(FinSuppIntSeq::basis(4).max_index() == 4);
}

TEST_CASE("phi fixes e1") {
  CHECK(phi_example(FinSuppIntSeq()) == FinSuppIntSeq());
  CHECK(phi_example(FinSuppIntSeq::basis(1)) == FinSuppIntSeq::basis(1));
}

TEST_CASE("phi on e3 spreads to e1 + e2 + e3") {
  FinSuppIntSeq expected;
  expected.set(1, 1);
  expected.set(2, 1);
  expected.set(3, 1);
  CHECK(phi_example(FinSuppIntSeq::basis(3)) == expected);
}

TEST_CASE("psi inverts phi") {
  CHECK(psi_example(FinSuppIntSeq()) == FinSuppIntSeq());
  CHECK(psi_example(FinSuppIntSeq::basis(1)) == FinSuppIntSeq::basis(1));
  for (int k = 1; k <= 20; ++k) {
    FinSuppIntSeq e = FinSuppIntSeq::basis(k);
    CHECK(psi_example(phi_example(e)) == e);
    CHECK(phi_example(psi_example(e)) == e);
  }
  Rng rng(2024);
  for (int t = 0; t < 200; ++t) {
    FinSuppIntSeq a = random_seq(rng, 12, 30);
    CHECK(psi_example(phi_example(a)) == a);
    CHECK(phi_example(psi_example(a)) == a);
  }
}

TEST_CASE("solving phi - id") {
  CHECK(solve_phi_minus_id(FinSuppIntSeq()) == FinSuppIntSeq());

  FinSuppIntSeq t = FinSuppIntSeq::basis(2);
  FinSuppIntSeq a = solve_phi_minus_id(t);
  CHECK(a.at(3) == 1);
  CHECK(a.at(2) == -1);
  CHECK(a.at(1) == 0);
  CHECK(phi_minus_id(a) == t);

  Rng rng(99);
  for (int t_case = 0; t_case < 100; ++t_case) {
    FinSuppIntSeq target = random_seq(rng, 15, 40);
    CHECK(phi_minus_id(solve_phi_minus_id(target)) == target);
  }
}

TEST_CASE("phi minus id matches phi and the identity") {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    FinSuppIntSeq a = random_seq(rng, 10, 25);
    CHECK(phi_minus_id(a) == phi_example(a) - a);
  }
}
