#include <doctest.h>

#include "twistgate/curve.hpp"
#include "twistgate/errors.hpp"
#include "twistgate/galois.hpp"
#include "twistgate/reduction.hpp"

using namespace twistgate;

namespace {

const WeierstrassModel& e15() { return CurveTable::bundled().at("15a1"); }
const WeierstrassModel& e21() { return CurveTable::bundled().at("21a1"); }

}  // namespace

TEST_CASE("15a1, ell = 5, aux = 7") {
  const auto r = serre_check(e15(), 5, 7);
  CHECK(r.overall);
  REQUIRE(r.j_exponent_checks.size() == 2);
  CHECK(r.j_exponent_checks[0].prime == 3);
  CHECK(r.j_exponent_checks[0].exponent == -4);
  CHECK(r.j_exponent_checks[1].prime == 5);
  CHECK(r.j_exponent_checks[1].exponent == -4);
  CHECK(r.aux.points == 8);
  CHECK(r.aux.passed);
}

TEST_CASE("21a1, ell = 3, aux = 5") {
  const auto r = serre_check(e21(), 3, 5);
  CHECK(r.overall);
  REQUIRE(r.j_exponent_checks.size() == 2);
  CHECK(r.j_exponent_checks[0].exponent == -4);
  CHECK(r.j_exponent_checks[1].prime == 7);
  CHECK(r.j_exponent_checks[1].exponent == -2);
  CHECK(r.aux.points == 8);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(serre_check(e15(), 2, 7), UnsupportedPrimeError);
  CHECK_THROWS_AS(serre_check(e15(), 9, 7), UnsupportedPrimeError);
  CHECK_THROWS_AS(serre_check(e15(), 5, 3), BadAuxPrimeError);
  CHECK_THROWS_AS(serre_check(e15(), 5, 8), BadAuxPrimeError);
}

TEST_CASE("ell dividing a j-exponent fails the check") {
  const WeierstrassModel e11{0, -1, 1, -10, -20};  // v_11(j) = -5
  const auto r = serre_check(e11, 5, 7);
  CHECK_FALSE(r.overall);
  REQUIRE(r.j_exponent_checks.size() == 1);
  CHECK(r.j_exponent_checks[0].exponent == -5);
  CHECK_FALSE(r.j_exponent_checks[0].passed);
  CHECK(serre_check(e11, 3, 7).j_exponent_checks[0].passed);
}

TEST_CASE("ell dividing the auxiliary count fails the check") {
  std::size_t found = 0;
  for (const auto q : primes_up_to(200)) {
    if (q < 11) continue;
    const std::int64_t count = count_points(e15(), q);
    for (const auto ell : primes_up_to(count)) {
      if (ell < 3 || count % ell != 0) continue;
      const auto r = serre_check(e15(), ell, q);
      CHECK_FALSE(r.aux.passed);
      CHECK_FALSE(r.overall);
      ++found;
    }
  }
  CHECK(found > 0);
}

TEST_CASE("integral j has no j-exponent check and cannot pass") {
  const WeierstrassModel E{0, 0, 0, -1, 0};
  const auto r = serre_check(E, 3, 5);
  CHECK(r.j_exponent_checks.empty());
  CHECK_FALSE(r.overall);
}

TEST_CASE("default auxiliary primes") {
  CHECK(default_aux_prime("15a1") == 7);
  CHECK(default_aux_prime("21a1") == 5);
  CHECK_FALSE(default_aux_prime("11a1").has_value());
}
