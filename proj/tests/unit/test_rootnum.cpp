#include <doctest.h>

#include "twistgate/curve.hpp"
#include "twistgate/errors.hpp"
#include "twistgate/reduction.hpp"
#include "twistgate/rootnum.hpp"

using namespace twistgate;

namespace {

const WeierstrassModel& e15() { return CurveTable::bundled().at("15a1"); }
const WeierstrassModel& e21() { return CurveTable::bundled().at("21a1"); }

int product_of_ledger(const RootNumber& w) {
  int s = 1;
  for (const auto& f : w.local_factors()) s *= f.sign;
  return s;
}

}  // namespace

TEST_CASE("local root numbers of 15a1") {
  CHECK(local_root_number(e15(), Place::infinity()) == -1);
  const auto f3 = local_root_factor(e15(), Place::prime(3));
  CHECK(f3.sign == 1);
  CHECK(f3.rule == RootCase::NonsplitMult);
  const auto f5 = local_root_factor(e15(), Place::prime(5));
  CHECK(f5.sign == -1);
  CHECK(f5.rule == RootCase::SplitMult);
  CHECK(local_root_factor(e15(), Place::prime(7)).rule == RootCase::Good);
  CHECK(local_root_number(e15(), Place::prime(2)) == 1);
  CHECK_THROWS_AS(local_root_number(e15(), Place::prime(9)), DomainError);
}

TEST_CASE("global root numbers and their ledgers") {
  const RootNumber w15 = global_root_number(e15());
  CHECK(w15.value() == 1);
  REQUIRE(w15.local_factors().size() == 3);
  CHECK(w15.factor_at(Place::infinity())->sign == -1);
  CHECK(w15.factor_at(Place::prime(3))->rule == RootCase::NonsplitMult);
  CHECK(w15.factor_at(Place::prime(5))->rule == RootCase::SplitMult);
  CHECK(w15.factor_at(Place::prime(7)) == nullptr);
  CHECK(global_root_number(e21()).value() == 1);
  CHECK(product_of_ledger(global_root_number(e21())) == 1);
}

TEST_CASE("twist by 17") {
  const WeierstrassModel T = quadratic_twist(e15(), 17);
  const auto f = local_root_factor(T, Place::prime(17));
  CHECK(f.rule == RootCase::AddPotGood);
  CHECK(f.sign == 1);
  CHECK(global_root_number(T).value() == 1);
  CHECK(twist_root_number_formula(e15(), 17) == 1);
}

TEST_CASE("additive potentially good sign at p | d is (-1)^floor(p/2)") {
  for (const auto p : primes_up_to(150)) {
    if (p < 7) continue;
    for (const auto* E : {&e15(), &e21()}) {
      if (p == 7 && E == &e21()) continue;
      const auto f = local_root_factor(quadratic_twist(*E, p), Place::prime(p));
      CHECK(f.rule == RootCase::AddPotGood);
      CHECK(f.sign == ((p / 2) % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("additive potentially multiplicative sign is (-1/p)") {
  // twisting by -3 or 5 makes the multiplicative prime additive
  const auto f3 = local_root_factor(quadratic_twist(e15(), -3), Place::prime(3));
  CHECK(f3.rule == RootCase::AddPotMult);
  CHECK(f3.sign == -1);
  const auto f5 = local_root_factor(quadratic_twist(e15(), 5), Place::prime(5));
  CHECK(f5.rule == RootCase::AddPotMult);
  CHECK(f5.sign == 1);
  const auto f7 = local_root_factor(quadratic_twist(e21(), -7), Place::prime(7));
  CHECK(f7.rule == RootCase::AddPotMult);
  CHECK(f7.sign == -1);
}

TEST_CASE("unsupported places") {
  // additive at 2
  CHECK_THROWS_AS(global_root_number(WeierstrassModel{0, 0, 0, -1, 0}), UnsupportedPlaceError);
  CHECK_THROWS_AS(global_root_number(quadratic_twist(e15(), 3)), UnsupportedPlaceError);
}

TEST_CASE("twist formula") {
  CHECK(twist_root_number_formula(e15(), 1) == 1);
  CHECK(twist_root_number_formula(e15(), 13) == -1);
  CHECK(twist_root_number_formula(e21(), 65) == jacobi(65, 21) * global_root_number(e21()).value());
  CHECK(twist_root_number_formula(e21(), 65) == global_root_number(quadratic_twist(e21(), 65)).value());
  CHECK_THROWS_AS(twist_root_number_formula(e15(), 3), HypothesisViolationError);
  CHECK_THROWS_AS(twist_root_number_formula(e15(), 7), HypothesisViolationError);
  CHECK_THROWS_AS(twist_root_number_formula(e15(), -3), HypothesisViolationError);
  CHECK_THROWS_AS(twist_root_number_formula(e15(), 45), HypothesisViolationError);
  CHECK_THROWS_AS(twist_root_number_formula(quadratic_twist(e15(), 17), 13), HypothesisViolationError);
  CHECK_THROWS_AS(twist_root_number_formula(WeierstrassModel{0, 0, 0, -1, 0}, 5), HypothesisViolationError);
}

TEST_CASE("formula equals the local product for d <= 300") {
  for (const auto* E : {&e15(), &e21()}) {
    const Integer N = conductor(*E);
    for (long d = 1; d <= 300; d += 4) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), Integer{d}.get_mpz_t(), N.get_mpz_t());
      if (g != 1 || !is_squarefree(d)) continue;
      const RootNumber w = global_root_number(quadratic_twist(*E, d));
      CHECK(w.value() == product_of_ledger(w));
      CHECK(w.value() == twist_root_number_formula(*E, d));
    }
  }
}

TEST_CASE("rule names") {
  CHECK(to_string(RootCase::SplitMult) == "split-mult");
  CHECK(rule_text(RootCase::Archimedean) == "real place => -1");
  CHECK(Place::infinity().to_string() == "inf");
  CHECK(Place::prime(5).to_string() == "5");
}
