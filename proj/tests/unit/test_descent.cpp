#include <doctest.h>

#include <algorithm>
#include <random>

#include "twistgate/curve.hpp"
#include "twistgate/descent.hpp"
#include "twistgate/errors.hpp"
#include "twistgate/quadratic_field.hpp"

using namespace twistgate;

namespace {

const WeierstrassModel& e15() { return CurveTable::bundled().at("15a1"); }

QuadElt random_elt(std::mt19937& rng, const Integer& d) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 12);
  Rational a{num(rng), den(rng)};
  Rational b{num(rng), den(rng)};
  a.canonicalize();
  b.canonicalize();
  return QuadElt{a, b, d};
}

ModMatrix matrix(std::size_t n, std::vector<std::uint32_t> entries) { return ModMatrix{n, std::move(entries)}; }

}  // namespace

TEST_CASE("QuadElt arithmetic") {
  const QuadElt x{1, 2, 5};
  const QuadElt y{Rational{1, 2}, -1, 5};
  CHECK(x * y == QuadElt{Rational{1, 2} - 10, Rational{-1} + 1, 5});
  CHECK(x.norm() == 1 - 20);
  CHECK(x.trace() == 2);
  CHECK(x * x.inverse() == QuadElt::rational(1, 5));
  CHECK_THROWS_AS(QuadElt(1, 1, 4), NotSquarefreeError);
  CHECK_THROWS_AS(QuadElt(1, 1, 1), NotSquarefreeError);
  CHECK_THROWS_AS(QuadElt::rational(0, 5).inverse(), ZeroInputError);
  CHECK_THROWS_AS(QuadElt(1, 1, 5) + QuadElt(1, 1, 13), DomainError);
  CHECK(QuadElt(0, 1, 5).is_pure_irrational());
  CHECK(QuadElt(3, 0, 5).is_rational());
}

TEST_CASE("conjugation is an involutive ring morphism") {
  std::mt19937 rng(1);
  for (const long dv : {-7L, -1L, 2L, 5L, 17L, 61L}) {
    const Integer d{dv};
    for (int i = 0; i < 200; ++i) {
      const QuadElt x = random_elt(rng, d);
      const QuadElt y = random_elt(rng, d);
      CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
      CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
      CHECK(x.conjugate().conjugate() == x);
      CHECK((x * y).norm() == x.norm() * y.norm());
      if (!(y == QuadElt::rational(0, d))) CHECK((x / y) * y == x);
    }
  }
}

TEST_CASE("quadratic point search") {
  const ShortForm E = short_form(e15());
  const auto points = quad_point_search(E, 17, 50);
  CHECK(points.size() == 3);  // the 2-torsion
  for (const auto& P : points) {
    CHECK(P.on_curve());
    CHECK(P.is_anti_invariant());
    CHECK(P.conjugate().x == P.negate().x);
    CHECK(P.conjugate().y == P.negate().y);
  }
  CHECK_THROWS_AS(quad_point_search(E, 4, 10), NotSquarefreeError);
  CHECK_THROWS_AS(quad_point_search(E, 17, 0), DomainError);
}

TEST_CASE("anti-invariant points with y != 0") {
  // y^2 = x^3 + 1 passes through (1, sqrt 2)
  const ShortForm E{0, 1};
  const auto points = quad_point_search(E, 2, 20);
  bool saw_nontorsion = false;
  for (const auto& P : points) {
    CHECK(P.on_curve());
    if (P.y.b() != 0) saw_nontorsion = true;
    const TwistImage img = twist_map(P, 2);
    REQUIRE(img.is_rational());
    const RationalPoint R = img.as_rational();
    CHECK(R.y * R.y == img.twist.evaluate(R.x));
  }
  CHECK(saw_nontorsion);
}

TEST_CASE("twist map") {
  const ShortForm E = short_form(e15());
  const Integer d{17};
  // 2-torsion goes to 2-torsion
  const auto torsion = quad_point_search(E, d, 50);
  for (const auto& P : torsion) {
    const TwistImage img = twist_map(P, d);
    CHECK(img.is_rational());
    CHECK(img.as_rational().y == 0);
    CHECK(img.as_rational().x == d * P.x.a());
    CHECK(img.twist == twist_short_form(E, d));
  }
  // rational points with y != 0 leave the rational points of the twist
  for (const auto& R : rational_point_search(E, 50)) {
    if (R.y == 0) continue;
    const QuadPoint P{QuadElt::rational(R.x, d), QuadElt::rational(R.y, d), E};
    const TwistImage img = twist_map(P, d);
    CHECK_FALSE(img.is_rational());
    CHECK(img.y.is_pure_irrational());
    CHECK_THROWS_AS(img.as_rational(), DomainError);
  }
  const QuadPoint off{QuadElt::rational(0, d), QuadElt::rational(0, d), E};
  CHECK_THROWS_AS(twist_map(off, d), NotOnCurveError);
}

TEST_CASE("anti-invariant points correspond to rational points of the twist") {
  const ShortForm E = short_form(e15());
  for (const long dv : {5L, 17L, 53L, 61L, 77L, 13L, 29L}) {
    const Integer d{dv};
    std::vector<RationalPoint> images;
    for (const auto& P : quad_point_search(E, d, 50)) images.push_back(twist_map(P, d).as_rational());
    auto direct = rational_point_search(twist_short_form(E, d), 50, d);
    const auto less = [](const RationalPoint& a, const RationalPoint& b) {
      return a.x != b.x ? a.x < b.x : a.y < b.y;
    };
    std::sort(images.begin(), images.end(), less);
    std::sort(direct.begin(), direct.end(), less);
    CHECK(images == direct);
  }
}

TEST_CASE("rational point search") {
  const ShortForm E = short_form(e15());
  CHECK(rational_point_search(E, 50).size() == 5);
  const auto pts = rational_point_search(E, 120);  // x = 101/12 needs the larger box
  CHECK(pts.size() == 7);  // E(Q) has order 8; infinity is not listed
  for (const auto& R : pts) CHECK(R.y * R.y == E.evaluate(R.x));
  CHECK_THROWS_AS(rational_point_search(E, 10, 0), ZeroInputError);
}

TEST_CASE("characters") {
  const auto chars = all_characters(2);
  REQUIRE(chars.size() == 4);
  CHECK(chars[0].is_trivial());
  CHECK(chars[1].signs == std::vector<int>{-1, 1});
  CHECK(chars[2].signs == std::vector<int>{1, -1});
  CHECK(chars[3].to_string() == "(-,-)");
  CHECK(chars[3].value_on(0b01) == -1);
  CHECK(chars[3].value_on(0b11) == 1);
  for (const auto& s : chars)
    for (std::uint32_t a = 0; a < 4; ++a)
      for (std::uint32_t b = 0; b < 4; ++b) CHECK(s.value_on(a ^ b) == s.value_on(a) * s.value_on(b));
}

TEST_CASE("signed module validation") {
  const ModMatrix id = matrix(2, {1, 0, 0, 1});
  const ModMatrix swap = matrix(2, {0, 1, 1, 0});
  const ModMatrix shear = matrix(2, {1, 1, 0, 1});
  const ModMatrix neg_first = matrix(2, {3, 0, 0, 1});
  CHECK_NOTHROW(SignedModule(1, 2, {id, swap}));
  CHECK_THROWS_AS(SignedModule(2, 2, {shear}), NonInvolutiveActionError);
  CHECK_THROWS_AS(SignedModule(2, 2, {swap, neg_first}), NonCommutingActionError);
  CHECK_THROWS_AS(SignedModule(9, 2, {id}), DomainError);
  CHECK_THROWS_AS(SignedModule(2, 3, {id}), DomainError);
}

TEST_CASE("sum lemma on (Z/2)^2 with identity and swap") {
  const SignedModule M(1, 2, {matrix(2, {1, 0, 0, 1}), matrix(2, {0, 1, 1, 0})});
  const auto cert = lemma_sum_check(M);
  CHECK(cert.passed);
  CHECK(cert.elements_checked == 4);
  REQUIRE(cert.decompositions.size() == 4);
  for (const auto& dec : cert.decompositions) CHECK(dec.components.size() == 4);
}

TEST_CASE("sum lemma certificates replayed independently") {
  for (unsigned k = 1; k <= 3; ++k)
    for (std::size_t n = 1; n <= 2; ++n)
      for (std::size_t r = 1; r <= 2; ++r)
        for (const auto& M : signed_module_family(k, n, r)) {
          const auto cert = lemma_sum_check(M);
          REQUIRE(cert.passed);
          REQUIRE(cert.elements_checked == M.size());
          for (const auto& dec : cert.decompositions) {
            ModuleElement total(n, 0);
            for (const auto& comp : dec.components) {
              total = M.add(total, comp.value);
              for (std::uint32_t mask = 0; mask < (1u << r); ++mask)
                CHECK(M.act(mask, comp.value) == M.scale(comp.character.value_on(mask), comp.value));
            }
            CHECK(total == M.scale(std::int64_t{1} << r, dec.element));
          }
        }
}

TEST_CASE("zero decomposes into zeros") {
  const SignedModule M(3, 2, {matrix(2, {0, 1, 1, 0})});
  const auto cert = lemma_sum_check(M);
  const auto& zero = cert.decompositions.front();
  CHECK(zero.element == ModuleElement{0, 0});
  for (const auto& comp : zero.components) CHECK(comp.value == ModuleElement{0, 0});
}
