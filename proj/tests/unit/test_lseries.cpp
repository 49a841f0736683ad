#include <doctest.h>

#include <cmath>
#include <numeric>

#include "twistgate/curve.hpp"
#include "twistgate/errors.hpp"
#include "twistgate/lseries.hpp"
#include "twistgate/reduction.hpp"

using namespace twistgate;

namespace {

const WeierstrassModel& e15() { return CurveTable::bundled().at("15a1"); }
const WeierstrassModel& e21() { return CurveTable::bundled().at("21a1"); }

// |x - y| <= tol
bool close(const Real& x, const Real& y, const char* tol) { return abs(x - y) <= Real{tol}; }

}  // namespace

TEST_CASE("first coefficients of 15a1") {
  const auto a = dirichlet_coefficients(e15(), 19);
  const std::vector<std::int64_t> expected{0, 1, -1, -1, -1, 1, 1, 0, 3, 1, -1, -4, 1, -2, 0, -1, -1, 2, -1, 4};
  CHECK(a == expected);
}

TEST_CASE("a_p matches point counts at good primes") {
  for (const auto* E : {&e15(), &e21()}) {
    const auto a = dirichlet_coefficients(*E, 2000);
    const Integer N = conductor(*E);
    for (const auto p : primes_up_to(2000)) {
      if (mpz_divisible_ui_p(N.get_mpz_t(), static_cast<unsigned long>(p))) continue;
      CHECK(a[p] == p + 1 - count_points(*E, p));
    }
    CHECK(a[3] == local_reduction(*E, 3).a_p);
  }
}

TEST_CASE("coefficients are multiplicative and bounded") {
  const auto a = dirichlet_coefficients(e15(), 300 * 300);
  for (std::int64_t m = 1; m <= 300; ++m)
    for (std::int64_t n = 1; n <= 300; ++n)
      if (std::gcd(m, n) == 1) CHECK(a[m * n] == a[m] * a[n]);
  for (std::int64_t n = 1; n < static_cast<std::int64_t>(a.size()); ++n) {
    std::int64_t divisors = 0;
    for (std::int64_t k = 1; k * k <= n; ++k)
      if (n % k == 0) divisors += (k * k == n) ? 1 : 2;
    CHECK(static_cast<double>(std::llabs(a[n])) <= static_cast<double>(divisors) * std::sqrt(static_cast<double>(n)) + 1e-9);
  }
}

TEST_CASE("coefficient budget") {
  CHECK_THROWS_AS(dirichlet_coefficients(e15(), 0), DomainError);
  CHECK_THROWS_AS(dirichlet_coefficients(e15(), kCoefficientBudget + 1), TermBudgetError);
  CHECK_THROWS_AS(l_value_at_1(e15(), kCoefficientBudget + 1), TermBudgetError);
}

TEST_CASE("frozen L-values") {
  const auto l15 = l_value_at_1(e15());
  CHECK(l15.verdict == LVerdict::NonzeroEvidence);
  CHECK(close(l15.value, Real{"0.35015076058315050579"}, "1e-19"));
  CHECK(l15.conductor == 15);
  CHECK(l15.root_number == 1);
  CHECK(l15.terms_used == 1000);

  const auto l21 = l_value_at_1(e21());
  CHECK(l21.verdict == LVerdict::NonzeroEvidence);
  CHECK(close(l21.value, Real{"0.45111540538849205559"}, "1e-19"));

  const auto t17 = l_value_with_retry(quadratic_twist(e15(), 17));
  CHECK(t17.verdict == LVerdict::NonzeroEvidence);
  CHECK(close(t17.value, Real{"1.35878453719970865126"}, "1e-19"));

  const auto t5 = l_value_with_retry(quadratic_twist(e21(), 5));
  CHECK(t5.verdict == LVerdict::NonzeroEvidence);
  CHECK(close(t5.value, Real{"1.61395953943366905813"}, "1e-19"));
}

TEST_CASE("doubling the number of terms changes the value by at most the tail bounds") {
  for (const long d : {1L, 17L, 61L, 13L}) {
    const WeierstrassModel E = d == 1 ? e15() : quadratic_twist(e15(), d);
    const auto once = l_value_at_1(E);
    const auto twice = l_value_at_1(E, 2 * once.terms_used);
    CHECK(abs(once.value - twice.value) <= once.tail_bound + twice.tail_bound);
  }
}

TEST_CASE("the value does not depend on the split point") {
  for (const long d : {1L, 17L, 29L}) {
    const WeierstrassModel E = d == 1 ? e15() : quadratic_twist(e15(), d);
    LValueOptions a;
    a.split = 1.0;
    LValueOptions b;
    b.split = 1.25;
    const auto x = l_value_at_1(E, 0, a);
    const auto y = l_value_at_1(E, 0, b);
    CHECK(abs(x.value - y.value) <= x.tail_bound + y.tail_bound);
  }
}

TEST_CASE("root number -1 forces a zero") {
  LValueOptions opts;
  opts.split = 1.3;
  const auto l = l_value_at_1(quadratic_twist(e15(), 13), 0, opts);
  CHECK(l.root_number == -1);
  CHECK(abs(l.value) <= 3 * l.tail_bound);
  CHECK(l.verdict == LVerdict::Inconclusive);

  // with the wrong sign the identity fails visibly
  opts.root_number = 1;
  const auto wrong = l_value_at_1(quadratic_twist(e15(), 13), 0, opts);
  CHECK(abs(wrong.value) > 1000 * wrong.tail_bound);
}

TEST_CASE("retry quadruples the terms when inconclusive") {
  LValueOptions opts;
  opts.split = 1.3;
  const auto E = quadratic_twist(e15(), 13);
  const auto first = l_value_at_1(E, 0, opts);
  const auto l = l_value_with_retry(E, 0, opts);
  CHECK(l.retried);
  CHECK(l.terms_used == 4 * first.terms_used);
  CHECK(l.verdict == LVerdict::Inconclusive);
  CHECK_FALSE(l_value_with_retry(e15()).retried);
}

TEST_CASE("default term count and options") {
  CHECK(default_term_count(15) == 1000);
  CHECK(default_term_count(Integer{4335}) == 1000);
  CHECK(default_term_count(Integer{15} * 901 * 901) == static_cast<std::int64_t>(std::ceil(10 * std::sqrt(15.0) * 901)));
  LValueOptions bad;
  bad.split = 0.0;
  CHECK_THROWS_AS(l_value_at_1(e15(), 0, bad), DomainError);
  CHECK(to_string(LVerdict::NonzeroEvidence) == "NonzeroEvidence");
  CHECK(format_real(Real{"0.5"}, 5).find("5.0000") != std::string::npos);
}
