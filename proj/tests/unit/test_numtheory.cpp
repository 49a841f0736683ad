#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "twistgate/errors.hpp"
#include "twistgate/numtheory.hpp"

using namespace twistgate;

namespace {

// Legendre symbol by listing the squares mod p.
int legendre_by_squares(long a, long p) {
  std::set<long> squares;
  for (long x = 1; x < p; ++x) squares.insert(x * x % p);
  const long r = ((a % p) + p) % p;
  if (r == 0) return 0;
  return squares.count(r) ? 1 : -1;
}

bool naive_is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::map<long, unsigned> as_map(const Factorization& f) {
  std::map<long, unsigned> out;
  for (const auto& pe : f.factors) out[pe.prime.get_si()] = pe.exponent;
  return out;
}

}  // namespace

TEST_CASE("factor: fixed values") {
  CHECK(as_map(factor(50625)) == std::map<long, unsigned>{{3, 4}, {5, 4}});
  CHECK(as_map(factor(3969)) == std::map<long, unsigned>{{3, 4}, {7, 2}});
  CHECK(factor(1).factors.empty());
  CHECK(as_map(factor(15317)) == std::map<long, unsigned>{{17, 2}, {53, 1}});
  CHECK_THROWS_AS(factor(0), DomainError);
  CHECK_THROWS_AS(factor(-4), DomainError);
}

TEST_CASE("factor: product and primality of factors") {
  for (long n = 1; n <= 3000; ++n) {
    const auto f = factor(n);
    CHECK(f.product() == n);
    for (const auto& pe : f.factors) CHECK(is_prime(pe.prime));
  }
}

TEST_CASE("factor: large prime cofactor is accepted") {
  const Integer p{"1000000000000000003"};  // prime
  REQUIRE(is_prime(p));
  const auto f = factor(Integer{6} * p);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors.back().prime == p);
}

TEST_CASE("factor: composite cofactor beyond trial division is rejected") {
  const Integer q{"1000000000000000003"};
  CHECK_THROWS_AS(factor(q * q), CompositeResidueError);
}

TEST_CASE("is_prime agrees with trial division") {
  for (long n = -5; n < 20000; ++n) CHECK(is_prime(n) == naive_is_prime(n));
}

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(1) == 1);
  CHECK(squarefree_part(15317) == 53);
  CHECK(squarefree_part(-12) == -3);
  CHECK_THROWS_AS(squarefree_part(0), ZeroInputError);
  for (long n = 1; n <= 2000; ++n) {
    const Integer s = squarefree_part(n);
    CHECK(is_squarefree(s));
    const Integer q = Integer{n} / s;
    CHECK(q * s == n);
    CHECK(mpz_perfect_square_p(q.get_mpz_t()) != 0);
    CHECK(squarefree_part(-n) == -s);
  }
}

TEST_CASE("jacobi: fixed values") {
  CHECK(jacobi(1, 15) == 1);
  CHECK(jacobi(17, 15) == 1);
  CHECK(jacobi(13, 15) == -1);
  CHECK(jacobi(65, 21) == -1);
  CHECK(jacobi(6, 15) == 0);
  CHECK_THROWS_AS(jacobi(3, 8), EvenModulusError);
  CHECK_THROWS_AS(jacobi(3, -5), DomainError);
}

TEST_CASE("jacobi: Legendre symbol matches the list of squares") {
  for (long p = 3; p <= 97; p += 2) {
    if (!naive_is_prime(p)) continue;
    for (long a = -2 * p; a <= 2 * p; ++a) CHECK(jacobi(a, p) == legendre_by_squares(a, p));
  }
}

TEST_CASE("jacobi: multiplicative in both arguments") {
  for (long n = 1; n <= 199; n += 2) {
    for (long a = -30; a <= 30; ++a)
      for (long b = 1; b <= 30; ++b) CHECK(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
    for (long m = 1; m <= 199; m += 2)
      for (long a : {-7L, -1L, 2L, 5L, 17L, 60L}) CHECK(jacobi(a, m * n) == jacobi(a, m) * jacobi(a, n));
  }
}

TEST_CASE("jacobi: reciprocity for odd positive pairs") {
  for (long m = 1; m <= 199; m += 2)
    for (long n = 1; n <= 199; n += 2) {
      if (std::gcd(m, n) != 1) continue;
      const int sign = ((m - 1) / 2 * ((n - 1) / 2)) % 2 ? -1 : 1;
      CHECK(jacobi(m, n) * jacobi(n, m) == sign);
    }
}

TEST_CASE("valuation") {
  CHECK(valuation(Integer{50625}, 3) == 4);
  CHECK(valuation(Integer{1}, 7) == 0);
  CHECK(valuation(Rational{111284641, 50625}, 5) == -4);
  CHECK(valuation(Rational{111284641, 50625}, 13) == 3);
  CHECK_THROWS_AS(valuation(Integer{0}, 3), ZeroInputError);
  for (long a = 1; a <= 500; ++a)
    for (long b = 1; b <= 50; ++b)
      for (long p : {2L, 3L, 5L, 7L}) CHECK(valuation(Integer{a * b}, p) == valuation(Integer{a}, p) + valuation(Integer{b}, p));
}

TEST_CASE("primes_up_to and mod_small") {
  const auto ps = primes_up_to(100);
  CHECK(ps.size() == 25);
  CHECK(ps.front() == 2);
  CHECK(ps.back() == 97);
  CHECK(primes_up_to(1).empty());
  CHECK(mod_small(-7, 5) == 3);
  CHECK(mod_small(Integer{"123456789012345678901"}, 1000) == 901);
}
