#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace twistgate {

using Integer = mpz_class;
using Rational = mpq_class;

/// Trial division runs over every prime up to this bound.
inline constexpr std::uint32_t kTrialDivisionLimit = 1'000'000;

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
};

/// Prime decomposition of a positive integer, factors sorted by prime.
struct Factorization {
  Integer value;
  std::vector<PrimePower> factors;

  Integer product() const;
};

/// Primes up to kTrialDivisionLimit, computed once.
const std::vector<std::uint32_t>& small_primes();

std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// Deterministic Miller-Rabin below 3.3e24, BPSW-strength probable prime above.
bool is_prime(const Integer& n);

/// Factors n >= 1 by trial division. A leftover cofactor above 10^12 is
/// accepted only if it is prime; otherwise CompositeResidueError.
Factorization factor(const Integer& n);

/// sign(n) times the product of the primes dividing n to an odd power.
Integer squarefree_part(const Integer& n);
bool is_squarefree(const Integer& n);

/// Jacobi symbol (a/n) for odd n >= 1. Returns 0 when gcd(a, n) > 1.
int jacobi(const Integer& a, const Integer& n);

/// p-adic valuation; ZeroInputError on zero.
int valuation(const Integer& n, const Integer& p);
int valuation(const Rational& x, const Integer& p);

/// Reduces n into [0, m) for a positive machine modulus.
std::int64_t mod_small(const Integer& n, std::int64_t m);

}  // namespace twistgate
