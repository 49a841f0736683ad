#include "twistgate/numtheory.hpp"

#include <array>
#include <string>

#include "twistgate/errors.hpp"

namespace twistgate {
namespace {

const Integer kCofactorBound{"1000000000000"};
const Integer kDeterministicMillerRabinBound{"3317044064679887385961981"};

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned s, unsigned long base) {
  Integer a = base;
  if (a % n == 0) return true;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer minus_one = n - 1;
  if (x == 1 || x == minus_one) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == minus_one) return true;
  }
  return false;
}

}  // namespace

Integer Factorization::product() const {
  Integer result = 1;
  for (const auto& [p, e] : factors) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    result *= pe;
  }
  return result;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out;
    std::vector<bool> composite(kTrialDivisionLimit + 1, false);
    for (std::uint32_t i = 2; i <= kTrialDivisionLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialDivisionLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned long, 13> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (auto b : kBases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  }
  if (n >= kDeterministicMillerRabinBound) return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;

  Integer d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (auto b : kBases)
    if (!miller_rabin_round(n, d, s, b)) return false;
  return true;
}

Factorization factor(const Integer& n) {
  if (n < 1) throw DomainError("factor: expected a positive integer, got " + n.get_str());
  Factorization out{n, {}};
  Integer rest = n;
  for (std::uint32_t p : small_primes()) {
    if (rest == 1) break;
    if (Integer{p} * p > rest) break;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    out.factors.push_back({Integer{p}, e});
  }
  if (rest > 1) {
    // Anything left below 10^12 has no factor up to 10^6, hence is prime.
    if (rest > kCofactorBound && !is_prime(rest))
      throw CompositeResidueError("factor: composite cofactor " + rest.get_str() +
                                  " has no prime factor below 10^6");
    out.factors.push_back({rest, 1});
  }
  return out;
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) throw ZeroInputError("squarefree_part: zero has no squarefree part");
  const Factorization f = factor(abs(n));
  Integer out = sgn(n);
  for (const auto& [p, e] : f.factors)
    if (e % 2 == 1) out *= p;
  return out;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  for (const auto& pe : factor(abs(n)).factors)
    if (pe.exponent > 1) return false;
  return true;
}

int jacobi(const Integer& a_in, const Integer& n_in) {
  if (n_in < 1) throw DomainError("jacobi: modulus must be positive, got " + n_in.get_str());
  if (mpz_even_p(n_in.get_mpz_t())) throw EvenModulusError("jacobi: even modulus " + n_in.get_str());

  Integer n = n_in;
  Integer a;
  mpz_fdiv_r(a.get_mpz_t(), a_in.get_mpz_t(), n.get_mpz_t());
  int t = 1;
  while (a != 0) {
    while (mpz_even_p(a.get_mpz_t())) {
      a >>= 1;
      const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (r == 3 || r == 5) t = -t;
    }
    swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) t = -t;
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  }
  return n == 1 ? t : 0;
}

int valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw ZeroInputError("valuation: zero has infinite valuation");
  if (p < 2) throw DomainError("valuation: invalid prime " + p.get_str());
  Integer rest;
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

int valuation(const Rational& x, const Integer& p) {
  if (x == 0) throw ZeroInputError("valuation: zero has infinite valuation");
  return valuation(Integer{x.get_num()}, p) - valuation(Integer{x.get_den()}, p);
}

std::int64_t mod_small(const Integer& n, std::int64_t m) {
  return static_cast<std::int64_t>(mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(m)));
}

}  // namespace twistgate
