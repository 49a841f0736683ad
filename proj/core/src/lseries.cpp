#include "twistgate/lseries.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "twistgate/errors.hpp"
#include "twistgate/reduction.hpp"
#include "twistgate/rootnum.hpp"

namespace twistgate {
namespace {

// Smallest-prime-factor sieve up to M.
std::vector<std::int32_t> smallest_prime_factors(std::int64_t M) {
  std::vector<std::int32_t> spf(static_cast<std::size_t>(M) + 1, 0);
  for (std::int64_t i = 2; i <= M; ++i) {
    if (spf[i] != 0) continue;
    for (std::int64_t j = i; j <= M; j += i)
      if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
  }
  return spf;
}

Real real_from(const Integer& n) { return Real{n.get_str()}; }

}  // namespace

std::string_view to_string(LVerdict v) {
  return v == LVerdict::NonzeroEvidence ? "NonzeroEvidence" : "Inconclusive";
}

std::vector<std::int64_t> dirichlet_coefficients(const WeierstrassModel& E, std::int64_t M) {
  if (M < 1) throw DomainError("dirichlet_coefficients: need M >= 1");
  if (M > kCoefficientBudget)
    throw TermBudgetError("requested " + std::to_string(M) + " coefficients, budget is " +
                          std::to_string(kCoefficientBudget));

  const Integer delta = discriminant(E);
  const auto spf = smallest_prime_factors(M);
  std::vector<std::int64_t> a(static_cast<std::size_t>(M) + 1, 0);
  std::vector<bool> good(static_cast<std::size_t>(M) + 1, true);
  a[1] = 1;

  for (std::int64_t n = 2; n <= M; ++n) {
    const std::int64_t p = spf[n];
    std::int64_t m = n;
    std::int64_t pk = 1;
    while (m % p == 0) {
      m /= p;
      pk *= p;
    }
    if (m != 1) {
      a[n] = a[pk] * a[m];
    } else if (pk == p) {
      if (mpz_divisible_ui_p(delta.get_mpz_t(), static_cast<unsigned long>(p))) {
        const ReductionData red = local_reduction(E, p);
        a[p] = red.a_p;
        good[p] = red.kind == ReductionKind::Good;
      } else {
        a[p] = p + 1 - count_points(E, p);
      }
    } else if (good[p]) {
      a[n] = a[p] * a[pk / p] - p * a[pk / p / p];
    } else {
      a[n] = a[p] * a[pk / p];
    }
  }
  return a;
}

std::int64_t default_term_count(const Integer& conductor, double split) {
  const double stretch = std::max(split, 1.0 / split);
  const double root_n = std::sqrt(conductor.get_d());
  return std::max<std::int64_t>(1000, static_cast<std::int64_t>(std::ceil(10.0 * stretch * root_n)));
}

LValueEstimate l_value_at_1(const WeierstrassModel& E, std::int64_t M, const LValueOptions& options) {
  if (!(options.split > 0.0)) throw DomainError("l_value_at_1: split point must be positive");
  if (!(options.margin_factor > 0.0)) throw DomainError("l_value_at_1: margin factor must be positive");

  LValueEstimate est;
  est.conductor = conductor(E);
  est.root_number = options.root_number ? *options.root_number : global_root_number(E).value();
  est.split = options.split;
  est.margin_factor = options.margin_factor;
  est.terms_used = M > 0 ? M : default_term_count(est.conductor, options.split);
  if (est.terms_used > kCoefficientBudget)
    throw TermBudgetError("l_value_at_1 needs " + std::to_string(est.terms_used) + " terms, budget is " +
                          std::to_string(kCoefficientBudget));

  const auto a = dirichlet_coefficients(E, est.terms_used);

  const Real t{options.split};
  const Real c = 2 * boost::math::constants::pi<Real>() / sqrt(real_from(est.conductor));
  const Real q_near = exp(-c * t);
  const Real q_far = exp(-c / t);
  const int w = est.root_number;

  Real sum = 0;
  Real power_near = 1;
  Real power_far = 1;
  for (std::int64_t n = 1; n <= est.terms_used; ++n) {
    power_near *= q_near;
    power_far *= q_far;
    if (a[n] == 0) continue;
    const Real weight = w == 1 ? Real{power_near + power_far} : Real{power_near - power_far};
    sum += Real{a[n]} * weight / n;
  }
  est.value = sum;

  // |a_n / n| <= d(n) / sqrt(n) <= 2, then a geometric majorant per exponential.
  const Real tail = 2 * (power_near * q_near / (1 - q_near) + power_far * q_far / (1 - q_far));
  const Real rounding = Real{est.terms_used} * pow(Real{10}, -static_cast<int>(kWorkingDigits) + 5);
  est.tail_bound = tail + rounding;

  est.verdict = abs(est.value) > Real{options.margin_factor} * est.tail_bound ? LVerdict::NonzeroEvidence
                                                                                : LVerdict::Inconclusive;
  return est;
}

LValueEstimate l_value_with_retry(const WeierstrassModel& E, std::int64_t M, const LValueOptions& options) {
  LValueEstimate est = l_value_at_1(E, M, options);
  if (est.verdict == LVerdict::Inconclusive && 4 * est.terms_used <= kCoefficientBudget) {
    LValueOptions again = options;
    again.root_number = est.root_number;
    est = l_value_at_1(E, 4 * est.terms_used, again);
    est.retried = true;
  }
  return est;
}

std::string format_real(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << std::scientific << x;
  return os.str();
}

}  // namespace twistgate
