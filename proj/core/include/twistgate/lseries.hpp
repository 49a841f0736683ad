#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "twistgate/curve.hpp"

namespace twistgate {

/// Working precision for L-value sums, in decimal digits.
inline constexpr unsigned kWorkingDigits = 60;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<kWorkingDigits>>;

/// Most Dirichlet coefficients a single evaluation may use.
inline constexpr std::int64_t kCoefficientBudget = 1'000'000;

/// a_n for 1 <= n <= M, stored at index n (index 0 holds 0).
std::vector<std::int64_t> dirichlet_coefficients(const WeierstrassModel& E, std::int64_t M);

enum class LVerdict { NonzeroEvidence, Inconclusive };
std::string_view to_string(LVerdict v);

struct LValueOptions {
  /// Evidence requires |value| > margin_factor * tail_bound.
  double margin_factor = 10.0;
  /// Split point t of the approximate functional equation
  ///   L(E,1) = sum a_n/n (exp(-2 pi n t / sqrt N) + w exp(-2 pi n / (t sqrt N))).
  /// With t = 1 and w = +1 this is 2 sum a_n/n exp(-2 pi n / sqrt N).
  double split = 1.0;
  /// Root number w; computed from local data when absent.
  std::optional<int> root_number;
};

/// Truncated series value with a rigorous bound on everything left out:
/// the tail (from |a_n| <= d(n) sqrt(n) <= 2n) plus a rounding allowance.
struct LValueEstimate {
  Real value;
  Real tail_bound;
  std::int64_t terms_used = 0;
  Integer conductor;
  int root_number = 1;
  double split = 1.0;
  double margin_factor = 10.0;
  LVerdict verdict = LVerdict::Inconclusive;
  bool retried = false;
};

/// max(1000, ceil(10 * max(t, 1/t) * sqrt(N))).
std::int64_t default_term_count(const Integer& conductor, double split = 1.0);

/// Evaluates the series with M terms (M = 0 picks default_term_count).
LValueEstimate l_value_at_1(const WeierstrassModel& E, std::int64_t M = 0, const LValueOptions& options = {});

/// As l_value_at_1, retrying once with 4x the terms when the first verdict is
/// Inconclusive and the budget allows.
LValueEstimate l_value_with_retry(const WeierstrassModel& E, std::int64_t M = 0, const LValueOptions& options = {});

/// Fixed-point decimal rendering with `digits` significant digits.
std::string format_real(const Real& x, int digits = 30);

}  // namespace twistgate
