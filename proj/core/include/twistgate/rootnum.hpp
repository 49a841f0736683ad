#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistgate/curve.hpp"

namespace twistgate {

/// Which local rule produced a local root number.
enum class RootCase { Archimedean, Good, SplitMult, NonsplitMult, AddPotMult, AddPotGood };

std::string_view to_string(RootCase c);
/// Human-readable statement of the rule, e.g. "split multiplicative => -1".
std::string_view rule_text(RootCase c);

/// The real place or a finite prime.
class Place {
 public:
  static Place infinity() { return Place{}; }
  static Place prime(Integer p) { return Place{std::move(p)}; }

  bool is_infinite() const { return !prime_.has_value(); }
  const Integer& p() const { return *prime_; }
  std::string to_string() const;

  friend bool operator==(const Place&, const Place&) = default;

 private:
  Place() = default;
  explicit Place(Integer p) : prime_(std::move(p)) {}
  std::optional<Integer> prime_;
};

struct LocalRootFactor {
  Place place;
  int sign = 1;
  RootCase rule = RootCase::Good;
};

/// Global root number with its ledger of local factors. The value is always
/// the product of the recorded signs.
class RootNumber {
 public:
  explicit RootNumber(std::vector<LocalRootFactor> factors);

  int value() const { return value_; }
  const std::vector<LocalRootFactor>& local_factors() const { return factors_; }
  const LocalRootFactor* factor_at(const Place& place) const;

 private:
  std::vector<LocalRootFactor> factors_;
  int value_ = 1;
};

/// Local root number with the rule that fired. Finite places are handled on
/// the p-minimal model (minimalize_at for p >= 5).
LocalRootFactor local_root_factor(const WeierstrassModel& E, const Place& place);
int local_root_number(const WeierstrassModel& E, const Place& place);

/// Product over infinity and every bad prime; good primes are omitted.
RootNumber global_root_number(const WeierstrassModel& E);

/// (d / N) * w(E) for semistable E with odd conductor N and squarefree
/// d > 0, d = 1 mod 4, gcd(d, N) = 1.
int twist_root_number_formula(const WeierstrassModel& E, const Integer& d);

}  // namespace twistgate
