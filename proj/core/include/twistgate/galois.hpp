#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "twistgate/curve.hpp"

namespace twistgate {

/// Hypotheses of Serre's surjectivity criterion for the mod-ell representation,
/// in the form used for the level-15 and level-21 curves: ell must not divide
/// the exponent of any prime in the denominator of j, nor the point count at
/// an auxiliary good prime.
struct JExponentCheck {
  Integer prime;
  int exponent = 0;  // v_q(j) < 0
  bool passed = false;
};

struct AuxPrimeCheck {
  std::int64_t prime = 0;
  std::int64_t points = 0;
  bool passed = false;
};

struct SurjectivityReport {
  std::int64_t ell = 0;
  std::vector<JExponentCheck> j_exponent_checks;
  AuxPrimeCheck aux;
  /// Every listed check passed and at least one j-exponent check exists.
  bool overall = false;
};

inline constexpr std::string_view kSurjectivityVerdict =
    "Serre criterion hypotheses verified; surjectivity of the mod-ell representation follows from Serre's criterion";

SurjectivityReport serre_check(const WeierstrassModel& E, std::int64_t ell, std::int64_t aux);

/// 7 for 15a1 and 5 for 21a1.
std::optional<std::int64_t> default_aux_prime(std::string_view label);

}  // namespace twistgate
