#pragma once

#include <cstdint>
#include <string_view>

#include "twistgate/curve.hpp"

namespace twistgate {

/// Largest prime accepted by count_points.
inline constexpr std::int64_t kMaxCountPrime = 1'000'000;

enum class ReductionKind { Good, MultSplit, MultNonsplit, AddPotGood, AddPotMult };

std::string_view to_string(ReductionKind kind);
bool is_multiplicative(ReductionKind kind);
bool is_additive(ReductionKind kind);

/// Reduction of a p-minimal model at p. `points` counts every projective point
/// of the reduced equation, including a node or cusp and the point at infinity,
/// so p + 1 - points is a_p for all five kinds.
struct ReductionData {
  std::int64_t p = 0;
  ReductionKind kind = ReductionKind::Good;
  std::int64_t points = 0;
  std::int64_t a_p = 0;
};

/// |E(F_p)| of the reduced equation, by per-x quadratic solving.
std::int64_t count_points(const WeierstrassModel& E, std::int64_t p);

/// Classification at an odd prime. The model must be p-minimal: for p >= 5
/// call minimalize_at first; for p = 3 either v3(c4) < 4 or v3(delta) < 12.
ReductionData classify(const WeierstrassModel& E, std::int64_t p);

/// Classification at any prime, minimalizing first when p >= 5. At p = 2 the
/// model must satisfy v2(c4) < 4 or v2(delta) < 12.
ReductionData local_reduction(const WeierstrassModel& E, std::int64_t p);

enum class ReductionShape { Good, Multiplicative, Additive };

/// Good / multiplicative / additive from valuations only (no point count).
ReductionShape reduction_shape(const WeierstrassModel& E, const Integer& p);

/// Product of p over multiplicative primes and p^2 over additive primes >= 5.
/// Additive reduction at 2 or 3 raises UnsupportedReductionError.
Integer conductor(const WeierstrassModel& E);

}  // namespace twistgate
