#include "twistgate/reduction.hpp"

#include <string>
#include <vector>

#include "twistgate/errors.hpp"

namespace twistgate {
namespace {

void require_countable_prime(std::int64_t p) {
  if (p > kMaxCountPrime)
    throw PrimeTooLargeError("point counting is limited to p <= 10^6, got " + std::to_string(p));
  if (p < 2 || !is_prime(Integer{static_cast<long>(p)}))
    throw DomainError(std::to_string(p) + " is not a prime");
}

std::int64_t count_points_mod_two(const WeierstrassModel& E) {
  const std::int64_t a1 = mod_small(E.a1(), 2), a2 = mod_small(E.a2(), 2), a3 = mod_small(E.a3(), 2),
                     a4 = mod_small(E.a4(), 2), a6 = mod_small(E.a6(), 2);
  std::int64_t count = 1;
  for (std::int64_t x = 0; x < 2; ++x)
    for (std::int64_t y = 0; y < 2; ++y)
      if ((y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6)) % 2 == 0) ++count;
  return count;
}

bool minimal_enough(const CurveInvariants& v, const Integer& p) {
  return (v.c4 != 0 && valuation(v.c4, p) < 4) || valuation(v.delta, p) < 12;
}

ReductionData classify_minimal(const WeierstrassModel& E, std::int64_t p) {
  const Integer pz{static_cast<long>(p)};
  const CurveInvariants v = invariants(E);
  ReductionData out;
  out.p = p;
  if (valuation(v.delta, pz) == 0) {
    out.points = count_points(E, p);
    out.a_p = p + 1 - out.points;
    out.kind = ReductionKind::Good;
    if (out.a_p * out.a_p > 4 * p)
      throw std::logic_error("Hasse bound violated at p = " + std::to_string(p) + " for " + E.to_string());
    return out;
  }
  if (v.c4 != 0 && valuation(v.c4, pz) == 0) {
    out.points = count_points(E, p);
    out.a_p = p + 1 - out.points;
    if (out.a_p == 1) {
      out.kind = ReductionKind::MultSplit;
    } else if (out.a_p == -1) {
      out.kind = ReductionKind::MultNonsplit;
    } else {
      throw std::logic_error("multiplicative reduction with p + 1 - #E = " + std::to_string(out.a_p));
    }
    return out;
  }
  out.kind = valuation(v.j, pz) < 0 ? ReductionKind::AddPotMult : ReductionKind::AddPotGood;
  out.points = p <= kMaxCountPrime ? count_points(E, p) : p + 1;
  out.a_p = p + 1 - out.points;
  if (out.a_p != 0) throw std::logic_error("additive reduction with p + 1 - #E = " + std::to_string(out.a_p));
  return out;
}

}  // namespace

std::string_view to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::Good: return "good";
    case ReductionKind::MultSplit: return "split multiplicative";
    case ReductionKind::MultNonsplit: return "nonsplit multiplicative";
    case ReductionKind::AddPotGood: return "additive, potentially good";
    case ReductionKind::AddPotMult: return "additive, potentially multiplicative";
  }
  return "?";
}

bool is_multiplicative(ReductionKind kind) {
  return kind == ReductionKind::MultSplit || kind == ReductionKind::MultNonsplit;
}

bool is_additive(ReductionKind kind) {
  return kind == ReductionKind::AddPotGood || kind == ReductionKind::AddPotMult;
}

std::int64_t count_points(const WeierstrassModel& E, std::int64_t p) {
  require_countable_prime(p);
  if (p == 2) return count_points_mod_two(E);

  // y^2 + (a1 x + a3) y = g(x)  <=>  (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6,
  // so each x contributes 1 + (disc(x) / p) values of y.
  const CurveInvariants v = invariants(E);
  const std::int64_t b2 = mod_small(v.b2, p), b4x2 = mod_small(2 * v.b4, p), b6 = mod_small(v.b6, p);

  // Squares mod p by adding successive odd numbers.
  std::vector<signed char> chi(static_cast<std::size_t>(p), -1);
  chi[0] = 0;
  std::int64_t square = 0;
  for (std::int64_t y = 1; y <= p / 2; ++y) {
    square += 2 * y - 1;
    if (square >= p) square -= p;
    chi[static_cast<std::size_t>(square)] = 1;
  }

  // f(x) = 4x^3 + b2 x^2 + 2 b4 x + b6 by forward differences; the third difference is 24.
  const auto reduce = [p](std::int64_t t) { return ((t % p) + p) % p; };
  std::int64_t f = b6;
  std::int64_t d1 = reduce(4 + b2 + b4x2);
  std::int64_t d2 = reduce(24 + 2 * b2);
  const std::int64_t d3 = reduce(24);

  std::int64_t count = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    count += 1 + chi[static_cast<std::size_t>(f)];
    f += d1;
    if (f >= p) f -= p;
    d1 += d2;
    if (d1 >= p) d1 -= p;
    d2 += d3;
    if (d2 >= p) d2 -= p;
  }
  return count;
}

ReductionData classify(const WeierstrassModel& E, std::int64_t p) {
  if (p == 2) throw UnsupportedPrimeError("classification at p = 2 is not supported");
  if (p < 2 || !is_prime(Integer{static_cast<long>(p)})) throw DomainError(std::to_string(p) + " is not a prime");
  if (!minimal_enough(invariants(E), Integer{static_cast<long>(p)}))
    throw NonMinimalModelError("model " + E.to_string() + " is not minimal at p = " + std::to_string(p) +
                               (p >= 5 ? " (call minimalize_at first)" : ""));
  return classify_minimal(E, p);
}

ReductionData local_reduction(const WeierstrassModel& E, std::int64_t p) {
  if (p >= 5) return classify(minimalize_at(E, p), p);
  if (p == 3) return classify(E, 3);
  if (p != 2) throw DomainError(std::to_string(p) + " is not a prime");
  if (!minimal_enough(invariants(E), Integer{2}))
    throw NonMinimalModelError("model " + E.to_string() + " fails the minimality bound at p = 2");
  return classify_minimal(E, 2);
}

ReductionShape reduction_shape(const WeierstrassModel& E, const Integer& p) {
  if (p >= 5 && p <= Integer{"9223372036854775807"}) {
    const WeierstrassModel minimal = minimalize_at(E, p.get_si());
    const CurveInvariants v = invariants(minimal);
    if (valuation(v.delta, p) == 0) return ReductionShape::Good;
    if (v.c4 != 0 && valuation(v.c4, p) == 0) return ReductionShape::Multiplicative;
    return ReductionShape::Additive;
  }
  const CurveInvariants v = invariants(E);
  if (valuation(v.delta, p) == 0) return ReductionShape::Good;
  if (!minimal_enough(v, p))
    throw NonMinimalModelError("model " + E.to_string() + " fails the minimality bound at p = " + p.get_str());
  if (v.c4 != 0 && valuation(v.c4, p) == 0) return ReductionShape::Multiplicative;
  return ReductionShape::Additive;
}

Integer conductor(const WeierstrassModel& E) {
  const Integer delta = discriminant(E);
  Integer N = 1;
  for (const auto& [q, e] : factor(abs(delta)).factors) {
    switch (reduction_shape(E, q)) {
      case ReductionShape::Good: break;
      case ReductionShape::Multiplicative: N *= q; break;
      case ReductionShape::Additive:
        if (q <= 3)
          throw UnsupportedReductionError("additive reduction at p = " + q.get_str() +
                                          ": conductor exponent not supported");
        N *= q * q;
        break;
    }
  }
  return N;
}

}  // namespace twistgate
