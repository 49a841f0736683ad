#include "twistgate/galois.hpp"

#include <string>

#include "twistgate/errors.hpp"
#include "twistgate/reduction.hpp"

namespace twistgate {

SurjectivityReport serre_check(const WeierstrassModel& E, std::int64_t ell, std::int64_t aux) {
  if (ell < 3 || !is_prime(Integer{static_cast<long>(ell)}))
    throw UnsupportedPrimeError("serre_check needs an odd prime ell >= 3, got " + std::to_string(ell));
  if (aux < 2 || !is_prime(Integer{static_cast<long>(aux)}))
    throw BadAuxPrimeError("auxiliary " + std::to_string(aux) + " is not a prime");
  if (reduction_shape(E, Integer{static_cast<long>(aux)}) != ReductionShape::Good)
    throw BadAuxPrimeError("auxiliary prime " + std::to_string(aux) + " is a bad prime of " + E.to_string());

  SurjectivityReport report;
  report.ell = ell;
  const Rational j = j_invariant(E);
  if (j != 0) {
    for (const auto& pe : factor(Integer{j.get_den()}).factors) {
      const int v = valuation(j, pe.prime);
      report.j_exponent_checks.push_back({pe.prime, v, (-v) % ell != 0});
    }
  }

  report.aux.prime = aux;
  report.aux.points = count_points(aux >= 5 ? minimalize_at(E, aux) : E, aux);
  report.aux.passed = report.aux.points % ell != 0;

  report.overall = !report.j_exponent_checks.empty() && report.aux.passed;
  for (const auto& c : report.j_exponent_checks) report.overall = report.overall && c.passed;
  return report;
}

std::optional<std::int64_t> default_aux_prime(std::string_view label) {
  if (label == "15a1") return 7;
  if (label == "21a1") return 5;
  return std::nullopt;
}

}  // namespace twistgate
