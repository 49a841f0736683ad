#include "twistgate/rootnum.hpp"

#include "twistgate/errors.hpp"
#include "twistgate/reduction.hpp"

namespace twistgate {

std::string_view to_string(RootCase c) {
  switch (c) {
    case RootCase::Archimedean: return "archimedean";
    case RootCase::Good: return "good";
    case RootCase::SplitMult: return "split-mult";
    case RootCase::NonsplitMult: return "nonsplit-mult";
    case RootCase::AddPotMult: return "add-pot-mult";
    case RootCase::AddPotGood: return "add-pot-good";
  }
  return "?";
}

std::string_view rule_text(RootCase c) {
  switch (c) {
    case RootCase::Archimedean: return "real place => -1";
    case RootCase::Good: return "good reduction => +1";
    case RootCase::SplitMult: return "split multiplicative => -1";
    case RootCase::NonsplitMult: return "nonsplit multiplicative => +1";
    case RootCase::AddPotMult: return "additive, potentially multiplicative, p >= 3 => (-1/p)";
    case RootCase::AddPotGood: return "additive, potentially good, p >= 5 => (-1)^floor(v_p(delta_min) p / 12)";
  }
  return "?";
}

std::string Place::to_string() const { return is_infinite() ? "inf" : prime_->get_str(); }

RootNumber::RootNumber(std::vector<LocalRootFactor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) value_ *= f.sign;
}

const LocalRootFactor* RootNumber::factor_at(const Place& place) const {
  for (const auto& f : factors_)
    if (f.place == place) return &f;
  return nullptr;
}

LocalRootFactor local_root_factor(const WeierstrassModel& E, const Place& place) {
  if (place.is_infinite()) return {place, -1, RootCase::Archimedean};

  const Integer& pz = place.p();
  if (!is_prime(pz)) throw DomainError("local_root_number: " + pz.get_str() + " is not prime");
  if (!pz.fits_slong_p()) throw PrimeTooLargeError("local_root_number: prime too large " + pz.get_str());
  const std::int64_t p = pz.get_si();

  ReductionData red;
  try {
    red = local_reduction(E, p);
  } catch (const UnsupportedReductionError& e) {
    throw UnsupportedPlaceError(std::string("unsupported place p = ") + pz.get_str() + ": " + e.what());
  } catch (const NonMinimalModelError& e) {
    // p = 2, 3: no minimalization step is available there
    throw UnsupportedPlaceError(std::string("unsupported place p = ") + pz.get_str() + ": " + e.what());
  }

  switch (red.kind) {
    case ReductionKind::Good: return {place, 1, RootCase::Good};
    case ReductionKind::MultSplit: return {place, -1, RootCase::SplitMult};
    case ReductionKind::MultNonsplit: return {place, 1, RootCase::NonsplitMult};
    case ReductionKind::AddPotMult:
      if (p == 2) throw UnsupportedPlaceError("unsupported place p = 2: additive reduction");
      return {place, jacobi(-1, pz), RootCase::AddPotMult};
    case ReductionKind::AddPotGood: {
      if (p < 5)
        throw UnsupportedPlaceError("unsupported place p = " + pz.get_str() +
                                    ": additive potentially good reduction needs p >= 5");
      // Case (4) reads the valuation off the p-minimal model.
      const int v = valuation(discriminant(minimalize_at(E, p)), pz);
      const std::int64_t exponent = (static_cast<std::int64_t>(v) * p) / 12;
      return {place, exponent % 2 == 0 ? 1 : -1, RootCase::AddPotGood};
    }
  }
  throw std::logic_error("unreachable reduction kind");
}

int local_root_number(const WeierstrassModel& E, const Place& place) { return local_root_factor(E, place).sign; }

RootNumber global_root_number(const WeierstrassModel& E) {
  std::vector<LocalRootFactor> factors{local_root_factor(E, Place::infinity())};
  const Integer delta = discriminant(E);
  for (const auto& pe : factor(abs(delta)).factors) {
    LocalRootFactor f = local_root_factor(E, Place::prime(pe.prime));
    if (f.rule == RootCase::Good) continue;  // only a non-minimal model saw this prime
    factors.push_back(std::move(f));
  }
  return RootNumber{std::move(factors)};
}

int twist_root_number_formula(const WeierstrassModel& E, const Integer& d) {
  Integer N;
  try {
    N = conductor(E);
  } catch (const UnsupportedReductionError&) {
    throw HypothesisViolationError("curve is not semistable (additive reduction at 2 or 3)");
  }
  if (mpz_even_p(N.get_mpz_t())) throw HypothesisViolationError("conductor " + N.get_str() + " is even");
  if (!is_squarefree(N)) throw HypothesisViolationError("curve is not semistable: conductor " + N.get_str());
  if (d <= 0) throw HypothesisViolationError("twist parameter must be positive, got " + d.get_str());
  if (!is_squarefree(d)) throw HypothesisViolationError("twist parameter " + d.get_str() + " is not squarefree");
  if (mpz_fdiv_ui(d.get_mpz_t(), 4) != 1)
    throw HypothesisViolationError("twist parameter " + d.get_str() + " is not 1 mod 4");
  Integer g;
  mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), N.get_mpz_t());
  if (g != 1)
    throw HypothesisViolationError("twist parameter " + d.get_str() + " shares the factor " + g.get_str() +
                                   " with the conductor " + N.get_str());
  return jacobi(d, N) * global_root_number(E).value();
}

}  // namespace twistgate
