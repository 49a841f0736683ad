#include "twistgate/curve.hpp"

#include <array>
#include <ostream>
#include <sstream>
#include <utility>

#include "twistgate/errors.hpp"

namespace twistgate {
namespace {

Integer pow_int(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

int valuation_or_max(const Integer& n, std::int64_t p) {
  return n == 0 ? 1 << 20 : valuation(n, Integer{static_cast<long>(p)});
}

void require_squarefree_twist(const Integer& d) {
  if (d == 0 || !is_squarefree(d))
    throw NotSquarefreeError("quadratic twist requires a squarefree nonzero d, got " + d.get_str());
}

}  // namespace

WeierstrassModel::WeierstrassModel(Integer a1, Integer a2, Integer a3, Integer a4, Integer a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
  if (discriminant(*this) == 0) throw SingularCurveError("singular Weierstrass equation " + to_string());
}

std::string WeierstrassModel::to_string() const {
  std::ostringstream os;
  os << '[' << a1_ << ',' << a2_ << ',' << a3_ << ',' << a4_ << ',' << a6_ << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const WeierstrassModel& E) { return os << E.to_string(); }

Rational ShortForm::discriminant() const { return -16 * (4 * A * A * A + 27 * B * B); }

Rational ShortForm::j_invariant() const {
  const Rational disc = discriminant();
  if (disc == 0) throw SingularCurveError("singular short Weierstrass form");
  return -110592 * A * A * A / disc;  // c4^3 / delta with c4 = -48A
}

Rational ShortForm::evaluate(const Rational& x) const { return x * x * x + A * x + B; }

namespace {

// Invariants without the nonsingularity check; used by the constructor itself.
CurveInvariants raw_invariants(const Integer& a1, const Integer& a2, const Integer& a3, const Integer& a4,
                               const Integer& a6) {
  CurveInvariants v;
  v.b2 = a1 * a1 + 4 * a2;
  v.b4 = 2 * a4 + a1 * a3;
  v.b6 = a3 * a3 + 4 * a6;
  v.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  v.c4 = v.b2 * v.b2 - 24 * v.b4;
  v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
  const Integer numerator = v.c4 * v.c4 * v.c4 - v.c6 * v.c6;
  mpz_divexact_ui(v.delta.get_mpz_t(), numerator.get_mpz_t(), 1728);
  return v;
}

}  // namespace

Integer discriminant(const WeierstrassModel& E) {
  return raw_invariants(E.a1(), E.a2(), E.a3(), E.a4(), E.a6()).delta;
}

CurveInvariants invariants(const WeierstrassModel& E) {
  CurveInvariants v = raw_invariants(E.a1(), E.a2(), E.a3(), E.a4(), E.a6());
  if (v.delta == 0) throw SingularCurveError("singular Weierstrass equation " + E.to_string());
  v.j = Rational{v.c4 * v.c4 * v.c4, v.delta};
  v.j.canonicalize();
  return v;
}

Rational j_invariant(const WeierstrassModel& E) { return invariants(E).j; }

ShortForm short_form(const WeierstrassModel& E) {
  const CurveInvariants v = invariants(E);
  ShortForm s{Rational{-v.c4, 48}, Rational{-v.c6, 864}};
  s.A.canonicalize();
  s.B.canonicalize();
  return s;
}

std::optional<WeierstrassModel> model_from_c4c6(const Integer& c4, const Integer& c6) {
  const Integer numerator = c4 * c4 * c4 - c6 * c6;
  if (numerator == 0 || !mpz_divisible_ui_p(numerator.get_mpz_t(), 1728)) return std::nullopt;

  // Kraus: v3(c6) != 2, and either c6 = -1 mod 4 or (v2(c4) >= 4 and c6 = 0, 8 mod 32).
  if (c6 != 0 && valuation(c6, 3) == 2) return std::nullopt;
  const bool c6_minus_one_mod4 = mpz_fdiv_ui(c6.get_mpz_t(), 4) == 3;
  const unsigned long c6_mod32 = mpz_fdiv_ui(c6.get_mpz_t(), 32);
  const bool two_adic_ok = mpz_divisible_ui_p(c4.get_mpz_t(), 16) && (c6_mod32 == 0 || c6_mod32 == 8);
  if (!c6_minus_one_mod4 && !two_adic_ok) return std::nullopt;

  Integer minus_c6 = -c6;
  long r = static_cast<long>(mpz_fdiv_ui(minus_c6.get_mpz_t(), 12));
  if (r > 6) r -= 12;
  const Integer b2 = r;
  const Integer b4_num = b2 * b2 - c4;
  if (!mpz_divisible_ui_p(b4_num.get_mpz_t(), 24)) return std::nullopt;
  const Integer b4 = b4_num / 24;
  const Integer b6_num = -b2 * b2 * b2 + 36 * b2 * b4 - c6;
  if (!mpz_divisible_ui_p(b6_num.get_mpz_t(), 216)) return std::nullopt;
  const Integer b6 = b6_num / 216;

  const Integer a1 = mpz_odd_p(b2.get_mpz_t()) ? 1 : 0;
  const Integer a3 = mpz_odd_p(b6.get_mpz_t()) ? 1 : 0;
  const Integer a2_num = b2 - a1;
  const Integer a4_num = b4 - a1 * a3;
  const Integer a6_num = b6 - a3;
  if (!mpz_divisible_ui_p(a2_num.get_mpz_t(), 4) || !mpz_divisible_ui_p(a4_num.get_mpz_t(), 2) ||
      !mpz_divisible_ui_p(a6_num.get_mpz_t(), 4))
    return std::nullopt;

  WeierstrassModel model{a1, a2_num / 4, a3, a4_num / 2, a6_num / 4};
  const CurveInvariants check = invariants(model);
  if (check.c4 != c4 || check.c6 != c6) return std::nullopt;
  return model;
}

WeierstrassModel quadratic_twist(const WeierstrassModel& E, const Integer& d) {
  require_squarefree_twist(d);
  const CurveInvariants v = invariants(E);
  const Integer c4 = d * d * v.c4;
  const Integer c6 = d * d * d * v.c6;
  for (long u : {1L, 2L, 3L, 6L}) {
    const Integer uu = u;
    if (auto model = model_from_c4c6(pow_int(uu, 4) * c4, pow_int(uu, 6) * c6)) return *std::move(model);
  }
  // u = 6 always yields the integral short model, so this is unreachable.
  throw std::logic_error("quadratic_twist: no integral model found for " + E.to_string());
}

WeierstrassModel short_quadratic_twist(const WeierstrassModel& E, const Integer& d) {
  require_squarefree_twist(d);
  const ShortForm s = short_form(E);
  for (long u : {1L, 2L, 3L, 6L}) {
    const Rational A = s.A * Rational{pow_int(Integer{u}, 4)};
    const Rational B = s.B * Rational{pow_int(Integer{u}, 6)};
    if (!is_integral(A) || !is_integral(B)) continue;
    return WeierstrassModel{0, 0, 0, A.get_num() * d * d, B.get_num() * d * d * d};
  }
  throw std::logic_error("short_quadratic_twist: denominators of A, B exceed 48 and 864");
}

ShortForm twist_short_form(const ShortForm& curve, const Integer& d) {
  if (d == 0) throw NotSquarefreeError("twist by zero");
  const Rational dq{d};
  return ShortForm{curve.A * dq * dq, curve.B * dq * dq * dq};
}

bool satisfies_minimality_bound(const WeierstrassModel& E, std::int64_t p) {
  const CurveInvariants v = invariants(E);
  return valuation_or_max(v.c4, p) < 4 || valuation(v.delta, Integer{static_cast<long>(p)}) < 12;
}

WeierstrassModel minimalize_at(const WeierstrassModel& E, std::int64_t p) {
  if (p < 5) throw UnsupportedPrimeError("minimalize_at supports p >= 5 only, got " + std::to_string(p));
  if (!is_prime(Integer{static_cast<long>(p)})) throw DomainError("minimalize_at: " + std::to_string(p) + " is not prime");

  const CurveInvariants v = invariants(E);
  Integer c4 = v.c4;
  Integer c6 = v.c6;
  const Integer p4 = pow_int(Integer{static_cast<long>(p)}, 4);
  const Integer p6 = pow_int(Integer{static_cast<long>(p)}, 6);
  bool changed = false;
  while (valuation_or_max(c4, p) >= 4 && valuation_or_max(c6, p) >= 6) {
    c4 /= p4;
    c6 /= p6;
    changed = true;
  }
  if (!changed) return E;
  // Dividing by p^4, p^6 with p >= 5 preserves Kraus's conditions at 2 and 3.
  auto model = model_from_c4c6(c4, c6);
  if (!model) throw std::logic_error("minimalize_at: reduced invariants admit no integral model");
  return *std::move(model);
}

Rational expected_j_invariant_15a1() {
  // 13^3 37^3 / (3^4 5^4)
  Rational j{pow_int(13, 3) * pow_int(37, 3), pow_int(3, 4) * pow_int(5, 4)};
  j.canonicalize();
  return j;
}

Rational expected_j_invariant_21a1() {
  // 193^3 / (3^4 7^2)
  Rational j{pow_int(193, 3), pow_int(3, 4) * pow_int(7, 2)};
  j.canonicalize();
  return j;
}

}  // namespace twistgate
