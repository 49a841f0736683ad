#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistgate/numtheory.hpp"

namespace twistgate {

/// Integral Weierstrass equation y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
/// Construction rejects singular equations.
class WeierstrassModel {
 public:
  WeierstrassModel(Integer a1, Integer a2, Integer a3, Integer a4, Integer a6);

  const Integer& a1() const { return a1_; }
  const Integer& a2() const { return a2_; }
  const Integer& a3() const { return a3_; }
  const Integer& a4() const { return a4_; }
  const Integer& a6() const { return a6_; }

  friend bool operator==(const WeierstrassModel&, const WeierstrassModel&) = default;

  std::string to_string() const;  // "[a1,a2,a3,a4,a6]"

 private:
  Integer a1_, a2_, a3_, a4_, a6_;
};

struct CurveInvariants {
  Integer b2, b4, b6, b8;
  Integer c4, c6;
  Integer delta;
  Rational j;
};

/// y^2 = x^3 + A x + B over the rationals.
struct ShortForm {
  Rational A;
  Rational B;

  Rational discriminant() const;  // -16 (4A^3 + 27B^2)
  Rational j_invariant() const;
  Rational evaluate(const Rational& x) const;  // x^3 + A x + B
  friend bool operator==(const ShortForm&, const ShortForm&) = default;
};

CurveInvariants invariants(const WeierstrassModel& E);
Integer discriminant(const WeierstrassModel& E);
Rational j_invariant(const WeierstrassModel& E);

ShortForm short_form(const WeierstrassModel& E);

/// Integral model with the given c4, c6 if one exists (Kraus's conditions at
/// 2 and 3), built with b2 reduced into [-5, 6].
std::optional<WeierstrassModel> model_from_c4c6(const Integer& c4, const Integer& c6);

/// Twist by squarefree d: an integral model with invariants
/// (u^4 d^2 c4, u^6 d^3 c6) for the least u in {1, 2, 3, 6}. For d = 1 mod 4
/// prime to 6 this keeps the model minimal at 2 and 3 whenever E is.
WeierstrassModel quadratic_twist(const WeierstrassModel& E, const Integer& d);

/// The twist in reduced form Y^2 = X^3 + A' d^2 X + B' d^3, where (A', B') is
/// short_form(E) scaled by (u^4, u^6) with the least u clearing denominators.
WeierstrassModel short_quadratic_twist(const WeierstrassModel& E, const Integer& d);

/// Twist of a rational short form: (A d^2, B d^3).
ShortForm twist_short_form(const ShortForm& curve, const Integer& d);

/// True when v_p(c4) < 4 or v_p(delta) < 12.
bool satisfies_minimality_bound(const WeierstrassModel& E, std::int64_t p);

/// p-minimal model for p >= 5; returns E unchanged if already p-minimal.
WeierstrassModel minimalize_at(const WeierstrassModel& E, std::int64_t p);

struct CurveLabel {
  std::string label;
  WeierstrassModel model;
};

/// Immutable label -> model table read from the tab-separated curves.tsv format.
class CurveTable {
 public:
  static CurveTable parse(std::istream& in, std::string_view source = "<stream>");
  static CurveTable load_file(const std::string& path);
  /// The table compiled into the library.
  static const CurveTable& bundled();
  /// TWISTGATE_CURVES if set, the bundled table otherwise.
  static CurveTable from_environment();

  const WeierstrassModel* find(std::string_view label) const;
  const WeierstrassModel& at(std::string_view label) const;
  const std::vector<CurveLabel>& entries() const { return entries_; }

 private:
  std::vector<CurveLabel> entries_;
};

/// Known j-invariants for the level-15 and level-21 modular curves; tables
/// carrying these labels are checked against them at load time.
Rational expected_j_invariant_15a1();
Rational expected_j_invariant_21a1();

std::ostream& operator<<(std::ostream& os, const WeierstrassModel& E);

}  // namespace twistgate
