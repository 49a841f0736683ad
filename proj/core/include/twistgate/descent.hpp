#pragma once

#include <cstdint>
#include <vector>

#include "twistgate/curve.hpp"
#include "twistgate/quadratic_field.hpp"

namespace twistgate {

/// Point of y^2 = x^3 + A x + B with coordinates in Q(sqrt d).
struct QuadPoint {
  QuadElt x;
  QuadElt y;
  ShortForm curve;

  bool on_curve() const;
  /// x rational and y in sqrt(d) Q: conjugation acts as negation.
  bool is_anti_invariant() const { return x.is_rational() && y.is_pure_irrational(); }
  /// Both coordinates rational: conjugation fixes the point.
  bool is_invariant() const { return x.is_rational() && y.is_rational(); }
  QuadPoint conjugate() const { return {x.conjugate(), y.conjugate(), curve}; }
  QuadPoint negate() const { return {x, -y, curve}; }
};

struct RationalPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Points (x, y0 sqrt d) with x = m/n, |m| <= height, 1 <= n <= height, and
/// the rational points with y = 0 in the same range. Sorted by (n, m), then y.
std::vector<QuadPoint> quad_point_search(const ShortForm& curve, const Integer& d, std::int64_t height);

/// Rational points with x = x_scale * m/n over the same box of m/n.
std::vector<RationalPoint> rational_point_search(const ShortForm& curve, std::int64_t height,
                                                 const Integer& x_scale = 1);

/// Image of P under (x, y) -> (d x, d sqrt(d) y) on Y^2 = X^3 + A d^2 X + B d^3.
struct TwistImage {
  QuadElt x;
  QuadElt y;
  ShortForm twist;

  bool is_rational() const { return x.is_rational() && y.is_rational(); }
  RationalPoint as_rational() const;
};

TwistImage twist_map(const QuadPoint& P, const Integer& d);

/// A character of (Z/2)^r, given by its value on each generator.
struct Character {
  std::vector<int> signs;

  std::size_t rank() const { return signs.size(); }
  bool is_trivial() const;
  /// Value on the group element prod_{i in mask} g_i.
  int value_on(std::uint32_t mask) const;
  std::string to_string() const;  // e.g. "(+,-)"

  friend bool operator==(const Character&, const Character&) = default;
};

/// All 2^r characters; bit i of the index set means signs[i] = -1.
std::vector<Character> all_characters(std::size_t r);

/// n x n matrix over Z/2^k, row-major.
struct ModMatrix {
  std::size_t n = 0;
  std::vector<std::uint32_t> entries;

  std::uint32_t at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;
};

using ModuleElement = std::vector<std::uint32_t>;

/// (Z/2^k)^n with commuting involutions generating an action of (Z/2)^r.
class SignedModule {
 public:
  /// Validates shape, commutation and M_i^2 = I; size is capped at 2^16.
  SignedModule(unsigned k, std::size_t n, std::vector<ModMatrix> generators);

  unsigned k() const { return k_; }
  std::size_t n() const { return n_; }
  std::size_t r() const { return generators_.size(); }
  std::uint32_t modulus() const { return 1u << k_; }
  const std::vector<ModMatrix>& generators() const { return generators_; }
  std::size_t size() const { return std::size_t{1} << (k_ * n_); }

  ModuleElement element(std::size_t index) const;
  ModuleElement apply(const ModMatrix& g, const ModuleElement& m) const;
  /// Action of prod_{i in mask} g_i.
  ModuleElement act(std::uint32_t mask, const ModuleElement& m) const;
  ModuleElement add(const ModuleElement& x, const ModuleElement& y) const;
  ModuleElement scale(std::int64_t c, const ModuleElement& m) const;

 private:
  unsigned k_;
  std::size_t n_;
  std::vector<ModMatrix> generators_;
};

struct CharacterComponent {
  Character character;
  ModuleElement value;  // sum over sigma of s(sigma) m^sigma, an element of M_s
};

struct Decomposition {
  ModuleElement element;
  std::vector<CharacterComponent> components;
};

struct LemmaSumCertificate {
  bool passed = false;
  std::size_t elements_checked = 0;
  std::vector<Decomposition> decompositions;
};

/// For every m: 2^r m = sum_s sum_sigma s(sigma) m^sigma, and each inner sum
/// is fixed up to the sign s(sigma) by every sigma.
LemmaSumCertificate lemma_sum_check(const SignedModule& module);

/// Involutive diagonal and anti-diagonal (signed swap) matrices over Z/2^k.
std::vector<ModMatrix> involutive_generators(unsigned k, std::size_t n);

/// Every r-tuple from involutive_generators(k, n) whose members commute.
std::vector<SignedModule> signed_module_family(unsigned k, std::size_t n, std::size_t r);

}  // namespace twistgate
