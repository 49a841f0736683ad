#pragma once

#include <iosfwd>
#include <string>

#include "twistgate/numtheory.hpp"

namespace twistgate {

/// a + b sqrt(d) in Q(sqrt d), d squarefree and not 0 or 1.
class QuadElt {
 public:
  QuadElt(Rational a, Rational b, Integer d);
  static QuadElt rational(Rational a, Integer d) { return QuadElt{std::move(a), 0, std::move(d)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  /// True when a = 0, i.e. the element lies in sqrt(d) Q.
  bool is_pure_irrational() const { return a_ == 0; }

  QuadElt conjugate() const { return QuadElt{a_, -b_, d_, Unchecked{}}; }
  Rational norm() const { return a_ * a_ - Rational{d_} * b_ * b_; }
  Rational trace() const { return 2 * a_; }
  QuadElt inverse() const;

  QuadElt& operator+=(const QuadElt& o);
  QuadElt& operator-=(const QuadElt& o);
  QuadElt& operator*=(const QuadElt& o);
  QuadElt& operator/=(const QuadElt& o) { return *this *= o.inverse(); }

  friend QuadElt operator+(QuadElt x, const QuadElt& y) { return x += y; }
  friend QuadElt operator-(QuadElt x, const QuadElt& y) { return x -= y; }
  friend QuadElt operator*(QuadElt x, const QuadElt& y) { return x *= y; }
  friend QuadElt operator/(QuadElt x, const QuadElt& y) { return x /= y; }
  QuadElt operator-() const { return QuadElt{-a_, -b_, d_, Unchecked{}}; }

  friend bool operator==(const QuadElt& x, const QuadElt& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const;

 private:
  struct Unchecked {};
  QuadElt(Rational a, Rational b, Integer d, Unchecked) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}
  void require_same_field(const QuadElt& o) const;

  Rational a_;
  Rational b_;
  Integer d_;
};

std::ostream& operator<<(std::ostream& os, const QuadElt& x);

}  // namespace twistgate
