#include "twistgate/quadratic_field.hpp"

#include <ostream>
#include <sstream>

#include "twistgate/errors.hpp"

namespace twistgate {

QuadElt::QuadElt(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ == 0 || d_ == 1 || !is_squarefree(d_))
    throw NotSquarefreeError("Q(sqrt d) needs squarefree d != 0, 1; got " + d_.get_str());
  a_.canonicalize();
  b_.canonicalize();
}

void QuadElt::require_same_field(const QuadElt& o) const {
  if (d_ != o.d_) throw DomainError("mixing Q(sqrt " + d_.get_str() + ") and Q(sqrt " + o.d_.get_str() + ")");
}

QuadElt QuadElt::inverse() const {
  const Rational n = norm();
  if (n == 0) throw ZeroInputError("inverse of zero in Q(sqrt " + d_.get_str() + ")");
  return QuadElt{a_ / n, -b_ / n, d_, Unchecked{}};
}

QuadElt& QuadElt::operator+=(const QuadElt& o) {
  require_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElt& QuadElt::operator-=(const QuadElt& o) {
  require_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElt& QuadElt::operator*=(const QuadElt& o) {
  require_same_field(o);
  const Rational a = a_ * o.a_ + Rational{d_} * b_ * o.b_;
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

std::string QuadElt::to_string() const {
  std::ostringstream os;
  if (b_ == 0) {
    os << a_;
  } else if (a_ == 0) {
    os << b_ << "*sqrt(" << d_ << ')';
  } else {
    os << a_ << (b_ > 0 ? " + " : " - ") << abs(b_) << "*sqrt(" << d_ << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadElt& x) { return os << x.to_string(); }

}  // namespace twistgate
