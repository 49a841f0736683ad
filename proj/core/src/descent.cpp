#include "twistgate/descent.hpp"

#include <algorithm>
#include <numeric>

#include "twistgate/errors.hpp"

namespace twistgate {
namespace {

inline constexpr std::int64_t kMaxSearchHeight = 10'000;

// sqrt of a positive rational square num/den, or nullopt.
std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  Rational r{num, den};
  r.canonicalize();
  return r;
}

template <typename Visit>
void for_each_x(std::int64_t height, Visit&& visit) {
  for (std::int64_t n = 1; n <= height; ++n)
    for (std::int64_t m = -height; m <= height; ++m)
      if (std::gcd(m, n) == 1) visit(Rational{Integer{static_cast<long>(m)}, Integer{static_cast<long>(n)}});
}

void require_height(std::int64_t height) {
  if (height < 1 || height > kMaxSearchHeight)
    throw DomainError("search height must be in [1, 10^4], got " + std::to_string(height));
}

}  // namespace

bool QuadPoint::on_curve() const {
  const Integer& d = x.d();
  const QuadElt A = QuadElt::rational(curve.A, d);
  const QuadElt B = QuadElt::rational(curve.B, d);
  return y * y == x * x * x + A * x + B;
}

std::vector<QuadPoint> quad_point_search(const ShortForm& curve, const Integer& d, std::int64_t height) {
  if (d <= 1 || !is_squarefree(d)) throw NotSquarefreeError("quad_point_search needs squarefree d > 1, got " + d.get_str());
  require_height(height);

  std::vector<QuadPoint> points;
  const QuadElt zero = QuadElt::rational(0, d);
  for_each_x(height, [&](const Rational& x) {
    const Rational f = curve.evaluate(x);
    const QuadElt qx = QuadElt::rational(x, d);
    if (f == 0) {
      points.push_back({qx, zero, curve});
      return;
    }
    // f = y0^2 d  <=>  f / d is a rational square.
    const Rational f_over_d = f / Rational{d};
    if (auto y0 = rational_sqrt(f_over_d)) {
      points.push_back({qx, QuadElt{0, *y0, d}, curve});
      points.push_back({qx, QuadElt{0, -*y0, d}, curve});
    }
  });
  for (const auto& P : points)
    if (!P.on_curve()) throw std::logic_error("quad_point_search produced an off-curve point");
  return points;
}

std::vector<RationalPoint> rational_point_search(const ShortForm& curve, std::int64_t height,
                                                 const Integer& x_scale) {
  require_height(height);
  if (x_scale == 0) throw ZeroInputError("rational_point_search: zero x scale");
  std::vector<RationalPoint> points;
  const Rational scale{x_scale};
  for_each_x(height, [&](const Rational& m_over_n) {
    const Rational x = scale * m_over_n;
    const Rational f = curve.evaluate(x);
    if (auto y = rational_sqrt(f)) {
      points.push_back({x, *y});
      if (*y != 0) points.push_back({x, -*y});
    }
  });
  return points;
}

RationalPoint TwistImage::as_rational() const {
  if (!is_rational()) throw DomainError("twist image is not a rational point");
  return {x.a(), y.a()};
}

TwistImage twist_map(const QuadPoint& P, const Integer& d) {
  if (P.x.d() != d || P.y.d() != d)
    throw DomainError("twist_map: point lives in Q(sqrt " + P.x.d().get_str() + "), twist by " + d.get_str());
  if (!P.on_curve()) throw NotOnCurveError("twist_map: point (" + P.x.to_string() + ", " + P.y.to_string() + ") is not on the curve");

  const QuadElt dd = QuadElt::rational(Rational{d}, d);
  const QuadElt d_sqrt_d{0, Rational{d}, d};
  TwistImage image{dd * P.x, d_sqrt_d * P.y, twist_short_form(P.curve, d)};

  const QuadElt A = QuadElt::rational(image.twist.A, d);
  const QuadElt B = QuadElt::rational(image.twist.B, d);
  if (image.y * image.y != image.x * image.x * image.x + A * image.x + B)
    throw std::logic_error("twist_map: image fails the twisted equation");
  return image;
}

bool Character::is_trivial() const {
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1; });
}

int Character::value_on(std::uint32_t mask) const {
  int v = 1;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (mask >> i & 1u) v *= signs[i];
  return v;
}

std::string Character::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) out += ',';
    out += signs[i] == 1 ? '+' : '-';
  }
  return out + ')';
}

std::vector<Character> all_characters(std::size_t r) {
  if (r > 20) throw DomainError("too many generators: " + std::to_string(r));
  std::vector<Character> out;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    Character s;
    for (std::size_t i = 0; i < r; ++i) s.signs.push_back(mask >> i & 1u ? -1 : 1);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace twistgate
