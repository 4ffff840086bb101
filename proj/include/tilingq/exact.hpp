// Exact arithmetic in Q(sqrt 3) and planar vectors/isometries over it.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};

// a + b*sqrt(3), a and b rational. Equality is structural.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(std::int64_t a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadExt sqrt3() { return {0, 1}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  QuadExt conj() const { return {a_, -b_}; }
  // a^2 - 3 b^2, the field norm.
  Rational norm() const { return a_ * a_ - 3 * b_ * b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  int sign() const;
  QuadExt inverse() const;

  QuadExt operator-() const { return {-a_, -b_}; }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt l, const QuadExt& r) { return l += r; }
  friend QuadExt operator-(QuadExt l, const QuadExt& r) { return l -= r; }
  friend QuadExt operator*(QuadExt l, const QuadExt& r) { return l *= r; }
  friend QuadExt operator/(QuadExt l, const QuadExt& r) { return l /= r; }
  friend bool operator==(const QuadExt&, const QuadExt&) = default;
  // Numeric order via exact sign of the difference.
  friend std::strong_ordering operator<=>(const QuadExt& l, const QuadExt& r);

  // Parses "p/q", "p/q+r/s*r3", "r3", "-1/2*r3" and similar.
  static QuadExt parse(const std::string& text);
  // Inverse of parse: "a" or "a+b*r3" with rational a, b.
  std::string str() const;
  // Decimal rendering rounded half away from zero, computed exactly.
  std::string decimal(int digits) const;
  // Nearest double; only meant for diagnostics and tests.
  double approx() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

struct Vec2 {
  QuadExt x;
  QuadExt y;

  Vec2() = default;
  Vec2(QuadExt x_, QuadExt y_) : x(std::move(x_)), y(std::move(y_)) {}

  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
  Vec2 operator-() const { return {-x, -y}; }
  friend Vec2 operator+(Vec2 l, const Vec2& r) { return l += r; }
  friend Vec2 operator-(Vec2 l, const Vec2& r) { return l -= r; }
  friend Vec2 operator*(const QuadExt& s, const Vec2& v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
  // Lexicographic on (x, y); used for sorting and map keys.
  friend std::strong_ordering operator<=>(const Vec2& l, const Vec2& r);

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  QuadExt norm2() const { return x * x + y * y; }
};

QuadExt dot(const Vec2& p, const Vec2& q);
QuadExt cross(const Vec2& p, const Vec2& q);
std::ostream& operator<<(std::ostream& os, const Vec2& v);

// Largest integer not exceeding q, computed exactly.
BigInt floor(const QuadExt& q);

// Complex-style product (x1 + i y1)(x2 + i y2); rotates and scales.
Vec2 cmul(const Vec2& p, const Vec2& q);

// Unit vector at angle 30k degrees.
Vec2 unit_dir(int k);

// CCW angular order of directions in [0, 2pi) anchored at (1, 0).
// Parallel same-direction vectors compare equal. Throws on zero input.
std::weak_ordering angular_compare(const Vec2& d1, const Vec2& d2);

// x -> eps*x + t with eps in {+1, -1}.
struct Isometry {
  int eps = 1;
  Vec2 t;

  static Isometry identity() { return {}; }
  static Isometry translation(Vec2 k) { return {1, std::move(k)}; }
  static Isometry inversion() { return {-1, {}}; }

  Vec2 apply(const Vec2& p) const;
  Isometry inverse() const;
  friend bool operator==(const Isometry&, const Isometry&) = default;
};

// compose(g, h) acts as x -> g(h(x)).
Isometry compose(const Isometry& g, const Isometry& h);

}  // namespace tq
