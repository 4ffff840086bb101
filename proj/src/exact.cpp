#include "tilingq/exact.hpp"

#include <sstream>

namespace tq {
namespace {

int rsign(const Rational& r) { return r.sign(); }

BigInt floor_rational(const Rational& r) {
  BigInt n = boost::multiprecision::numerator(r);
  BigInt d = boost::multiprecision::denominator(r);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

// Largest integer n with n <= e*sqrt(3).
BigInt floor_sqrt3_multiple(const Rational& e) {
  if (e == 0) return 0;
  Rational sq = 3 * e * e;
  BigInt root = boost::multiprecision::sqrt(floor_rational(sq));
  if (e > 0) return root;
  // -sqrt(x): exact only when x is a perfect square, which never happens for 3e^2.
  return -root - 1;
}

}  // namespace

BigInt floor(const QuadExt& q) {
  BigInt n = floor_rational(q.a()) + floor_sqrt3_multiple(q.b());
  while ((q - QuadExt(Rational(n))).sign() < 0) --n;
  while ((q - QuadExt(Rational(n + 1))).sign() >= 0) ++n;
  return n;
}

namespace {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::string t = s;
  if (t[0] == '+') t.erase(0, 1);
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(BigInt(t));
  BigInt num(t.substr(0, slash));
  BigInt den(t.substr(slash + 1));
  if (den == 0) throw ArithmeticError("zero denominator");
  // boost rejects a negative denominator outright
  if (den < 0) num = -num, den = -den;
  return Rational(num, den);
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

}  // namespace

int QuadExt::sign() const {
  int sa = rsign(a_);
  int sb = rsign(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and 3b^2 wins. They are never equal.
  return (a_ * a_ > 3 * b_ * b_) ? sa : sb;
}

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (n == 0) throw ArithmeticError("QuadExt division by zero");
  return {a_ / n, -b_ / n};
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Rational na = a_ * o.a_ + 3 * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const QuadExt& l, const QuadExt& r) {
  int s = (l - r).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

QuadExt QuadExt::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  auto r3 = s.find("r3");
  if (r3 == std::string::npos) return {parse_rational(s), 0};
  if (r3 + 2 != s.size()) throw std::invalid_argument("bad QuadExt: " + text);
  std::string head = s.substr(0, r3);
  if (!head.empty() && head.back() == '*') head.pop_back();
  // Split the head into "a" and the signed sqrt(3) coefficient.
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      split = i;
      break;
    }
  }
  Rational a = 0;
  std::string bstr = head;
  if (split != std::string::npos) {
    a = parse_rational(head.substr(0, split));
    bstr = head.substr(split);
  }
  Rational b;
  if (bstr.empty() || bstr == "+") {
    b = 1;
  } else if (bstr == "-") {
    b = -1;
  } else {
    b = parse_rational(bstr);
  }
  return {a, b};
}

std::string QuadExt::str() const {
  if (b_ == 0) return rational_str(a_);
  std::string bs = rational_str(b_) + "*r3";
  if (a_ == 0) return bs;
  return rational_str(a_) + (b_ > 0 ? "+" : "") + bs;
}

std::string QuadExt::decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
  int s = sign();
  QuadExt mag = s < 0 ? -*this : *this;
  BigInt n = floor(mag * QuadExt(Rational(scale)) + QuadExt(Rational(1, 2)));
  BigInt ip = n / scale;
  BigInt fp = n % scale;
  std::ostringstream os;
  if (s < 0 && n != 0) os << '-';
  os << ip;
  if (digits > 0) {
    std::string f = fp.str();
    os << '.' << std::string(static_cast<std::size_t>(digits) - f.size(), '0') << f;
  }
  return os.str();
}

double QuadExt::approx() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * 1.7320508075688772;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

std::strong_ordering operator<=>(const Vec2& l, const Vec2& r) {
  if (auto c = l.x <=> r.x; c != 0) return c;
  return l.y <=> r.y;
}

Vec2 cmul(const Vec2& p, const Vec2& q) { return {p.x * q.x - p.y * q.y, p.x * q.y + p.y * q.x}; }

QuadExt dot(const Vec2& p, const Vec2& q) { return p.x * q.x + p.y * q.y; }
QuadExt cross(const Vec2& p, const Vec2& q) { return p.x * q.y - p.y * q.x; }

std::ostream& operator<<(std::ostream& os, const Vec2& v) {
  return os << '(' << v.x << ", " << v.y << ')';
}

Vec2 unit_dir(int k) {
  k = ((k % 12) + 12) % 12;
  const QuadExt h(Rational(1, 2));
  const QuadExt r(0, Rational(1, 2));  // sqrt(3)/2
  static const int cs[12][2] = {{2, 0}, {1, 3}, {3, 1}, {0, 2}, {-3, 1}, {-1, 3},
                                {-2, 0}, {-1, -3}, {-3, -1}, {0, -2}, {3, -1}, {1, -3}};
  // Encoding: 2 -> 1, 1 -> sqrt3/2, 3 -> 1/2, 0 -> 0, sign carried.
  auto val = [&](int c) -> QuadExt {
    int m = c < 0 ? -c : c;
    QuadExt v = m == 2 ? QuadExt(1) : m == 1 ? r : m == 3 ? h : QuadExt(0);
    return c < 0 ? -v : v;
  };
  return {val(cs[k][0]), val(cs[k][1])};
}

namespace {
// Half-plane class: 0 for angles in [0, pi), 1 for [pi, 2pi).
int half(const Vec2& d) {
  int sy = d.y.sign();
  if (sy > 0) return 0;
  if (sy < 0) return 1;
  return d.x.sign() > 0 ? 0 : 1;
}
}  // namespace

std::weak_ordering angular_compare(const Vec2& d1, const Vec2& d2) {
  if (d1.is_zero() || d2.is_zero()) throw std::domain_error("angular_compare: zero vector");
  int h1 = half(d1), h2 = half(d2);
  if (h1 != h2) return h1 < h2 ? std::weak_ordering::less : std::weak_ordering::greater;
  int c = cross(d1, d2).sign();
  if (c > 0) return std::weak_ordering::less;
  if (c < 0) return std::weak_ordering::greater;
  // Parallel within one half-plane means same direction.
  return std::weak_ordering::equivalent;
}

Vec2 Isometry::apply(const Vec2& p) const { return (eps < 0 ? -p : p) + t; }

Isometry Isometry::inverse() const { return {eps, eps < 0 ? t : -t}; }

Isometry compose(const Isometry& g, const Isometry& h) {
  // g(h(x)) = eg*(eh*x + th) + tg
  return {g.eps * h.eps, (g.eps < 0 ? -h.t : h.t) + g.t};
}

}  // namespace tq
