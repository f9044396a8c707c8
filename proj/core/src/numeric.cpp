#include "latseg/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

namespace latseg {

namespace mp = boost::multiprecision;

Integer isqrt(const Integer& x) {
  if (x < 0) throw DomainError("isqrt of a negative integer");
  return mp::sqrt(x);
}

Integer floor(const Rational& x) {
  const Integer& num = mp::numerator(x);
  const Integer& den = mp::denominator(x);
  Integer q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

Integer ceil(const Rational& x) { return -floor(-x); }

Integer floor_sqrt(const Rational& x) {
  if (x < 0) throw DomainError("square root of a negative rational");
  // floor(sqrt(floor(x))) == floor(sqrt(x)) for x >= 0.
  return isqrt(floor(x));
}

Integer ceil_sqrt(const Rational& x) {
  Integer k = floor_sqrt(x);
  if (Rational(k * k) == x) return k;
  return k + 1;
}

bool exact_sqrt(const Rational& x, Rational& root) {
  if (x < 0) return false;
  const Integer& num = mp::numerator(x);
  const Integer& den = mp::denominator(x);
  Integer rn = isqrt(num);
  Integer rd = isqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = Rational(rn, rd);
  return true;
}

std::int64_t gcd_of(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (std::int64_t x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw DomainError("integer does not fit in 64 bits");
  return x.convert_to<std::int64_t>();
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite floating-point value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
  auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(m);
  if (exp > 0) {
    r *= Rational(Integer(1) << exp);
  } else if (exp < 0) {
    r /= Rational(Integer(1) << -exp);
  }
  return r;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

namespace {

Integer parse_integer(std::string_view s) {
  if (s.empty()) throw DomainError("empty integer literal");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    ++i;
  }
  if (i == s.size()) throw DomainError("malformed integer literal");
  Integer v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw DomainError("malformed number: " + std::string(s));
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Integer(-v) : v;
}

Rational pow10(int e) {
  Integer p = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= 10;
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty numeric literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer p = parse_integer(text.substr(0, slash));
    Integer q = parse_integer(text.substr(slash + 1));
    if (q == 0) throw DomainError("zero denominator in " + std::string(text));
    return Rational(p, q);
  }

  int exponent = 0;
  std::string_view mant = text;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view es = text.substr(e + 1);
    if (!es.empty() && es[0] == '+') es.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(es.data(), es.data() + es.size(), exponent);
    if (ec != std::errc() || ptr != es.data() + es.size())
      throw DomainError("malformed exponent in " + std::string(text));
    mant = text.substr(0, e);
  }
  std::string digits;
  int frac_digits = 0;
  bool seen_dot = false;
  for (char c : mant) {
    if (c == '.') {
      if (seen_dot) throw DomainError("malformed number: " + std::string(text));
      seen_dot = true;
      continue;
    }
    digits.push_back(c);
    if (seen_dot) ++frac_digits;
  }
  return Rational(parse_integer(digits)) * pow10(exponent - frac_digits);
}

std::string to_string(const Rational& x) {
  if (mp::denominator(x) == 1) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw DomainError("interval with lo > hi");
}

Interval Interval::snapped(unsigned bits) const {
  if (is_exact()) return *this;
  const Rational scale(Integer(1) << bits);
  Interval r;
  r.lo_ = Rational(latseg::floor(lo_ * scale)) / scale;
  r.hi_ = Rational(latseg::ceil(hi_ * scale)) / scale;
  return r;
}

void Interval::snap_if_inexact() {
  if (is_exact()) return;
  // Only snap when the endpoints have grown past the grid.
  auto big = [](const Rational& r) {
    return mp::msb(mp::denominator(r)) > kFractionBits + 8;
  };
  if (big(lo_) || big(hi_)) *this = snapped();
}

Interval& Interval::operator+=(const Interval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  snap_if_inexact();
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  Rational nlo = lo_ - o.hi_;
  hi_ -= o.lo_;
  lo_ = std::move(nlo);
  snap_if_inexact();
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  if (is_exact() && o.is_exact()) {
    lo_ *= o.lo_;
    hi_ = lo_;
    return *this;
  }
  Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  snap_if_inexact();
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.lo_ <= 0 && o.hi_ >= 0) throw PrecisionError("interval division by an interval containing 0");
  if (is_exact() && o.is_exact()) {
    lo_ /= o.lo_;
    hi_ = lo_;
    return *this;
  }
  Rational a = lo_ / o.lo_, b = lo_ / o.hi_, c = hi_ / o.lo_, d = hi_ / o.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  snap_if_inexact();
  return *this;
}

Interval abs(const Interval& x) {
  if (x.lo() >= 0) return x;
  if (x.hi() <= 0) return -x;
  return Interval(Rational(0), std::max(-x.lo(), x.hi()));
}

Interval square(const Interval& x) {
  Interval a = abs(x);
  return a * a;
}

Interval sqrt(const Interval& x) {
  if (x.hi() < 0) throw DomainError("square root of a negative interval");
  if (x.is_exact()) {
    Rational root;
    if (exact_sqrt(x.lo(), root)) return Interval(root);
  }
  constexpr unsigned bits = Interval::kFractionBits;
  const Integer scale = Integer(1) << bits;
  const Rational scale_sq(scale * scale);
  Rational lo = x.lo() < 0 ? Rational(0) : x.lo();
  Rational r_lo(floor_sqrt(lo * scale_sq), scale);
  Rational r_hi(ceil_sqrt(x.hi() * scale_sq), scale);
  return Interval(std::move(r_lo), std::move(r_hi));
}

Interval norm(std::span<const std::int64_t> v) {
  Integer s = 0;
  for (std::int64_t x : v) s += Integer(x) * x;
  return sqrt(Interval(Rational(s)));
}

Interval norm(std::span<const Interval> v) {
  Interval s(0);
  for (const Interval& x : v) s += square(x);
  return sqrt(s);
}

}  // namespace latseg
