// Exact integer/rational arithmetic and a rational-endpoint interval type
// used for every certified inequality in the library.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace latseg {

// Expression templates are disabled so that `auto` and std::min/max behave.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Raised when an argument lies outside the mathematical domain of an
/// operation (negative radius, zero vector, angle out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a computation would exceed its configured work budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the working precision cannot decide a certified comparison.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// floor(sqrt(x)) for x >= 0.
Integer isqrt(const Integer& x);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

// floor(sqrt(x)) and ceil(sqrt(x)) for a non-negative rational x, exact.
Integer floor_sqrt(const Rational& x);
Integer ceil_sqrt(const Rational& x);

// Returns true and sets root when x is the square of a rational.
bool exact_sqrt(const Rational& x, Rational& root);

std::int64_t gcd_of(std::span<const std::int64_t> v);
std::int64_t to_int64(const Integer& x);

Rational from_double(double x);
double to_double(const Rational& x);

/// Parses "p/q", an integer, or a finite decimal ("0.125", "-3e-2") exactly.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);

/// A closed interval [lo, hi] with exact rational endpoints.
///
/// Arithmetic rounds outward, so the true value of any expression built from
/// enclosing inputs stays inside the result. Point intervals (lo == hi) are
/// kept exact through +, -, *, / so rational identities are decided exactly;
/// non-point results are snapped outward onto a dyadic grid of
/// kFractionBits bits to keep the endpoints small.
class Interval {
 public:
  static constexpr unsigned kFractionBits = 192;

  Interval() = default;
  Interval(const Rational& exact) : lo_(exact), hi_(exact) {}  // NOLINT
  Interval(std::int64_t exact) : lo_(exact), hi_(exact) {}     // NOLINT
  Interval(Rational lo, Rational hi);

  static Interval from_double(double x) { return Interval(latseg::from_double(x)); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_exact() const { return lo_ == hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }

  Interval operator-() const { return Interval(-hi_, -lo_); }
  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }

  // Sound orderings: true only when every pair of members satisfies it.
  bool certainly_le(const Interval& o) const { return hi_ <= o.lo_; }
  bool certainly_lt(const Interval& o) const { return hi_ < o.lo_; }
  bool certainly_ge(const Interval& o) const { return lo_ >= o.hi_; }
  bool certainly_gt(const Interval& o) const { return lo_ > o.hi_; }

  // Outward snap onto the 2^-bits grid (no-op for point intervals).
  Interval snapped(unsigned bits = kFractionBits) const;

 private:
  void snap_if_inexact();

  Rational lo_{0};
  Rational hi_{0};
};

Interval abs(const Interval& x);
Interval square(const Interval& x);
/// Outward-rounded square root; exact when the argument is a point interval
/// holding the square of a rational. Requires x.lo() >= 0 (tiny negative lower
/// endpoints caused by rounding are clamped to 0).
Interval sqrt(const Interval& x);

/// Euclidean norm of an integer vector as an enclosing interval.
Interval norm(std::span<const std::int64_t> v);
Interval norm(std::span<const Interval> v);

}  // namespace latseg
