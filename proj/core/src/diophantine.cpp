#include "latseg/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace latseg {

namespace {

// Nearest integer, halves rounded away from zero.
Integer round_half_away(const Rational& x) {
  const Rational half(1, 2);
  if (x >= 0) return floor(x + half);
  return -floor(-x + half);
}

std::int64_t checked_power(std::int64_t base, int exp, std::int64_t limit) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / base) return -1;
    r *= base;
  }
  return r;
}

enum class Decision { Accept, Reject, Undecided };

struct Certified {
  Decision decision;
  std::vector<std::int64_t> p;
  Interval max_error;
};

Certified certify_candidate(std::span<const Interval> xi, std::int64_t q, std::int64_t H) {
  const Interval bound(Rational(1, H));
  Certified c{Decision::Accept, {}, Interval(0)};
  Rational err_lo = 0, err_hi = 0;
  for (const Interval& x : xi) {
    const Interval qx = Interval(q) * x;
    const Integer p = round_half_away(qx.mid());
    const Interval e = abs(qx - Interval(Rational(p)));
    c.p.push_back(to_int64(p));
    err_lo = std::max(err_lo, e.lo());
    err_hi = std::max(err_hi, e.hi());
    if (e.certainly_gt(bound)) {
      c.decision = Decision::Reject;
    } else if (!e.certainly_le(bound) && c.decision == Decision::Accept) {
      c.decision = Decision::Undecided;
    }
  }
  c.max_error = Interval(err_lo, err_hi);
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Dirichlet

DirichletResult dirichlet_approx(std::span<const Interval> xi, std::int64_t H, std::int64_t max_q) {
  if (H < 1) throw DomainError("Dirichlet parameter H must be at least 1");
  if (xi.empty()) throw DomainError("Dirichlet approximation needs at least one target");
  const int m = static_cast<int>(xi.size());
  const std::int64_t limit = checked_power(H, m, max_q);
  if (limit < 0)
    throw BudgetError("Dirichlet search range H^m = " + std::to_string(H) + "^" + std::to_string(m) +
                      " exceeds the search budget");

  std::vector<double> xd, wd;
  for (const Interval& x : xi) {
    xd.push_back(to_double(x.mid()));
    wd.push_back(to_double(x.width()));
    if (!std::isfinite(xd.back())) throw DomainError("Dirichlet target is not finite");
  }
  const double inv_h = 1.0 / static_cast<double>(H);

  for (std::int64_t q = 1; q <= limit; ++q) {
    const double qd = static_cast<double>(q);
    bool rejected = false;
    for (std::size_t i = 0; i < xd.size(); ++i) {
      const double x = qd * xd[i];
      const double e = std::abs(x - std::round(x));
      const double margin = 1e-12 * (1.0 + std::abs(x)) + qd * wd[i];
      if (e > inv_h + margin) {
        rejected = true;
        break;
      }
    }
    if (rejected) continue;

    Certified c = certify_candidate(xi, q, H);
    if (c.decision == Decision::Reject) continue;
    if (c.decision == Decision::Undecided)
      throw PrecisionError("target precision cannot decide the Dirichlet inequality at q = " + std::to_string(q));
    return DirichletResult{q, std::move(c.p), H, c.max_error};
  }
  // Unreachable for finite targets: the pigeonhole principle guarantees a q.
  throw PrecisionError("no Dirichlet denominator certified in 1..H^m");
}

bool verify_dirichlet(std::span<const Interval> xi, const DirichletResult& r) {
  if (r.q < 1 || r.p.size() != xi.size()) return false;
  Integer hm = 1;
  for (std::size_t i = 0; i < xi.size(); ++i) hm *= r.H;
  if (Integer(r.q) > hm) return false;
  // |xi - p/q| <= 1/(qH) checked in that form.
  const Interval bound(Rational(1, Integer(r.q) * r.H));
  for (std::size_t i = 0; i < xi.size(); ++i) {
    const Interval diff = abs(xi[i] - Interval(Rational(r.p[i], r.q)));
    if (!diff.certainly_le(bound)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Normalized difference

NormalizedDifference normalized_difference_bound(std::span<const Rational> alpha, std::span<const Rational> beta) {
  if (alpha.size() != beta.size() || alpha.empty()) throw DomainError("vectors must have the same positive length");
  bool alpha_zero = true, beta_zero = true;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    alpha_zero = alpha_zero && alpha[i] == 0;
    beta_zero = beta_zero && beta[i] == 0;
  }
  if (alpha_zero || beta_zero) throw DomainError("normalized difference of a zero vector");

  Rational A = 0, B = 0, dot = 0;
  bool parallel = true;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    A += alpha[i] * alpha[i];
    B += beta[i] * beta[i];
    dot += alpha[i] * beta[i];
    for (std::size_t j = i + 1; j < alpha.size() && parallel; ++j)
      parallel = alpha[i] * beta[j] == alpha[j] * beta[i];
  }

  NormalizedDifference r;
  if (parallel && dot > 0) {
    r.lhs = Interval(0);
  } else {
    // |a^ - b^|^2 = 2 - 2 (a . b) / (|a| |b|)
    const Interval cosine = Interval(dot) / sqrt(Interval(A * B));
    Interval sq = Interval(2) - Interval(2) * cosine;
    if (sq.lo() < 0) sq = Interval(Rational(0), std::max(Rational(0), sq.hi()));
    r.lhs = sqrt(sq);
  }
  Rational diff2 = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) diff2 += (alpha[i] - beta[i]) * (alpha[i] - beta[i]);
  r.rhs = Interval(2) * sqrt(Interval(diff2 / A));
  r.holds = r.lhs.certainly_le(r.rhs);
  return r;
}

NormalizedDifference normalized_difference_bound(std::span<const double> alpha, std::span<const double> beta) {
  std::vector<Rational> a, b;
  for (double x : alpha) a.push_back(from_double(x));
  for (double x : beta) b.push_back(from_double(x));
  return normalized_difference_bound(a, b);
}

// ---------------------------------------------------------------------------
// Direction approximation

bool positively_parallel(const Direction& beta, std::span<const std::int64_t> a) {
  const auto w = beta.exact_vector();
  if (w.size() != a.size()) return false;
  Rational dot = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    dot += w[i] * a[i];
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] * a[j] != w[j] * a[i]) return false;
  }
  return dot > 0;
}

Interval direction_distance(const Direction& beta, std::span<const std::int64_t> a) {
  if (static_cast<int>(a.size()) != beta.dimension()) throw DomainError("vector has the wrong dimension");
  if (gcd_of(a) == 0) throw DomainError("approximating vector must be nonzero");
  if (positively_parallel(beta, a)) return Interval(0);
  const auto w = beta.exact_vector();
  Rational W = 0, A = 0, dot = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    W += w[i] * w[i];
    A += Rational(a[i]) * a[i];
    dot += w[i] * a[i];
  }
  const Interval cosine = Interval(dot) / sqrt(Interval(W * A));
  Interval sq = Interval(2) - Interval(2) * cosine;
  if (sq.lo() < 0) sq = Interval(Rational(0), std::max(Rational(0), sq.hi()));
  return sqrt(sq);
}

DirectionApproximation approx_direction(const Direction& beta, std::int64_t H) {
  if (H < 1) throw DomainError("approximation parameter H must be at least 1");
  const int d = beta.dimension();
  const auto w = beta.exact_vector();

  std::size_t j = 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (abs(w[i]) > abs(w[j])) j = i;

  std::vector<Interval> xi;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i != j) xi.emplace_back(w[i] / w[j]);

  const DirichletResult dr = dirichlet_approx(xi, H);

  DirectionApproximation r;
  r.H = H;
  r.exponent = d - 1;
  r.q = dr.q;
  r.a.resize(w.size());
  for (std::size_t i = 0, k = 0; i < w.size(); ++i) r.a[i] = (i == j) ? dr.q : dr.p[k++];
  if (w[j] < 0)
    for (auto& x : r.a) x = -x;

  Integer A = 0;
  for (auto x : r.a) A += Integer(x) * x;
  r.norm = sqrt(Interval(Rational(A)));
  r.angle = direction_distance(beta, r.a);

  // |a| <= sqrt(4d-3) q and |beta - a/|a|| <= 2 sqrt(d-1) / (qH).
  const Interval qH(Rational(Integer(dr.q) * H));
  const Interval per_q_angle = Interval(2) * sqrt(Interval(d - 1)) / qH;
  r.q_bounds_certified = A <= Integer(4 * d - 3) * dr.q * dr.q && r.angle.certainly_le(per_q_angle);

  Integer h_pow = 1;
  for (int i = 0; i < d - 1; ++i) h_pow *= H;
  r.norm_constant = sqrt(Interval(4 * d - 3));
  r.norm_bound = r.norm_constant * Interval(Rational(h_pow));
  r.norm_certified = A <= Integer(4 * d - 3) * h_pow * h_pow;

  r.angle_constant = Interval(2) * sqrt(Interval(4 * d * d - 7 * d + 3));
  r.angle_bound = r.angle_constant / (r.norm * Interval(H));
  r.angle_certified = r.angle.certainly_le(r.angle_bound);
  return r;
}

DirectionApproximation approx_direction_rational_quotients(const Direction& beta, std::int64_t H) {
  if (H < 1) throw DomainError("approximation parameter H must be at least 1");
  const auto& rq = beta.quotients();
  if (!rq) throw DomainError("direction carries no rational quotients");
  const int d = beta.dimension();
  const int s = rq->s();
  if (s < 1 || s > d - 2)
    throw DomainError("rational-quotient approximation needs 1 <= s <= d-2 (got s = " + std::to_string(s) + ")");

  // Oriented along beta: masked entries are the declared fractions times sign(k).
  const auto w = beta.exact_vector();
  std::set<std::size_t> mask(rq->indices.begin(), rq->indices.end());

  Integer m_prod = 1;
  for (const Rational& v : rq->values) m_prod *= boost::multiprecision::denominator(v);
  const std::int64_t m = to_int64(m_prod);

  std::vector<std::size_t> free_idx;
  std::vector<Interval> xi;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (mask.count(i)) continue;
    free_idx.push_back(i);
    xi.emplace_back(w[i]);
  }
  const DirichletResult dr = dirichlet_approx(xi, H);

  DirectionApproximation r;
  r.H = H;
  r.exponent = d - 1 - s;
  r.q = dr.q * m;
  r.a.assign(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!mask.count(i)) continue;
    const Rational v = Rational(r.q) * w[i];
    if (boost::multiprecision::denominator(v) != 1) throw DomainError("masked coordinate did not scale to an integer");
    r.a[i] = to_int64(boost::multiprecision::numerator(v));
  }
  for (std::size_t k = 0; k < free_idx.size(); ++k) r.a[free_idx[k]] = m * dr.p[k];

  Integer A = 0;
  for (auto x : r.a) A += Integer(x) * x;
  if (A == 0) throw DomainError("approximating vector vanished");
  r.norm = sqrt(Interval(Rational(A)));
  r.angle = direction_distance(beta, r.a);

  // The bounds hold for the scalar K = |w|, for which w / K is the exact unit
  // direction; it agrees with the declared |k| up to the input tolerance.
  Rational W = 0;
  for (const Rational& x : w) W += x * x;
  const Interval K = sqrt(Interval(W));
  const Interval one_k = Interval(1) + K;
  const Interval dd(d);
  const Interval free_count_root = sqrt(Interval(d - 1 - s));

  const Interval per_q_norm = one_k * dd * Interval(r.q);
  const Interval per_q_angle = Interval(2) * free_count_root / (K * Interval(Rational(Integer(dr.q) * H)));
  r.q_bounds_certified = r.norm.certainly_le(per_q_norm) && r.angle.certainly_le(per_q_angle);

  Integer h_pow = 1;
  for (int i = 0; i < d - 1 - s; ++i) h_pow *= H;
  r.norm_constant = one_k * dd * Interval(m);
  r.norm_bound = r.norm_constant * Interval(Rational(h_pow));
  r.norm_certified = r.norm.certainly_le(r.norm_bound);

  r.angle_constant = Interval(2) * one_k * dd * Interval(m) * free_count_root / K;
  r.angle_bound = r.angle_constant / (r.norm * Interval(H));
  r.angle_certified = r.angle.certainly_le(r.angle_bound);
  return r;
}

}  // namespace latseg
