#ifndef MLGT_MELLIN_HPP
#define MLGT_MELLIN_HPP

// Symbolic algebra over Mellin transforms of gamma type,
//
//   E(X^s) = C * D^s * prod_j Gamma(A_j s + a_j) / prod_k Gamma(B_k s + b_k).
//
// Slopes A_j, B_k and offsets a_j, b_k are exact rationals so factor
// cancellation is exact; C and D are doubles held in log space and compared
// numerically. Equality of two expressions requires both the canonical
// rational data to match exactly and numeric evaluations to agree at sample
// points inside the common strip.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "mlgt/errors.hpp"
#include "mlgt/gamma.hpp"
#include "mlgt/numeric_util.hpp"
#include "mlgt/rational.hpp"

namespace mlgt {

struct GammaFactor {
  Rational slope;   // never zero
  Rational offset;
};

inline bool operator==(const GammaFactor& x, const GammaFactor& y) {
  return x.slope == y.slope && x.offset == y.offset;
}
inline bool operator!=(const GammaFactor& x, const GammaFactor& y) {
  return !(x == y);
}
inline bool factor_less(const GammaFactor& x, const GammaFactor& y) {
  if (x.slope != y.slope) return x.slope < y.slope;
  return x.offset < y.offset;
}

// Strip of validity is an open interval in s; an empty optional endpoint
// means unbounded on that side.
struct MellinExpr {
  std::vector<GammaFactor> numer;
  std::vector<GammaFactor> denom;
  double log_const = 0.0;  // log C
  double log_scale = 0.0;  // log D
  std::optional<Rational> strip_lo;
  std::optional<Rational> strip_hi;
};

// Necessary-condition report after Janson: gamma = sum |A_j| - sum |B_k|,
// delta = sum a_j - sum b_k - (J - K)/2; a law can exist only when gamma > 0
// or gamma = 0 with delta <= 0.
struct JansonReport {
  double gamma_sum = 0.0;
  double delta_sum = 0.0;
  bool passes = false;
};

namespace detail {

inline Rational rat_abs(const Rational& r) { return r.num() < 0 ? -r : r; }

inline bool is_pow2_i64(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

// If a/b = 2^j for integer j, store j and return true (a, b positive).
inline bool pow2_ratio(const Rational& a, const Rational& b, int* j_out) {
  Rational q = a / b;
  std::int64_t n = q.num(), d = q.den();
  if (n == 1 && is_pow2_i64(d)) {
    int j = 0;
    while (d > 1) { d >>= 1; --j; }
    *j_out = j;
    return true;
  }
  if (d == 1 && is_pow2_i64(n)) {
    int j = 0;
    while (n > 1) { n >>= 1; ++j; }
    *j_out = j;
    return true;
  }
  return false;
}

inline void sort_factors(std::vector<GammaFactor>* v) {
  std::sort(v->begin(), v->end(), factor_less);
}

// Remove factors common to numerator and denominator (multiset difference).
// Both vectors must be sorted.
inline void cancel_common(std::vector<GammaFactor>* numer,
                          std::vector<GammaFactor>* denom) {
  std::vector<GammaFactor> n2, d2;
  std::size_t i = 0, j = 0;
  while (i < numer->size() && j < denom->size()) {
    if ((*numer)[i] == (*denom)[j]) {
      ++i;
      ++j;
    } else if (factor_less((*numer)[i], (*denom)[j])) {
      n2.push_back((*numer)[i++]);
    } else {
      d2.push_back((*denom)[j++]);
    }
  }
  while (i < numer->size()) n2.push_back((*numer)[i++]);
  while (j < denom->size()) d2.push_back((*denom)[j++]);
  *numer = std::move(n2);
  *denom = std::move(d2);
}

// One Legendre duplication step on a factor: Gamma(2z) with
// 2z = slope*s + offset becomes
//   2^{slope*s + offset - 1} / sqrt(pi) * Gamma(z) Gamma(z + 1/2).
// sgn is +1 for a numerator factor, -1 for a denominator factor.
inline void split_factor(const GammaFactor& f, int sgn,
                         std::vector<GammaFactor>* out, double* log_const,
                         double* log_scale) {
  Rational half(1, 2);
  GammaFactor g1{f.slope * half, f.offset * half};
  GammaFactor g2{f.slope * half, f.offset * half + half};
  *log_const += sgn * ((f.offset.to_double() - 1.0) * kLn2 - 0.5 * kLnPi);
  *log_scale += sgn * f.slope.to_double() * kLn2;
  out->push_back(g1);
  out->push_back(g2);
}

// Canonical slope target for each power-of-two class of slope magnitudes:
// the class minimum, halved further while its numerator stays even. Every
// slope in the class is then reducible to the target by duplication steps.
inline std::vector<std::pair<Rational, Rational>> slope_targets(
    const MellinExpr& e) {
  std::vector<Rational> mags;
  auto collect = [&](const std::vector<GammaFactor>& v) {
    for (const auto& f : v) {
      Rational m = rat_abs(f.slope);
      bool seen = false;
      for (const auto& x : mags)
        if (x == m) { seen = true; break; }
      if (!seen) mags.push_back(m);
    }
  };
  collect(e.numer);
  collect(e.denom);

  std::vector<int> cls(mags.size(), -1);
  int n_cls = 0;
  for (std::size_t i = 0; i < mags.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = n_cls;
    for (std::size_t k = i + 1; k < mags.size(); ++k) {
      int j;
      if (cls[k] < 0 && pow2_ratio(mags[k], mags[i], &j)) cls[k] = n_cls;
    }
    ++n_cls;
  }

  std::vector<Rational> target(n_cls);
  std::vector<bool> have(n_cls, false);
  for (std::size_t i = 0; i < mags.size(); ++i) {
    int c = cls[i];
    if (!have[c] || mags[i] < target[c]) {
      target[c] = mags[i];
      have[c] = true;
    }
  }
  for (int c = 0; c < n_cls; ++c)
    while (target[c].num() % 2 == 0) target[c] = target[c] / Rational(2);

  std::vector<std::pair<Rational, Rational>> map;
  for (std::size_t i = 0; i < mags.size(); ++i)
    map.emplace_back(mags[i], target[cls[i]]);
  return map;
}

inline void reduce_side(const std::vector<GammaFactor>& in, int sgn,
                        const std::vector<std::pair<Rational, Rational>>& map,
                        std::vector<GammaFactor>* out, double* log_const,
                        double* log_scale) {
  for (const auto& f : in) {
    Rational m = rat_abs(f.slope);
    Rational tgt = m;
    for (const auto& kv : map)
      if (kv.first == m) { tgt = kv.second; break; }
    std::vector<GammaFactor> work{f};
    while (rat_abs(work.front().slope) != tgt) {
      std::vector<GammaFactor> next;
      for (const auto& g : work)
        split_factor(g, sgn, &next, log_const, log_scale);
      work = std::move(next);
    }
    out->insert(out->end(), work.begin(), work.end());
  }
}

}  // namespace detail

inline void validate_expr(const MellinExpr& e) {
  for (const auto& f : e.numer)
    if (f.slope.is_zero()) throw ParameterError("mellin: zero slope factor");
  for (const auto& f : e.denom)
    if (f.slope.is_zero()) throw ParameterError("mellin: zero slope factor");
  if (e.strip_lo && e.strip_hi && !(*e.strip_lo < *e.strip_hi))
    throw ParameterError("mellin: empty strip");
}

inline MellinExpr make_expr(std::vector<GammaFactor> numer,
                            std::vector<GammaFactor> denom, double log_const,
                            double log_scale,
                            std::optional<Rational> strip_lo,
                            std::optional<Rational> strip_hi) {
  MellinExpr e;
  e.numer = std::move(numer);
  e.denom = std::move(denom);
  e.log_const = log_const;
  e.log_scale = log_scale;
  e.strip_lo = std::move(strip_lo);
  e.strip_hi = std::move(strip_hi);
  validate_expr(e);
  return e;
}

// Multiplicative identity: E(1^s) = 1 for all s.
inline MellinExpr expr_unit() { return MellinExpr{}; }

// Gamma law: E(G_c^s) = Gamma(c+s)/Gamma(c), s > -c.
inline MellinExpr expr_gamma(const Rational& c) {
  if (!(c > Rational(0))) throw ParameterError("expr_gamma: c must be positive");
  MellinExpr e;
  e.numer.push_back({Rational(1), c});
  e.log_const = -lgamma(c.to_double());
  e.strip_lo = -c;
  return e;
}

// Beta law: E(B_{a,b}^s) = Gamma(a+b)/Gamma(a) * Gamma(a+s)/Gamma(a+b+s),
// s > -a.
inline MellinExpr expr_beta(const Rational& a, const Rational& b) {
  if (!(a > Rational(0)) || !(b > Rational(0)))
    throw ParameterError("expr_beta: a and b must be positive");
  MellinExpr e;
  e.numer.push_back({Rational(1), a});
  e.denom.push_back({Rational(1), a + b});
  e.log_const = lgamma((a + b).to_double()) - lgamma(a.to_double());
  e.strip_lo = -a;
  return e;
}

// Wright-density law with a power tilt:
// E(M_{alpha,beta,t}^s) = Gamma(alpha(1+t)+beta)/Gamma(1+t)
//                         * Gamma(1+t+s)/Gamma(alpha(1+t)+beta+alpha s),
// s > -1-t. Exists iff alpha in [0,1], beta >= 0; alpha = 1 is the Beta law
// and is constructed through expr_beta instead.
inline MellinExpr expr_M(const Rational& alpha, const Rational& beta,
                         const Rational& t = Rational(0)) {
  if (!(alpha >= Rational(0)) || !(alpha < Rational(1)) ||
      !(beta >= Rational(0)))
    throw ParameterError("expr_M: need alpha in [0,1) and beta >= 0");
  if (!(t > Rational(-1))) throw ParameterError("expr_M: need t > -1");
  if (alpha.is_zero()) {
    // Slope-zero factor Gamma(beta) cancels against the constant exactly.
    return expr_gamma(Rational(1) + t);
  }
  Rational head = alpha * (Rational(1) + t) + beta;
  MellinExpr e;
  e.numer.push_back({Rational(1), Rational(1) + t});
  e.denom.push_back({alpha, head});
  e.log_const =
      lgamma(head.to_double()) - lgamma((Rational(1) + t).to_double());
  e.strip_lo = -(Rational(1) + t);
  return e;
}

// Gamma-ratio law: E(X_{a,b,c,d}^s) = Gamma(c)/(Gamma(a)Gamma(b))
//   * Gamma(a+s)Gamma(b-s)/Gamma(c+ds), -a < s < b. Negative d is the
// reciprocal law: expr_X(a,b,c,-d) has the same data as
// power(expr_X(b,a,c,d), -1).
inline MellinExpr expr_X(const Rational& a, const Rational& b,
                         const Rational& c, const Rational& d) {
  if (!(a > Rational(0)) || !(b > Rational(0)) || !(c > Rational(0)))
    throw ParameterError("expr_X: a, b, c must be positive");
  if (d.is_zero()) throw ParameterError("expr_X: d must be nonzero");
  MellinExpr e;
  e.numer.push_back({Rational(1), a});
  e.numer.push_back({Rational(-1), b});
  e.denom.push_back({d, c});
  e.log_const =
      lgamma(c.to_double()) - lgamma(a.to_double()) - lgamma(b.to_double());
  e.strip_lo = -a;
  e.strip_hi = b;
  detail::sort_factors(&e.numer);
  return e;
}

// Independent product: transforms multiply, strips intersect.
inline MellinExpr product(const MellinExpr& e1, const MellinExpr& e2) {
  MellinExpr e;
  e.numer = e1.numer;
  e.numer.insert(e.numer.end(), e2.numer.begin(), e2.numer.end());
  e.denom = e1.denom;
  e.denom.insert(e.denom.end(), e2.denom.begin(), e2.denom.end());
  e.log_const = e1.log_const + e2.log_const;
  e.log_scale = e1.log_scale + e2.log_scale;
  e.strip_lo = e1.strip_lo;
  if (e2.strip_lo && (!e.strip_lo || *e2.strip_lo > *e.strip_lo))
    e.strip_lo = e2.strip_lo;
  e.strip_hi = e1.strip_hi;
  if (e2.strip_hi && (!e.strip_hi || *e2.strip_hi < *e.strip_hi))
    e.strip_hi = e2.strip_hi;
  if (e.strip_lo && e.strip_hi && !(*e.strip_lo < *e.strip_hi))
    throw ParameterError("product: strips do not overlap");
  detail::sort_factors(&e.numer);
  detail::sort_factors(&e.denom);
  return e;
}

// Law of X^p: s -> p*s in the transform, so slopes and the scale pick up a
// factor p and the strip rescales (flipping when p < 0).
inline MellinExpr power(const MellinExpr& e, const Rational& p) {
  if (p.is_zero()) throw ParameterError("power: p must be nonzero");
  MellinExpr r;
  r.numer = e.numer;
  r.denom = e.denom;
  for (auto& f : r.numer) f.slope = f.slope * p;
  for (auto& f : r.denom) f.slope = f.slope * p;
  r.log_const = e.log_const;
  r.log_scale = e.log_scale * p.to_double();
  if (p > Rational(0)) {
    if (e.strip_lo) r.strip_lo = *e.strip_lo / p;
    if (e.strip_hi) r.strip_hi = *e.strip_hi / p;
  } else {
    if (e.strip_hi) r.strip_lo = *e.strip_hi / p;
    if (e.strip_lo) r.strip_hi = *e.strip_lo / p;
  }
  detail::sort_factors(&r.numer);
  detail::sort_factors(&r.denom);
  return r;
}

// Canonical form: cancel common factors, reduce every slope to its class
// target by Legendre duplication, cancel again, sort. Idempotent.
inline MellinExpr duplication_rewrite(const MellinExpr& e) {
  MellinExpr c;
  c.log_const = e.log_const;
  c.log_scale = e.log_scale;
  c.strip_lo = e.strip_lo;
  c.strip_hi = e.strip_hi;
  c.numer = e.numer;
  c.denom = e.denom;
  detail::sort_factors(&c.numer);
  detail::sort_factors(&c.denom);
  detail::cancel_common(&c.numer, &c.denom);

  auto map = detail::slope_targets(c);
  std::vector<GammaFactor> numer2, denom2;
  detail::reduce_side(c.numer, +1, map, &numer2, &c.log_const, &c.log_scale);
  detail::reduce_side(c.denom, -1, map, &denom2, &c.log_const, &c.log_scale);
  c.numer = std::move(numer2);
  c.denom = std::move(denom2);
  detail::sort_factors(&c.numer);
  detail::sort_factors(&c.denom);
  detail::cancel_common(&c.numer, &c.denom);
  return c;
}

// Numeric value of the transform at a point strictly inside the strip.
inline double eval_at(const MellinExpr& e, double s) {
  if (e.strip_lo && !(s > e.strip_lo->to_double()))
    throw ParameterError("eval_at: s outside strip");
  if (e.strip_hi && !(s < e.strip_hi->to_double()))
    throw ParameterError("eval_at: s outside strip");
  double acc = e.log_const + e.log_scale * s;
  int sign = 1;
  for (const auto& f : e.numer) {
    int sg;
    double lg = lgamma_signed(f.slope.to_double() * s + f.offset.to_double(), &sg);
    if (sg == 0) return std::numeric_limits<double>::infinity();
    acc += lg;
    sign *= sg;
  }
  for (const auto& f : e.denom) {
    int sg;
    double lg = lgamma_signed(f.slope.to_double() * s + f.offset.to_double(), &sg);
    if (sg == 0) return 0.0;  // pole in the denominator
    acc -= lg;
    sign *= sg;
  }
  return sign * std::exp(acc);
}

namespace detail {

// Five deterministic probe points strictly inside the open interval.
inline std::vector<double> probe_points(const std::optional<Rational>& lo,
                                        const std::optional<Rational>& hi) {
  std::vector<double> pts;
  if (lo && hi) {
    double a = lo->to_double(), b = hi->to_double();
    for (int k = 1; k <= 5; ++k) pts.push_back(a + (b - a) * k / 6.0);
  } else if (lo) {
    double a = lo->to_double();
    double u = std::fmax(1.0, std::fabs(a));
    for (int k = 1; k <= 5; ++k) pts.push_back(a + u * k / 6.0);
  } else if (hi) {
    double b = hi->to_double();
    double u = std::fmax(1.0, std::fabs(b));
    for (int k = 1; k <= 5; ++k) pts.push_back(b - u * k / 6.0);
  } else {
    for (int k = 1; k <= 5; ++k) pts.push_back(0.5 * (k - 3));
  }
  return pts;
}

}  // namespace detail

// Exact comparison of canonical rational data plus numeric agreement at five
// probe points in the common strip. Both must hold.
inline bool equals(const MellinExpr& e1, const MellinExpr& e2, double tol) {
  std::optional<Rational> lo = e1.strip_lo;
  if (e2.strip_lo && (!lo || *e2.strip_lo > *lo)) lo = e2.strip_lo;
  std::optional<Rational> hi = e1.strip_hi;
  if (e2.strip_hi && (!hi || *e2.strip_hi < *hi)) hi = e2.strip_hi;
  if (lo && hi && !(*lo < *hi))
    throw ParameterError("equals: strips do not overlap");

  MellinExpr c1 = duplication_rewrite(e1);
  MellinExpr c2 = duplication_rewrite(e2);
  if (c1.numer != c2.numer || c1.denom != c2.denom) return false;

  for (double s : detail::probe_points(lo, hi)) {
    double v1 = eval_at(e1, s);
    double v2 = eval_at(e2, s);
    if (!std::isfinite(v1) || !std::isfinite(v2)) return false;
    if (std::fabs(v1 - v2) > tol * std::fmax(1.0, std::fmax(std::fabs(v1),
                                                            std::fabs(v2))))
      return false;
  }
  return true;
}

// Janson's necessary condition for a gamma-type transform to belong to a
// positive random variable. gamma and delta are computed exactly; the flag
// is exact as well.
inline JansonReport janson_gate(const MellinExpr& e) {
  Rational gamma(0), delta(0);
  for (const auto& f : e.numer) {
    gamma = gamma + detail::rat_abs(f.slope);
    delta = delta + f.offset;
  }
  for (const auto& f : e.denom) {
    gamma = gamma - detail::rat_abs(f.slope);
    delta = delta - f.offset;
  }
  auto j = static_cast<std::int64_t>(e.numer.size());
  auto k = static_cast<std::int64_t>(e.denom.size());
  delta = delta - Rational(j - k, 2);
  JansonReport rep;
  rep.gamma_sum = gamma.to_double();
  rep.delta_sum = delta.to_double();
  rep.passes = gamma > Rational(0) ||
               (gamma == Rational(0) && delta <= Rational(0));
  return rep;
}

}  // namespace mlgt

#endif  // MLGT_MELLIN_HPP
