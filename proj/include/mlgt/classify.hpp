#ifndef MLGT_CLASSIFY_HPP
#define MLGT_CLASSIFY_HPP

// Rule-based verdicts with provenance: membership of (rho, mu) in the
// non-negativity domain of the two-parameter Mittag-Leffler kernel,
// non-negativity of the three-parameter kernel, and existence of the
// four-parameter gamma-type law. The boundary function separating the
// two-parameter domain is not known in closed form; it is only certified
// to lie between the bounds L and U below, so verdicts in that gap are
// an explicit Unknown carrying the band instead of a guess.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mlgt/dists.hpp"
#include "mlgt/errors.hpp"
#include "mlgt/mittag_leffler.hpp"
#include "mlgt/numeric_util.hpp"

namespace mlgt {

struct DomainBounds {
  double rho;
  double L_val;
  double U_val;
};

enum class Outcome { Exists, NotExists, Unknown };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Exists: return "exists";
    case Outcome::NotExists: return "not-exists";
    default: return "unknown";
  }
}

struct Verdict {
  Outcome outcome;
  std::string rule;  // always set; names the deciding condition
  std::optional<std::pair<double, double>> band;  // set iff rule == "f-band"
  bool boundary = false;  // some comparison was a 1e-12-relative tie
};

namespace detail {

// Three-way comparison that treats values within a 1e-12 relative distance
// as equal and remembers that a knife-edge was crossed. Inequalities are
// then applied exactly as written in the source statements.
class TieCmp {
 public:
  bool ge(double x, double y) { return cmp(x, y) >= 0; }
  bool le(double x, double y) { return cmp(x, y) <= 0; }
  bool gt(double x, double y) { return cmp(x, y) > 0; }
  bool lt(double x, double y) { return cmp(x, y) < 0; }
  bool eq(double x, double y) { return cmp(x, y) == 0; }
  bool boundary() const { return boundary_; }

 private:
  int cmp(double x, double y) {
    double scale = std::max(std::fabs(x), std::fabs(y));
    if (std::fabs(x - y) <= 1e-12 * scale) {
      boundary_ = true;
      return 0;
    }
    return x < y ? -1 : 1;
  }
  bool boundary_ = false;
};

}  // namespace detail

// Certified bounds around the domain boundary for 1 < rho < 2. The split at
// rho = 3/2 follows the sources; the lower bound jumps there, the upper one
// is continuous.
inline DomainBounds bounds_LU(double rho) {
  if (!std::isfinite(rho) || !(rho > 1.0) || !(rho < 2.0))
    throw ParameterError("bounds_LU: rho must lie strictly inside (1, 2)");
  double L, U;
  if (rho < 1.5) {
    double cot = 1.0 / std::tan(kPi * (1.0 - 1.0 / rho));
    L = rho + std::exp(-kPi * cot);
    U = 4.0 * rho / 3.0;
  } else {
    L = 3.0 * (rho - 1.0) + 0.7 * (2.0 - rho) * (2.0 - rho);
    U = 2.0 * rho - 1.0;
  }
  // Mathematically rho < L < U < 3rho/2 holds strictly. Near rho = 1 the
  // exponential increment underflows (it is ~1e-435 at rho = 1.001) and L
  // collapses onto rho in double precision; that only understates the lower
  // bound, so equality is tolerated on the left.
  if (!(rho <= L && L < U && U < 1.5 * rho))
    throw InternalError("bounds_LU: certified ordering rho < L < U < 3rho/2 failed");
  return DomainBounds{rho, L, U};
}

namespace detail {

// f is pinned exactly at the right edge (f(2) = 3); inside (1,2) only the
// certified interval [L, U] is known.
inline std::pair<double, double> f_bounds(double rho) {
  if (rho >= 2.0) return {3.0, 3.0};
  DomainBounds b = bounds_LU(rho);
  return {b.L_val, b.U_val};
}

}  // namespace detail

// Membership of (rho, mu) in {E_{rho,mu}(-t) >= 0 for all t > 0}.
// Exists means "in the domain" (kernel non-negative).
inline Verdict classify_two_param(double rho, double mu) {
  if (!std::isfinite(rho) || !(rho > 0.0) || !std::isfinite(mu) || !(mu > 0.0))
    throw ParameterError("classify_two_param: rho and mu must be finite and positive");
  detail::TieCmp ev;
  auto done = [&](Outcome o, const char* rule,
                  std::optional<std::pair<double, double>> band = {}) {
    return Verdict{o, rule, band, ev.boundary()};
  };
  if (ev.lt(mu, rho)) return done(Outcome::NotExists, "mu<rho");
  if (ev.le(rho, 1.0)) return done(Outcome::Exists, "rho<=1;mu>=rho");
  if (ev.eq(rho, 2.0)) {
    if (ev.ge(mu, 3.0)) return done(Outcome::Exists, "rho=2;mu>=3");
    return done(Outcome::NotExists, "rho=2;mu<3");
  }
  if (ev.gt(rho, 2.0)) return done(Outcome::NotExists, "rho>2");
  DomainBounds b = bounds_LU(rho);
  if (ev.ge(mu, b.U_val)) return done(Outcome::Exists, "U-bound");
  if (ev.le(mu, b.L_val)) return done(Outcome::NotExists, "L-bound");
  return done(Outcome::Unknown, "f-band",
              std::make_pair(b.L_val, b.U_val));
}

// Non-negativity of the three-parameter kernel E^gamma_{rho,mu}(-t), t > 0.
// Exists means "non-negative on the half line". Rule order: hard negative
// conditions I.1-I.3, then the sufficient positive ones II.1 / exact d=2
// threshold / II.3, then the band conditions I.4 / II.2 that involve the
// unknown boundary function, else Unknown with the certified mu-band.
inline Verdict classify_ml_nonneg(const MLParams& p) {
  validate_ml_params(p);
  double rho = p.rho, mu = p.mu, g = p.gamma;
  detail::TieCmp ev;
  auto done = [&](Outcome o, const char* rule,
                  std::optional<std::pair<double, double>> band = {}) {
    return Verdict{o, rule, band, ev.boundary()};
  };
  if (ev.gt(rho, 2.0)) return done(Outcome::NotExists, "I.1");
  if (ev.lt(mu, g * rho)) return done(Outcome::NotExists, "I.2");
  if (ev.eq(rho, 2.0) && ev.lt(mu, 3.0 * g))
    return done(Outcome::NotExists, "I.3");
  if (ev.le(rho, 1.0)) return done(Outcome::Exists, "II.1");  // mu >= rho*g held
  if (ev.eq(rho, 2.0) && ev.ge(g, 1.0))
    return done(Outcome::Exists, "Prop-d2-iff");  // mu >= 3g survived I.3
  double q = mu / rho - g;  // >= 0 here since I.2 did not fire
  if (ev.ge(2.0 * mu, 3.0 * g * rho) && ev.ge(2.0 * q * (q + 0.5), g))
    return done(Outcome::Exists, "II.3");
  std::pair<double, double> f = detail::f_bounds(rho);
  double lo = g * rho + f.first - rho;
  double up = g * rho + f.second - rho;
  if (ev.ge(g, 1.0) && ev.lt(mu, lo)) return done(Outcome::NotExists, "I.4");
  if (ev.le(g, 1.0) && ev.ge(mu, up)) return done(Outcome::Exists, "II.2");
  return done(Outcome::Unknown, "f-band", std::make_pair(lo, up));
}

// Existence of the four-parameter gamma-type law. Same engine as
// classify_ml_nonneg in the (a,b,c,d) coordinates (the two are linked by
// the reciprocal-density kernel with rho=d, mu=c+bd, gamma=a+b); kept
// separate so rules and bands are reported in the native parameters.
// d < 0 is routed through the reciprocal-mirror relation.
inline Verdict classify_existence(const GammaTypeParams& p) {
  validate_params(p);
  if (p.d < 0.0)
    return classify_existence(GammaTypeParams{p.b, p.a, p.c, -p.d});
  double a = p.a, b = p.b, c = p.c, d = p.d;
  detail::TieCmp ev;
  Verdict v;
  auto done = [&](Outcome o, const char* rule,
                  std::optional<std::pair<double, double>> band = {}) {
    return Verdict{o, rule, band, ev.boundary()};
  };
  for (;;) {  // single pass; loop exists only to break out to the gate check
    if (ev.gt(d, 2.0)) { v = done(Outcome::NotExists, "I.1"); break; }
    if (ev.lt(c, a * d)) { v = done(Outcome::NotExists, "I.2"); break; }
    if (ev.eq(d, 2.0) && ev.gt(3.0 * a + b, c)) {
      v = done(Outcome::NotExists, "I.3");
      break;
    }
    if (ev.le(d, 1.0)) { v = done(Outcome::Exists, "II.1"); break; }
    if (ev.eq(d, 2.0) && ev.ge(a + b, 1.0)) {
      v = done(Outcome::Exists, "Prop-d2-iff");  // c >= 3a+b survived I.3
      break;
    }
    double q = c / d - a;  // >= 0 here since I.2 did not fire
    if (ev.ge(2.0 * c / d, 3.0 * a + b) && ev.ge(2.0 * q * (q + 0.5), a + b)) {
      v = done(Outcome::Exists, "II.3");
      break;
    }
    std::pair<double, double> f = detail::f_bounds(d);
    double lo = a * d - d + f.first;
    double up = a * d - d + f.second;
    if (ev.ge(a + b, 1.0) && ev.lt(c, lo)) {
      v = done(Outcome::NotExists, "I.4");
      break;
    }
    if (ev.le(a + b, 1.0) && ev.ge(c, up)) {
      v = done(Outcome::Exists, "II.2");
      break;
    }
    v = done(Outcome::Unknown, "f-band", std::make_pair(lo, up));
    break;
  }
  if (v.outcome == Outcome::Exists) {
    // Transform-growth gate: |cf| <= 1 forces gj > 0, or gj = 0 with
    // dj <= 0. An Exists verdict that violates it is a logic bug.
    double gj = 2.0 - d;
    double dj = a + b - c - 0.5;
    bool pass = gj > 1e-12 || (std::fabs(gj) <= 1e-12 && dj <= 1e-12);
    if (!pass)
      throw InternalError(
          "classify_existence: Exists verdict contradicts the "
          "transform-growth gate");
  }
  return v;
}

// Two-sided product form with denominator pair (c, d): direct transcription
// of the known sufficient/necessary conditions.
inline Verdict ksw_D_exists(double a, double b, double c, double d) {
  if (!std::isfinite(a) || !(a > 0.0) || !std::isfinite(b) || !(b > 0.0) ||
      !std::isfinite(c) || !(c > 0.0) || !std::isfinite(d) || !(d > 0.0))
    throw ParameterError("ksw_D_exists: all four parameters must be finite and positive");
  detail::TieCmp ev;
  auto done = [&](Outcome o, const char* rule) {
    return Verdict{o, rule, std::nullopt, ev.boundary()};
  };
  if (ev.le(std::min(c, d), a)) return done(Outcome::NotExists, "KSW.b-min");
  if (ev.lt(c + d, 3.0 * a + b + 0.5))
    return done(Outcome::NotExists, "KSW.b-sum");
  if (ev.gt(c, a) && ev.gt(d, a) && ev.ge(c + d, 3.0 * a + b + 0.5) &&
      ev.ge(2.0 * (c - a) * (d - a), a + b))
    return done(Outcome::Exists, "KSW.a");
  return done(Outcome::Unknown, "KSW-open");
}

struct RegionCell {
  double rho = 0.0;
  double mu = 0.0;
  double gamma = 1.0;
  Verdict verdict;
  bool scanned = false;        // numeric annotation attached (Unknown cells)
  double numeric_min = 0.0;    // minimum found by the sign scan
  bool numeric_negative = false;  // scan certified negativity (numeric-only)
};

struct RegionMap {
  std::size_t n_rho = 0;
  std::size_t n_mu = 0;
  bool three_param = false;
  std::vector<RegionCell> cells;  // row-major: cells[i*n_mu + j], rho row i

  const RegionCell& at(std::size_t i, std::size_t j) const {
    return cells[i * n_mu + j];
  }
};

// Classify a (rho, mu) grid; cells the rules cannot decide get a sign-scan
// annotation (numeric evidence only, never a certificate). Rows are
// processed concurrently and written to disjoint indices, so assembly is
// deterministic.
inline RegionMap region_map(std::pair<double, double> rho_range,
                            std::pair<double, double> mu_range, double step,
                            std::optional<double> gamma = std::nullopt) {
  if (!std::isfinite(step) || !(step > 0.0))
    throw ParameterError("region_map: step must be finite and positive");
  if (!(rho_range.first > 0.0) || !(mu_range.first > 0.0) ||
      rho_range.second < rho_range.first || mu_range.second < mu_range.first)
    throw ParameterError("region_map: ranges must be positive and ordered");
  if (gamma && (!std::isfinite(*gamma) || !(*gamma > 0.0)))
    throw ParameterError("region_map: gamma must be finite and positive");

  auto count = [&](std::pair<double, double> r) {
    return static_cast<std::size_t>(
               std::floor((r.second - r.first) / step + 1e-9)) + 1;
  };
  RegionMap map;
  map.n_rho = count(rho_range);
  map.n_mu = count(mu_range);
  map.three_param = gamma.has_value();
  map.cells.resize(map.n_rho * map.n_mu);

  double g = gamma.value_or(1.0);
  auto fill_row = [&](std::size_t i) {
    double rho = rho_range.first + static_cast<double>(i) * step;
    for (std::size_t j = 0; j < map.n_mu; j++) {
      double mu = mu_range.first + static_cast<double>(j) * step;
      RegionCell& cell = map.cells[i * map.n_mu + j];
      cell.rho = rho;
      cell.mu = mu;
      cell.gamma = g;
      cell.verdict = gamma ? classify_ml_nonneg(MLParams{rho, mu, g})
                           : classify_two_param(rho, mu);
      if (cell.verdict.outcome == Outcome::Unknown) {
        SignScanReport scan = sign_scan(MLParams{rho, mu, g}, 200.0, 1e-12);
        cell.scanned = true;
        cell.numeric_min = scan.min_value;
        cell.numeric_negative = scan.negativity_found && scan.certified;
      }
    }
  };

  std::size_t workers = std::max<std::size_t>(
      1, std::min<std::size_t>(map.n_rho,
                               std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < map.n_rho; i++) fill_row(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; w++) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < map.n_rho; i += workers) fill_row(i);
      });
    }
    for (std::thread& t : pool) t.join();
  }
  return map;
}

inline void write_region_csv(const RegionMap& map, std::ostream& os) {
  os << "rho,mu,gamma,outcome,rule,numeric_min\n";
  char buf[32];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  for (const RegionCell& cell : map.cells) {
    os << num(cell.rho) << ',' << num(cell.mu) << ',' << num(cell.gamma)
       << ',' << outcome_name(cell.verdict.outcome) << ','
       << cell.verdict.rule << ','
       << (cell.scanned ? num(cell.numeric_min) : std::string()) << '\n';
  }
}

}  // namespace mlgt

#endif  // MLGT_CLASSIFY_HPP
