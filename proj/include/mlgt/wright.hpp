#ifndef MLGT_WRIGHT_HPP
#define MLGT_WRIGHT_HPP

// Wright function phi(-alpha, beta; -x) = sum_n (-x)^n / (n! Gamma(beta - alpha n))
// for 0 <= alpha < 1, beta >= 0, x >= 0. The series is entire but suffers the
// usual alternating-series cancellation once x grows; past that point we invert
// the Mellin transform Gamma(u)/Gamma(beta + alpha u) on a vertical line through
// the real saddle psi(c) - alpha psi(beta + alpha c) = ln x, where the integrand
// peaks positively and no cancellation occurs.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "mlgt/errors.hpp"
#include "mlgt/gamma.hpp"
#include "mlgt/mittag_leffler.hpp"
#include "mlgt/numeric_util.hpp"

namespace mlgt {
namespace detail {

// Log-magnitude + sign table of rgamma(beta - alpha n) and ln n!, reused
// across x for fixed (alpha, beta).
struct WrightSeriesCache {
  double alpha = -1.0, beta = -1.0;
  std::vector<double> lg;   // -ln |Gamma(beta - alpha n)| i.e. ln|rgamma|
  std::vector<int> sg;      // sign of rgamma(beta - alpha n); 0 at poles
  std::vector<double> lnfact;

  void reset(double a, double b) {
    if (a == alpha && b == beta) return;
    alpha = a;
    beta = b;
    lg.clear();
    sg.clear();
    lnfact.clear();
    lnfact.push_back(0.0);
  }
  void ensure(std::size_t n) {
    while (lg.size() <= n) {
      std::size_t k = lg.size();
      int s = 0;
      double l = lgamma_signed(beta - alpha * k, &s);
      lg.push_back(std::isinf(l) ? -std::numeric_limits<double>::infinity() : -l);
      sg.push_back(s);
      if (lnfact.size() <= n)
        lnfact.push_back(lnfact.back() + std::log(static_cast<double>(lnfact.size())));
    }
    while (lnfact.size() <= n + 1)
      lnfact.push_back(lnfact.back() + std::log(static_cast<double>(lnfact.size())));
  }
};

inline Cand wright_series(double alpha, double beta, double x,
                          WrightSeriesCache& cache) {
  cache.reset(alpha, beta);
  Cand c;
  double lx = std::log(x);
  NeumaierSum sum;
  double sum_abs = 0.0;
  const std::size_t n_cap = 20000;
  double last_abs = std::numeric_limits<double>::infinity();
  std::size_t n = 0;
  int small_streak = 0;
  for (;; ++n) {
    if (n >= n_cap) return c;
    cache.ensure(n);
    double term = 0.0, a = 0.0;
    if (cache.sg[n] != 0) {
      double lt = n * lx - cache.lnfact[n] + cache.lg[n];
      if (lt > 690.0) return c;  // blow-up: cancellation beyond rescue
      a = std::exp(lt);
      term = (n % 2 == 0 ? 1.0 : -1.0) * cache.sg[n] * a;
    }
    sum.add(term);
    sum_abs += a;
    double floor_tol =
        1e-18 * std::fmax(std::fabs(sum.value()), 1e-4 * sum_abs) + 1e-305;
    if (a < floor_tol && a <= last_abs) {
      if (++small_streak >= 3 && n >= 2) break;
    } else {
      small_streak = 0;
    }
    if (a > 0.0) last_abs = a;
  }
  double eps = std::numeric_limits<double>::epsilon();
  double dn = static_cast<double>(n);
  double last_term =
      cache.sg[n] != 0 ? std::exp(n * lx - cache.lnfact[n] + cache.lg[n]) : 0.0;
  c.value = sum.value();
  c.err = 10.0 * last_term +
          eps * sum_abs * (10.0 + dn * (std::log(dn + 2.0) + 3.0)) +
          10.0 * std::fabs(sum.value()) * eps;
  c.ok = std::isfinite(c.value) && std::isfinite(c.err);
  return c;
}

// Saddle abscissa: psi(c) - alpha psi(beta + alpha c) = ln x, increasing in c.
inline double wright_saddle(double alpha, double beta, double x) {
  double lx = std::log(x);
  double lo = 1e-3, hi = 1e9;
  auto g = [&](double c) { return digamma(c) - alpha * digamma(beta + alpha * c); };
  if (g(lo) >= lx) return lo;
  for (int it = 0; it < 200 && g(hi) < lx; ++it) hi *= 4.0;
  for (int it = 0; it < 100; ++it) {
    double mid = std::sqrt(lo * hi);
    (g(mid) < lx ? lo : hi) = mid;
  }
  return std::sqrt(lo * hi);
}

struct WrightMbCache {
  double alpha = 0.0, beta = 0.0;
  int jwidth = 0;   // bucket width exponent: width = 2^-jwidth in ln x
  int xbucket = 0;
  double c = 0.0, h = 0.0;
  double lg0 = 0.0;                        // ln A(0), peak log magnitude
  std::vector<std::complex<double>> a;     // A(y_k) / A(0)
  double sum_abs = 0.0;
};

inline std::complex<double> wright_mb_log(double alpha, double beta, double c,
                                          double y) {
  return clgamma(std::complex<double>(c, y)) -
         clgamma(std::complex<double>(beta + alpha * c, alpha * y));
}

inline void wright_mb_extend(WrightMbCache& cb, double y_cap) {
  for (;;) {
    double y = cb.h * cb.a.size();
    if (y > y_cap || cb.a.size() > 400000) break;
    if (!cb.a.empty() && y > 6.0 && std::abs(cb.a.back()) < 1e-19) break;
    std::complex<double> lg = wright_mb_log(cb.alpha, cb.beta, cb.c, y) - cb.lg0;
    std::complex<double> v =
        lg.real() < -745.0 ? std::complex<double>(0.0, 0.0) : std::exp(lg);
    cb.a.push_back(v);
    cb.sum_abs += std::abs(v);
  }
}

inline void wright_mb_refine(WrightMbCache& cb) {
  std::vector<std::complex<double>> fine(cb.a.size() * 2 - 1);
  cb.sum_abs = 0.0;
  for (std::size_t k = 0; k < cb.a.size(); ++k) {
    fine[2 * k] = cb.a[k];
    cb.sum_abs += std::abs(cb.a[k]);
  }
  cb.h *= 0.5;
  for (std::size_t k = 1; k + 1 < fine.size(); k += 2) {
    std::complex<double> lg =
        wright_mb_log(cb.alpha, cb.beta, cb.c, cb.h * static_cast<double>(k)) -
        cb.lg0;
    fine[k] = lg.real() < -745.0 ? std::complex<double>(0.0, 0.0) : std::exp(lg);
    cb.sum_abs += std::abs(fine[k]);
  }
  cb.a.swap(fine);
}

inline double wright_mb_trapezoid(const WrightMbCache& cb, double lx,
                                  std::size_t stride) {
  double hs = cb.h * stride;
  std::complex<double> rot = std::polar(1.0, -hs * lx);
  std::complex<double> w(1.0, 0.0);
  NeumaierSum s;
  s.add(0.5 * cb.a[0].real());
  std::size_t steps = 0;
  for (std::size_t k = stride; k < cb.a.size(); k += stride) {
    w *= rot;
    if (++steps % 128 == 0) w = std::polar(1.0, -hs * lx * static_cast<double>(steps));
    s.add((cb.a[k] * w).real());
  }
  return hs * s.value();
}

inline Cand wright_mb(double alpha, double beta, double x,
                      std::vector<WrightMbCache>& store) {
  Cand out;
  double lx = std::log(x);
  // The vertical line sits near the saddle, which grows like x^{1/(1-alpha)}.
  // Sharing one abscissa across a log-x bucket costs a cancellation factor
  // exp(c d^2 / (2(1-alpha))) for an offset d, so the bucket width must
  // shrink like sqrt((1-alpha)/c). Widths are quantized to powers of two so
  // the cache key stays discrete.
  double c_rough =
      std::pow(x * std::pow(alpha, alpha), 1.0 / (1.0 - alpha)) + 2.0;
  double w_ideal = std::isfinite(c_rough)
                       ? 0.5 * std::sqrt((1.0 - alpha) / c_rough)
                       : 1e-9;
  int jwidth = static_cast<int>(std::ceil(-std::log2(std::fmin(w_ideal, 0.45))));
  jwidth = std::clamp(jwidth, 2, 30);
  double wq = std::ldexp(1.0, -jwidth);
  int xbucket = static_cast<int>(std::lround(lx / wq));
  WrightMbCache* cb = nullptr;
  for (auto& e : store)
    if (e.alpha == alpha && e.beta == beta && e.jwidth == jwidth &&
        e.xbucket == xbucket)
      cb = &e;
  if (!cb) {
    if (store.size() >= 256) store.erase(store.begin());
    store.emplace_back();
    cb = &store.back();
    cb->alpha = alpha;
    cb->beta = beta;
    cb->jwidth = jwidth;
    cb->xbucket = xbucket;
    cb->c = std::fmax(1.2, wright_saddle(alpha, beta, std::exp(xbucket * wq)));
    cb->h = std::fmin(0.3, kPi / (4.0 * (1.0 + std::fabs(lx))));
    cb->lg0 = wright_mb_log(alpha, beta, cb->c, 0.0).real();
    cb->a.clear();
    cb->sum_abs = 0.0;
  }
  double kappa = kPi * (1.0 - alpha) / 2.0;
  // |Gamma(c+iy)| decays like a gaussian of width sqrt(c/(1-alpha)) before
  // the asymptotic e^{-kappa y} regime takes over near y ~ c.
  double y_cap = std::fmin(
      52.0 / kappa + 10.0 + std::sqrt(88.0 * (cb->c + 1.0) / (1.0 - alpha)),
      30000.0);
  double h_req = std::fmin(0.3, kPi / (4.0 * (1.0 + std::fabs(lx))));
  while (cb->h > h_req * (1.0 + 1e-9)) wright_mb_refine(*cb);
  wright_mb_extend(*cb, y_cap);

  double lscale = cb->lg0 - cb->c * lx;
  if (lscale < -740.0) {  // value underflows; report it as such
    out.value = 0.0;
    out.err = 1e-300;
    out.ok = true;
    return out;
  }
  double scale = std::exp(lscale) / kPi;
  double y_last = cb->h * (cb->a.size() - 1.0);
  double rate = std::atan2(y_last, cb->c) -
                alpha * std::atan2(alpha * y_last, beta + alpha * cb->c);
  rate = std::fmax(rate, 1e-2);  // local decay only speeds up beyond y_last
  const double eps = std::numeric_limits<double>::epsilon();
  for (int pass = 0;; ++pass) {
    double t1 = wright_mb_trapezoid(*cb, lx, 1);
    double t2 = wright_mb_trapezoid(*cb, lx, 2);
    double v = scale * t1;
    double diff = std::fabs(t1 - t2) * scale;
    double tail = std::abs(cb->a.back()) * scale * (1.0 / rate + cb->h);
    // Roundoff floor: sum_abs*h is invariant under refinement, and the node
    // logs carry eps-relative lgamma noise amplified by their magnitudes.
    // Neither shrinks with h, so they do not gate the loop.
    double floor_err =
        eps * cb->sum_abs * cb->h * scale * (20.0 + std::fabs(lx)) +
        2.0 * eps * (std::fabs(cb->lg0) + cb->c * std::fabs(lx) + 10.0) *
            std::fabs(v);
    out.err = diff + tail + floor_err;
    // Stop once the reducible part is below the roundoff floor: past that
    // point refinement cannot improve the honest total.
    double target = 1e-13 * (std::fabs(v) + 1e-290) + 0.5 * floor_err;
    if (diff + tail <= target || pass >= 3 || cb->a.size() > 300000) {
      out.value = v;
      out.ok = std::isfinite(v) && std::isfinite(out.err);
      return out;
    }
    wright_mb_refine(*cb);
    wright_mb_extend(*cb, y_cap);
  }
}

}  // namespace detail

// Context analogous to EvalContext for repeated Wright evaluations.
struct WrightContext {
  detail::WrightSeriesCache series;
  std::vector<detail::WrightMbCache> mb;
};

inline EvalResult eval_wright(double alpha, double beta, double x,
                              WrightContext& ctx) {
  if (!(alpha >= 0.0) || !(alpha < 1.0) || !std::isfinite(alpha))
    throw ParameterError("wright: alpha must lie in [0,1)");
  if (!(beta >= 0.0) || !std::isfinite(beta))
    throw ParameterError("wright: beta must be non-negative");
  if (!(x >= 0.0) || !std::isfinite(x))
    throw ParameterError("wright: x must be non-negative and finite");
  const double eps = std::numeric_limits<double>::epsilon();
  if (x == 0.0) {
    double v = rgamma(beta);
    return {v, std::fabs(v) * 4.0 * eps + 1e-310, MlMethod::series};
  }
  if (alpha == 0.0) {
    double v = std::exp(-x) * rgamma(beta);
    return {v, std::fabs(v) * (x + 4.0) * eps + 1e-310, MlMethod::series};
  }
  detail::Cand ser = detail::wright_series(alpha, beta, x, ctx.series);
  if (ser.ok && ser.err <= 1e-11 * (std::fabs(ser.value) + 1e-290))
    return {ser.value, std::fmax(ser.err, std::fabs(ser.value) * 5e-16),
            MlMethod::series};
  detail::Cand mb = detail::wright_mb(alpha, beta, x, ctx.mb);
  if (mb.ok && (!ser.ok || mb.err < ser.err))
    return {mb.value, std::fmax(mb.err, std::fabs(mb.value) * 5e-16),
            MlMethod::transform_inversion};
  if (!ser.ok)
    throw NumericalError("wright: no evaluation method converged");
  return {ser.value, std::fmax(ser.err, std::fabs(ser.value) * 5e-16),
          MlMethod::series};
}

inline EvalResult eval_wright(double alpha, double beta, double x) {
  WrightContext ctx;
  return eval_wright(alpha, beta, x, ctx);
}

}  // namespace mlgt

#endif  // MLGT_WRIGHT_HPP
