// Adaptive quadrature on Gauss-Kronrod 7-15 panels (nodes and error model
// from QUADPACK's qk15, Piessens et al. 1983).
//
// integrate()            adaptive bisection on a finite interval, worst
//                        panel first, with a global error target.
// integrate_positive_axis()
//                        integral over (0,inf) split at t=1: the (0,1] part
//                        is mapped by t=e^{-u} (algebraic endpoints at 0
//                        become exponential decay, truncation marched until
//                        a geometric tail bound is below target); [1,inf)
//                        is marched over dyadic panels [2^k, 2^{k+1}] and
//                        closed by geometric extrapolation of the dyadic
//                        masses. Algebraic tails make those masses
//                        asymptotically geometric even when the density
//                        oscillates, and the spread of the last few ratios
//                        prices the model error into the estimate.
//
// Kronrod nodes never include interval endpoints, so integrable endpoint
// singularities are evaluated nowhere and handled by bisection.

#ifndef MLGT_QUADRATURE_HPP
#define MLGT_QUADRATURE_HPP

#include <cmath>
#include <limits>
#include <vector>

#include "mlgt/errors.hpp"

namespace mlgt {

struct QuadResult {
  double value;
  double abs_err;   // honest accumulated estimate, tail bounds included
  double rel_err;   // abs_err / max(|value|, tiny)
  int panels;       // panels in the final partition
  bool converged;   // abs_err met the requested target
};

namespace detail {

struct Gk15 {
  double value;
  double err;
  double resabs;  // integral of |f|, for roundoff floors
};

// 15-point Kronrod extension of 7-point Gauss on [-1,1].
inline const double* gk15_xk() {
  static const double x[8] = {
      0.991455371120812639206854697526329,
      0.949107912342758524526189684047851,
      0.864864423359769072789712788640926,
      0.741531185599394439863864773280788,
      0.586087235467691130294144838258730,
      0.405845151377397166906606412076961,
      0.207784955007898467600689403773245,
      0.0};
  return x;
}
inline const double* gk15_wk() {
  static const double w[8] = {
      0.022935322010529224963732008058970,
      0.063092092629978553290700663189204,
      0.104790010322250183839876322541518,
      0.140653259715525918745189590510238,
      0.169004726639267902826583426598550,
      0.190350578064785409913256402421014,
      0.204432940075298892414161999234649,
      0.209482141084727828012999174891714};
  return w;
}
inline const double* gk15_wg() {
  static const double w[4] = {
      0.129484966168869693270611432679082,
      0.279705391489276667901467771423780,
      0.381830050505118944950369775488975,
      0.417959183673469387755102040816327};
  return w;
}

template <class F>
Gk15 gk15(F&& f, double a, double b) {
  const double* xk = gk15_xk();
  const double* wk = gk15_wk();
  const double* wg = gk15_wg();
  double h = 0.5 * (b - a), mid = 0.5 * (a + b);
  double fv[15];
  fv[7] = f(mid);
  double sk = wk[7] * fv[7];
  double sg = wg[3] * fv[7];
  double sabs = wk[7] * std::fabs(fv[7]);
  for (int i = 0; i < 7; i++) {
    double dx = h * xk[i];
    double f1 = f(mid - dx), f2 = f(mid + dx);
    fv[i] = f1;
    fv[14 - i] = f2;
    sk += wk[i] * (f1 + f2);
    sabs += wk[i] * (std::fabs(f1) + std::fabs(f2));
    if (i % 2 == 1) sg += wg[i / 2] * (f1 + f2);
  }
  // QUADPACK error model: resasc measures deviation from the mean, the
  // (200 e)^{3/2} scaling sharpens |K-G| for smooth panels.
  double mean = sk * 0.5;
  double resasc = wk[7] * std::fabs(fv[7] - mean);
  for (int i = 0; i < 7; i++)
    resasc += wk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));
  resasc *= std::fabs(h);
  double err = std::fabs((sk - sg) * h);
  if (resasc != 0.0 && err != 0.0) {
    double scaled = std::pow(200.0 * err / resasc, 1.5);
    err = resasc * (scaled < 1.0 ? scaled : 1.0);
  }
  const double eps = std::numeric_limits<double>::epsilon();
  double floor_err = 50.0 * eps * sabs * std::fabs(h);
  return {sk * h, err > floor_err ? err : floor_err, sabs * std::fabs(h)};
}

}  // namespace detail

template <class F>
QuadResult integrate(F&& f, double a, double b, double rel_tol = 1e-10,
                     double abs_tol = 0.0, int max_panels = 1500) {
  struct Seg {
    double a, b, v, e;
  };
  std::vector<Seg> segs;
  detail::Gk15 first = detail::gk15(f, a, b);
  if (!std::isfinite(first.value))
    throw NumericalError("quadrature: integrand produced a non-finite value");
  segs.push_back({a, b, first.value, first.err});
  double stuck_err = 0.0;  // panels too narrow to bisect further
  for (;;) {
    double total_v = 0.0, total_e = stuck_err;
    std::size_t worst = 0;
    double worst_e = -1.0;
    for (std::size_t i = 0; i < segs.size(); i++) {
      total_v += segs[i].v;
      total_e += segs[i].e;
      if (segs[i].e > worst_e) {
        worst_e = segs[i].e;
        worst = i;
      }
    }
    double target = abs_tol > rel_tol * std::fabs(total_v)
                        ? abs_tol
                        : rel_tol * std::fabs(total_v);
    if (total_e <= target || static_cast<int>(segs.size()) >= max_panels ||
        worst_e <= 0.0)
      break;
    Seg s = segs[worst];
    double m = 0.5 * (s.a + s.b);
    if (!(m > s.a && m < s.b)) {  // width at rounding resolution
      stuck_err += s.e;
      segs[worst].e = 0.0;
      continue;
    }
    detail::Gk15 l = detail::gk15(f, s.a, m);
    detail::Gk15 r = detail::gk15(f, m, s.b);
    if (!std::isfinite(l.value) || !std::isfinite(r.value))
      throw NumericalError("quadrature: integrand produced a non-finite value");
    segs[worst] = {s.a, m, l.value, l.err};
    segs.push_back({m, s.b, r.value, r.err});
  }
  double total_v = 0.0, total_e = stuck_err;
  for (const Seg& s : segs) {
    total_v += s.v;
    total_e += s.e;
  }
  double target = abs_tol > rel_tol * std::fabs(total_v)
                      ? abs_tol
                      : rel_tol * std::fabs(total_v);
  double denom = std::fabs(total_v) > 1e-300 ? std::fabs(total_v) : 1e-300;
  return {total_v, total_e, total_e / denom, static_cast<int>(segs.size()),
          total_e <= target};
}

template <class F>
QuadResult integrate_positive_axis(F&& g, double rel_tol = 1e-8,
                                   int max_panels_each = 1500) {
  // (0,1] via t = e^{-u}: integrand g(e^{-u}) e^{-u} on [0, U), truncation
  // U marched outward until a geometric bound on the remainder is small.
  auto gu = [&](double u) {
    double t = std::exp(-u);
    double val = g(t);
    return val == 0.0 ? 0.0 : val * t;
  };
  const double step = 4.0;
  double u_hi = 0.0, left_tail = 0.0, prev = -1.0, running = 0.0;
  bool left_bounded = false;
  for (int k = 0; k < 180; k++) {
    detail::Gk15 p = detail::gk15(gu, u_hi, u_hi + step);
    if (!std::isfinite(p.value))
      throw NumericalError("quadrature: integrand produced a non-finite value");
    u_hi += step;
    running += std::fabs(p.value);
    if (k >= 4 && running == 0.0) {  // identically zero down to t ~ 2e-9
      left_bounded = true;
      break;
    }
    if (prev >= 0.0 && std::fabs(p.value) < 0.75 * prev) {
      double r = prev > 0.0 ? std::fabs(p.value) / prev : 0.0;
      left_tail = std::fabs(p.value) * r / (1.0 - r);
      if (std::fabs(p.value) + left_tail <=
          0.02 * rel_tol * (running + 1e-300)) {
        left_bounded = true;
        break;
      }
    }
    prev = std::fabs(p.value);
  }
  if (!left_bounded) left_tail = prev > 0.0 ? 20.0 * prev : 0.0;
  QuadResult left =
      integrate(gu, 0.0, u_hi, 0.5 * rel_tol, 0.0, max_panels_each);

  // [1, inf): dyadic march. An algebraic tail (oscillatory or not) gives
  // masses M_k ~ C rho^k, so the remainder is M_last rho/(1-rho); the
  // spread of the last three ratios bounds how far the masses still are
  // from geometric and is charged to the error.
  double right_v = 0.0, right_e = 0.0, tail = 0.0, tail_err = 0.0;
  int right_panels = 0;
  bool tail_done = false;
  std::vector<double> mass;
  double edge = 1.0;
  for (int k = 0; k < 55; k++) {
    double scale0 = std::fabs(left.value) + std::fabs(right_v) + 1e-300;
    QuadResult pk = integrate(g, edge, 2.0 * edge, 1e-9,
                              0.02 * rel_tol * scale0, 4000);
    // A panel at the resolution limit ends the march; the geometric tail
    // model then covers everything past the last resolved edge. Early rough
    // panels are kept (error priced in) so the march can recover.
    if (!pk.converged && mass.size() >= 4) break;
    edge *= 2.0;
    right_v += pk.value;
    right_e += pk.abs_err;
    right_panels += pk.panels;
    mass.push_back(pk.value);
    double scale = std::fabs(left.value) + std::fabs(right_v) + 1e-300;
    std::size_t m = mass.size();
    double m3 = std::fabs(mass[m - 1]);
    if (m >= 8) {
      double m2 = std::fabs(mass[m - 2]);
      if (m3 <= 1e-3 * rel_tol * scale && m3 <= m2) {
        tail = 0.0;
        tail_err = 2.0 * m3;
        tail_done = true;
        break;
      }
    }
    if (m >= 7) {
      double m2 = std::fabs(mass[m - 2]);
      double m1 = std::fabs(mass[m - 3]), m0 = std::fabs(mass[m - 4]);
      if (m0 > 0.0 && m1 > 0.0 && m2 > 0.0 && m3 > 0.0) {
        double r1 = m1 / m0, r2 = m2 / m1, r3 = m3 / m2;
        double rmax = std::max(r1, std::max(r2, r3));
        double rmin = std::min(r1, std::min(r2, r3));
        if (rmax < 0.98) {
          double rbar = std::cbrt(r1 * r2 * r3);
          double est = m3 * rbar / (1.0 - rbar);
          double err = m3 * (rmax - rmin) / ((1.0 - rmax) * (1.0 - rmax)) +
                       1e-16 * scale;
          if (err <= 0.35 * rel_tol * scale) {
            tail = (mass[m - 1] < 0.0 ? -est : est);
            tail_err = err;
            tail_done = true;
            break;
          }
        }
      }
    }
  }
  if (!tail_done && mass.size() >= 4) {
    // Best-effort geometric closure so the reported value and error stay
    // honest even when the target tolerance was not reached. The ratio
    // spread over the last few octaves prices both the noise in the fitted
    // ratio and its residual drift toward the asymptote.
    std::size_t m = mass.size();
    std::size_t nr = std::min<std::size_t>(5, m - 1);
    double rmax = 0.0, rmin = 1e9;
    bool positive = true;
    for (std::size_t j = m - nr; j < m; j++) {
      double lo = std::fabs(mass[j - 1]), hi = std::fabs(mass[j]);
      if (lo <= 0.0 || hi <= 0.0) { positive = false; break; }
      double r = hi / lo;
      rmax = std::max(rmax, r);
      rmin = std::min(rmin, r);
    }
    double m3 = std::fabs(mass[m - 1]);
    if (positive && rmax < 0.995) {
      double rbar = std::sqrt(m3 / std::fabs(mass[m - 3]));
      double est = m3 * rbar / (1.0 - rbar);
      tail = (mass[m - 1] < 0.0 ? -est : est);
      tail_err = m3 * (rmax - rmin) / ((1.0 - rmax) * (1.0 - rmax)) +
                 est * (rmax - rmin) / (1.0 - rmax) + 1e-16 * m3;
    } else {
      tail_err = 20.0 * m3;
    }
  } else if (!tail_done) {
    tail_err = mass.empty() ? 0.0 : 20.0 * std::fabs(mass.back());
  }

  double value = left.value + right_v + tail;
  double abs_err = left.abs_err + left_tail + right_e + tail_err;
  double denom = std::fabs(value) > 1e-300 ? std::fabs(value) : 1e-300;
  bool converged = left.converged && left_bounded && tail_done &&
                   abs_err <= rel_tol * denom;
  return {value, abs_err, abs_err / denom, left.panels + right_panels,
          converged};
}

}  // namespace mlgt

#endif  // MLGT_QUADRATURE_HPP
