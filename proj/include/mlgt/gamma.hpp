#ifndef MLGT_GAMMA_HPP
#define MLGT_GAMMA_HPP

// Single gamma/log-gamma helper used by every other module. Lanczos
// approximation with reflection for the left half plane, plus the entire
// reciprocal 1/Gamma and digamma. Complex support is what the contour
// integrals need: exp(clgamma(z)) == Gamma(z) up to a 2*pi*k phase.

#include <cmath>
#include <complex>
#include <limits>

#include "mlgt/errors.hpp"
#include "mlgt/numeric_util.hpp"

namespace mlgt {
namespace detail {

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey). Relative error of
// the rational sum is ~1e-15 for Re(z) >= 0.
inline constexpr double kLanczosG = 4.7421875;
inline constexpr double kLanczosC[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

template <typename T>
T lanczos_sum(const T& zm1) {  // zm1 = z - 1
  T sum = T(kLanczosC[0]);
  for (int k = 1; k < 15; ++k) sum += T(kLanczosC[k]) / (zm1 + T(k));
  return sum;
}

// log Gamma(x) for x > 0 via Lanczos (x >= 0.5) or one reflection-free
// recurrence step for x in (0, 0.5).
inline double lgamma_core(double x) {
  if (x < 0.5) return lgamma_core(x + 1.0) - std::log(x);
  double zm1 = x - 1.0;
  double t = zm1 + kLanczosG + 0.5;
  return (zm1 + 0.5) * std::log(t) - t + kLnSqrt2Pi +
         std::log(lanczos_sum(zm1));
}

}  // namespace detail

// log |Gamma(x)| for any non-pole x; sign receives the sign of Gamma(x).
// At a pole (x = 0, -1, -2, ...) returns +inf with sign 0.
inline double lgamma_signed(double x, int* sign) {
  if (sign) *sign = 1;
  if (std::isnan(x)) return x;
  if (x > 0.0) return detail::lgamma_core(x);
  double s = sin_pi(x);
  if (s == 0.0) {
    if (sign) *sign = 0;
    return std::numeric_limits<double>::infinity();
  }
  if (sign) *sign = s > 0.0 ? 1 : -1;
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  return kLnPi - std::log(std::fabs(s)) - detail::lgamma_core(1.0 - x);
}

inline double lgamma(double x) {
  int s;
  return lgamma_signed(x, &s);
}

inline int gamma_sign(double x) {
  int s;
  lgamma_signed(x, &s);
  return s;
}

// Gamma(x); overflows to +-inf for large x.
inline double gamma(double x) {
  int s;
  double lg = lgamma_signed(x, &s);
  return s * std::exp(lg);
}

// 1/Gamma(x): entire, zero at the poles of Gamma.
inline double rgamma(double x) {
  if (std::isnan(x)) return x;
  if (x > 0.5) {
    double lg = detail::lgamma_core(x);
    return std::exp(-lg);  // underflows to 0 for huge x, which is correct
  }
  // 1/Gamma(x) = sin(pi x)/pi * Gamma(1-x)
  double s = sin_pi(x);
  if (s == 0.0) return 0.0;
  double lg = detail::lgamma_core(1.0 - x);
  if (lg > 700.0) {  // |result| overflows double
    return (s > 0 ? 1.0 : -1.0) * std::numeric_limits<double>::infinity();
  }
  return s / kPi * std::exp(lg);
}

// digamma (psi) for real non-pole x.
inline double digamma(double x) {
  if (std::isnan(x)) return x;
  if (x <= 0.0) {
    double s = sin_pi(x);
    if (s == 0.0) return std::numeric_limits<double>::quiet_NaN();
    // psi(x) = psi(1-x) - pi cot(pi x)
    return digamma(1.0 - x) - kPi * cos_pi(x) / s;
  }
  double acc = 0.0;
  while (x < 8.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // asymptotic series with Bernoulli numbers
  double inv = 1.0 / x, inv2 = inv * inv;
  double series = std::log(x) - 0.5 * inv -
                  inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 -
                          inv2 * (1.0 / 240 - inv2 * (1.0 / 132 -
                          inv2 * (691.0 / 32760 - inv2 / 12))))));
  return acc + series;
}

namespace detail {

// log(sin(pi z)) up to an integer multiple of 2*pi*i, stable for large |Im z|.
inline std::complex<double> clog_sin_pi(std::complex<double> z) {
  double x = z.real(), y = z.imag();
  if (y < 0.0) return std::conj(clog_sin_pi(std::conj(z)));
  if (y <= 1.0) {
    std::complex<double> s(sin_pi(x) * std::cosh(kPi * y),
                           cos_pi(x) * std::sinh(kPi * y));
    return std::log(s);
  }
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}) when Im z is large
  std::complex<double> i2piz(-2.0 * kPi * y, 2.0 * kPi * x);
  std::complex<double> corr = std::log(1.0 - std::exp(i2piz));
  return std::complex<double>(kPi * y - kLn2, kPi / 2.0 - kPi * x) + corr;
}

}  // namespace detail

// Complex log-gamma with exp(clgamma(z)) == Gamma(z); the imaginary part may
// differ from the principal branch by a multiple of 2*pi.
inline std::complex<double> clgamma(std::complex<double> z) {
  if (z.imag() < 0.0) return std::conj(clgamma(std::conj(z)));
  if (z.real() >= 0.5) {
    std::complex<double> zm1 = z - 1.0;
    std::complex<double> t = zm1 + (detail::kLanczosG + 0.5);
    return (zm1 + 0.5) * std::log(t) - t + kLnSqrt2Pi +
           std::log(detail::lanczos_sum(zm1));
  }
  return kLnPi - detail::clog_sin_pi(z) - clgamma(1.0 - z);
}

}  // namespace mlgt

#endif  // MLGT_GAMMA_HPP
