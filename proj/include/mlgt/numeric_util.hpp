#ifndef MLGT_NUMERIC_UTIL_HPP
#define MLGT_NUMERIC_UTIL_HPP

#include <cmath>
#include <cstdint>
#include <limits>

namespace mlgt {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLn2 = 0.69314718055994530942;
inline constexpr double kLnPi = 1.14472988584940017414;
inline constexpr double kLnSqrt2Pi = 0.91893853320467274178;
inline constexpr double kEulerGamma = 0.57721566490153286061;

// Neumaier variant of Kahan summation. Tracks a running compensation term so
// the final value is accurate even when individual terms exceed the partial sum.
struct NeumaierSum {
  double s = 0.0;
  double c = 0.0;

  void add(double x) {
    double t = s + x;
    if (std::fabs(s) >= std::fabs(x)) {
      c += (s - t) + x;
    } else {
      c += (x - t) + s;
    }
    s = t;
  }
  double value() const { return s + c; }
};

// sin(pi*x), cos(pi*x) with argument reduction done on x itself, so results
// stay accurate for large |x| (fmod-style reduction has no pi rounding error).
inline double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::remainder(x, 2.0);  // r in [-1, 1]
  // sin(pi*r) with one more fold for accuracy near the ends
  if (r > 0.5) r = 1.0 - r;
  else if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

inline double cos_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double a = std::fabs(std::remainder(x, 2.0));  // a in [0, 1]
  if (a == 0.5) return 0.0;
  if (a < 0.5) return std::cos(kPi * a);
  return -std::cos(kPi * (1.0 - a));  // 1-a exact for a in [0.5, 1]
}

inline bool is_near_integer(double x, double tol, double* nearest = nullptr) {
  double n = std::round(x);
  if (nearest) *nearest = n;
  return std::fabs(x - n) <= tol * std::fmax(1.0, std::fabs(x));
}

inline double rel_diff(double a, double b) {
  double scale = std::fmax(std::fabs(a), std::fabs(b));
  if (scale == 0.0) return 0.0;
  return std::fabs(a - b) / scale;
}

inline int sign_of(double x) { return (x > 0) - (x < 0); }

}  // namespace mlgt

#endif  // MLGT_NUMERIC_UTIL_HPP
