#ifndef MLGT_RATIONAL_HPP
#define MLGT_RATIONAL_HPP

// Exact rational arithmetic on int64 numerator/denominator with __int128
// intermediates. Overflow throws instead of wrapping: the symbolic engine
// must never silently lose exactness.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "mlgt/errors.hpp"

namespace mlgt {

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  static Rational from_i128(__int128 n, __int128 d) {
    if (d == 0) throw ParameterError("rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw NumericalError("rational: overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  double to_double() const { return static_cast<double>(num_) / den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const { return from_i128(-(__int128)num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                     (__int128)a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw ParameterError("rational: division by zero");
    return from_i128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  // Largest integer <= value.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  // "p" or "p/q".
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Parse "p" or "p/q"; throws ParameterError on malformed input.
  static Rational parse(const std::string& s) {
    auto pos = s.find('/');
    try {
      if (pos == std::string::npos) {
        size_t used = 0;
        std::int64_t n = std::stoll(s, &used);
        if (used != s.size()) throw ParameterError("rational: parse '" + s + "'");
        return Rational(n);
      }
      size_t u1 = 0, u2 = 0;
      std::int64_t n = std::stoll(s.substr(0, pos), &u1);
      std::int64_t d = std::stoll(s.substr(pos + 1), &u2);
      if (u1 != pos || u2 != s.size() - pos - 1)
        throw ParameterError("rational: parse '" + s + "'");
      return Rational(n, d);
    } catch (const std::invalid_argument&) {
      throw ParameterError("rational: parse '" + s + "'");
    } catch (const std::out_of_range&) {
      throw ParameterError("rational: parse '" + s + "'");
    }
  }

  // Best rational with denominator <= max_den (continued fractions); empty if
  // no candidate reproduces x within rel_tol.
  static std::optional<Rational> approximate(double x, std::int64_t max_den = 1000000,
                                             double rel_tol = 1e-12) {
    if (!(x == x) || x > 9.2e18 || x < -9.2e18) return std::nullopt;
    std::int64_t p0 = 1, q0 = 0;  // h_{-1}, k_{-1}
    std::int64_t p1 = static_cast<std::int64_t>(std::floor(x)), q1 = 1;
    double frac = x - std::floor(x);
    for (int it = 0; it < 64; ++it) {
      double approx = static_cast<double>(p1) / q1;
      if (std::fabs(approx - x) <= rel_tol * std::fmax(1.0, std::fabs(x)))
        return Rational(p1, q1);
      if (frac == 0.0) break;
      double inv = 1.0 / frac;
      double a_d = std::floor(inv);
      if (a_d > 9.2e18) break;
      std::int64_t a = static_cast<std::int64_t>(a_d);
      frac = inv - a_d;
      __int128 p2 = (__int128)a * p1 + p0;
      __int128 q2 = (__int128)a * q1 + q0;
      if (q2 > max_den || p2 > INT64_MAX || p2 < INT64_MIN) break;
      p0 = p1; q0 = q1;
      p1 = static_cast<std::int64_t>(p2);
      q1 = static_cast<std::int64_t>(q2);
    }
    return std::nullopt;
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  void normalize() {
    Rational r = from_i128(num_, den_);
    num_ = r.num_;
    den_ = r.den_;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace mlgt

#endif  // MLGT_RATIONAL_HPP
