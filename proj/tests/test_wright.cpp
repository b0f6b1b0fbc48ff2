// Oracle tests for the Wright function phi(-alpha, beta; -x). The alpha = 1/2
// row has two elementary closed forms (gaussian and erfc), which pin down both
// the series and the saddle-line inversion; a Laplace-transform identity ties
// generic parameters back to the Mittag-Leffler evaluator.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "mlgt/errors.hpp"
#include "mlgt/wright.hpp"

using namespace mlgt;

namespace {

std::vector<double> geometric_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, i / (n - 1.0));
  return g;
}

}  // namespace

TEST_CASE("gaussian closed form at alpha one half", "[wright]") {
  // phi(-1/2, 1/2; -x) = exp(-x^2/4)/sqrt(pi)
  WrightContext ctx;
  for (double x : geometric_grid(0.01, 28.0, 24)) {
    double truth = std::exp(-x * x / 4.0) / std::sqrt(kPi);
    EvalResult r = eval_wright(0.5, 0.5, x, ctx);
    CAPTURE(x, r.value, truth, r.abs_err_est, method_name(r.method));
    CHECK(std::fabs(r.value - truth) <= 1e-10 * truth);
    CHECK(std::fabs(r.value - truth) <= r.abs_err_est + 1e-12 * truth);
  }
  // pinned value
  CHECK(eval_wright(0.5, 0.5, 1.0).value ==
        Catch::Approx(0.4393912894677224).epsilon(1e-12));
}

TEST_CASE("erfc closed form at alpha one half, beta one", "[wright]") {
  // phi(-1/2, 1; -x) = erfc(x/2)
  WrightContext ctx;
  for (double x : geometric_grid(0.01, 24.0, 20)) {
    double truth = std::erfc(x / 2.0);
    EvalResult r = eval_wright(0.5, 1.0, x, ctx);
    CAPTURE(x, r.value, truth, r.abs_err_est, method_name(r.method));
    CHECK(std::fabs(r.value - truth) <= 1e-10 * truth);
    CHECK(std::fabs(r.value - truth) <= r.abs_err_est + 1e-12 * truth);
  }
}

TEST_CASE("degenerate wright arguments", "[wright]") {
  CHECK(eval_wright(0.3, 2.0, 0.0).value == Catch::Approx(1.0).margin(1e-15));
  CHECK(eval_wright(0.5, 0.0, 0.0).value == 0.0);  // 1/Gamma(0)
  CHECK(eval_wright(0.0, 1.0, 3.0).value ==
        Catch::Approx(std::exp(-3.0)).epsilon(1e-14));
  CHECK(eval_wright(0.0, 0.5, 1.2).value ==
        Catch::Approx(std::exp(-1.2) / std::sqrt(kPi)).epsilon(1e-14));
}

TEST_CASE("laplace transform of wright is mittag-leffler", "[wright]") {
  // int_0^inf e^{-sx} phi(-a, b; -x) dx = E_{a,a+b}(-s)
  const double a = 0.4, b = 0.7;
  WrightContext wctx;
  EvalContext mctx;
  for (double s : {0.5, 2.0}) {
    auto f = [&](double x) {
      return std::exp(-s * x) * eval_wright(a, b, x, wctx).value;
    };
    const int n = 2400;  // Simpson panels over [0, 40]
    const double hi = 40.0;
    double h = hi / (2.0 * n);
    double acc = f(0.0) + f(hi);
    for (int k = 1; k < 2 * n; ++k) acc += f(k * h) * (k % 2 ? 4.0 : 2.0);
    double integral = acc * h / 3.0;
    double rhs = eval_ml_two(a, a + b, -s, mctx).value;
    CAPTURE(s, integral, rhs);
    CHECK(integral == Catch::Approx(rhs).epsilon(2e-7));
  }
}

TEST_CASE("wright parameter validation", "[wright]") {
  CHECK_THROWS_AS(eval_wright(1.0, 1.0, 1.0), ParameterError);
  CHECK_THROWS_AS(eval_wright(-0.1, 1.0, 1.0), ParameterError);
  CHECK_THROWS_AS(eval_wright(0.5, -1.0, 1.0), ParameterError);
  CHECK_THROWS_AS(eval_wright(0.5, 1.0, -2.0), ParameterError);
  double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(eval_wright(0.5, 1.0, nan), ParameterError);
}
