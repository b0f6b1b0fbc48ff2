// Distribution-layer tests: densities against closed forms, fractional
// moments against the quadrature oracle, samplers against their moment and
// KS contracts, and the plumbing (seeded streams, reports, CSV export).

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "mlgt/dists.hpp"
#include "mlgt/errors.hpp"
#include "mlgt/gamma.hpp"
#include "mlgt/mellin.hpp"
#include "mlgt/quadrature.hpp"
#include "mlgt/rng.hpp"

using namespace mlgt;

namespace {

constexpr double kPiLocal = 3.14159265358979323846;

double lg(double x) { return mlgt::lgamma(x); }

// E[|C_alpha|^s] strip is (-1, alpha-1); density of |C_alpha| on (0, inf).
double abs_cauchy_pdf(const AlphaCauchyParams& p, double t) {
  return 2.0 * alpha_cauchy_pdf(p, t);
}

// Closed-form Mellin transform of the reciprocal gamma-type density:
// integral t^s pdf(t) dt = G(b+s)G(a-s)G(c) / (G(a)G(b)G(c-d s)).
double xabcd_inverse_moment(const GammaTypeParams& p, double s) {
  return std::exp(lg(p.b + s) + lg(p.a - s) + lg(p.c) - lg(p.a) - lg(p.b) -
                  lg(p.c - p.d * s));
}

// E[X_{a,b,c,d}^s] = G(a+s)G(b-s)G(c) / (G(a)G(b)G(c+d s)), s in (-a, b).
double xabcd_moment(const GammaTypeParams& p, double s) {
  return std::exp(lg(p.a + s) + lg(p.b - s) + lg(p.c) - lg(p.a) - lg(p.b) -
                  lg(p.c + p.d * s));
}

// E[M^s] for the gamma-tilted Wright density.
double wright_moment(double alpha, double beta, double t, double s) {
  return std::exp(lg(alpha * (1.0 + t) + beta) - lg(1.0 + t) +
                  lg(1.0 + t + s) - lg(alpha * (1.0 + t) + beta + alpha * s));
}

// E[|Z|^s] for the symmetric positive-strip stable law, s in (-1, alpha).
double stable_abs_moment(double alpha, double s) {
  return std::exp(lg(1.0 + s) + lg(1.0 - s / alpha) - lg(1.0 + s / 2.0) -
                  lg(1.0 - s / 2.0));
}

// E[|T_nu|^s], s in (-1, nu).
double student_abs_moment(double nu, double s) {
  return std::pow(nu, s / 2.0) *
         std::exp(lg(0.5 + s / 2.0) + lg(nu / 2.0 - s / 2.0) - lg(0.5) -
                  lg(nu / 2.0));
}

}  // namespace

TEST_CASE("quadrature oracle reproduces elementary moments", "[dists]") {
  auto gamma1 = [](double t) { return std::exp(-t); };
  CHECK(mellin_quadrature(gamma1, 1.0) == Catch::Approx(1.0).epsilon(1e-9));

  auto beta11 = [](double t) { return t < 1.0 ? 1.0 : 0.0; };
  CHECK(mellin_quadrature(beta11, 2.0) ==
        Catch::Approx(1.0 / 3.0).epsilon(1e-8));

  QuadResult r = mellin_quadrature_report(gamma1, 2.5);
  CHECK(r.converged);
  CHECK(std::fabs(r.value - std::exp(lg(3.5))) <= r.abs_err + 1e-12);
}

TEST_CASE("seeded streams are reproducible and tag-separated", "[dists]") {
  RngStream a(42, "stream test");
  RngStream b(42, "stream test");
  RngStream c(42, "other tag");
  RngStream d(43, "stream test");
  bool tag_differs = false, seed_differs = false;
  for (int i = 0; i < 64; i++) {
    std::uint64_t va = a.next_u64();
    CHECK(va == b.next_u64());
    if (va != c.next_u64()) tag_differs = true;
    if (va != d.next_u64()) seed_differs = true;
  }
  CHECK(tag_differs);
  CHECK(seed_differs);

  RngStream u(7, "uniform range");
  for (int i = 0; i < 1000; i++) {
    double x = u.next_uniform();
    CHECK(x > 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("heavy-tail density: pinned values and normalization", "[dists]") {
  AlphaCauchyParams cauchy{2.0};
  CHECK(alpha_cauchy_pdf(cauchy, 0.0) ==
        Catch::Approx(1.0 / kPiLocal).epsilon(1e-12));
  CHECK(alpha_cauchy_pdf(cauchy, 1.0) ==
        Catch::Approx(1.0 / (2.0 * kPiLocal)).epsilon(1e-12));
  CHECK(alpha_cauchy_pdf(cauchy, -1.0) ==
        alpha_cauchy_pdf(cauchy, 1.0));  // even function

  for (double alpha : {1.2, 1.5, 2.0, 3.0}) {
    AlphaCauchyParams p{alpha};
    auto pdf = [&](double t) { return abs_cauchy_pdf(p, t); };
    QuadResult mass = mellin_quadrature_report(pdf, 0.0);
    CAPTURE(alpha, mass.value, mass.abs_err, mass.converged);
    CHECK(mass.converged);
    CHECK(std::fabs(mass.value - 1.0) <= 1e-8);
  }

  CHECK_THROWS_AS(alpha_cauchy_pdf(AlphaCauchyParams{1.0}, 0.0),
                  ParameterError);
}

TEST_CASE("heavy-tail fractional moments", "[dists]") {
  CHECK(alpha_cauchy_abs_moment(AlphaCauchyParams{1.7}, 0.0) ==
        Catch::Approx(1.0).epsilon(1e-12));
  // Reflection collapses the two gamma factors to sqrt(2) here.
  CHECK(alpha_cauchy_abs_moment(AlphaCauchyParams{2.0}, 0.5) ==
        Catch::Approx(std::sqrt(2.0)).epsilon(1e-9));

  AlphaCauchyParams p{1.5};
  auto pdf = [&](double t) { return abs_cauchy_pdf(p, t); };
  double q = mellin_quadrature(pdf, 0.3);
  CHECK(std::fabs(q / alpha_cauchy_abs_moment(p, 0.3) - 1.0) <= 1e-7);

  CHECK_THROWS_AS(alpha_cauchy_abs_moment(p, -1.0), ParameterError);
  CHECK_THROWS_AS(alpha_cauchy_abs_moment(p, 0.5), ParameterError);
  CHECK_NOTHROW(alpha_cauchy_abs_moment(p, 0.499));
}

TEST_CASE("closed-form moments agree with quadrature on a grid", "[dists]") {
  for (double alpha : {1.2, 1.5, 2.0, 3.0}) {
    AlphaCauchyParams p{alpha};
    auto pdf = [&](double t) { return abs_cauchy_pdf(p, t); };
    for (double s : {-0.5, 0.15}) {
      QuadResult r = mellin_quadrature_report(pdf, s);
      double want = alpha_cauchy_abs_moment(p, s);
      CAPTURE(alpha, s, r.value, want, r.rel_err);
      CHECK(std::fabs(r.value / want - 1.0) <= 1e-6);
    }
  }
}

TEST_CASE("heavy-tail sampler contracts", "[dists]") {
  const std::size_t n = 200000;
  SampleBatch batch = sample_alpha_cauchy(AlphaCauchyParams{1.5}, n, 42);
  REQUIRE(batch.values.size() == n);
  CHECK(batch.seed == 42);
  CHECK(batch.dist_tag == "alpha_cauchy(alpha=1.5)");

  MomentReport rep = make_moment_report(
      batch, 0.3, alpha_cauchy_abs_moment(AlphaCauchyParams{1.5}, 0.3));
  CAPTURE(rep.empirical, rep.analytic, rep.z_score);
  CHECK(std::fabs(rep.z_score) < 3.0);

  // Sign symmetry.
  double mean_sign = 0.0;
  for (double v : batch.values) mean_sign += (v > 0.0) - (v < 0.0);
  mean_sign /= static_cast<double>(n);
  CHECK(std::fabs(mean_sign) <= 3.0 / std::sqrt(static_cast<double>(n)));

  // alpha = 2 gives the standard symmetric arctan CDF.
  SampleBatch std_batch = sample_alpha_cauchy(AlphaCauchyParams{2.0}, n, 42);
  auto arctan_cdf = [](double t) {
    return 0.5 + std::atan(t) / kPiLocal;
  };
  CHECK(ks_distance(std_batch, arctan_cdf) < 0.01);
}

TEST_CASE("gamma and beta samplers match exact moments", "[dists]") {
  const std::size_t n = 100000;
  SampleBatch g2 = sample_gamma(2.0, n, 42);
  MomentReport m1 = make_moment_report(g2, 1.0, 2.0);
  CAPTURE(m1.empirical, m1.z_score);
  CHECK(std::fabs(m1.z_score) < 3.0);

  SampleBatch b11 = sample_beta(1.0, 1.0, n, 42);
  MomentReport m2 = make_moment_report(b11, 1.0, 0.5);
  CHECK(std::fabs(m2.z_score) < 3.0);

  SampleBatch ghalf = sample_gamma(0.5, n, 42);
  MomentReport m3 =
      make_moment_report(ghalf, 0.5, 1.0 / std::sqrt(kPiLocal));
  CAPTURE(m3.empirical, m3.z_score);
  CHECK(std::fabs(m3.z_score) < 3.0);
}

TEST_CASE("gamma-tilted density: closed forms and moments", "[dists]") {
  // (1/2, 1/2, 0) collapses to exp(-x^2/4)/sqrt(pi) on (0, inf).
  WrightContext ctx;
  for (double x : {0.05, 0.3, 1.0, 2.7, 6.0}) {
    double want = std::exp(-x * x / 4.0) / std::sqrt(kPiLocal);
    CHECK(wright_M_pdf(0.5, 0.5, 0.0, x, ctx) ==
          Catch::Approx(want).epsilon(1e-10));
  }

  auto pdf = [&](double x) { return wright_M_pdf(0.5, 0.5, 0.0, x, ctx); };
  QuadResult mass = mellin_quadrature_report(pdf, 0.0);
  CHECK(mass.converged);
  CHECK(std::fabs(mass.value - 1.0) <= 1e-7);

  // alpha = 0 collapses to the Gamma(1+t) density.
  for (double x : {0.1, 0.7, 1.9, 4.2}) {
    double t = 0.5;
    double want = std::exp(t * std::log(x) - x - lg(1.0 + t));
    CHECK(wright_M_pdf(0.0, 0.7, t, x, ctx) ==
          Catch::Approx(want).epsilon(1e-12));
  }

  // Quadrature moment vs the two-gamma-ratio closed form.
  for (double s : {0.5, 1.0, 2.0}) {
    double q = mellin_quadrature(pdf, s);
    double want = wright_moment(0.5, 0.5, 0.0, s);
    CAPTURE(s, q, want);
    CHECK(std::fabs(q / want - 1.0) <= 1e-7);
  }

  CHECK_THROWS_AS(wright_M_pdf(0.5, 0.5, -1.0, 1.0, ctx), ParameterError);
  CHECK_THROWS_AS(wright_M_pdf(0.5, 0.5, 0.0, 0.0, ctx), ParameterError);
}

TEST_CASE("gamma-tilted sampler moment contracts", "[dists]") {
  const std::size_t n = 100000;
  SampleBatch batch = sample_wright_M(0.5, 0.5, 0.0, n, 42);
  REQUIRE(batch.values.size() == n);
  for (double s : {0.5, 1.0, 2.0}) {
    MomentReport rep =
        make_moment_report(batch, s, wright_moment(0.5, 0.5, 0.0, s));
    CAPTURE(s, rep.empirical, rep.analytic, rep.z_score);
    CHECK(std::fabs(rep.z_score) < 3.0);
  }
  // CDF of this special case is erf(x/2).
  auto cdf = [](double x) { return std::erf(x / 2.0); };
  CHECK(ks_distance(batch, cdf) < 0.01);
}

TEST_CASE("reciprocal gamma-type density contracts", "[dists]") {
  GammaTypeParams p{0.5, 0.5, 2.0, 2.0};
  EvalContext ctx;
  ClampStats st;
  auto pdf = [&](double t) { return xabcd_inverse_pdf(p, t, ctx, &st); };

  QuadResult mass = mellin_quadrature_report(pdf, 0.0);
  CAPTURE(mass.value, mass.abs_err, mass.converged);
  CHECK(std::fabs(mass.value - 1.0) <= 1e-6);

  QuadResult mel = mellin_quadrature_report(pdf, 0.2);
  double want = xabcd_inverse_moment(p, 0.2);
  CAPTURE(mel.value, want, mel.rel_err);
  CHECK(std::fabs(mel.value / want - 1.0) <= 1e-6);

  // Small-argument behavior is const * t^{b-1} with the kernel at zero
  // contributing 1/G(c + b d).
  double limit = std::exp(lg(p.a + p.b) + lg(p.c) - lg(p.a) - lg(p.b) -
                          lg(p.c + p.b * p.d));
  for (double t : {1e-3, 1e-6, 1e-10}) {
    double ratio = xabcd_inverse_pdf(p, t, ctx) * std::pow(t, 1.0 - p.b);
    CAPTURE(t, ratio, limit);
    CHECK(std::fabs(ratio / limit - 1.0) <= 2e-4);
  }

  // Clamping of tiny negative kernel values stays rare.
  CHECK(st.clamped * 10000 < st.total);

  CHECK_THROWS_AS(xabcd_inverse_pdf(GammaTypeParams{0.5, 0.5, 2.0, -2.0}, 1.0),
                  ParameterError);
  CHECK_THROWS_AS(xabcd_inverse_pdf(p, 0.0), ParameterError);
}

TEST_CASE("reciprocal gamma-type moment grid vs quadrature", "[dists]") {
  const GammaTypeParams grid[] = {{0.5, 0.5, 2.0, 2.0},
                                  {0.5, 0.5, 2.0, 1.5},
                                  {0.25, 0.25, 1.5, 1.5}};
  EvalContext ctx;
  for (const GammaTypeParams& p : grid) {
    ClampStats st;
    auto pdf = [&](double t) { return xabcd_inverse_pdf(p, t, ctx, &st); };
    for (double s : {-0.2, 0.0, 0.2}) {
      QuadResult r = mellin_quadrature_report(pdf, s);
      double want = xabcd_inverse_moment(p, s);
      CAPTURE(p.a, p.b, p.c, p.d, s, r.value, want, r.rel_err, r.converged);
      CHECK(std::fabs(r.value / want - 1.0) <= 1e-6);
    }
    CHECK(st.clamped * 10000 < st.total);
  }
}

TEST_CASE("gamma-type sampler moment contracts", "[dists]") {
  const std::size_t n = 100000;
  GammaTypeParams p{0.5, 0.5, 2.0, 2.0};
  SampleBatch batch = sample_xabcd(p, n, 42);
  REQUIRE(batch.values.size() == n);
  for (double s : {-0.3, 0.25}) {
    MomentReport rep = make_moment_report(batch, s, xabcd_moment(p, s));
    CAPTURE(s, rep.empirical, rep.analytic, rep.z_score);
    CHECK(std::fabs(rep.z_score) < 3.0);
  }

  // d < 0 goes through the reciprocal of the mirrored d > 0 law.
  GammaTypeParams pneg{0.5, 0.5, 2.0, -2.0};
  SampleBatch nb = sample_xabcd(pneg, n, 42);
  MomentReport rep = make_moment_report(nb, 0.25, xabcd_moment(pneg, 0.25));
  CAPTURE(rep.empirical, rep.analytic, rep.z_score);
  CHECK(std::fabs(rep.z_score) < 3.0);
  CHECK(nb.dist_tag == "xabcd(a=0.5,b=0.5,c=2,d=-2)");
}

TEST_CASE("positive-strip stable sampler contracts", "[dists]") {
  const std::size_t n = 200000;

  // alpha = 1 is the symmetric arctan law.
  SampleBatch one = sample_sym_stable(1.0, n, 42);
  auto arctan_cdf = [](double t) { return 0.5 + std::atan(t) / kPiLocal; };
  CHECK(ks_distance(one, arctan_cdf) < 0.01);

  // Fractional moments against the four-gamma-ratio closed form.
  double alpha = 0.5;
  SampleBatch half = sample_sym_stable(alpha, n, 42);
  for (double s : {0.2, 0.4 * alpha}) {
    MomentReport rep =
        make_moment_report(half, s, stable_abs_moment(alpha, s));
    CAPTURE(s, rep.empirical, rep.analytic, rep.z_score);
    CHECK(std::fabs(rep.z_score) < 3.0);
  }

  // s = 0 moment is exactly 1 with zero spread.
  MomentReport trivial = make_moment_report(half, 0.0, 1.0);
  CHECK(trivial.empirical == 1.0);
  CHECK(trivial.std_err == 0.0);
  CHECK(trivial.z_score == 0.0);

  CHECK_THROWS_AS(sample_sym_stable(1.5, 10, 1), ParameterError);
  CHECK_THROWS_AS(sample_sym_stable(0.0, 10, 1), ParameterError);
}

TEST_CASE("student sampler contracts", "[dists]") {
  const std::size_t n = 200000;
  SampleBatch t1 = sample_student(1.0, n, 42);
  // |T_1| has CDF (2/pi) arctan on (0, inf).
  std::vector<double> absv;
  absv.reserve(n);
  for (double v : t1.values) absv.push_back(std::fabs(v));
  SampleBatch abs_batch{std::move(absv), t1.seed, t1.n, "abs student"};
  auto abs_arctan = [](double t) {
    return t <= 0.0 ? 0.0 : 2.0 * std::atan(t) / kPiLocal;
  };
  CHECK(ks_distance(abs_batch, abs_arctan) < 0.01);

  MomentReport rep = make_moment_report(
      sample_student(0.8, 100000, 42), 0.3, student_abs_moment(0.8, 0.3));
  CAPTURE(rep.empirical, rep.analytic, rep.z_score);
  CHECK(std::fabs(rep.z_score) < 3.0);

  MomentReport trivial = make_moment_report(t1, 0.0, 1.0);
  CHECK(trivial.empirical == 1.0);
  CHECK(trivial.z_score == 0.0);
}

TEST_CASE("ks distance edge cases", "[dists]") {
  const std::size_t n = 200000;
  RngStream stream(42, "uniform ks test");
  std::vector<double> u(n);
  for (double& x : u) x = stream.next_uniform();
  SampleBatch batch{u, 42, n, "uniform"};

  // Against its own empirical CDF the distance is the 1/n step.
  std::vector<double> sorted = u;
  std::sort(sorted.begin(), sorted.end());
  auto own_cdf = [&](double x) {
    auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
    return static_cast<double>(it - sorted.begin()) /
           static_cast<double>(sorted.size());
  };
  CHECK(ks_distance(batch, own_cdf) ==
        Catch::Approx(1.0 / static_cast<double>(n)).margin(1e-12));

  auto identity = [](double x) {
    return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x);
  };
  CHECK(ks_distance(batch, identity) < 0.01);

  // A mismatched CDF is very visible.
  auto arctan_cdf = [](double t) { return 0.5 + std::atan(t) / kPiLocal; };
  CHECK(ks_distance(batch, arctan_cdf) > 0.1);
}

TEST_CASE("product and power closure against transform algebra", "[dists]") {
  const std::size_t n = 100000;
  SampleBatch x = sample_gamma(2.0, n, 7);
  SampleBatch y = sample_beta(1.0, 3.0, n, 8);

  std::vector<double> prod(n);
  for (std::size_t i = 0; i < n; i++) prod[i] = x.values[i] * y.values[i];
  SampleBatch pb{std::move(prod), 0, n, "product"};
  MellinExpr pe = product(expr_gamma(Rational(2)), expr_beta(Rational(1),
                                                             Rational(3)));
  MomentReport prep = make_moment_report(pb, 0.7, eval_at(pe, 0.7));
  CAPTURE(prep.empirical, prep.analytic, prep.z_score);
  CHECK(std::fabs(prep.z_score) < 3.0);

  std::vector<double> rooted(n);
  for (std::size_t i = 0; i < n; i++) rooted[i] = std::sqrt(x.values[i]);
  SampleBatch rb{std::move(rooted), 0, n, "power"};
  MellinExpr re = power(expr_gamma(Rational(2)), Rational(1, 2));
  MomentReport rrep = make_moment_report(rb, 1.0, eval_at(re, 1.0));
  CAPTURE(rrep.empirical, rrep.analytic, rrep.z_score);
  CHECK(std::fabs(rrep.z_score) < 3.0);
}

TEST_CASE("all samplers are seed-deterministic", "[dists]") {
  const std::size_t n = 48;
  auto same = [](const SampleBatch& a, const SampleBatch& b) {
    if (a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); i++)
      if (a.values[i] != b.values[i]) return false;
    return true;
  };
  auto check = [&](auto make) {
    SampleBatch b1 = make(42);
    SampleBatch b2 = make(42);
    SampleBatch b3 = make(43);
    CHECK(same(b1, b2));
    CHECK_FALSE(same(b1, b3));
  };
  check([&](std::uint64_t s) {
    return sample_alpha_cauchy(AlphaCauchyParams{1.5}, n, s);
  });
  check([&](std::uint64_t s) { return sample_gamma(2.0, n, s); });
  check([&](std::uint64_t s) { return sample_beta(1.0, 3.0, n, s); });
  check([&](std::uint64_t s) { return sample_wright_M(0.5, 0.5, 0.0, n, s); });
  check([&](std::uint64_t s) {
    return sample_xabcd(GammaTypeParams{0.5, 0.5, 2.0, 2.0}, n, s);
  });
  check([&](std::uint64_t s) { return sample_sym_stable(0.5, n, s); });
  check([&](std::uint64_t s) { return sample_student(1.0, n, s); });
}

TEST_CASE("moment report field relations", "[dists]") {
  SampleBatch batch = sample_gamma(2.0, 5000, 11);
  MomentReport rep = make_moment_report(batch, 0.5, 1.2);
  CHECK(rep.s == 0.5);
  CHECK(rep.analytic == 1.2);
  REQUIRE(rep.std_err > 0.0);
  CHECK(rep.z_score ==
        Catch::Approx((rep.empirical - 1.2) / rep.std_err).epsilon(1e-12));
}

TEST_CASE("csv export format", "[dists]") {
  SampleBatch batch = sample_alpha_cauchy(AlphaCauchyParams{2.0}, 20, 99);
  std::ostringstream os;
  write_csv(batch, os);
  std::istringstream is(os.str());
  std::string header;
  std::getline(is, header);
  CHECK(header == "# dist=alpha_cauchy(alpha=2) seed=99 n=20");
  std::size_t count = 0;
  std::string line;
  while (std::getline(is, line)) {
    REQUIRE(count < batch.values.size());
    CHECK(std::stod(line) == batch.values[count]);  // %.17g round-trips
    count++;
  }
  CHECK(count == 20);
}
