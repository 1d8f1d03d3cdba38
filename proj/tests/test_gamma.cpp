#include <doctest.h>

#include <cmath>

#include "ptlocus/critical.hpp"
#include "ptlocus/error.hpp"
#include "ptlocus/gamma_curve.hpp"

using namespace ptlocus;

namespace {

// Solution of Im D = 0, d/deps Im D = 0 (mpmath, 30 digits).
constexpr double kEpsMin = 9.268814856142275035;
constexpr double kLambdaMin = 0.4548390990438707054;

}  // namespace

TEST_CASE("curve 1 markers and invariants") {
  const GammaCurve c = trace_gamma(1, kGammaDefaultFrom, kGammaDefaultTo);
  REQUIRE(c.alpha_at);
  REQUIRE(c.bi_at);
  REQUIRE(c.beta_at);
  CHECK(std::abs(*c.alpha_at - ray_zeros(RayFamily::UMinus, 1)[0].location) <= 1e-9);
  CHECK(std::abs(*c.bi_at - bi_quadrant_zeros(1)[0].location) <= 1e-9);
  CHECK(std::abs(*c.beta_at - ray_zeros(RayFamily::UPlus, 1)[0].location) <= 1e-9);
  CHECK(c.beta_at->real() / c.beta_at->imag() == doctest::Approx(kKnot).epsilon(1e-10));

  const Complex ta = gamma_tangent(*c.alpha_at);
  CHECK(std::fabs(ta.imag()) <= 1e-9 * std::abs(ta));

  // The tangent line at beta is the ray direction 2pi/3 (taken mod pi).
  const Complex tb = gamma_tangent(*c.beta_at);
  const double angle = std::remainder(std::arg(tb) - 2.0 * airy::kPi / 3.0, airy::kPi);
  CHECK(std::fabs(angle) <= 1e-8);

  for (std::size_t i = 0; i < c.samples.size(); ++i) {
    const GammaSample& s = c.samples[i];
    if (i > 0) CHECK(s.a > c.samples[i - 1].a);
    CHECK(s.xi.real() > 0.0);
    CHECK(s.xi.imag() > 0.0);
    const airy::AiryPair p = airy::eval_airy_pair(s.xi);
    const double lr = std::exp(p.ai.log_scale - p.bi.log_scale);
    const Complex v = s.a * p.ai.value * lr + p.bi.value;
    CHECK(std::abs(v) <= 1e-9 * ((1.0 + std::fabs(s.a)) * std::abs(p.ai.value) * lr + std::abs(p.bi.value)));
  }
}

TEST_CASE("curve ends approach the positive axis") {
  const GammaCurve c = trace_gamma(1, -14.0, 14.0);
  double prev = -INFINITY;
  for (const GammaSample& s : c.samples) {
    if (s.a > -10.0) break;
    CHECK(s.xi.imag() > prev);
    prev = s.xi.imag();
  }
  prev = -INFINITY;
  for (auto it = c.samples.rbegin(); it != c.samples.rend() && it->a >= 10.0; ++it) {
    CHECK(it->xi.imag() > prev);
    prev = it->xi.imag();
  }
}

TEST_CASE("curves are simple and disjoint") {
  const GammaCurve c1 = trace_gamma(1, -6.0, 6.0);
  const GammaCurve c2 = trace_gamma(2, -6.0, 6.0);
  for (std::size_t i = 0; i < c1.samples.size(); i += 3)
    for (std::size_t j = i + 2; j < c1.samples.size(); j += 3)
      CHECK(std::abs(c1.samples[i].xi - c1.samples[j].xi) > 0.0);
  double gap = INFINITY;
  for (const GammaSample& s : c1.samples) gap = std::min(gap, distance_to_gamma(c2, s.xi));
  CHECK(gap > 0.1);
}

TEST_CASE("gamma_point and distance") {
  const GammaCurve c = trace_gamma(1, -3.0, 3.0);
  CHECK(std::abs(gamma_point(c, 0.0) - *c.bi_at) == 0.0);
  const Complex p = gamma_point(c, 0.7071);
  CHECK(distance_to_gamma(c, p) <= 1e-12);
  CHECK(distance_to_gamma(c, p + Complex(0.0, 0.01)) == doctest::Approx(0.01).epsilon(0.2));
  CHECK_THROWS_AS(gamma_point(c, 3.5), std::invalid_argument);
}

TEST_CASE("degenerate range gives one sample") {
  const GammaCurve c = trace_gamma(1, 0.25, 0.25);
  REQUIRE(c.samples.size() == 1);
  CHECK(c.samples[0].a == 0.25);
  CHECK(!c.alpha_at);
  CHECK_THROWS_AS(trace_gamma(1, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(trace_gamma(0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("lambda minimum") {
  const LambdaMin m = find_lambda_min(1);
  CHECK(m.lambda_min == doctest::Approx(kLambdaMin).epsilon(1e-12));
  CHECK(m.eps_min == doctest::Approx(kEpsMin).epsilon(1e-6));
  CHECK(m.eps_min == doctest::Approx(std::pow(m.xi.imag(), 3)).epsilon(1e-15));
  const std::vector<RayZero> z = bi_quadrant_zeros(5);
  for (int k = 1; k <= 5; ++k) {
    CAPTURE(k);
    const double lm = find_lambda_min(k).lambda_min;
    const double cot_bi = z[k - 1].location.real() / z[k - 1].location.imag();
    CHECK(lm < cot_bi);
    CHECK(cot_bi < kKnot);
  }
}

TEST_CASE("critical points on the curve") {
  for (int k = 1; k <= 2; ++k) {
    const std::vector<GammaCritical> c = detect_criticals_on_gamma(k);
    REQUIRE(c.size() == 1);
    const CriticalPair p = critical_pairs(k).back();
    CHECK(std::abs(c[0].xi - p.alpha.location) <= 1e-9);
    CHECK(std::pow(c[0].xi.imag(), 3) == doctest::Approx(p.eps_k).epsilon(1e-12));
    CHECK(c[0].a <= airy::kSqrt3);
  }
}
