#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ptlocus/critical.hpp"
#include "ptlocus/error.hpp"

using namespace ptlocus;
using airy::SolutionFamily;

namespace {

// |beta_k|, |alpha_k|, delta_k, eps_k from mpmath (40 digits).
struct Frozen {
  double beta, alpha, delta, eps;
};

constexpr Frozen kPairs[] = {
    {1.9863527074304728135, 2.6663526904069378807, 5.0905064853074750588, 12.312455672260525053},
    {3.8253391911604526482, 4.3424775680395573837, 36.358147299275575249, 53.186896075934249134},
    {5.2956211368427558615, 5.7410288161122397886, 96.458969050015094049, 122.90260136967588417},
    {6.5843078684860809411, 6.9861423742603472432, 185.40535912556274127, 221.46453630090338956},
    {7.7573206393945231975, 8.1287791262163002869, 303.19855252268566968, 348.87340543008344951},
    {8.8475225675664159294, 9.1960977835936625319, 449.83882107221558441, 505.12938868692508619},
};

constexpr double kBiZeros[6][2] = {
    {0.97754488673162068595, 2.1412907060387445757}, {1.8967750138953363466, 3.6272917643589194104},
    {2.6331577393549465957, 4.8554681799798449832}, {3.2785312361567463711, 5.9445042811790521281},
    {3.8658527317333461425, 6.9416922095821112535}, {4.4116118748093254969, 7.8718396594865819664},
};

double residual(Complex z, SolutionFamily f) {
  const airy::AiryEval e = airy::eval_airy(z, f, airy::Scaling::Natural);
  return std::abs(e.value) / e.scale;
}

// Sign pattern of (Re, Im) as a quadrant index 0..3.
int quadrant(Complex w) { return (w.real() < 0.0 ? 1 : 0) + (w.imag() < 0.0 ? 2 : 0); }

// Quadtree bisection: keep the child whose boundary samples reach all four
// sign quadrants of Bi.
Complex quadrant_bisection(double x0, double x1, double y0, double y1) {
  auto covers = [](double a0, double a1, double b0, double b1) {
    bool seen[4] = {false, false, false, false};
    const int n = 32;
    for (int i = 0; i <= n; ++i) {
      const double s = double(i) / n;
      for (const Complex z : {Complex(a0 + s * (a1 - a0), b0), Complex(a0 + s * (a1 - a0), b1),
                              Complex(a0, b0 + s * (b1 - b0)), Complex(a1, b0 + s * (b1 - b0))})
        seen[quadrant(airy::eval_airy(z, SolutionFamily::bi()).value)] = true;
    }
    return seen[0] && seen[1] && seen[2] && seen[3];
  };
  for (int level = 0; level < 40; ++level) {
    const double xm = 0.5 * (x0 + x1), ym = 0.5 * (y0 + y1);
    const double cells[4][4] = {{x0, xm, y0, ym}, {xm, x1, y0, ym}, {x0, xm, ym, y1}, {xm, x1, ym, y1}};
    bool found = false;
    for (const auto& c : cells) {
      if (covers(c[0], c[1], c[2], c[3])) {
        x0 = c[0], x1 = c[1], y0 = c[2], y1 = c[3];
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  return {0.5 * (x0 + x1), 0.5 * (y0 + y1)};
}

}  // namespace

TEST_CASE("critical pairs against frozen values") {
  const std::vector<CriticalPair> p = critical_pairs(6);
  REQUIRE(p.size() == 6);
  for (int k = 0; k < 6; ++k) {
    CAPTURE(k + 1);
    CHECK(p[std::size_t(k)].k == k + 1);
    CHECK(p[std::size_t(k)].beta.modulus == doctest::Approx(kPairs[k].beta).epsilon(1e-13));
    CHECK(p[std::size_t(k)].alpha.modulus == doctest::Approx(kPairs[k].alpha).epsilon(1e-13));
    CHECK(p[std::size_t(k)].delta_k == doctest::Approx(kPairs[k].delta).epsilon(1e-12));
    CHECK(p[std::size_t(k)].eps_k == doctest::Approx(kPairs[k].eps).epsilon(1e-12));
    CHECK(p[std::size_t(k)].knot == kKnot);
  }
  CHECK(std::fabs(p[0].delta_k - 5.1) <= 0.1);
  CHECK(std::fabs(p[0].eps_k - 12.3) <= 0.1);
}

TEST_CASE("closed forms and ordering") {
  const std::vector<CriticalPair> p = critical_pairs(10);
  const double s = airy::kSqrt3 / 2.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    CHECK(p[k].delta_k == doctest::Approx(std::pow(p[k].beta.modulus * s, 3)).epsilon(1e-15));
    CHECK(p[k].eps_k == doctest::Approx(std::pow(p[k].alpha.modulus * s, 3)).epsilon(1e-15));
    CHECK(p[k].delta_k < p[k].eps_k);
    CHECK(p[k].beta.modulus < p[k].alpha.modulus);
    if (k + 1 < p.size()) {
      CHECK(p[k].eps_k < p[k + 1].delta_k);
      CHECK(p[k].alpha.modulus < p[k + 1].beta.modulus);
    }
  }
  CHECK(kAlpha0 == 0.0);
}

TEST_CASE("ray zeros lie on arg = pi/3 and are zeros") {
  for (const auto fam : {RayFamily::UMinus, RayFamily::UPlus}) {
    const SolutionFamily f = fam == RayFamily::UMinus ? SolutionFamily::u_minus() : SolutionFamily::u_plus();
    const std::vector<RayZero> z = ray_zeros(fam, 10);
    REQUIRE(z.size() == 10);
    for (std::size_t k = 0; k < z.size(); ++k) {
      CHECK(z[k].index == int(k) + 1);
      CHECK(std::fabs(std::arg(z[k].location) - airy::kPi / 3.0) <= 1e-10);
      CHECK(residual(z[k].location, f) <= 1e-10);
      CHECK(z[k].modulus == doctest::Approx(std::abs(z[k].location)).epsilon(1e-15));
    }
  }
}

TEST_CASE("negative-axis zeros") {
  const std::vector<double> ai = negative_axis_zeros(SolutionFamily::ai(), 3);
  CHECK(ai[0] == doctest::Approx(-2.338107410459767).epsilon(1e-13));
  CHECK(ai[0] > ai[1]);
  CHECK(ai[1] > ai[2]);

  const std::vector<double> um = negative_axis_zeros(SolutionFamily::u_minus(), 5);
  for (double x : um) CHECK(x < 0.0);
  CHECK(std::fabs(airy::eval_airy(0.0, SolutionFamily::u_minus()).value.real()) <= 1e-16);

  const std::vector<double> up = negative_axis_zeros(SolutionFamily::u_plus(), 5);
  for (std::size_t k = 0; k + 1 < 5; ++k) {
    CHECK(-up[k] < -um[k]);
    CHECK(-um[k] < -up[k + 1]);
  }

  const std::vector<double> d = negative_axis_derivative_zeros(SolutionFamily::ai(), 2);
  for (double x : d) CHECK(std::abs(airy::eval_airy(x, SolutionFamily::ai()).derivative) <= 1e-12);
}

TEST_CASE("first-quadrant zeros of Bi") {
  const std::vector<RayZero> z = bi_quadrant_zeros(6);
  REQUIRE(z.size() == 6);
  for (std::size_t k = 0; k < 6; ++k) {
    const Complex want{kBiZeros[k][0], kBiZeros[k][1]};
    CHECK(std::abs(z[k].location - want) <= 1e-12 * std::abs(want));
    const double arg = std::arg(z[k].location);
    CHECK(arg > airy::kPi / 3.0);
    CHECK(arg < airy::kPi / 2.0);
    CHECK(z[k].location.real() / z[k].location.imag() < kKnot);
    if (k > 0) CHECK(z[k - 1].modulus < z[k].modulus);
  }
  const Complex q = quadrant_bisection(0.8, 1.2, 1.9, 2.3);
  CHECK(std::abs(q - z[0].location) <= 1e-9);
}

TEST_CASE("zero classification of V_a") {
  SUBCASE("sector dichotomy") {
    for (double a : {-5.0, -2.0, -1.0, 0.0, 1.0, 2.0, 5.0}) {
      CAPTURE(a);
      const ZeroClassification c = classify_va_zeros(a, 12.0);
      const bool outer = std::fabs(a) > airy::kSqrt3;
      CHECK(c.value_count(outer ? ZeroLabel::SectorAboveRay : ZeroLabel::SectorBelowRay) == 0);
      CHECK(c.value_count(outer ? ZeroLabel::SectorBelowRay : ZeroLabel::SectorAboveRay) > 0);
      CHECK(c.value_count(ZeroLabel::Other) == 0);
      CHECK(c.derivative_count(ZeroLabel::Other) == 0);
      CHECK(c.value_count(ZeroLabel::PositiveAxis) == (a < -airy::kSqrt3 ? 1 : 0));
      CHECK(c.derivative_count(ZeroLabel::PositiveAxis) == (a > airy::kSqrt3 ? 1 : 0));
      int upper = 0, lower = 0;
      for (const LabeledZero& z : c.value_zeros) {
        if (z.z.imag() != 0.0) CHECK(z.z.real() > 0.0);
        if (z.z.imag() > 0.0) ++upper;
        if (z.z.imag() < 0.0) ++lower;
      }
      CHECK(upper == lower);
    }
  }
  SUBCASE("boundary cases sit on the ray") {
    for (double a : {-airy::kSqrt3, airy::kSqrt3}) {
      const ZeroClassification c = classify_va_zeros(a, 12.0);
      CHECK(c.value_count(ZeroLabel::OnRay) > 0);
      CHECK(c.value_count(ZeroLabel::SectorBelowRay) == 0);
      CHECK(c.value_count(ZeroLabel::SectorAboveRay) == 0);
    }
  }
  SUBCASE("U+ derivative has a double zero at the origin") {
    const ZeroClassification c = classify_va_zeros(airy::kSqrt3, 6.0);
    bool found = false;
    for (const LabeledZero& z : c.derivative_zeros)
      if (z.label == ZeroLabel::Origin) found = z.multiplicity == 2;
    CHECK(found);
  }
  SUBCASE("radius is limited") {
    CHECK_THROWS_AS(classify_va_zeros(0.0, 16.0), std::invalid_argument);
  }
}
