#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ptlocus/contour.hpp"
#include "ptlocus/error.hpp"

using namespace ptlocus;
using contour::Sample;

namespace {

// Monic polynomial with the given roots.
contour::AnalyticFunction polynomial(std::vector<Complex> roots) {
  return [roots](Complex z) {
    Complex p = 1.0, dp = 0.0, ddp = 0.0;
    for (const Complex r : roots) {
      ddp = ddp * (z - r) + 2.0 * dp;
      dp = dp * (z - r) + p;
      p = p * (z - r);
    }
    double scale = 1.0;
    for (const Complex r : roots) scale *= std::abs(z) + std::abs(r);
    return Sample{p, dp, ddp, scale, scale};
  };
}

bool has_root(const std::vector<contour::Root>& roots, Complex z, int multiplicity, double tol) {
  return std::any_of(roots.begin(), roots.end(), [&](const contour::Root& r) {
    return std::abs(r.z - z) <= tol && r.multiplicity == multiplicity;
  });
}

}  // namespace

TEST_CASE("moments of a polynomial") {
  const auto f = polynomial({{0.3, 0.2}, {-0.4, 0.1}, {2.0, 0.0}});
  const contour::Moments m = contour::rectangle_moments(f, {-1.0, 1.0, -1.0, 1.0});
  CHECK(contour::winding_count(m) == 2);
  CHECK(std::abs(m.moment[1] - Complex(-0.1, 0.3)) <= 1e-9);
  const Complex p2 = Complex(0.3, 0.2) * Complex(0.3, 0.2) + Complex(-0.4, 0.1) * Complex(-0.4, 0.1);
  CHECK(std::abs(m.moment[2] - p2) <= 1e-8);

  const contour::Moments c = contour::circle_moments(f, 2.0, 0.5);
  CHECK(contour::winding_count(c) == 1);
  CHECK(std::abs(c.moment[1] - 2.0) <= 1e-10);
}

TEST_CASE("simple roots are isolated and polished") {
  const std::vector<Complex> want = {{0.25, 0.5}, {0.25, -0.5}, {1.7, 0.0}, {3.1, 0.9}, {3.1005, 0.9}};
  const auto f = polynomial(want);
  const std::vector<contour::Root> roots = contour::find_roots(f, {0.0, 4.0, -1.0, 1.0});
  REQUIRE(roots.size() == want.size());
  for (const Complex w : want) CHECK(has_root(roots, w, 1, 1e-11));
}

TEST_CASE("double root is reported once with multiplicity two") {
  const auto f = polynomial({{0.6, 0.0}, {0.6, 0.0}, {1.5, 0.25}});
  const std::vector<contour::Root> roots = contour::find_roots(f, {0.0, 2.0, -1.0, 1.0});
  CHECK(roots.size() == 2);
  CHECK(has_root(roots, {0.6, 0.0}, 2, 1e-7));
  CHECK(has_root(roots, {1.5, 0.25}, 1, 1e-11));
}

TEST_CASE("empty rectangle") {
  const auto f = polynomial({{5.0, 0.0}});
  CHECK(contour::find_roots(f, {0.0, 1.0, -1.0, 1.0}).empty());
}

TEST_CASE("max_count is enforced") {
  const auto f = polynomial({{0.5, 0.0}, {1.0, 0.0}, {1.5, 0.0}});
  contour::RootSearchOptions opt;
  opt.max_count = 2;
  try {
    contour::find_roots(f, {0.0, 2.0, -1.0, 1.0}, opt);
    FAIL("expected MaxCountExceeded");
  } catch (const NumericalError& e) {
    CHECK(e.kind() == ErrorKind::MaxCountExceeded);
  }
}

TEST_CASE("root on the contour is detected") {
  const auto f = polynomial({{1.0, 0.0}});
  try {
    contour::rectangle_moments(f, {0.0, 1.0, -1.0, 1.0});
    FAIL("expected ContourThroughRoot");
  } catch (const NumericalError& e) {
    CHECK(e.kind() == ErrorKind::ContourThroughRoot);
  }
}

TEST_CASE("winding_count rejects non-integers") {
  contour::Moments m;
  m.moment[0] = 1.4;
  CHECK_THROWS_AS(contour::winding_count(m), NumericalError);
  m.moment[0] = 2.02;
  CHECK(contour::winding_count(m) == 2);
}

TEST_CASE("newton_polish") {
  const auto f = polynomial({{0.5, 0.5}});
  Complex z{0.6, 0.4};
  CHECK(contour::newton_polish(f, z, 1e-14) > 0);
  CHECK(std::abs(z - Complex(0.5, 0.5)) <= 1e-14);
}
