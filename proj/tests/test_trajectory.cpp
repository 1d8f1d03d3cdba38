#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ptlocus/critical.hpp"
#include "ptlocus/error.hpp"
#include "ptlocus/gamma_curve.hpp"
#include "ptlocus/trajectory.hpp"

using namespace ptlocus;

namespace {

constexpr double kEpsMin = 9.268814856142275035;
constexpr double kLambdaMin = 0.4548390990438707054;

std::vector<EventKind> kinds(const Trajectory& t) {
  std::vector<EventKind> k;
  for (const auto& e : t.events) k.push_back(e.kind);
  return k;
}

const TrajectoryEvent* find(const Trajectory& t, EventKind kind) {
  for (const auto& e : t.events)
    if (e.kind == kind) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("branch 1 from 1 to 20") {
  const Trajectory t = trace_lambda(1, 1.0, 20.0);
  const CriticalPair p = critical_pairs(1).front();
  CHECK(t.branch == 1);
  CHECK(kinds(t) == std::vector<EventKind>{EventKind::KnotCrossing, EventKind::Minimum, EventKind::Collision,
                                            EventKind::Departure});
  const TrajectoryEvent* cross = find(t, EventKind::KnotCrossing);
  const TrajectoryEvent* min = find(t, EventKind::Minimum);
  const TrajectoryEvent* col = find(t, EventKind::Collision);
  REQUIRE(cross);
  REQUIRE(min);
  REQUIRE(col);
  CHECK(std::fabs(cross->eps - p.delta_k) <= 1e-8);
  CHECK(std::fabs(col->eps - p.eps_k) <= 1e-8);
  CHECK(std::fabs(col->lambda.real() - kKnot) <= 1e-8);
  CHECK(min->eps == doctest::Approx(kEpsMin).epsilon(1e-8));
  CHECK(min->lambda.real() == doctest::Approx(kLambdaMin).epsilon(1e-12));

  for (std::size_t i = 0; i < t.samples.size(); ++i) {
    const SpectralPoint& s = t.samples[i];
    if (i > 0) CHECK(s.eps > t.samples[i - 1].eps);
    const ScaledDeterminant d = determinant(s.eps, s.lambda);
    CHECK(std::abs(d.value) <= 1e-9 * d.scale);
    CHECK(s.on_real_axis == (s.eps <= col->eps));
    CHECK(s.branch == 1);
  }
  CHECK(t.samples.front().eps == 1.0);
  CHECK(t.samples.back().eps == 20.0);
  CHECK(t.samples.back().lambda.real() == doctest::Approx(0.43197284740960895).epsilon(1e-9));
  CHECK(t.samples.back().lambda.imag() == doctest::Approx(0.262252620814).epsilon(1e-9));
}

TEST_CASE("departure is perpendicular and monotone") {
  const CriticalPair p = critical_pairs(1).front();
  const Trajectory t = trace_lambda(1, 11.0, p.eps_k + 2.0);
  const TrajectoryEvent* col = find(t, EventKind::Collision);
  REQUIRE(col);
  std::vector<SpectralPoint> after;
  for (const auto& s : t.samples)
    if (s.eps > col->eps) after.push_back(s);
  REQUIRE(after.size() > 5);
  const Complex chord = after[4].lambda - Complex(kKnot, 0.0);
  const double deviation = std::fabs(std::atan2(std::fabs(chord.real()), std::fabs(chord.imag())));
  CHECK(deviation <= 5.0 * airy::kPi / 180.0);
  for (std::size_t i = 1; i < after.size(); ++i) CHECK(after[i].lambda.imag() > after[i - 1].lambda.imag());
  CHECK(after.front().lambda.imag() > 0.0);
}

TEST_CASE("partner branch goes the conjugate way") {
  const Trajectory a = trace_lambda(1, 12.0, 13.5);
  const Trajectory b = trace_lambda(2, 12.0, 13.5);
  CHECK(kinds(b) == std::vector<EventKind>{EventKind::Collision, EventKind::Departure});
  CHECK(std::fabs(find(a, EventKind::Collision)->eps - find(b, EventKind::Collision)->eps) <= 1e-10);
  CHECK(std::abs(a.samples.back().lambda - std::conj(b.samples.back().lambda)) <= 1e-10);
}

TEST_CASE("conjugate complex branches") {
  const Trajectory a = trace_lambda(1, 15.0, 25.0);
  const Trajectory b = trace_lambda(2, 15.0, 25.0);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].eps == b.samples[i].eps);
    CHECK(std::abs(a.samples[i].lambda - std::conj(b.samples[i].lambda)) <= 1e-10);
  }
}

TEST_CASE("second pair collides at eps_2") {
  const CriticalPair p = critical_pairs(2).back();
  const Trajectory t = trace_lambda(3, 1.0, 60.0);
  const TrajectoryEvent* cross = find(t, EventKind::KnotCrossing);
  const TrajectoryEvent* col = find(t, EventKind::Collision);
  REQUIRE(cross);
  REQUIRE(col);
  CHECK(std::fabs(cross->eps - p.delta_k) <= 1e-8);
  CHECK(std::fabs(col->eps - p.eps_k) <= 1e-8);
}

TEST_CASE("real samples lie on Gamma_1") {
  const GammaCurve g = trace_gamma(1, kGammaDefaultFrom, kGammaDefaultTo);
  for (int n : {1, 2}) {
    const Trajectory t = trace_lambda(n, n == 1 ? 3.5 : 11.0, 12.0);
    for (std::size_t i = 0; i < t.samples.size(); i += 4) {
      const SpectralPoint& s = t.samples[i];
      const Complex xi = std::cbrt(s.eps) * (s.lambda + Complex(0.0, 1.0));
      CHECK(distance_to_gamma(g, xi) <= 1e-7);
    }
  }
}

TEST_CASE("branch count is conserved across the collision") {
  const double eps1 = critical_pairs(1).front().eps_k;
  auto count = [](double eps) {
    const contour::Moments m = contour::rectangle_moments(determinant_function(eps), {0.0, 3.0, -1.0, 1.0});
    return contour::winding_count(m);
  };
  CHECK(count(eps1 - 0.05) == count(eps1 + 0.05));
}

TEST_CASE("empty range and argument errors") {
  const Trajectory t = trace_lambda(1, 2.0, 2.0);
  CHECK(t.samples.empty());
  CHECK(t.events.empty());
  CHECK_THROWS_AS(trace_lambda(0, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(trace_lambda(1, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(trace_lambda(1, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("event names") {
  CHECK(std::string(to_string(EventKind::KnotCrossing)) == "KnotCrossing");
  CHECK(std::string(to_string(EventKind::Departure)) == "Departure");
}
