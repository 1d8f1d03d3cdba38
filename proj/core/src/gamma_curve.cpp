#include "ptlocus/gamma_curve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "ptlocus/critical.hpp"
#include "ptlocus/error.hpp"

namespace ptlocus {
namespace {

constexpr double kStepTolerance = 1e-12;
constexpr double kDriftTolerance = 1e-9;
constexpr double kDriftLimit = 1e-8;
constexpr double kGolden = 0.61803398874989484820;

airy::SolutionFamily family_at(double a) {
  if (a == airy::kSqrt3) return airy::SolutionFamily::u_plus();
  if (a == -airy::kSqrt3) return airy::SolutionFamily::u_minus();
  return airy::SolutionFamily::va(a);
}

Complex rk4(Complex xi, double h) {
  const Complex k1 = gamma_tangent(xi);
  const Complex k2 = gamma_tangent(xi + 0.5 * h * k1);
  const Complex k3 = gamma_tangent(xi + 0.5 * h * k2);
  const Complex k4 = gamma_tangent(xi + h * k3);
  return xi + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Newton onto V_a(xi) = 0; returns the size of the next Newton step relative
// to max(1, |xi|).
double reproject(double a, Complex& xi) {
  const airy::SolutionFamily fam = family_at(a);
  for (int it = 0; it < 6; ++it) {
    const airy::AiryEval e = airy::eval_airy(xi, fam, airy::Scaling::Natural);
    if (e.value == Complex(0.0)) break;
    const Complex step = e.value / e.derivative;
    xi -= step;
    if (std::abs(step) <= 1e-15 * std::abs(xi)) break;
  }
  const airy::AiryEval e = airy::eval_airy(xi, fam, airy::Scaling::Natural);
  if (e.value == Complex(0.0)) return 0.0;
  return std::abs(e.value / e.derivative) / std::max(1.0, std::abs(xi));
}

using SampleSink = std::function<void(double, Complex)>;

// Integrates from (a, xi) to a_end, landing exactly on every stop in between.
Complex integrate(double a, Complex xi, double a_end, double max_step, const std::vector<double>& stops,
                  const SampleSink& sink) {
  const double dir = a_end >= a ? 1.0 : -1.0;
  double h = max_step;
  while (a != a_end) {
    double target = a_end;
    for (double s : stops)
      if ((s - a) * dir > 0.0 && (s - target) * dir < 0.0) target = s;
    bool lands = false;
    double step = h;
    if (step >= std::fabs(target - a)) {
      step = std::fabs(target - a);
      lands = true;
    }
    const double hs = dir * step;
    const Complex full = rk4(xi, hs);
    const Complex half = rk4(rk4(xi, 0.5 * hs), 0.5 * hs);
    const double err = std::abs(half - full) / 15.0;
    const double tol = kStepTolerance * std::max(1.0, std::abs(xi));
    const double factor = err > 0.0 ? 0.9 * std::pow(tol / err, 0.2) : 2.0;
    if (err > tol) {
      h = step * std::max(0.2, factor);
      if (h < 1e-12) throw NumericalError(ErrorKind::DriftUnrecoverable, "Gamma step size underflow");
      continue;
    }
    const double a_new = lands ? target : a + hs;
    Complex xi_new = half + (half - full) / 15.0;
    if (reproject(a_new, xi_new) > kDriftTolerance) {
      if (step > 1e-6) {
        h = 0.5 * step;
        continue;
      }
      if (reproject(a_new, xi_new) > kDriftLimit)
        throw NumericalError(ErrorKind::DriftUnrecoverable, "reprojection onto V_a = 0 failed");
    }
    a = a_new;
    xi = xi_new;
    if (sink) sink(a, xi);
    h = std::min(max_step, step * std::min(2.0, factor));
  }
  return xi;
}

template <class F>
double golden_minimum(F f, double lo, double hi, int iterations) {
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iterations && hi - lo > 1e-14 * std::max(1.0, std::fabs(lo)); ++i) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

std::size_t nearest_by_a(const GammaCurve& curve, double a) {
  const auto& s = curve.samples;
  auto it = std::lower_bound(s.begin(), s.end(), a, [](const GammaSample& x, double v) { return x.a < v; });
  if (it == s.end()) return s.size() - 1;
  if (it == s.begin()) return 0;
  const std::size_t i = std::size_t(it - s.begin());
  return (a - s[i - 1].a) <= (s[i].a - a) ? i - 1 : i;
}

}  // namespace

Complex gamma_tangent(Complex xi) {
  const airy::AiryEval e = airy::eval_airy(xi, airy::SolutionFamily::ai(), airy::Scaling::Natural);
  return -airy::kPi * e.value * e.value * std::exp(2.0 * e.log_scale);
}

GammaCurve trace_gamma(int n, double a_from, double a_to, double step_hint) {
  if (n < 1) throw std::invalid_argument("trace_gamma: index must be >= 1");
  if (!(a_from <= a_to) || !std::isfinite(a_from) || !std::isfinite(a_to))
    throw std::invalid_argument("trace_gamma: need a_from <= a_to");
  if (!(step_hint > 0.0)) throw std::invalid_argument("trace_gamma: step_hint must be positive");

  const double a0 = -airy::kSqrt3;
  Complex xi0 = ray_zeros(RayFamily::UMinus, n).back().location;
  reproject(a0, xi0);
  const std::vector<double> stops = {a_from, a_to, -airy::kSqrt3, 0.0, airy::kSqrt3};

  std::vector<GammaSample> backward, forward;
  if (a_from < a0) integrate(a0, xi0, a_from, step_hint, stops, [&](double a, Complex xi) { backward.push_back({a, xi}); });
  if (a_to > a0) integrate(a0, xi0, a_to, step_hint, stops, [&](double a, Complex xi) { forward.push_back({a, xi}); });

  GammaCurve curve;
  curve.index = n;
  std::reverse(backward.begin(), backward.end());
  auto keep = [&](const GammaSample& s) {
    if (s.a >= a_from && s.a <= a_to) curve.samples.push_back(s);
  };
  for (const auto& s : backward) keep(s);
  keep({a0, xi0});
  for (const auto& s : forward) keep(s);

  for (const auto& s : curve.samples) {
    if (s.a == -airy::kSqrt3) curve.alpha_at = s.xi;
    if (s.a == 0.0) curve.bi_at = s.xi;
    if (s.a == airy::kSqrt3) curve.beta_at = s.xi;
  }
  return curve;
}

Complex gamma_point(const GammaCurve& curve, double a) {
  if (curve.samples.empty()) throw std::invalid_argument("gamma_point: empty curve");
  if (a < curve.samples.front().a || a > curve.samples.back().a)
    throw std::invalid_argument("gamma_point: a outside the traced range");
  const GammaSample& s = curve.samples[nearest_by_a(curve, a)];
  if (s.a == a) return s.xi;
  return integrate(s.a, s.xi, a, std::fabs(a - s.a), {}, nullptr);
}

double distance_to_gamma(const GammaCurve& curve, Complex p) {
  const auto& s = curve.samples;
  if (s.empty()) throw std::invalid_argument("distance_to_gamma: empty curve");
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (std::abs(s[i].xi - p) < std::abs(s[best].xi - p)) best = i;
  if (s.size() == 1) return std::abs(s[0].xi - p);
  const double lo = s[best == 0 ? 0 : best - 1].a;
  const double hi = s[std::min(best + 1, s.size() - 1)].a;
  auto dist = [&](double a) { return std::abs(gamma_point(curve, a) - p); };
  const double a = golden_minimum(dist, lo, hi, 90);
  return std::min(dist(a), std::abs(s[best].xi - p));
}

LambdaMin find_lambda_min(int k) {
  const GammaCurve curve = trace_gamma(k, -airy::kSqrt3, airy::kSqrt3, 0.02);
  const auto& s = curve.samples;
  auto ratio = [](Complex xi) { return xi.real() / xi.imag(); };
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (ratio(s[i].xi) < ratio(s[best].xi)) best = i;
  const double lo = s[best == 0 ? 0 : best - 1].a;
  const double hi = s[std::min(best + 1, s.size() - 1)].a;
  const double a = golden_minimum([&](double x) { return ratio(gamma_point(curve, x)); }, lo, hi, 120);
  const Complex xi = gamma_point(curve, a);
  const double im = xi.imag();
  return {a, xi, im * im * im, ratio(xi)};
}

std::vector<GammaCritical> detect_criticals_on_gamma(int k, double a_from, double a_to) {
  const GammaCurve curve = trace_gamma(k, a_from, a_to, 0.05);
  const auto& s = curve.samples;
  std::vector<double> h(s.size());
  std::vector<bool> zero(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Complex t = gamma_tangent(s[i].xi);
    h[i] = t.imag();
    zero[i] = std::fabs(t.imag()) <= 1e-13 * std::abs(t);
  }
  std::vector<GammaCritical> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (zero[i]) {
      out.push_back({s[i].a, s[i].xi});
      continue;
    }
    if (i + 1 >= s.size() || zero[i + 1] || (h[i] < 0.0) == (h[i + 1] < 0.0)) continue;
    double lo = s[i].a, hi = s[i + 1].a;
    const bool lo_negative = h[i] < 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::fabs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      const double hm = gamma_tangent(gamma_point(curve, mid)).imag();
      if ((hm < 0.0) == lo_negative)
        lo = mid;
      else
        hi = mid;
    }
    const double a = 0.5 * (lo + hi);
    out.push_back({a, gamma_point(curve, a)});
  }
  std::vector<GammaCritical> unique;
  for (const auto& c : out) {
    bool seen = false;
    for (const auto& u : unique) seen = seen || std::fabs(u.a - c.a) <= 1e-9;
    if (!seen) unique.push_back(c);
  }
  return unique;
}

}  // namespace ptlocus
