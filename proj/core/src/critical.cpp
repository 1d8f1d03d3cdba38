#include "ptlocus/critical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "family_function.hpp"
#include "ptlocus/error.hpp"

namespace ptlocus {
namespace {

using airy::SolutionFamily;

constexpr double kPi = airy::kPi;
constexpr double kScanStep = 0.05;
constexpr double kScanLimit = 60.0;
constexpr double kRayAngleTolerance = 1e-9;

using RealFunction = std::function<double(double)>;

double bisect(const RealFunction& f, double lo, double hi, double flo) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (std::fabs(hi - lo) <= 1e-14 * std::max(1.0, std::fabs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

// Zeros of f on the open interval between 0 and dir * limit, stopping after
// max_count of them.
std::vector<double> scan_once(const RealFunction& f, double dir, double limit, int max_count, double step) {
  std::vector<double> zeros;
  double x_prev = dir * step;
  double f_prev = f(x_prev);
  if (f_prev == 0.0) zeros.push_back(x_prev);
  for (int j = 2; std::fabs(x_prev) < limit && int(zeros.size()) < max_count; ++j) {
    const double x = dir * step * j;
    const double fx = f(x);
    if (fx == 0.0) {
      zeros.push_back(x);
    } else if (f_prev != 0.0 && (fx < 0.0) != (f_prev < 0.0)) {
      zeros.push_back(bisect(f, x_prev, x, f_prev));
    }
    x_prev = x;
    f_prev = fx;
  }
  return zeros;
}

// Scan at step h and h/2; accept when both see the same zeros.
std::vector<double> scan_zeros(const RealFunction& f, double dir, double limit, int max_count) {
  double step = kScanStep;
  for (int halving = 0; halving <= 4; ++halving) {
    std::vector<double> coarse = scan_once(f, dir, limit, max_count, step);
    const double reach = int(coarse.size()) >= max_count ? std::fabs(coarse.back()) + step : limit;
    std::vector<double> fine = scan_once(f, dir, reach, max_count, 0.5 * step);
    bool same = coarse.size() == fine.size();
    for (std::size_t i = 0; same && i < coarse.size(); ++i)
      same = std::fabs(coarse[i] - fine[i]) <= 1e-9 * std::max(1.0, std::fabs(coarse[i]));
    if (same) return coarse;
    step *= 0.5;
  }
  throw NumericalError(ErrorKind::BracketingFailure, "real-axis scan could not separate zeros");
}

std::vector<double> negative_zeros_of(const RealFunction& f, int count) {
  if (count < 1) throw std::invalid_argument("negative_axis_zeros: count must be >= 1");
  std::vector<double> zeros = scan_zeros(f, -1.0, kScanLimit, count);
  if (int(zeros.size()) < count)
    throw NumericalError(ErrorKind::BracketingFailure, "not enough negative zeros inside the scan range");
  return zeros;
}

bool is_real_family(SolutionFamily family) { return std::isfinite(family.ai_coefficient()); }

RayZero polish_ray_zero(RayFamily family, int k, Complex seed) {
  const SolutionFamily fam = family == RayFamily::UMinus ? SolutionFamily::u_minus() : SolutionFamily::u_plus();
  const contour::AnalyticFunction f = detail::family_function(fam);
  Complex z = seed;
  if (contour::newton_polish(f, z, 1e-15, 20) < 0) z = seed;
  const contour::Sample s = f(z);
  if (std::abs(s.value) > 1e-10 * s.scale)
    throw NumericalError(ErrorKind::NonConvergence, "ray zero residual too large for k = " + std::to_string(k));
  if (std::fabs(std::arg(z) - kPi / 3.0) > 1e-10) z = std::polar(std::abs(z), kPi / 3.0);
  return {family, k, z, std::abs(z)};
}

ZeroLabel label_of(Complex z) {
  if (z.imag() == 0.0) {
    if (z.real() < 0.0) return ZeroLabel::NegativeAxis;
    if (z.real() > 0.0) return ZeroLabel::PositiveAxis;
    return ZeroLabel::Origin;
  }
  const double phi = std::fabs(std::arg(z));
  if (std::fabs(phi - kPi / 3.0) <= kRayAngleTolerance) return ZeroLabel::OnRay;
  if (phi < kPi / 3.0) return ZeroLabel::SectorBelowRay;
  if (phi < kPi / 2.0) return ZeroLabel::SectorAboveRay;
  return ZeroLabel::Other;
}

// Zeros of an entire real-on-real function f within |z| <= radius.
std::vector<LabeledZero> classify(const contour::AnalyticFunction& f, const RealFunction& real_f, double radius) {
  constexpr double strip = 0.05;
  std::vector<LabeledZero> out;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const double r = radius * (1.0 + 0.0013 * attempt) + 1e-3;
    try {
      out.clear();
      std::vector<double> real_zeros;
      for (double dir : {-1.0, 1.0})
        for (double x : scan_zeros(real_f, dir, r, 1 << 20)) real_zeros.push_back(x);

      int origin_multiplicity = 0;
      const contour::Sample at0 = f(0.0);
      if (std::abs(at0.value) <= 1e-14 * std::max(at0.scale, 1e-300))
        origin_multiplicity = contour::winding_count(contour::circle_moments(f, 0.0, 1e-2));

      const int strip_count = contour::winding_count(contour::rectangle_moments(f, {-r, r, -strip, strip}));
      if (strip_count != int(real_zeros.size()) + origin_multiplicity)
        throw NumericalError(ErrorKind::Unstable, "real zeros disagree with the strip winding number");

      for (double x : real_zeros)
        if (std::fabs(x) <= radius) out.push_back({Complex(x, 0.0), 1, label_of(Complex(x, 0.0)), false});
      if (origin_multiplicity > 0) out.push_back({Complex(0.0, 0.0), origin_multiplicity, ZeroLabel::Origin, false});

      contour::RootSearchOptions opt;
      opt.newton_tolerance = 1e-14;
      for (const contour::Rect& rect : {contour::Rect{-r, r, strip, r}, contour::Rect{-r, r, -r, -strip}}) {
        for (const contour::Root& root : contour::find_roots(f, rect, opt)) {
          if (std::abs(root.z) > radius) continue;
          out.push_back({root.z, root.multiplicity, label_of(root.z), root.z.imag() < 0.0});
        }
      }
      std::sort(out.begin(), out.end(), [](const LabeledZero& x, const LabeledZero& y) {
        if (x.z.real() != y.z.real()) return x.z.real() < y.z.real();
        return x.z.imag() < y.z.imag();
      });
      return out;
    } catch (const NumericalError& e) {
      if (e.kind() != ErrorKind::ContourThroughRoot && e.kind() != ErrorKind::Unstable) throw;
    }
  }
  throw NumericalError(ErrorKind::Unstable, "zero classification failed after contour jitter");
}

int count_label(const std::vector<LabeledZero>& zeros, ZeroLabel label) {
  int n = 0;
  for (const auto& z : zeros)
    if (z.label == label) n += z.multiplicity;
  return n;
}

}  // namespace

std::vector<double> negative_axis_zeros(SolutionFamily family, int count) {
  if (!is_real_family(family)) throw std::invalid_argument("negative_axis_zeros: family must be real");
  return negative_zeros_of(
      [family](double x) { return airy::eval_airy(x, family, airy::Scaling::Natural).value.real(); }, count);
}

std::vector<double> negative_axis_derivative_zeros(SolutionFamily family, int count) {
  if (!is_real_family(family)) throw std::invalid_argument("negative_axis_derivative_zeros: family must be real");
  return negative_zeros_of(
      [family](double x) { return airy::eval_airy(x, family, airy::Scaling::Natural).derivative.real(); }, count);
}

std::vector<RayZero> ray_zeros(RayFamily family, int count) {
  if (count < 1) throw std::invalid_argument("ray_zeros: count must be >= 1");
  if (family == RayFamily::Bi) throw std::invalid_argument("ray_zeros: Bi zeros are not on the ray");
  const SolutionFamily fam = family == RayFamily::UMinus ? SolutionFamily::u_minus() : SolutionFamily::u_plus();
  const std::vector<double> t = negative_axis_zeros(fam, count);
  // e^{-2 pi i/3} t = |t| e^{i pi/3} for t < 0
  std::vector<RayZero> out;
  out.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    out.push_back(polish_ray_zero(family, int(i) + 1, std::polar(-t[i], kPi / 3.0)));
  return out;
}

std::vector<CriticalPair> critical_pairs(int count) {
  if (count < 1) throw std::invalid_argument("critical_pairs: count must be >= 1");
  const std::vector<RayZero> alpha = ray_zeros(RayFamily::UMinus, count);
  const std::vector<RayZero> beta = ray_zeros(RayFamily::UPlus, count);
  std::vector<CriticalPair> out;
  for (int k = 0; k < count; ++k) {
    const double rb = beta[k].modulus * airy::kSqrt3 / 2.0;
    const double ra = alpha[k].modulus * airy::kSqrt3 / 2.0;
    out.push_back({k + 1, beta[k], alpha[k], rb * rb * rb, ra * ra * ra, kKnot});
  }
  return out;
}

std::vector<RayZero> bi_quadrant_zeros(int count) {
  if (count < 1) throw std::invalid_argument("bi_quadrant_zeros: count must be >= 1");
  const contour::AnalyticFunction f = detail::family_function(SolutionFamily::bi());
  std::vector<RayZero> out;
  for (int m = 1; m <= count; ++m) {
    // large-|z| form of Bi = 0: exp(2 zeta) = -2 i ... gives these zeta values
    const Complex zeta{-0.5 * std::log(2.0), kPi * (m - 0.25)};
    const Complex seed = std::pow(1.5 * zeta, 2.0 / 3.0);
    bool found = false;
    for (double jitter : {0.0, 0.02, -0.02, 0.05, -0.05}) {
      Complex z = seed * (1.0 + jitter);
      if (contour::newton_polish(f, z, 1e-15, 40) < 0) continue;
      const double phi = std::arg(z);
      if (!(phi > kPi / 3.0 && phi < kPi / 2.0)) continue;
      bool duplicate = false;
      for (const RayZero& r : out) duplicate = duplicate || std::abs(r.location - z) < 1e-6;
      if (duplicate) continue;
      out.push_back({RayFamily::Bi, m, z, std::abs(z)});
      found = true;
      break;
    }
    if (!found) throw NumericalError(ErrorKind::SeedDivergence, "Newton left the sector for Bi zero m = " + std::to_string(m));
  }
  std::sort(out.begin(), out.end(), [](const RayZero& x, const RayZero& y) { return x.modulus < y.modulus; });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].index = int(i) + 1;
  return out;
}

int ZeroClassification::value_count(ZeroLabel label) const { return count_label(value_zeros, label); }
int ZeroClassification::derivative_count(ZeroLabel label) const { return count_label(derivative_zeros, label); }

ZeroClassification classify_va_zeros(double a, double search_radius) {
  if (!(search_radius > 0.0 && search_radius <= 15.0))
    throw std::invalid_argument("classify_va_zeros: search radius must be in (0, 15]");
  if (!std::isfinite(a)) throw std::invalid_argument("classify_va_zeros: a must be finite");
  SolutionFamily fam = SolutionFamily::va(a);
  if (a == airy::kSqrt3) fam = SolutionFamily::u_plus();
  if (a == -airy::kSqrt3) fam = SolutionFamily::u_minus();

  ZeroClassification out;
  out.a = a;
  out.search_radius = search_radius;
  out.value_zeros = classify(
      detail::family_function(fam),
      [fam](double x) { return airy::eval_airy(x, fam, airy::Scaling::Natural).value.real(); }, search_radius);
  out.derivative_zeros = classify(
      detail::family_derivative_function(fam),
      [fam](double x) { return airy::eval_airy(x, fam, airy::Scaling::Natural).derivative.real(); }, search_radius);
  return out;
}

}  // namespace ptlocus
