#include "ptlocus/locus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ptlocus/critical.hpp"
#include "ptlocus/error.hpp"

namespace ptlocus {
namespace {

constexpr Complex kI{0.0, 1.0};

void require_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be positive and finite");
}

void require_lambda(Complex lambda) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
    throw std::invalid_argument("lambda must be finite");
}

// F(p, m) = Ai(p) Bi(m) - Bi(p) Ai(m) and its partials, at a common scale.
struct Bilinear {
  Complex f, fp, fm, fpm;
  double log_scale;
  double scale;
  double derivative_scale;
};

Bilinear bilinear(Complex p, Complex m) {
  const airy::AiryPair P = airy::eval_airy_pair(p);
  const airy::AiryPair M = airy::eval_airy_pair(m);
  const double l1 = P.ai.log_scale + M.bi.log_scale;
  const double l2 = P.bi.log_scale + M.ai.log_scale;
  const double l = std::max(l1, l2);
  const double w1 = std::exp(l1 - l);
  const double w2 = std::exp(l2 - l);
  const Complex a = P.ai.value, ad = P.ai.derivative, b = P.bi.value, bd = P.bi.derivative;
  const Complex A = M.ai.value, Ad = M.ai.derivative, B = M.bi.value, Bd = M.bi.derivative;
  Bilinear r;
  r.f = w1 * a * B - w2 * b * A;
  r.fp = w1 * ad * B - w2 * bd * A;
  r.fm = w1 * a * Bd - w2 * b * Ad;
  r.fpm = w1 * ad * Bd - w2 * bd * Ad;
  r.log_scale = l;
  r.scale = w1 * std::abs(a * B) + w2 * std::abs(b * A);
  r.derivative_scale = w1 * (std::abs(ad * B) + std::abs(a * Bd)) + w2 * (std::abs(bd * A) + std::abs(b * Ad));
  return r;
}

bool tie(double x, double y) { return std::fabs(x - y) <= 1e-9 * std::max(1.0, std::max(std::fabs(x), std::fabs(y))); }

}  // namespace

DeterminantJet determinant_jet(double eps, Complex lambda) {
  require_eps(eps);
  require_lambda(lambda);
  const double c = std::cbrt(eps);
  const Complex p = c * (lambda + kI);
  const Complex m = c * (lambda - kI);
  const Bilinear b = bilinear(p, m);
  DeterminantJet j;
  j.value = b.f;
  j.d_lambda = c * (b.fp + b.fm);
  j.d_eps = (p * b.fp + m * b.fm) / (3.0 * eps);
  j.d_lambda2 = c * c * ((p + m) * b.f + 2.0 * b.fpm);
  j.d_lambda_eps = c / (3.0 * eps) * (b.fp + b.fm + (p * p + m * m) * b.f + (p + m) * b.fpm);
  j.log_scale = b.log_scale;
  j.scale = b.scale;
  j.lambda_scale = c * b.derivative_scale;
  return j;
}

ScaledDeterminant determinant(double eps, Complex lambda) {
  require_eps(eps);
  require_lambda(lambda);
  const double c = std::cbrt(eps);
  const Bilinear b = bilinear(c * (lambda + kI), c * (lambda - kI));
  return {b.f, b.log_scale, b.scale};
}

DeterminantPartials determinant_partials(double eps, Complex lambda) {
  const DeterminantJet j = determinant_jet(eps, lambda);
  return {j.d_lambda, j.d_eps, j.log_scale};
}

contour::AnalyticFunction determinant_function(double eps) {
  require_eps(eps);
  return [eps](Complex lambda) {
    const DeterminantJet j = determinant_jet(eps, lambda);
    return contour::Sample{j.value, j.d_lambda, j.d_lambda2, j.scale, j.lambda_scale};
  };
}

double default_re_max(double eps, int count) {
  require_eps(eps);
  const double x = airy::kPi * (count + 2) / 2.0;
  return x * x / eps + 2.0;
}

std::vector<EigenvalueRecord> eigenvalues(double eps, double re_max, int max_count) {
  require_eps(eps);
  if (!(re_max > kKnot) || !std::isfinite(re_max)) throw std::invalid_argument("re_max must exceed 1/sqrt3");
  if (max_count < 1) throw std::invalid_argument("max_count must be >= 1");
  const contour::AnalyticFunction f = determinant_function(eps);
  contour::RootSearchOptions opt;
  opt.max_count = max_count;

  std::vector<contour::Root> roots;
  bool done = false;
  for (int attempt = 0; attempt <= 5 && !done; ++attempt) {
    const double edge = re_max * (1.0 + 0.0037 * attempt);
    try {
      roots = contour::find_roots(f, {0.0, edge, -1.0, 1.0}, opt);
      done = true;
    } catch (const NumericalError& e) {
      if (e.kind() != ErrorKind::ContourThroughRoot || attempt == 5) throw;
    }
  }

  std::vector<EigenvalueRecord> out;
  for (const contour::Root& r : roots) {
    if (r.z.real() > re_max) continue;
    EigenvalueRecord rec;
    rec.point.eps = eps;
    rec.point.lambda = r.z;
    rec.point.on_real_axis = std::fabs(r.z.imag()) <= kRealAxisTolerance;
    if (rec.point.on_real_axis) rec.point.lambda = Complex(r.z.real(), 0.0);
    rec.multiplicity = r.multiplicity;
    rec.residual = r.residual;
    rec.newton_iters = r.iterations;
    out.push_back(rec);
  }
  std::sort(out.begin(), out.end(), [](const EigenvalueRecord& x, const EigenvalueRecord& y) {
    const double xr = x.point.lambda.real(), yr = y.point.lambda.real();
    if (!tie(xr, yr)) return xr < yr;
    return x.point.lambda.imag() > y.point.lambda.imag();
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].point.branch = int(i) + 1;
  return out;
}

int multiplicity_at(double eps, Complex lambda) {
  require_eps(eps);
  require_lambda(lambda);
  const contour::AnalyticFunction f = determinant_function(eps);
  int previous = -1;
  double radius = 1e-2;
  for (int i = 0; i < 7; ++i, radius *= 0.1) {
    int count;
    try {
      count = contour::winding_count(contour::circle_moments(f, lambda, radius));
    } catch (const NumericalError& e) {
      if (e.kind() != ErrorKind::ContourThroughRoot && e.kind() != ErrorKind::Unstable) throw;
      previous = -1;
      continue;
    }
    if (count == previous) return count;
    previous = count;
  }
  throw NumericalError(ErrorKind::Unstable, "winding count did not stabilise while shrinking the circle");
}

double eigenfunction_boundary_residual(EigenfunctionKind kind, int k, double knot) {
  if (k < 1) throw std::invalid_argument("eigenfunction_boundary_residual: k must be >= 1");
  const CriticalPair pair = critical_pairs(k).back();
  const bool at_delta = kind == EigenfunctionKind::AtDelta;
  const double c = std::cbrt(at_delta ? pair.delta_k : pair.eps_k);
  const airy::SolutionFamily fam = at_delta ? airy::SolutionFamily::u_plus() : airy::SolutionFamily::u_minus();
  auto y = [&](double z) {
    const airy::AiryEval e = airy::eval_airy(c * (knot - kI * z), fam, airy::Scaling::Unscaled);
    return std::abs(e.value);
  };
  double peak = 0.0;
  for (int i = 0; i < 64; ++i) peak = std::max(peak, y(-1.0 + 2.0 * i / 63.0));
  return std::max(y(-1.0), y(1.0)) / peak;
}

}  // namespace ptlocus
