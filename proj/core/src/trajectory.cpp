#include "ptlocus/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "ptlocus/error.hpp"

namespace ptlocus {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::KnotCrossing: return "KnotCrossing";
    case EventKind::Minimum: return "Minimum";
    case EventKind::Collision: return "Collision";
    case EventKind::Departure: return "Departure";
  }
  return "Unknown";
}

namespace {

constexpr double kOnLocus = 1e-9;
constexpr int kCorrectorIterations = 4;

double tolerance(Complex lambda) { return 1e-13 * std::max(1.0, std::abs(lambda)); }

Complex slope(const DeterminantJet& j) { return -j.d_eps / j.d_lambda; }

// Newton on D(eps, .) = 0 from lambda; on real branches the iterate stays real.
std::optional<Complex> correct(double eps, Complex lambda, bool real, int max_iterations, int* used = nullptr) {
  for (int it = 0; it < max_iterations; ++it) {
    const DeterminantJet j = determinant_jet(eps, lambda);
    if (j.d_lambda == Complex(0.0)) return std::nullopt;
    Complex step = j.value / j.d_lambda;
    if (real) step = step.real();
    lambda -= step;
    if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) return std::nullopt;
    if (std::abs(step) <= tolerance(lambda)) {
      const DeterminantJet k = determinant_jet(eps, lambda);
      if (std::abs(k.value) > kOnLocus * k.scale) return std::nullopt;
      if (used) *used = it + 1;
      return lambda;
    }
  }
  return std::nullopt;
}

// Newton in eps on D(., lambda) = 0 for real lambda.
std::optional<double> solve_eps(double eps, double lambda) {
  for (int it = 0; it < 30; ++it) {
    const DeterminantJet j = determinant_jet(eps, lambda);
    if (j.d_eps.imag() == 0.0) return std::nullopt;
    const double step = j.value.imag() / j.d_eps.imag();
    eps -= step;
    if (!(eps > 0.0) || !std::isfinite(eps)) return std::nullopt;
    if (std::fabs(step) <= 1e-14 * eps) return eps;
  }
  return std::nullopt;
}

struct Fold {
  double eps;
  double lambda;
};

// Newton on (Im D, Im D_lambda) = 0.
std::optional<Fold> solve_fold(double eps, double lambda) {
  for (int it = 0; it < 40; ++it) {
    const DeterminantJet j = determinant_jet(eps, lambda);
    const double f = j.value.imag(), g = j.d_lambda.imag();
    const double a = j.d_eps.imag(), b = j.d_lambda.imag();
    const double c = j.d_lambda_eps.imag(), d = j.d_lambda2.imag();
    const double det = a * d - b * c;
    if (det == 0.0 || !std::isfinite(det)) return std::nullopt;
    const double de = (f * d - b * g) / det;
    const double dl = (a * g - c * f) / det;
    eps -= de;
    lambda -= dl;
    if (!(eps > 0.0) || !std::isfinite(eps) || !std::isfinite(lambda)) return std::nullopt;
    if (std::fabs(de) <= 1e-14 * eps && std::fabs(dl) <= 1e-14 * std::max(1.0, std::fabs(lambda)))
      return Fold{eps, lambda};
  }
  return std::nullopt;
}

class Tracer {
 public:
  Tracer(int n, double eps_to, const TraceOptions& opt) : eps_to_(eps_to), opt_(opt) { out_.branch = n; }

  Trajectory run(double eps, Complex lambda, bool real) {
    eps_ = eps;
    lambda_ = lambda;
    real_ = real;
    push(eps_, lambda_);
    double h = opt_.initial_step;
    int halvings = 0;
    bool have_prev = false;
    double prev_eps = 0.0, prev_t = 0.0;

    while (eps_ < eps_to_) {
      const DeterminantJet j = determinant_jet(eps_, lambda_);
      Complex t = slope(j);
      if (real_) t = t.real();
      const double cap = 0.02 * std::max(1.0, std::abs(lambda_)) / std::max(std::abs(t), 1e-300);
      h = std::min({h, opt_.max_step, cap});

      if (real_ && have_prev && eps_ > prev_eps) {
        const double dt = (t.real() - prev_t) / (eps_ - prev_eps);
        const double est = dt != 0.0 ? t.real() / (2.0 * dt) : -1.0;
        if (est > 0.0 && est < 4.0 * h && try_fold(eps_ + est, lambda_.real() + 2.0 * t.real() * est, 8.0 * h)) {
          have_prev = false;
          h = opt_.fold_window;
          continue;
        }
      }

      const bool last = eps_ + h >= eps_to_;
      const double eps_new = last ? eps_to_ : eps_ + h;
      const double step = eps_new - eps_;
      const Complex predicted = lambda_ + step * t;
      int used = 0;
      std::optional<Complex> corrected = correct(eps_new, predicted, real_, kCorrectorIterations, &used);
      if (corrected && std::abs(*corrected - predicted) > 0.2 * std::abs(*corrected - lambda_) + 1e-12)
        corrected.reset();
      if (!corrected) {
        if (real_ && try_fold(eps_new, predicted.real(), step)) {
          have_prev = false;
          h = opt_.fold_window;
          continue;
        }
        h = 0.5 * step;
        if (++halvings > 4 || h < opt_.min_step)
          throw NumericalError(ErrorKind::BranchLost, "corrector failed after repeated step halving");
        continue;
      }
      halvings = 0;

      if (real_) {
        const double knot_before = lambda_.real() - kKnot, knot_after = corrected->real() - kKnot;
        if (knot_before != 0.0 && (knot_before < 0.0) != (knot_after < 0.0)) knot_crossing(eps_, eps_new, *corrected);
        const DeterminantJet jn = determinant_jet(eps_new, *corrected);
        const double tn = slope(jn).real();
        if (t.real() < 0.0 && tn >= 0.0) minimum(eps_, lambda_.real(), eps_new, corrected->real());
      }

      prev_eps = eps_;
      prev_t = t.real();
      have_prev = true;
      eps_ = eps_new;
      lambda_ = *corrected;
      push(eps_, lambda_);
      if (used <= 3) h = std::min(opt_.max_step, 1.5 * step);
    }
    std::stable_sort(out_.events.begin(), out_.events.end(),
                     [](const TrajectoryEvent& x, const TrajectoryEvent& y) { return x.eps < y.eps; });
    return out_;
  }

 private:
  void push(double eps, Complex lambda) {
    SpectralPoint p;
    p.eps = eps;
    p.lambda = real_ ? Complex(lambda.real(), 0.0) : lambda;
    p.branch = out_.branch;
    p.on_real_axis = real_;
    out_.samples.push_back(p);
  }

  void knot_crossing(double e0, double e1, Complex l1) {
    const double r0 = lambda_.real() - kKnot, r1 = l1.real() - kKnot;
    const double seed = e0 + (e1 - e0) * r0 / (r0 - r1);
    const std::optional<double> e = solve_eps(seed, kKnot);
    if (e && *e >= e0 && *e <= e1) out_.events.push_back({EventKind::KnotCrossing, *e, Complex(kKnot, 0.0)});
  }

  // Bisection on d lambda / d eps between a negative and a non-negative slope.
  void minimum(double e0, double l0, double e1, double l1) {
    double lo = e0, hi = e1, llo = l0, lhi = l1;
    for (int it = 0; it < 100 && hi - lo > 1e-14 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double seed = llo + (lhi - llo) * (mid - lo) / (hi - lo);
      const std::optional<Complex> l = correct(mid, seed, true, 20);
      if (!l) break;
      const double s = slope(determinant_jet(mid, *l)).real();
      if (s < 0.0) {
        lo = mid;
        llo = l->real();
      } else {
        hi = mid;
        lhi = l->real();
      }
    }
    const double e = 0.5 * (lo + hi);
    const std::optional<Complex> l = correct(e, 0.5 * (llo + lhi), true, 20);
    out_.events.push_back({EventKind::Minimum, e, Complex(l ? l->real() : 0.5 * (llo + lhi), 0.0)});
  }

  // Locates a fold ahead of the current point within reach and, if found,
  // emits the window samples, the collision and the departure.
  bool try_fold(double eps_seed, double lambda_seed, double reach) {
    const std::optional<Fold> fold = solve_fold(eps_seed, lambda_seed);
    if (!fold || fold->eps <= eps_ || fold->eps - eps_ > reach) return false;
    if (fold->eps > eps_to_) return false;
    const double w = opt_.fold_window;
    const int m = opt_.fold_samples;

    // Approach: eps is a smooth function of lambda through the fold.
    if (fold->eps - w > eps_) {
      const std::optional<Complex> l = correct(fold->eps - w, lambda_, true, 30);
      if (!l) return false;
      eps_ = fold->eps - w;
      lambda_ = *l;
      push(eps_, lambda_);
    }
    const double l_start = lambda_.real(), e_start = eps_;
    for (int i = 1; i < m; ++i) {
      const double s = double(i) / m;
      const double l = l_start + (fold->lambda - l_start) * s;
      const double seed = fold->eps - (fold->eps - e_start) * (1.0 - s) * (1.0 - s);
      const std::optional<double> e = solve_eps(seed, l);
      if (!e || *e <= eps_ || *e >= fold->eps) continue;
      eps_ = *e;
      lambda_ = l;
      push(eps_, lambda_);
    }
    eps_ = fold->eps;
    lambda_ = fold->lambda;
    push(eps_, lambda_);
    out_.events.push_back({EventKind::Collision, fold->eps, Complex(fold->lambda, 0.0)});
    if (eps_ >= eps_to_) return true;

    // Departure: 1/2 D_ll dl^2 + D_le h dl + D_e h = 0 at the fold.
    const DeterminantJet j = determinant_jet(fold->eps, fold->lambda);
    const double sigma = out_.branch % 2 == 1 ? 1.0 : -1.0;
    real_ = false;
    for (int i = 1; i <= m; ++i) {
      const double s = double(i) / m;
      const double e = std::min(eps_to_, fold->eps + w * s * s);
      if (e <= eps_) break;
      const double h = e - fold->eps;
      const Complex b = j.d_lambda_eps * h;
      const Complex root = std::sqrt(b * b - 2.0 * j.d_lambda2 * j.d_eps * h);
      Complex dl = (-b + root) / j.d_lambda2;
      if (dl.imag() * sigma < 0.0) dl = (-b - root) / j.d_lambda2;
      const std::optional<Complex> l = correct(e, fold->lambda + dl, false, 12);
      if (!l || l->imag() * sigma <= 0.0)
        throw NumericalError(ErrorKind::BranchLost, "could not leave the collision point");
      eps_ = e;
      lambda_ = *l;
      push(eps_, lambda_);
    }
    out_.events.push_back({EventKind::Departure, eps_, lambda_});
    return true;
  }

  double eps_to_;
  TraceOptions opt_;
  Trajectory out_;
  double eps_ = 0.0;
  Complex lambda_;
  bool real_ = true;
};

}  // namespace

Trajectory trace_lambda(int n, double eps_from, double eps_to, const TraceOptions& options) {
  if (n < 1) throw std::invalid_argument("trace_lambda: branch must be >= 1");
  if (!(eps_from > 0.0) || !std::isfinite(eps_from) || !std::isfinite(eps_to) || eps_to < eps_from)
    throw std::invalid_argument("trace_lambda: need 0 < eps_from <= eps_to");
  Trajectory empty;
  empty.branch = n;
  if (eps_from == eps_to) return empty;

  const int want = n + 2;
  const std::vector<EigenvalueRecord> records = eigenvalues(eps_from, default_re_max(eps_from, want), 4 * want + 64);
  std::vector<EigenvalueRecord> expanded;
  for (const auto& r : records)
    for (int i = 0; i < r.multiplicity; ++i) expanded.push_back(r);
  if (int(expanded.size()) < n) throw NumericalError(ErrorKind::NotABranch, "branch not present at eps_from");
  const EigenvalueRecord& start = expanded[std::size_t(n - 1)];
  return Tracer(n, eps_to, options).run(eps_from, start.point.lambda, start.point.on_real_axis);
}

}  // namespace ptlocus
