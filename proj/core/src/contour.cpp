#include "ptlocus/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ptlocus/error.hpp"

namespace ptlocus::contour {
namespace {

constexpr int kGaussPoints = 48;
constexpr double kPi = 3.14159265358979323846;
constexpr double kThroughRootRatio = 1e-13;

struct GaussRule {
  std::array<double, kGaussPoints> x{};
  std::array<double, kGaussPoints> w{};
};

const GaussRule& gauss_rule() {
  static const GaussRule rule = [] {
    GaussRule r;
    const int n = kGaussPoints;
    for (int i = 0; i < n / 2; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-16) break;
      }
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      r.x[i] = -x;
      r.x[n - 1 - i] = x;
      r.w[i] = w;
      r.w[n - 1 - i] = w;
    }
    return r;
  }();
  return rule;
}

using Triple = std::array<Complex, 3>;

Complex log_derivative(const Sample& s) { return s.derivative / s.value; }

void check_not_on_root(const Sample& s, Complex z) {
  if (!(std::abs(s.value) > kThroughRootRatio * s.scale))
    throw NumericalError(ErrorKind::ContourThroughRoot,
                         "contour passes through a zero near (" + std::to_string(z.real()) + ", " +
                             std::to_string(z.imag()) + ")");
}

Triple gauss_segment(const AnalyticFunction& f, Complex p, Complex q) {
  const GaussRule& rule = gauss_rule();
  const Complex mid = 0.5 * (p + q);
  const Complex half = 0.5 * (q - p);
  Triple acc{};
  for (int i = 0; i < kGaussPoints; ++i) {
    const Complex z = mid + half * rule.x[i];
    const Sample s = f(z);
    check_not_on_root(s, z);
    const Complex g = log_derivative(s) * rule.w[i];
    acc[0] += g;
    acc[1] += g * z;
    acc[2] += g * z * z;
  }
  for (auto& a : acc) a *= half;
  return acc;
}

bool close_enough(const Triple& coarse, const Triple& fine, Complex p, Complex q) {
  const double reach = 1.0 + std::max(std::abs(p), std::abs(q));
  return std::abs(coarse[0] - fine[0]) <= 1e-9 && std::abs(coarse[1] - fine[1]) <= 1e-7 * reach &&
         std::abs(coarse[2] - fine[2]) <= 1e-7 * reach * reach;
}

Triple adaptive_segment(const AnalyticFunction& f, Complex p, Complex q, const Triple& whole, int depth) {
  const Complex m = 0.5 * (p + q);
  const Triple left = gauss_segment(f, p, m);
  const Triple right = gauss_segment(f, m, q);
  Triple fine{left[0] + right[0], left[1] + right[1], left[2] + right[2]};
  if (close_enough(whole, fine, p, q)) return fine;
  if (depth >= 40) throw NumericalError(ErrorKind::NonConvergence, "contour quadrature did not converge");
  const Triple a = adaptive_segment(f, p, m, left, depth + 1);
  const Triple b = adaptive_segment(f, m, q, right, depth + 1);
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Triple integrate_edge(const AnalyticFunction& f, Complex p, Complex q) {
  constexpr int pieces = 4;
  Triple acc{};
  for (int i = 0; i < pieces; ++i) {
    const Complex a = p + (q - p) * (double(i) / pieces);
    const Complex b = p + (q - p) * (double(i + 1) / pieces);
    const Triple t = adaptive_segment(f, a, b, gauss_segment(f, a, b), 0);
    for (int k = 0; k < 3; ++k) acc[k] += t[k];
  }
  return acc;
}

Moments to_moments(const Triple& t) {
  const Complex two_pi_i{0.0, 2.0 * kPi};
  return {{t[0] / two_pi_i, t[1] / two_pi_i, t[2] / two_pi_i}};
}

Triple circle_trapezoid(const AnalyticFunction& f, Complex c, double r, int n) {
  Triple acc{};
  for (int j = 0; j < n; ++j) {
    const double theta = 2.0 * kPi * j / n;
    const Complex e = std::polar(1.0, theta);
    const Complex z = c + r * e;
    const Sample s = f(z);
    check_not_on_root(s, z);
    const Complex g = log_derivative(s) * Complex(0.0, r) * e;
    acc[0] += g;
    acc[1] += g * z;
    acc[2] += g * z * z;
  }
  for (auto& a : acc) a *= 2.0 * kPi / n;
  return acc;
}

int rounded_count(Complex m0) {
  const double n = std::round(m0.real());
  if (std::fabs(m0.real() - n) > 0.05 || std::fabs(m0.imag()) > 0.05)
    throw NumericalError(ErrorKind::Unstable, "winding number is not close to an integer");
  return static_cast<int>(n);
}

struct Cell {
  Rect rect;
  Moments moments;
  int count;
};

Cell make_cell(const AnalyticFunction& f, const Rect& r) {
  const Moments m = rectangle_moments(f, r);
  return {r, m, rounded_count(m.moment[0])};
}

// Newton on g(z) = f(z) / prod (z - known_i). Returns steps taken or -1.
int deflated_newton(const AnalyticFunction& f, Complex& z, const std::vector<Complex>& known, double tol) {
  for (int it = 0; it < 60; ++it) {
    const Sample s = f(z);
    if (s.value == Complex(0.0)) return it;
    Complex ratio = s.derivative / s.value;
    for (const Complex& k : known) ratio -= 1.0 / (z - k);
    const Complex step = 1.0 / ratio;
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return -1;
    if (std::abs(step) <= tol * std::max(1.0, std::abs(z))) return it + 1;
  }
  return -1;
}

double residual(const AnalyticFunction& f, Complex z) {
  const Sample s = f(z);
  return s.scale > 0.0 ? std::abs(s.value) / s.scale : std::abs(s.value);
}

class Finder {
 public:
  Finder(const AnalyticFunction& f, const RootSearchOptions& o) : f_(f), opt_(o) {}

  void process(const Cell& cell, int depth) {
    if (cell.count == 0) return;
    if (cell.count < 0) throw NumericalError(ErrorKind::Unstable, "negative winding number");
    const double w = cell.rect.re_max - cell.rect.re_min;
    const double h = cell.rect.im_max - cell.rect.im_min;
    const double size = std::max(w, h);
    if (cell.count == 1 && try_single(cell)) return;
    if (size < opt_.min_cell || depth > 200) {
      resolve_cluster(cell);
      return;
    }
    split(cell, depth);
  }

  std::vector<Root> roots;

 private:
  bool try_single(const Cell& cell) {
    Complex z = cell.moments.moment[1];
    const int iters = deflated_newton(f_, z, {}, opt_.newton_tolerance);
    if (iters < 0) return false;
    const double size = std::max(cell.rect.re_max - cell.rect.re_min, cell.rect.im_max - cell.rect.im_min);
    if (!cell.rect.contains(z, 1e-9 * size)) return false;
    add({z, 1, residual(f_, z), iters});
    return true;
  }

  void resolve_cluster(const Cell& cell) {
    const int n = cell.count;
    const Complex mean = cell.moments.moment[1] / double(n);
    const Sample s = f_(mean);
    const bool tight = std::abs(s.value) <= opt_.cluster_value_tolerance * s.scale &&
                       std::abs(s.derivative) <= opt_.cluster_derivative_tolerance * s.derivative_scale;
    if (n == 2 && !tight) {
      const Complex s1 = cell.moments.moment[1];
      const Complex s2 = cell.moments.moment[2];
      const Complex prod = 0.5 * (s1 * s1 - s2);
      const Complex disc = std::sqrt(s1 * s1 - 4.0 * prod);
      Complex a = 0.5 * (s1 + disc);
      Complex b = 0.5 * (s1 - disc);
      const int ia = deflated_newton(f_, a, {}, opt_.newton_tolerance);
      const int ib = ia >= 0 ? deflated_newton(f_, b, {a}, opt_.newton_tolerance) : -1;
      if (ib >= 0 && std::abs(a - b) > 0.0) {
        add({a, 1, residual(f_, a), ia});
        add({b, 1, residual(f_, b), ib});
        return;
      }
    }
    if (!tight && n != 2)
      throw NumericalError(ErrorKind::Unstable, "unresolved cluster of " + std::to_string(n) + " zeros");
    Complex z = mean;
    int iters = 0;
    if (n == 2) {
      // stationary point of f polishes the double-root location
      for (int it = 0; it < 8; ++it) {
        const Sample t = f_(z);
        if (t.second == Complex(0.0)) break;
        const Complex step = t.derivative / t.second;
        if (!std::isfinite(step.real()) || std::abs(step) > 1e-6 * std::max(1.0, std::abs(z))) break;
        z -= step;
        ++iters;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
      }
    }
    add({z, n, residual(f_, z), iters});
  }

  void split(const Cell& cell, int depth) {
    static constexpr double fractions[] = {0.5, 0.4701, 0.5313, 0.4409, 0.5617, 0.3917, 0.6083};
    const Rect& r = cell.rect;
    const bool vertical_cut = (r.re_max - r.re_min) >= (r.im_max - r.im_min);
    for (double frac : fractions) {
      Rect a = r, b = r;
      if (vertical_cut) {
        const double x = r.re_min + frac * (r.re_max - r.re_min);
        a.re_max = x;
        b.re_min = x;
      } else {
        double frac_im = frac;
        // keep cut lines off the real axis, where real zeros live
        const double y0 = r.im_min + frac_im * (r.im_max - r.im_min);
        if (std::fabs(y0) < 1e-3 * (r.im_max - r.im_min)) frac_im += 0.0371;
        const double y = r.im_min + frac_im * (r.im_max - r.im_min);
        a.im_max = y;
        b.im_min = y;
      }
      try {
        const Cell ca = make_cell(f_, a);
        const Cell cb = make_cell(f_, b);
        if (ca.count + cb.count != cell.count) continue;
        process(ca, depth + 1);
        process(cb, depth + 1);
        return;
      } catch (const NumericalError& e) {
        if (e.kind() != ErrorKind::ContourThroughRoot && e.kind() != ErrorKind::Unstable) throw;
      }
    }
    throw NumericalError(ErrorKind::Unstable, "could not subdivide a cell consistently");
  }

  void add(const Root& r) {
    total_ += r.multiplicity;
    if (total_ > opt_.max_count) throw NumericalError(ErrorKind::MaxCountExceeded, "too many zeros");
    roots.push_back(r);
  }

  const AnalyticFunction& f_;
  RootSearchOptions opt_;
  int total_ = 0;
};

}  // namespace

Moments rectangle_moments(const AnalyticFunction& f, const Rect& r) {
  const Complex c00{r.re_min, r.im_min}, c10{r.re_max, r.im_min}, c11{r.re_max, r.im_max}, c01{r.re_min, r.im_max};
  Triple acc{};
  for (const auto& [p, q] : {std::pair{c00, c10}, std::pair{c10, c11}, std::pair{c11, c01}, std::pair{c01, c00}}) {
    const Triple t = integrate_edge(f, p, q);
    for (int k = 0; k < 3; ++k) acc[k] += t[k];
  }
  return to_moments(acc);
}

Moments circle_moments(const AnalyticFunction& f, Complex center, double radius) {
  int n = 64;
  Triple prev = circle_trapezoid(f, center, radius, n);
  while (n < 8192) {
    n *= 2;
    const Triple next = circle_trapezoid(f, center, radius, n);
    const double reach = 1.0 + std::abs(center) + radius;
    if (std::abs(next[0] - prev[0]) <= 1e-9 && std::abs(next[1] - prev[1]) <= 1e-7 * reach) return to_moments(next);
    prev = next;
  }
  throw NumericalError(ErrorKind::NonConvergence, "circle quadrature did not converge");
}

int winding_count(const Moments& m) { return rounded_count(m.moment[0]); }

std::vector<Root> find_roots(const AnalyticFunction& f, const Rect& rect, const RootSearchOptions& options) {
  const Cell top = make_cell(f, rect);
  if (top.count > options.max_count)
    throw NumericalError(ErrorKind::MaxCountExceeded,
                         "rectangle holds " + std::to_string(top.count) + " zeros, more than the allowed " +
                             std::to_string(options.max_count));
  Finder finder(f, options);
  finder.process(top, 0);
  return std::move(finder.roots);
}

int newton_polish(const AnalyticFunction& f, Complex& z, double tolerance, int max_iterations) {
  for (int it = 0; it < max_iterations; ++it) {
    const Sample s = f(z);
    if (s.value == Complex(0.0)) return it;
    const Complex step = s.value / s.derivative;
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return -1;
    if (std::abs(step) <= tolerance * std::max(1.0, std::abs(z))) return it + 1;
  }
  return -1;
}

}  // namespace ptlocus::contour
