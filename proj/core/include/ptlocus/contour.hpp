#pragma once

#include <functional>
#include <vector>

#include "ptlocus/airy.hpp"

namespace ptlocus::contour {

/// One evaluation of an analytic function. value, derivative and second may
/// all carry the same positive factor (e.g. an exponential scale); scale and
/// derivative_scale are reference magnitudes in those units.
struct Sample {
  Complex value;
  Complex derivative;
  Complex second;
  double scale = 1.0;
  double derivative_scale = 1.0;
};

using AnalyticFunction = std::function<Sample(Complex)>;

struct Rect {
  double re_min;
  double re_max;
  double im_min;
  double im_max;

  bool contains(Complex z, double margin = 0.0) const {
    return z.real() >= re_min - margin && z.real() <= re_max + margin && z.imag() >= im_min - margin &&
           z.imag() <= im_max + margin;
  }
};

/// (1/2 pi i) * contour integral of z^k f'/f for k = 0, 1, 2. moment[0] is the
/// number of zeros inside; moment[1], moment[2] are their power sums.
struct Moments {
  Complex moment[3];
};

/// NumericalError(ContourThroughRoot) if |f| / scale drops below 1e-13 on the boundary.
Moments rectangle_moments(const AnalyticFunction& f, const Rect& rect);

/// Trapezoid rule on the circle, doubled until two estimates agree.
Moments circle_moments(const AnalyticFunction& f, Complex center, double radius);

/// Round a zeroth moment to an integer, NumericalError(Unstable) if it is not close to one.
int winding_count(const Moments& m);

struct Root {
  Complex z;
  int multiplicity = 1;
  double residual = 0.0;  // |f(z)| / scale
  int iterations = 0;     // Newton steps spent polishing
};

struct RootSearchOptions {
  double newton_tolerance = 1e-12;
  double min_cell = 1e-3;
  int max_count = 1000;
  double cluster_value_tolerance = 1e-10;
  double cluster_derivative_tolerance = 1e-8;
};

/// All zeros of f inside rect, by recursive subdivision and the argument
/// principle; simple zeros are polished by Newton. The total multiplicity of
/// the result equals the winding number of rect.
std::vector<Root> find_roots(const AnalyticFunction& f, const Rect& rect, const RootSearchOptions& options = {});

/// Newton polish from a seed. Returns the number of steps taken, or -1 if it
/// does not converge.
int newton_polish(const AnalyticFunction& f, Complex& z, double tolerance, int max_iterations = 60);

}  // namespace ptlocus::contour
