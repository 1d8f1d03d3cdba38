#pragma once

#include <vector>

#include "ptlocus/airy.hpp"
#include "ptlocus/contour.hpp"

namespace ptlocus {

/// 1/sqrt3, where eigenvalue pairs collide.
inline constexpr double kKnot = 0.57735026918962576451;

/// |Im lambda| at or below which an eigenvalue counts as real.
inline constexpr double kRealAxisTolerance = 1e-10;

struct SpectralPoint {
  double eps = 0.0;
  Complex lambda;
  int branch = 0;
  bool on_real_axis = false;
};

struct EigenvalueRecord {
  SpectralPoint point;
  int multiplicity = 1;
  double residual = 0.0;  // |D| / local determinant scale
  int newton_iters = 0;
};

/// The determinant times exp(-log_scale); scale is |Ai+ Bi-| + |Bi+ Ai-| in
/// the same units.
struct ScaledDeterminant {
  Complex value;
  double log_scale = 0.0;
  double scale = 0.0;
};

struct DeterminantPartials {
  Complex d_lambda;
  Complex d_eps;
  double log_scale = 0.0;
};

/// D together with first and second derivatives, all sharing one scale.
/// lambda_scale is the reference magnitude for d_lambda.
struct DeterminantJet {
  Complex value;
  Complex d_lambda;
  Complex d_eps;
  Complex d_lambda2;
  Complex d_lambda_eps;
  double log_scale = 0.0;
  double scale = 0.0;
  double lambda_scale = 0.0;
};

/// D(eps, lambda) = Ai(xi+) Bi(xi-) - Bi(xi+) Ai(xi-), xi+- = eps^(1/3) (lambda +- i).
ScaledDeterminant determinant(double eps, Complex lambda);
DeterminantPartials determinant_partials(double eps, Complex lambda);
DeterminantJet determinant_jet(double eps, Complex lambda);

/// D as an analytic function of lambda for the contour machinery.
contour::AnalyticFunction determinant_function(double eps);

/// (pi (count + 2) / 2)^2 / eps + 2.
double default_re_max(double eps, int count);

/// Every zero of D in {0 < Re lambda <= re_max, |Im lambda| < 1}, sorted by
/// Re lambda, ties (conjugate pairs) with Im lambda > 0 first. Throws
/// NumericalError(MaxCountExceeded) when the rectangle holds more than
/// max_count zeros.
std::vector<EigenvalueRecord> eigenvalues(double eps, double re_max, int max_count);

/// Winding number of D around lambda on circles of shrinking radius.
int multiplicity_at(double eps, Complex lambda);

enum class EigenfunctionKind { AtDelta, AtEps };

/// max(|y(-1)|, |y(1)|) / max |y| on a 64-point grid of [-1, 1] for the
/// closed-form eigenfunctions at the knot: U+(delta_k^(1/3)(1/sqrt3 - i z)) and
/// U-(eps_k^(1/3)(1/sqrt3 - i z)).
double eigenfunction_boundary_residual(EigenfunctionKind kind, int k, double knot = kKnot);

}  // namespace ptlocus
