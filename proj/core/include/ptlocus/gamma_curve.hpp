#pragma once

#include <optional>
#include <vector>

#include "ptlocus/airy.hpp"

namespace ptlocus {

/// Points xi with V_a(xi) = 0 parametrised by a: the image of the real
/// spectrum under xi = eps^(1/3) (lambda + i). Along the curve
/// d xi / d a = -pi Ai(xi)^2.
struct GammaSample {
  double a = 0.0;
  Complex xi;
};

struct GammaCurve {
  int index = 0;
  std::vector<GammaSample> samples;  // increasing in a
  std::optional<Complex> alpha_at;   // a = -sqrt3
  std::optional<Complex> bi_at;      // a = 0
  std::optional<Complex> beta_at;    // a = +sqrt3
};

inline constexpr double kGammaDefaultFrom = -10.0;
inline constexpr double kGammaDefaultTo = 10.0;

/// Traces curve n through alpha_n (the n-th ray zero of U-) over
/// [a_from, a_to] with RK4 step doubling and Newton reprojection onto
/// V_a = 0 after every step. a_from == a_to yields one sample.
GammaCurve trace_gamma(int n, double a_from, double a_to, double step_hint = 0.05);

/// Curve point at parameter a (inside the traced range), integrated from the
/// nearest sample and reprojected.
Complex gamma_point(const GammaCurve& curve, double a);

/// -pi Ai(xi)^2.
Complex gamma_tangent(Complex xi);

/// Distance from p to the traced curve, refined between samples.
double distance_to_gamma(const GammaCurve& curve, Complex p);

struct LambdaMin {
  double a = 0.0;
  Complex xi;
  double eps_min = 0.0;
  double lambda_min = 0.0;
};

/// Minimum of Re xi / Im xi along curve k for a in [-sqrt3, sqrt3].
LambdaMin find_lambda_min(int k);

struct GammaCritical {
  double a = 0.0;
  Complex xi;
};

/// Points of curve k where Im xi'(a) = 0, for a in [a_from, a_to].
std::vector<GammaCritical> detect_criticals_on_gamma(int k, double a_from = kGammaDefaultFrom,
                                                     double a_to = kGammaDefaultTo);

}  // namespace ptlocus
