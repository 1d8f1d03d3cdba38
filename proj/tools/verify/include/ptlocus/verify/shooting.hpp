#pragma once

#include <vector>

#include "ptlocus/airy.hpp"

namespace ptlocus::verify {

/// Reference solver for real eigenvalues that does not touch the Airy code.
/// Integrates y'' = eps (i x - lambda) y on [-1, 0] from y(-1) = 0,
/// y'(-1) = 1 with classical RK4.
struct ShootingState {
  Complex y;
  Complex dy;
};

ShootingState shoot(double eps, double lambda, int steps);

/// Re(y(0) conj y'(0)). For real lambda this vanishes exactly when lambda is
/// an eigenvalue, since x -> -x combined with conjugation maps the problem to
/// itself.
double shooting_function(double eps, double lambda, int steps = 4000);

/// Smallest `count` real eigenvalues by a sign-change scan upward from 0 and
/// bisection.
std::vector<double> shooting_eigenvalues(double eps, int count, int steps = 4000);

}  // namespace ptlocus::verify
