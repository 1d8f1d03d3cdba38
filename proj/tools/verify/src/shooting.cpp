#include "ptlocus/verify/shooting.hpp"

#include <cmath>
#include <stdexcept>

#include "ptlocus/error.hpp"

namespace ptlocus::verify {

ShootingState shoot(double eps, double lambda, int steps) {
  if (!(eps > 0.0)) throw std::invalid_argument("shoot: eps must be positive");
  if (steps < 1) throw std::invalid_argument("shoot: steps must be >= 1");
  const Complex i{0.0, 1.0};
  const double h = 1.0 / steps;
  auto q = [&](double x) { return eps * (i * x - lambda); };
  Complex y = 0.0, dy = 1.0;
  for (int s = 0; s < steps; ++s) {
    const double x = -1.0 + s * h;
    const Complex q0 = q(x), qm = q(x + 0.5 * h), q1 = q(x + h);
    const Complex k1y = dy, k1d = q0 * y;
    const Complex k2y = dy + 0.5 * h * k1d, k2d = qm * (y + 0.5 * h * k1y);
    const Complex k3y = dy + 0.5 * h * k2d, k3d = qm * (y + 0.5 * h * k2y);
    const Complex k4y = dy + h * k3d, k4d = q1 * (y + h * k3y);
    y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    dy += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
  }
  return {y, dy};
}

double shooting_function(double eps, double lambda, int steps) {
  const ShootingState s = shoot(eps, lambda, steps);
  return (s.y * std::conj(s.dy)).real();
}

std::vector<double> shooting_eigenvalues(double eps, int count, int steps) {
  if (count < 1) throw std::invalid_argument("shooting_eigenvalues: count must be >= 1");
  const double spacing = 2.4674011002723395 / eps;  // (pi/2)^2 / eps
  const double dl = spacing / 40.0;
  const double limit = spacing * (count + 3) * (count + 3) + 10.0;
  std::vector<double> out;
  double lo = 0.0, flo = shooting_function(eps, lo, steps);
  while (int(out.size()) < count) {
    const double hi = lo + dl;
    if (hi > limit) throw NumericalError(ErrorKind::BracketingFailure, "shooting scan found too few eigenvalues");
    const double fhi = shooting_function(eps, hi, steps);
    if ((flo < 0.0) != (fhi < 0.0)) {
      double a = lo, b = hi, fa = flo;
      while (b - a > 1e-13 * std::max(1.0, b)) {
        const double m = 0.5 * (a + b);
        if (m == a || m == b) break;
        const double fm = shooting_function(eps, m, steps);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      out.push_back(0.5 * (a + b));
    }
    lo = hi;
    flo = fhi;
  }
  return out;
}

}  // namespace ptlocus::verify
