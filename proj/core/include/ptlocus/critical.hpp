#pragma once

#include <vector>

#include "ptlocus/airy.hpp"
#include "ptlocus/locus.hpp"

namespace ptlocus {

enum class RayFamily { UMinus, UPlus, Bi };

struct RayZero {
  RayFamily family;
  int index = 0;
  Complex location;
  double modulus = 0.0;
};

/// alpha_0: the zero of U- at the origin. Ray-zero lists start at k = 1.
inline constexpr double kAlpha0 = 0.0;

struct CriticalPair {
  int k = 0;
  RayZero beta;
  RayZero alpha;
  double delta_k = 0.0;  // (|beta_k| sqrt3 / 2)^3, knot crossing of branch 2k-1
  double eps_k = 0.0;    // (|alpha_k| sqrt3 / 2)^3, collision of branches 2k-1, 2k
  double knot = kKnot;
};

/// First count strictly negative zeros of the family (real a), nearest to
/// the origin first.
std::vector<double> negative_axis_zeros(airy::SolutionFamily family, int count);

/// Same scan for the derivative of the family.
std::vector<double> negative_axis_derivative_zeros(airy::SolutionFamily family, int count);

/// alpha_k (UMinus) or beta_k (UPlus) on the ray arg z = pi/3.
std::vector<RayZero> ray_zeros(RayFamily family, int count);

std::vector<CriticalPair> critical_pairs(int count);

/// First-quadrant zeros of Bi ordered by modulus.
std::vector<RayZero> bi_quadrant_zeros(int count);

enum class ZeroLabel {
  NegativeAxis,
  PositiveAxis,
  Origin,
  SectorBelowRay,  // 0 < |arg z| < pi/3
  OnRay,           // |arg z| = pi/3
  SectorAboveRay,  // pi/3 < |arg z| < pi/2
  Other,
};

struct LabeledZero {
  Complex z;
  int multiplicity = 1;
  ZeroLabel label = ZeroLabel::Other;
  bool conjugate = false;  // lower half-plane member of a conjugate pair
};

struct ZeroClassification {
  double a = 0.0;
  double search_radius = 0.0;
  std::vector<LabeledZero> value_zeros;       // zeros of V_a
  std::vector<LabeledZero> derivative_zeros;  // zeros of dV_a/dz

  int value_count(ZeroLabel label) const;
  int derivative_count(ZeroLabel label) const;
};

/// Zeros of V_a and dV_a/dz with |z| <= search_radius (at most 15), labeled by
/// location. a equal to +-sqrt3 selects U+ / U- exactly.
ZeroClassification classify_va_zeros(double a, double search_radius);

}  // namespace ptlocus
