#pragma once

#include <complex>

namespace ptlocus {

using Complex = std::complex<double>;

namespace airy {

/// |z| at which evaluation switches from the Maclaurin series to the
/// asymptotic expansion.
inline constexpr double kSwitchoverRadius = 8.0;

/// Largest |z| accepted by maclaurin_airy.
inline constexpr double kMaclaurinLimit = 12.0;

inline constexpr double kSqrt3 = 1.7320508075688772935;
inline constexpr double kPi = 3.14159265358979323846;

/// Gamma(1/3) and Gamma(2/3) as double-double pairs (hi + lo).
inline constexpr double kGammaOneThird[2] = {2.6789385347077475, 1.7947798648225244e-16};
inline constexpr double kGammaTwoThirds[2] = {1.3541179394264005, -4.6231203911366416e-17};

/// Ai(0) and -Ai'(0) as double-double pairs.
inline constexpr double kAiZero[2] = {0.3550280538878172, 2.05233632436212e-17};
inline constexpr double kMinusAiPrimeZero[2] = {0.2588194037928068, -2.522243111610832e-17};

enum class FamilyKind { Ai, Bi, UMinus, UPlus, Va };

/// A solution of w'' = z w, written as c_ai * Ai + c_bi * Bi.
/// U- = -sqrt3 Ai + Bi, U+ = sqrt3 Ai + Bi, V_a = a Ai + Bi.
class SolutionFamily {
 public:
  static constexpr SolutionFamily ai() { return {FamilyKind::Ai, 1.0, 0.0}; }
  static constexpr SolutionFamily bi() { return {FamilyKind::Bi, 0.0, 1.0}; }
  static constexpr SolutionFamily u_minus() { return {FamilyKind::UMinus, -kSqrt3, 1.0}; }
  static constexpr SolutionFamily u_plus() { return {FamilyKind::UPlus, kSqrt3, 1.0}; }
  static constexpr SolutionFamily va(double a) { return {FamilyKind::Va, a, 1.0}; }

  constexpr FamilyKind kind() const { return kind_; }
  constexpr double ai_coefficient() const { return c_ai_; }
  constexpr double bi_coefficient() const { return c_bi_; }

 private:
  constexpr SolutionFamily(FamilyKind kind, double c_ai, double c_bi) : kind_(kind), c_ai_(c_ai), c_bi_(c_bi) {}

  FamilyKind kind_;
  double c_ai_;
  double c_bi_;
};

/// value and derivative are both multiplied by exp(log_scale) to give the
/// true quantities. scale is |c_ai Ai(z)| + |c_bi Bi(z)| in the same units,
/// the natural reference magnitude for residuals of this combination.
struct AiryEval {
  Complex value;
  Complex derivative;
  double log_scale = 0.0;
  double scale = 0.0;
};

enum class Scaling {
  Auto,      // fold the scale in whenever the result is representable
  Unscaled,  // always fold; NumericalError(Overflow) if not representable
  Natural,   // leave log_scale as produced by the evaluation route
};

/// Ai/Bi family and its derivative at any finite z.
AiryEval eval_airy(Complex z, SolutionFamily family, Scaling scaling = Scaling::Auto);

struct AiryPair {
  AiryEval ai;
  AiryEval bi;
};

/// Ai and Bi together with naturally scaled (unfolded) values. This is the
/// cheapest way to get both functions at one point.
AiryPair eval_airy_pair(Complex z);

/// Maclaurin route in double-double, for |z| <= kMaclaurinLimit.
AiryEval maclaurin_airy(Complex z, SolutionFamily family);

/// Optimally truncated asymptotic expansion, for |z| >= kSwitchoverRadius.
/// Ai needs |arg z| < pi; every family involving Bi needs |arg z| < pi/3,
/// otherwise NumericalError(SectorViolation). Result is naturally scaled.
AiryEval asymptotic_airy(Complex z, SolutionFamily family);

struct PhiValues {
  Complex phi0;
  Complex phi1;
};

/// phi0(w) = sum 3^k (2/3)_k w^k / (3k+1)!, phi1(w) = sum 3^k (1/3)_k w^k / (3k)!
/// for |w| <= kSwitchoverRadius^3.
PhiValues eval_phi_series(Complex w);

/// |Ai Bi' - Ai' Bi - 1/pi| * pi.
double wronskian_residual(Complex z);

}  // namespace airy
}  // namespace ptlocus
