#include "ptlocus/airy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "double_double.hpp"
#include "ptlocus/error.hpp"

namespace ptlocus::airy {
namespace {

constexpr int kMaxSeriesTerms = 500;
constexpr int kAsymptoticTerms = 100;
constexpr double kInvSqrtPi = 0.56418958354775628695;
constexpr double kLogLimit = 700.0;

const dd::Real kC1{kAiZero[0], kAiZero[1]};
const dd::Real kC2{kMinusAiPrimeZero[0], kMinusAiPrimeZero[1]};
const dd::Real kSqrt3dd{1.7320508075688772, 1.0035084221806903e-16};

const Complex kOmega{-0.5, 0.5 * kSqrt3};
const Complex kOmegaBar{-0.5, -0.5 * kSqrt3};
const Complex kOmegaPow[3] = {Complex{1.0, 0.0}, kOmega, kOmegaBar};
const Complex kBiRotation[3] = {Complex{0.0, 0.0}, Complex{0.5 * kSqrt3, 0.5}, Complex{0.5 * kSqrt3, -0.5}};

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(Complex z) {
  if (!finite(z)) throw std::invalid_argument("airy: argument must be finite");
}

// ---- Maclaurin route -------------------------------------------------------

struct SeriesSums {
  dd::Complex f, fp, g, gp;
};

// f = phi1(z^3), g = z phi0(z^3) and their z-derivatives.
SeriesSums maclaurin_sums(Complex z) {
  const dd::Complex zz(z);
  const dd::Complex z2 = zz * zz;
  const dd::Complex w = z2 * zz;
  const double wabs = std::abs(z) * std::abs(z) * std::abs(z);

  dd::Complex big_f(dd::Real(1.0));
  dd::Complex big_g = zz;
  SeriesSums s{big_f, dd::Complex(), big_g, dd::Complex(dd::Real(1.0))};
  double peak = 1.0 + dd::magnitude(big_g);

  for (int k = 1; k <= kMaxSeriesTerms; ++k) {
    const double a = 3.0 * k - 1.0;
    const double b = 3.0 * k;
    const double c = 3.0 * k + 1.0;
    const dd::Complex fp_term = big_f * z2 / a;
    const dd::Complex gp_term = big_g * z2 / b;
    big_f = big_f * w / (a * b);
    big_g = big_g * w / (b * c);
    s.f = s.f + big_f;
    s.g = s.g + big_g;
    s.fp = s.fp + fp_term;
    s.gp = s.gp + gp_term;
    const double t = dd::magnitude(big_f) + dd::magnitude(big_g) + dd::magnitude(fp_term) + dd::magnitude(gp_term);
    peak = std::max(peak, t);
    if (t <= 1e-34 * peak && 9.0 * k * k > wabs) return s;
  }
  throw NumericalError(ErrorKind::NonConvergence, "Maclaurin series did not converge");
}

struct SeriesCoefficients {
  dd::Real f;
  dd::Real g;
};

SeriesCoefficients series_coefficients(SolutionFamily family) {
  switch (family.kind()) {
    case FamilyKind::UPlus: return {kSqrt3dd * kC1 * 2.0, dd::Real()};
    case FamilyKind::UMinus: return {dd::Real(), kSqrt3dd * kC2 * 2.0};
    default: break;
  }
  const double ca = family.ai_coefficient();
  const double cb = family.bi_coefficient();
  const dd::Real s3cb = kSqrt3dd * cb;
  return {(s3cb + dd::Real(ca)) * kC1, (s3cb - dd::Real(ca)) * kC2};
}

struct SeriesValue {
  Complex value;
  Complex derivative;
};

SeriesValue combine_series(const SeriesSums& s, SeriesCoefficients c) {
  const dd::Complex v = s.f * c.f + s.g * c.g;
  const dd::Complex d = s.fp * c.f + s.gp * c.g;
  return {v.value(), d.value()};
}

AiryEval from_series(const SeriesSums& s, SolutionFamily family) {
  const SeriesValue v = combine_series(s, series_coefficients(family));
  double scale = 0.0;
  if (family.ai_coefficient() != 0.0)
    scale += std::abs(family.ai_coefficient()) * std::abs(combine_series(s, series_coefficients(SolutionFamily::ai())).value);
  if (family.bi_coefficient() != 0.0)
    scale += std::abs(family.bi_coefficient()) * std::abs(combine_series(s, series_coefficients(SolutionFamily::bi())).value);
  return {v.value, v.derivative, 0.0, scale};
}

// ---- asymptotic route ------------------------------------------------------

struct AsymptoticTables {
  std::array<double, kAsymptoticTerms> u{};
  std::array<double, kAsymptoticTerms> v{};
};

const AsymptoticTables& tables() {
  static const AsymptoticTables t = [] {
    AsymptoticTables r;
    r.u[0] = 1.0;
    r.v[0] = 1.0;
    for (int s = 1; s < kAsymptoticTerms; ++s) {
      const double ds = s;
      r.u[s] = r.u[s - 1] * (6 * ds - 5) * (6 * ds - 3) * (6 * ds - 1) / ((2 * ds - 1) * 216.0 * ds);
      r.v[s] = -(6 * ds + 1) / (6 * ds - 1) * r.u[s];
    }
    return r;
  }();
  return t;
}

// sum_s coef[s] x^s, stopped at convergence or at the smallest term.
Complex sum_asymptotic(const std::array<double, kAsymptoticTerms>& coef, Complex x) {
  double sr = 0.0, si = 0.0, cr = 0.0, ci = 0.0;
  auto add = [](double& sum, double& comp, double t) {
    const double n = sum + t;
    if (std::fabs(sum) >= std::fabs(t))
      comp += (sum - n) + t;
    else
      comp += (t - n) + sum;
    sum = n;
  };
  Complex p{1.0, 0.0};
  double prev = std::numeric_limits<double>::infinity();
  for (int s = 0; s < kAsymptoticTerms; ++s) {
    const Complex term = coef[s] * p;
    const double mag = std::abs(term);
    if (mag > prev) break;
    add(sr, cr, term.real());
    add(si, ci, term.imag());
    if (mag <= 1e-17 * std::hypot(sr, si)) break;
    prev = mag;
    p *= x;
  }
  return {sr + cr, si + ci};
}

struct Scaled {
  Complex value;
  Complex derivative;
  double log_scale;
};

// Dominant-form Ai expansion; valid for |arg z| < pi, used for |arg z| <= 2pi/3.
Scaled ai_asymptotic(Complex z) {
  const Complex sq = std::sqrt(z);
  const Complex z14 = std::sqrt(sq);
  const Complex zeta = (2.0 / 3.0) * z * sq;
  const Complex x = -1.0 / zeta;
  const AsymptoticTables& t = tables();
  const Complex phase = std::exp(Complex(0.0, -zeta.imag()));
  const Complex s = sum_asymptotic(t.u, x);
  const Complex d = sum_asymptotic(t.v, x);
  return {0.5 * kInvSqrtPi * phase / z14 * s, -0.5 * kInvSqrtPi * z14 * phase * d, -zeta.real()};
}

Scaled bi_asymptotic(Complex z) {
  const Complex sq = std::sqrt(z);
  const Complex z14 = std::sqrt(sq);
  const Complex zeta = (2.0 / 3.0) * z * sq;
  const Complex x = 1.0 / zeta;
  const AsymptoticTables& t = tables();
  const Complex phase = std::exp(Complex(0.0, zeta.imag()));
  const Complex s = sum_asymptotic(t.u, x);
  const Complex d = sum_asymptotic(t.v, x);
  return {kInvSqrtPi * phase / z14 * s, kInvSqrtPi * z14 * phase * d, zeta.real()};
}

// Ai at z, wz, w^2 z. Two of them come from the expansion; the one with the
// largest |arg| is recovered from Ai(z) + w Ai(wz) + w^2 Ai(w^2 z) = 0.
// derivative[j] holds d/dz Ai(w^j z).
struct RotatedAi {
  Scaled a[3];
  int bad;
};

RotatedAi rotated_ai(Complex z) {
  RotatedAi r{};
  Complex args[3] = {z, kOmega * z, kOmegaBar * z};
  r.bad = 0;
  double worst = -1.0;
  for (int j = 0; j < 3; ++j) {
    const double phi = std::fabs(std::arg(args[j]));
    if (phi > worst) {
      worst = phi;
      r.bad = j;
    }
  }
  for (int j = 0; j < 3; ++j) {
    if (j == r.bad) continue;
    Scaled s = ai_asymptotic(args[j]);
    s.derivative *= kOmegaPow[j];
    r.a[j] = s;
  }
  return r;
}

// sum_j c[j] Ai(w^j z) with the unreliable index folded into the others.
Scaled combine_rotated(const RotatedAi& r, const Complex c_in[3]) {
  Complex c[3] = {c_in[0], c_in[1], c_in[2]};
  const int b = r.bad;
  for (int j = 0; j < 3; ++j) {
    if (j == b) continue;
    c[j] -= c[b] * kOmegaPow[((j - b) % 3 + 3) % 3];
  }
  c[b] = 0.0;
  double log_scale = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < 3; ++j)
    if (j != b && c[j] != 0.0) log_scale = std::max(log_scale, r.a[j].log_scale);
  if (!std::isfinite(log_scale)) return {0.0, 0.0, 0.0};
  Complex v{}, d{};
  for (int j = 0; j < 3; ++j) {
    if (j == b || c[j] == 0.0) continue;
    const double w = std::exp(r.a[j].log_scale - log_scale);
    v += c[j] * r.a[j].value * w;
    d += c[j] * r.a[j].derivative * w;
  }
  return {v, d, log_scale};
}

void family_coefficients(SolutionFamily family, Complex c[3]) {
  c[0] = family.ai_coefficient();
  c[1] = family.bi_coefficient() * kBiRotation[1];
  c[2] = family.bi_coefficient() * kBiRotation[2];
}

double relative_weight(double from, double to) { return std::exp(std::min(from - to, kLogLimit)); }

AiryEval from_rotated(const RotatedAi& r, SolutionFamily family) {
  Complex c[3];
  family_coefficients(family, c);
  const Scaled s = combine_rotated(r, c);
  double scale = 0.0;
  if (family.ai_coefficient() != 0.0) {
    Complex ca[3];
    family_coefficients(SolutionFamily::ai(), ca);
    const Scaled a = combine_rotated(r, ca);
    scale += std::abs(family.ai_coefficient()) * std::abs(a.value) * relative_weight(a.log_scale, s.log_scale);
  }
  if (family.bi_coefficient() != 0.0) {
    Complex cb[3];
    family_coefficients(SolutionFamily::bi(), cb);
    const Scaled b = combine_rotated(r, cb);
    scale += std::abs(family.bi_coefficient()) * std::abs(b.value) * relative_weight(b.log_scale, s.log_scale);
  }
  return {s.value, s.derivative, s.log_scale, scale};
}

void fold(AiryEval& e, Scaling scaling) {
  if (scaling == Scaling::Natural || e.log_scale == 0.0) return;
  const double m = std::max({std::abs(e.value), std::abs(e.derivative), e.scale});
  if (m == 0.0) {
    e.log_scale = 0.0;
    return;
  }
  const double lm = std::log(m) + e.log_scale;
  const bool overflow = lm >= kLogLimit;
  const bool underflow = lm <= -kLogLimit;
  if (overflow) {
    if (scaling == Scaling::Unscaled)
      throw NumericalError(ErrorKind::Overflow, "Airy value not representable without scaling");
    return;
  }
  if (underflow && scaling == Scaling::Auto) return;
  const double f = std::exp(e.log_scale);
  e.value *= f;
  e.derivative *= f;
  e.scale *= f;
  e.log_scale = 0.0;
}

AiryEval naturally_scaled(Complex z, SolutionFamily family) {
  if (std::abs(z) <= kSwitchoverRadius) return from_series(maclaurin_sums(z), family);
  return from_rotated(rotated_ai(z), family);
}

}  // namespace

AiryEval eval_airy(Complex z, SolutionFamily family, Scaling scaling) {
  require_finite(z);
  AiryEval e = naturally_scaled(z, family);
  fold(e, scaling);
  return e;
}

AiryPair eval_airy_pair(Complex z) {
  require_finite(z);
  if (std::abs(z) <= kSwitchoverRadius) {
    const SeriesSums s = maclaurin_sums(z);
    const SeriesValue a = combine_series(s, series_coefficients(SolutionFamily::ai()));
    const SeriesValue b = combine_series(s, series_coefficients(SolutionFamily::bi()));
    return {{a.value, a.derivative, 0.0, std::abs(a.value)}, {b.value, b.derivative, 0.0, std::abs(b.value)}};
  }
  const RotatedAi r = rotated_ai(z);
  Complex ca[3], cb[3];
  family_coefficients(SolutionFamily::ai(), ca);
  family_coefficients(SolutionFamily::bi(), cb);
  const Scaled a = combine_rotated(r, ca);
  const Scaled b = combine_rotated(r, cb);
  return {{a.value, a.derivative, a.log_scale, std::abs(a.value)}, {b.value, b.derivative, b.log_scale, std::abs(b.value)}};
}

AiryEval maclaurin_airy(Complex z, SolutionFamily family) {
  require_finite(z);
  if (std::abs(z) > kMaclaurinLimit) throw std::invalid_argument("maclaurin_airy: |z| exceeds the series limit");
  return from_series(maclaurin_sums(z), family);
}

AiryEval asymptotic_airy(Complex z, SolutionFamily family) {
  require_finite(z);
  if (std::abs(z) < kSwitchoverRadius) throw std::invalid_argument("asymptotic_airy: |z| below the switchover radius");
  const double phi = std::fabs(std::arg(z));
  if (family.kind() == FamilyKind::Ai) {
    if (phi >= kPi) throw NumericalError(ErrorKind::SectorViolation, "Ai expansion needs |arg z| < pi");
    const Scaled a = ai_asymptotic(z);
    return {a.value, a.derivative, a.log_scale, std::abs(a.value)};
  }
  if (phi >= kPi / 3.0) throw NumericalError(ErrorKind::SectorViolation, "Bi expansion needs |arg z| < pi/3");
  const Scaled a = ai_asymptotic(z);
  const Scaled b = bi_asymptotic(z);
  const double ca = family.ai_coefficient();
  const double cb = family.bi_coefficient();
  const double ls = ca != 0.0 ? std::max(a.log_scale, b.log_scale) : b.log_scale;
  const double wa = ca != 0.0 ? relative_weight(a.log_scale, ls) : 0.0;
  const double wb = relative_weight(b.log_scale, ls);
  const Complex v = ca * wa * a.value + cb * wb * b.value;
  const Complex d = ca * wa * a.derivative + cb * wb * b.derivative;
  const double scale = std::abs(ca) * wa * std::abs(a.value) + std::abs(cb) * wb * std::abs(b.value);
  return {v, d, ls, scale};
}

PhiValues eval_phi_series(Complex w) {
  require_finite(w);
  const double limit = kSwitchoverRadius * kSwitchoverRadius * kSwitchoverRadius;
  if (std::abs(w) > limit) throw std::invalid_argument("eval_phi_series: |w| exceeds R^3");
  const dd::Complex ww(w);
  dd::Complex t0(dd::Real(1.0)), t1(dd::Real(1.0));
  dd::Complex s0 = t0, s1 = t1;
  double peak = 1.0;
  for (int k = 1; k <= kMaxSeriesTerms; ++k) {
    const double a = 3.0 * k - 1.0;
    const double b = 3.0 * k;
    const double c = 3.0 * k + 1.0;
    t1 = t1 * ww / (a * b);
    t0 = t0 * ww / (b * c);
    s0 = s0 + t0;
    s1 = s1 + t1;
    const double t = dd::magnitude(t0) + dd::magnitude(t1);
    peak = std::max(peak, t);
    if (t <= 1e-34 * peak && 9.0 * k * k > std::abs(w)) return {s0.value(), s1.value()};
  }
  throw NumericalError(ErrorKind::NonConvergence, "phi series did not converge");
}

double wronskian_residual(Complex z) {
  require_finite(z);
  if (std::abs(z) <= kSwitchoverRadius) {
    // W(Ai, Bi) = 2 sqrt3 Ai(0) (-Ai'(0)) W(f, g), formed in double-double
    const SeriesSums s = maclaurin_sums(z);
    const dd::Complex wfg = s.f * s.gp - s.fp * s.g;
    const dd::Real c = kSqrt3dd * kC1 * kC2 * 2.0;
    const dd::Complex w = wfg * c * kPi;
    return std::abs((w - dd::Complex(dd::Real(1.0))).value());
  }
  // Only the two retained rotated expansions enter; their self-Wronskians
  // vanish identically, so W(Ai, Bi) is a multiple of one cross Wronskian.
  const RotatedAi r = rotated_ai(z);
  Complex ca[3], cb[3];
  family_coefficients(SolutionFamily::ai(), ca);
  family_coefficients(SolutionFamily::bi(), cb);
  const int b = r.bad;
  for (int j = 0; j < 3; ++j) {
    if (j == b) continue;
    ca[j] -= ca[b] * kOmegaPow[((j - b) % 3 + 3) % 3];
    cb[j] -= cb[b] * kOmegaPow[((j - b) % 3 + 3) % 3];
  }
  const int i = (b + 1) % 3;
  const int j = (b + 2) % 3;
  const Scaled& ai = r.a[i];
  const Scaled& aj = r.a[j];
  const Complex cross = (ai.value * aj.derivative - ai.derivative * aj.value) * std::exp(ai.log_scale + aj.log_scale);
  const Complex w = (ca[i] * cb[j] - ca[j] * cb[i]) * cross;
  return std::abs(w * kPi - 1.0);
}

}  // namespace ptlocus::airy
