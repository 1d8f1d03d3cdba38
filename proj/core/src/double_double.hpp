#pragma once

// Double-double arithmetic built from error-free transforms (Knuth two-sum,
// Dekker/FMA two-product). Gives ~32 significant digits for the Maclaurin
// sums, which cancel heavily in the Ai-decaying sector.

#include <cmath>
#include <complex>

namespace ptlocus::dd {

struct Real {
  double hi = 0.0;
  double lo = 0.0;

  constexpr Real() = default;
  constexpr Real(double h) : hi(h) {}
  constexpr Real(double h, double l) : hi(h), lo(l) {}

  double value() const { return hi + lo; }
};

inline Real two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline Real quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline Real two_prod(double a, double b) {
  double p = a * b;
#ifdef FP_FAST_FMA
  return {p, std::fma(a, b, -p)};
#else
  constexpr double split = 134217729.0;  // 2^27 + 1
  double t = split * a;
  double ahi = t - (t - a);
  double alo = a - ahi;
  t = split * b;
  double bhi = t - (t - b);
  double blo = b - bhi;
  double err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo;
  return {p, err};
#endif
}

inline Real operator+(Real a, Real b) {
  Real s = two_sum(a.hi, b.hi);
  Real t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline Real operator-(Real a) { return {-a.hi, -a.lo}; }
inline Real operator-(Real a, Real b) { return a + (-b); }

inline Real operator*(Real a, Real b) {
  Real p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline Real operator*(Real a, double b) {
  Real p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline Real operator/(Real a, double b) {
  double q1 = a.hi / b;
  Real p = two_prod(q1, b);
  Real s = two_sum(a.hi, -p.hi);
  s.lo -= p.lo;
  s.lo += a.lo;
  double q2 = (s.hi + s.lo) / b;
  return quick_two_sum(q1, q2);
}

inline double abs(Real a) { return std::fabs(a.hi); }

struct Complex {
  Real re;
  Real im;

  constexpr Complex() = default;
  constexpr Complex(Real r, Real i = Real()) : re(r), im(i) {}
  Complex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  std::complex<double> value() const { return {re.value(), im.value()}; }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline Complex operator*(const Complex& a, Real b) { return {a.re * b, a.im * b}; }
inline Complex operator*(const Complex& a, double b) { return {a.re * b, a.im * b}; }
inline Complex operator/(const Complex& a, double b) { return {a.re / b, a.im / b}; }

// Cheap magnitude bound, good enough for truncation tests.
inline double magnitude(const Complex& a) { return std::fabs(a.re.hi) + std::fabs(a.im.hi); }

}  // namespace ptlocus::dd
