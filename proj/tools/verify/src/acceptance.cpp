#include "ptlocus/verify/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "ptlocus/airy.hpp"
#include "ptlocus/critical.hpp"
#include "ptlocus/error.hpp"
#include "ptlocus/gamma_curve.hpp"
#include "ptlocus/trajectory.hpp"
#include "ptlocus/verify/shooting.hpp"

namespace ptlocus::verify {
namespace {

using airy::SolutionFamily;

const Complex kOmega{-0.5, 0.86602540378443864676};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int max_k(const VerifyOptions& o) { return o.level == Level::Fast ? 2 : 5; }

void critical_landmarks(Check& c, const VerifyOptions&) {
  const CriticalPair p = critical_pairs(1).front();
  c.expected = "delta_1 in [5.0, 5.2], eps_1 in [12.2, 12.4]";
  c.observed = "delta_1 = " + num(p.delta_k) + ", eps_1 = " + num(p.eps_k);
  c.tolerance = 0.1;
  c.pass = p.delta_k >= 5.0 && p.delta_k <= 5.2 && p.eps_k >= 12.2 && p.eps_k <= 12.4;
  c.provenance = "landmarks eps ~ 5.1 (knot crossing) and eps_1 ~ 12.3 (collision), 2-3 digits";
  c.budget_ms = 1000.0;
}

void lambda_min_landmark(Check& c, const VerifyOptions&) {
  const LambdaMin m = find_lambda_min(1);
  c.expected = "eps_min in [9.2, 9.4], lambda_min in [0.44, 0.46]";
  c.observed = "eps_min = " + num(m.eps_min) + ", lambda_min = " + num(m.lambda_min);
  c.tolerance = 0.1;
  c.pass = m.eps_min >= 9.2 && m.eps_min <= 9.4 && m.lambda_min >= 0.44 && m.lambda_min <= 0.46;
  c.provenance = "landmarks eps_1,min ~ 9.3, lambda_1,min ~ 0.45";
  c.budget_ms = 5000.0;
}

void knot_jordan_cell(Check& c, const VerifyOptions& o) {
  const CriticalPair p = critical_pairs(1).front();
  const DeterminantJet j = determinant_jet(p.eps_k, o.knot);
  const double r0 = std::abs(j.value) / j.scale;
  const double r1 = std::abs(j.d_lambda) / j.lambda_scale;
  int mult = 0;
  try {
    mult = multiplicity_at(p.eps_k, o.knot);
  } catch (const NumericalError&) {
    mult = -1;
  }
  c.expected = "|D|/scale <= 1e-9, |D_lambda|/scale <= 1e-8, multiplicity 2";
  c.observed = "|D|/scale = " + num(r0) + ", |D_lambda|/scale = " + num(r1) + ", multiplicity " + std::to_string(mult);
  c.tolerance = 1e-9;
  c.pass = r0 <= 1e-9 && r1 <= 1e-8 && mult == 2;
  c.provenance = "two-fold eigenvalue with a Jordan cell at (eps_1, 1/sqrt3)";
  c.budget_ms = 1000.0;
}

void eigenfunction_boundary(Check& c, const VerifyOptions& o) {
  double worst = 0.0;
  const int kmax = max_k(o);
  for (int k = 1; k <= kmax; ++k) {
    worst = std::max(worst, eigenfunction_boundary_residual(EigenfunctionKind::AtDelta, k, o.knot));
    worst = std::max(worst, eigenfunction_boundary_residual(EigenfunctionKind::AtEps, k, o.knot));
  }
  c.expected = "boundary residual <= 1e-8 for k = 1.." + std::to_string(kmax);
  c.observed = "max residual = " + num(worst);
  c.tolerance = 1e-8;
  c.pass = worst <= 1e-8;
  c.provenance = "closed-form eigenfunctions U+(delta_k^(1/3)(1/sqrt3 - iz)), U-(eps_k^(1/3)(1/sqrt3 - iz))";
  c.budget_ms = 1000.0;
}

void lambda_min_bound_chain(Check& c, const VerifyOptions& o) {
  const int kmax = max_k(o);
  const std::vector<RayZero> z = bi_quadrant_zeros(kmax);
  double lower = INFINITY, upper = INFINITY;
  bool ok = true;
  std::string detail;
  for (int k = 1; k <= kmax; ++k) {
    const double lm = find_lambda_min(k).lambda_min;
    const Complex zk = z[std::size_t(k - 1)].location;
    const double ct = zk.real() / zk.imag();
    ok = ok && lm < ct && ct < o.knot;
    lower = std::min(lower, ct - lm);
    upper = std::min(upper, o.knot - ct);
    detail += (k > 1 ? "; " : "") + std::string("k=") + std::to_string(k) + ": " + num(lm) + " < " + num(ct);
  }
  c.expected = "lambda_min(k) < cot(arg z_k) < 1/sqrt3 for k = 1.." + std::to_string(kmax);
  c.observed = detail + "; min margins " + num(lower) + ", " + num(upper);
  c.tolerance = 0.0;
  c.pass = ok;
  c.provenance = "bound chain lambda_{2k-1,min} < cot arg z_k < 1/sqrt3";
  c.budget_ms = 20000.0;
}

void shooting_oracle(Check& c, const VerifyOptions&) {
  double worst = 0.0;
  for (double eps : {0.5, 1.0, 2.0, 5.0}) {
    const std::vector<EigenvalueRecord> r = eigenvalues(eps, default_re_max(eps, 3), 76);
    const std::vector<double> s = shooting_eigenvalues(eps, 3);
    std::vector<double> real;
    for (const auto& e : r)
      if (e.point.on_real_axis) real.push_back(e.point.lambda.real());
    if (real.size() < 3) throw NumericalError(ErrorKind::NotABranch, "fewer than three real eigenvalues");
    for (int n = 0; n < 3; ++n) worst = std::max(worst, std::fabs(real[std::size_t(n)] - s[std::size_t(n)]));
  }
  c.expected = "|lambda_det - lambda_shoot| <= 1e-7 for the 3 smallest, eps in {0.5, 1, 2, 5}";
  c.observed = "max difference = " + num(worst);
  c.tolerance = 1e-7;
  c.pass = worst <= 1e-7;
  c.provenance = "RK4 shooting oracle on [-1, 0]";
  c.budget_ms = 30000.0;
}

void small_eps_limit(Check& c, const VerifyOptions&) {
  auto errors = [](double eps) {
    const double x = airy::kPi * 1.5;
    const std::vector<EigenvalueRecord> r = eigenvalues(eps, 1.05 * x * x / eps, 64);
    std::vector<double> e;
    for (int n = 1; n <= 3; ++n) {
      const double q = airy::kPi * n / 2.0;
      e.push_back(eps * r[std::size_t(n - 1)].point.lambda.real() - q * q);
    }
    return e;
  };
  const std::vector<double> e2 = errors(1e-2), e3 = errors(1e-3);
  bool ok = true;
  std::string detail;
  for (int n = 0; n < 3; ++n) {
    const double ratio = e2[std::size_t(n)] / e3[std::size_t(n)];
    ok = ok && ratio >= 10.0 / 3.0 && ratio <= 30.0;
    detail += (n > 0 ? "; " : "") + std::string("n=") + std::to_string(n + 1) + ": " + num(ratio);
  }
  c.expected = "error ratio eps=1e-2 vs 1e-3 in [10/3, 30] for n = 1..3";
  c.observed = "ratios " + detail;
  c.tolerance = 3.0;
  c.pass = ok;
  c.provenance = "first-order perturbation scaling of eps lambda_n - (pi n/2)^2";
  c.budget_ms = 5000.0;
}

void special_functions(Check& c, const VerifyOptions& o) {
  const int n = o.level == Level::Fast ? 200 : 1000;
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto point = [&](double r_lo, double r_hi) {
    const double r = std::sqrt(r_lo * r_lo + (r_hi * r_hi - r_lo * r_lo) * u(rng));
    return std::polar(r, 2.0 * airy::kPi * u(rng) - airy::kPi);
  };
  auto value = [](Complex z, SolutionFamily f) { return airy::eval_airy(z, f, airy::Scaling::Unscaled); };
  double wr = 0.0, conn = 0.0, rot = 0.0, seam = 0.0;
  for (int i = 0; i < n; ++i) {
    const Complex z = point(0.0, 15.0);
    wr = std::max(wr, airy::wronskian_residual(z));

    const Complex a0 = value(z, SolutionFamily::ai()).value;
    const Complex a1 = value(kOmega * z, SolutionFamily::ai()).value;
    const Complex a2 = value(std::conj(kOmega) * z, SolutionFamily::ai()).value;
    const double m = std::max({std::abs(a0), std::abs(a1), std::abs(a2)});
    conn = std::max(conn, std::abs(a0 + kOmega * a1 + std::conj(kOmega) * a2) / m);

    for (const Complex w : {kOmega, std::conj(kOmega)}) {
      const airy::AiryEval um = value(z, SolutionFamily::u_minus());
      const airy::AiryEval umr = value(w * z, SolutionFamily::u_minus());
      rot = std::max(rot, std::abs(umr.value - w * um.value) / std::max(um.scale, umr.scale));
      const airy::AiryEval up = value(z, SolutionFamily::u_plus());
      const airy::AiryEval upr = value(w * z, SolutionFamily::u_plus());
      rot = std::max(rot, std::abs(upr.value - up.value) / std::max(up.scale, upr.scale));
    }
  }
  for (int i = 0; i < n / 4; ++i) {
    const Complex z = point(airy::kSwitchoverRadius, airy::kSwitchoverRadius + 2.0);
    for (const SolutionFamily& f : {SolutionFamily::ai(), SolutionFamily::bi()}) {
      const airy::AiryEval s = airy::maclaurin_airy(z, f);
      const airy::AiryEval a = airy::eval_airy(z, f, airy::Scaling::Natural);
      const double k = std::exp(a.log_scale - s.log_scale);
      seam = std::max(seam, std::abs(s.value - k * a.value) / std::max(std::abs(k * a.value), k * a.scale));
      seam = std::max(seam, std::abs(s.derivative - k * a.derivative) / std::abs(k * a.derivative));
    }
  }
  c.expected = "Wronskian, connection, rotation and seam residuals <= 1e-10";
  c.observed = "wronskian " + num(wr) + ", connection " + num(conn) + ", rotation " + num(rot) + ", seam " + num(seam);
  c.tolerance = 1e-10;
  c.pass = std::max({wr, conn, rot, seam}) <= 1e-10;
  c.provenance = std::to_string(n) + " seeded random points with |z| <= 15, seam sample |z| in [8, 10]";
  c.budget_ms = 5000.0;
}

void va_zero_classification(Check& c, const VerifyOptions&) {
  bool ok = true;
  std::string detail;
  for (double a : {-5.0, -2.0, 0.0, 2.0, 5.0}) {
    const ZeroClassification z = classify_va_zeros(a, 12.0);
    const bool outer = std::fabs(a) > airy::kSqrt3;
    auto sectors_ok = [&](auto count) {
      const int below = count(ZeroLabel::SectorBelowRay), above = count(ZeroLabel::SectorAboveRay);
      return count(ZeroLabel::Origin) == 0 && count(ZeroLabel::OnRay) == 0 && count(ZeroLabel::Other) == 0 &&
             count(ZeroLabel::NegativeAxis) > 0 && (outer ? below > 0 && above == 0 : below == 0 && above > 0);
    };
    const int vp = z.value_count(ZeroLabel::PositiveAxis), dp = z.derivative_count(ZeroLabel::PositiveAxis);
    const bool row = sectors_ok([&](ZeroLabel l) { return z.value_count(l); }) &&
                     sectors_ok([&](ZeroLabel l) { return z.derivative_count(l); }) &&
                     vp == (a < -airy::kSqrt3 ? 1 : 0) && dp == (a > airy::kSqrt3 ? 1 : 0);
    ok = ok && row;
    detail += (detail.empty() ? "" : "; ") + std::string("a=") + num(a) + (row ? " ok" : " mismatch") +
              " (V+ " + std::to_string(vp) + ", V'+ " + std::to_string(dp) + ")";
  }
  c.expected = "sector membership and positive-axis counts match the V_a zero table, |z| <= 12";
  c.observed = detail;
  c.tolerance = 0.0;
  c.pass = ok;
  c.provenance = "zero classification of V_a and dV_a/dz by sector";
  c.budget_ms = 60000.0;
}

void trajectory_consistency(Check& c, const VerifyOptions& o) {
  const int kmax = o.level == Level::Fast ? 1 : 2;
  const std::vector<CriticalPair> pairs = critical_pairs(kmax);
  double event_err = 0.0, distance = 0.0;
  bool events_found = true;
  for (const CriticalPair& p : pairs) {
    const GammaCurve gamma = trace_gamma(p.k, kGammaDefaultFrom, kGammaDefaultTo);
    const double lower = std::pow(gamma.samples.back().xi.imag(), 3) * 1.2;
    for (int n : {2 * p.k - 1, 2 * p.k}) {
      const double from = n % 2 == 1 ? std::max(lower, p.delta_k - 2.0) : p.eps_k - 1.0;
      const Trajectory t = trace_lambda(n, from, p.eps_k + 0.5);
      bool collision = false, crossing = n % 2 == 0;
      for (const TrajectoryEvent& e : t.events) {
        if (e.kind == EventKind::Collision) {
          collision = true;
          event_err = std::max({event_err, std::fabs(e.eps - p.eps_k), std::fabs(e.lambda.real() - o.knot)});
        }
        if (e.kind == EventKind::KnotCrossing) {
          crossing = true;
          event_err = std::max({event_err, std::fabs(e.eps - p.delta_k), std::fabs(e.lambda.real() - o.knot)});
        }
      }
      events_found = events_found && collision && crossing;
      for (const SpectralPoint& s : t.samples) {
        if (!s.on_real_axis) continue;
        const Complex xi = std::cbrt(s.eps) * (s.lambda + Complex(0.0, 1.0));
        distance = std::max(distance, distance_to_gamma(gamma, xi));
      }
    }
  }
  c.expected = "event eps/lambda within 1e-8 of critical values and knot, real samples within 1e-7 of Gamma_k";
  c.observed = "max event error " + num(event_err) + ", max distance " + num(distance) +
               (events_found ? "" : ", missing events");
  c.tolerance = 1e-8;
  c.pass = events_found && event_err <= 1e-8 && distance <= 1e-7;
  c.provenance = "critical_pairs and traced Gamma curves, k = 1.." + std::to_string(kmax);
  c.budget_ms = 60000.0;
}

double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  const double t = std::clamp(((p - a) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

void large_eps_segments(Check& c, const VerifyOptions& o) {
  const double eps = 200.0;
  const std::vector<EigenvalueRecord> r = eigenvalues(eps, 10.0, 400);
  double worst = 0.0;
  for (const EigenvalueRecord& e : r) {
    const Complex l = e.point.lambda;
    double d = std::min(distance_to_segment(l, o.knot, Complex(0.0, 1.0)),
                        distance_to_segment(l, o.knot, Complex(0.0, -1.0)));
    d = std::min(d, l.real() >= o.knot ? std::fabs(l.imag()) : std::abs(l - o.knot));
    worst = std::max(worst, d);
  }
  c.expected = "every eigenvalue with Re <= 10 at eps = 200 within 0.1 of [1/sqrt3, +-i] u [1/sqrt3, inf)";
  c.observed = std::to_string(r.size()) + " eigenvalues, max distance " + num(worst);
  c.tolerance = 0.1;
  c.pass = !r.empty() && worst <= 0.1;
  c.provenance = "qualitative large-eps accumulation";
  c.budget_ms = 60000.0;
}

using Runner = void (*)(Check&, const VerifyOptions&);

struct Entry {
  const char* name;
  Runner run;
};

const Entry kEntries[] = {
    {"critical_landmarks", critical_landmarks},
    {"lambda_min_landmark", lambda_min_landmark},
    {"knot_jordan_cell", knot_jordan_cell},
    {"eigenfunction_boundary", eigenfunction_boundary},
    {"lambda_min_bound_chain", lambda_min_bound_chain},
    {"shooting_oracle", shooting_oracle},
    {"small_eps_limit", small_eps_limit},
    {"special_functions", special_functions},
    {"va_zero_classification", va_zero_classification},
    {"trajectory_consistency", trajectory_consistency},
    {"large_eps_segments", large_eps_segments},
};

}  // namespace

std::vector<std::string> acceptance_check_names() {
  std::vector<std::string> names;
  for (const Entry& e : kEntries) names.emplace_back(e.name);
  return names;
}

Check run_check(const std::string& name, const VerifyOptions& options) {
  for (const Entry& e : kEntries) {
    if (name != e.name) continue;
    Check c;
    c.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(c, options);
    } catch (const std::exception& ex) {
      c.observed = std::string("error: ") + ex.what();
      c.pass = false;
    }
    c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_ms > 0.0 && c.runtime_ms > c.budget_ms) {
      c.pass = false;
      c.observed += " (over runtime budget)";
    }
    return c;
  }
  throw std::invalid_argument("unknown check: " + name);
}

Report run_acceptance(const VerifyOptions& options) {
  const std::vector<std::string> names = acceptance_check_names();
  Report report;
  report.checks.resize(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < names.size(); i = next++) report.checks[i] = run_check(names[i], options);
  };
  const int jobs = std::clamp(options.jobs, 1, int(names.size()));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  report.overall = std::all_of(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.pass; });
  return report;
}

}  // namespace ptlocus::verify
