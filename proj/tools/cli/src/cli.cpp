#include "ptlocus/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptlocus/critical.hpp"
#include "ptlocus/error.hpp"
#include "ptlocus/gamma_curve.hpp"
#include "ptlocus/locus.hpp"
#include "ptlocus/trajectory.hpp"
#include "ptlocus/verify/acceptance.hpp"

namespace ptlocus::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string join(const std::vector<std::string>& args) {
  std::string s = "ptlocus";
  for (const std::string& a : args) s += " " + a;
  return s;
}

class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(std::vector<json> row) { rows_.push_back(std::move(row)); }

  void write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
    os << '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        const json& v = row[i];
        if (v.is_number_float())
          os << num(v.get<double>());
        else if (v.is_string())
          os << v.get<std::string>();
        else
          os << v.dump();
      }
      os << '\n';
    }
  }

  json to_json() const {
    json rows = json::array();
    for (const auto& row : rows_) {
      json r = json::object();
      for (std::size_t i = 0; i < row.size(); ++i) r[columns_[i]] = row[i];
      rows.push_back(std::move(r));
    }
    return rows;
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<json>> rows_;
};

struct Output {
  std::string format = "csv";
  std::string path;
  std::string produced_by;

  void emit(const Table& t, std::ostream& out) const {
    std::ofstream file;
    if (!path.empty()) {
      file.open(path, std::ios::binary | std::ios::trunc);
      if (!file) throw UsageError("cannot open output file " + path);
    }
    std::ostream& os = path.empty() ? out : file;
    if (format == "json") {
      json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["produced_by"] = produced_by;
      doc["payload"] = t.to_json();
      os << doc.dump(2) << '\n';
    } else {
      t.write_csv(os);
    }
    if (!path.empty() && !file) throw UsageError("failed writing " + path);
  }
};

Table critical_table(int count) {
  Table t({"k", "beta_abs", "alpha_abs", "delta_k", "eps_k", "knot"});
  for (const CriticalPair& p : critical_pairs(count))
    t.add({p.k, p.beta.modulus, p.alpha.modulus, p.delta_k, p.eps_k, p.knot});
  return t;
}

Table eigenvalue_table(double eps, int count) {
  const std::vector<EigenvalueRecord> r = eigenvalues(eps, default_re_max(eps, count), 4 * count + 64);
  Table t({"index", "re_lambda", "im_lambda", "multiplicity", "residual"});
  for (std::size_t i = 0; i < r.size() && int(i) < count; ++i)
    t.add({r[i].point.branch, r[i].point.lambda.real(), r[i].point.lambda.imag(), r[i].multiplicity, r[i].residual});
  return t;
}

Table trace_table(int branch, double from, double to) {
  const Trajectory tr = trace_lambda(branch, from, to);
  Table t({"eps", "re_lambda", "im_lambda", "branch", "event"});
  std::size_t e = 0;
  for (const SpectralPoint& s : tr.samples) {
    for (; e < tr.events.size() && tr.events[e].eps < s.eps; ++e)
      t.add({tr.events[e].eps, tr.events[e].lambda.real(), tr.events[e].lambda.imag(), branch,
             to_string(tr.events[e].kind)});
    t.add({s.eps, s.lambda.real(), s.lambda.imag(), branch, ""});
  }
  for (; e < tr.events.size(); ++e)
    t.add({tr.events[e].eps, tr.events[e].lambda.real(), tr.events[e].lambda.imag(), branch,
           to_string(tr.events[e].kind)});
  return t;
}

Table gamma_table(int k, double from, double to) {
  const GammaCurve c = trace_gamma(k, from, to);
  Table t({"a", "re_xi", "im_xi", "marker"});
  for (const GammaSample& s : c.samples) {
    std::string marker;
    if (s.a == -airy::kSqrt3) marker = "alpha";
    if (s.a == 0.0) marker = "bi";
    if (s.a == airy::kSqrt3) marker = "beta";
    t.add({s.a, s.xi.real(), s.xi.imag(), marker});
  }
  return t;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json report_json(const verify::Report& r, const std::string& produced_by, const std::string& level, int jobs) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["produced_by"] = produced_by;
  json checks = json::array();
  for (const verify::Check& c : r.checks) {
    json j;
    j["name"] = c.name;
    j["expected"] = c.expected;
    j["observed"] = c.observed;
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    j["provenance"] = c.provenance;
    j["runtime_ms"] = c.runtime_ms;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  doc["overall"] = r.overall;
  doc["metadata"] = {{"timestamp", utc_timestamp()}, {"level", level}, {"jobs", jobs}};
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral locus of y'' = eps (i x - lambda) y, y(+-1) = 0"};
  app.name("ptlocus");
  app.require_subcommand(1);

  Output output;
  int jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--format", output.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--jobs", jobs, "Worker threads for verify")->check(CLI::PositiveNumber);

  int count = 0;
  auto* critical = app.add_subcommand("critical", "Critical values delta_k, eps_k");
  critical->add_option("--count", count, "Number of pairs (1..10)")->required();
  critical->add_option("--out", output.path, "Output file");

  double eps = 0.0;
  int max_rows = 10;
  auto* eig = app.add_subcommand("eigenvalues", "Eigenvalues at fixed eps, ordered by Re");
  eig->add_option("--eps", eps, "Parameter eps > 0")->required();
  eig->add_option("--max", max_rows, "Number of rows")->check(CLI::PositiveNumber);
  eig->add_option("--out", output.path, "Output file");

  int branch = 0;
  double from = 0.0, to = 0.0;
  auto* trace = app.add_subcommand("trace", "Trajectory of one eigenvalue in eps");
  trace->add_option("--branch", branch, "Branch index (1-based)")->required();
  trace->add_option("--from", from, "Start eps")->required();
  trace->add_option("--to", to, "End eps")->required();
  trace->add_option("--out", output.path, "Output file");

  int k = 0;
  auto* gamma = app.add_subcommand("gamma", "Real-locus curve Gamma_k in the xi-plane");
  gamma->add_option("--k", k, "Curve index")->required();
  gamma->add_option("--from", from, "Start of a")->default_val(kGammaDefaultFrom);
  gamma->add_option("--to", to, "End of a")->default_val(kGammaDefaultTo);
  gamma->add_option("--out", output.path, "Output file");

  std::string level = "full";
  double knot = kKnot;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks, JSON report on stdout");
  verify_cmd->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  verify_cmd->add_option("--knot", knot, "Override the knot value (fault injection)")->group("");

  for (CLI::App* sub : {critical, eig, trace, gamma, verify_cmd}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }
  output.produced_by = join(args);

  try {
    if (*critical) {
      if (count < 1 || count > 10) throw UsageError("--count must be in 1..10");
      output.emit(critical_table(count), out);
    } else if (*eig) {
      if (!(eps > 0.0)) throw UsageError("--eps must be positive");
      output.emit(eigenvalue_table(eps, max_rows), out);
    } else if (*trace) {
      if (branch < 1) throw UsageError("--branch must be >= 1");
      if (!(from > 0.0) || to < from) throw UsageError("need 0 < --from <= --to");
      output.emit(trace_table(branch, from, to), out);
    } else if (*gamma) {
      if (k < 1) throw UsageError("--k must be >= 1");
      if (to < from) throw UsageError("need --from <= --to");
      output.emit(gamma_table(k, from, to), out);
    } else if (*verify_cmd) {
      verify::VerifyOptions opt;
      opt.level = level == "fast" ? verify::Level::Fast : verify::Level::Full;
      opt.knot = knot;
      opt.jobs = jobs;
      const verify::Report r = verify::run_acceptance(opt);
      out << report_json(r, output.produced_by, level, jobs).dump(2) << '\n';
      return r.overall ? kSuccess : kVerificationFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kSuccess;
}

}  // namespace ptlocus::cli
