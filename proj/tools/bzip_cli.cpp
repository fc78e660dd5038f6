// Command-line front end for the zero-inflated bivariate Poisson toolkit.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bzip/asymptotics.hpp"
#include "bzip/distribution.hpp"
#include "bzip/errors.hpp"
#include "bzip/estimate.hpp"
#include "bzip/fixtures.hpp"
#include "bzip/simulate.hpp"
#include "bzip/study.hpp"

namespace {

using nlohmann::json;
using namespace bzip;

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Round to 10 significant digits; non-finite values become null.
json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return std::stod(buf);
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

struct ModelFlags {
  std::string dependence = "pos";
  bool pos = false;
  bool neg = false;
  double l1 = 1.0;
  double l2 = 2.0;
  double theta = 0.5;
  double phi = 0.5;
  double tail_mass = 1e-10;

  void attach(CLI::App* cmd, bool with_phi = true) {
    cmd->add_option("--dependence", dependence, "Dependence kind: pos or neg")->capture_default_str();
    cmd->add_flag("--pos", pos, "Shorthand for --dependence pos");
    cmd->add_flag("--neg", neg, "Shorthand for --dependence neg");
    cmd->add_option("--l1", l1, "Marginal rate lambda1")->capture_default_str();
    cmd->add_option("--l2", l2, "Marginal rate lambda2")->capture_default_str();
    cmd->add_option("--theta", theta, "Shock share theta in [0, 1]")->capture_default_str();
    if (with_phi) cmd->add_option("--phi", phi, "Zero-inflation rate phi in [0, 1)")->capture_default_str();
    cmd->add_option("--tail-mass", tail_mass, "Truncation tail mass for series")->capture_default_str();
  }

  DependenceKind kind() const {
    if (pos && neg) throw UsageError("--pos and --neg are mutually exclusive");
    if (pos) return DependenceKind::Positive;
    if (neg) return DependenceKind::Negative;
    try {
      return parse_dependence(dependence);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }

  ModelParams params() const { return ModelParams::make(l1, l2, theta, phi, kind()); }

  TruncationPolicy trunc() const {
    TruncationPolicy t{tail_mass};
    t.validate();
    return t;
  }
};

json params_json(const ModelParams& m) {
  return {{"lambda1", num(m.lambda1())}, {"lambda2", num(m.lambda2())}, {"theta", num(m.theta())},
          {"phi", num(m.phi)}, {"dependence", std::string(to_string(m.kind()))}};
}

CountSample load_data(const std::string& spec) {
  if (spec.empty()) throw UsageError("--data is required");
  if (const DatasetFixture* f = find_fixture(spec)) return f->pairs;
  if (!std::filesystem::exists(spec)) throw UsageError("no such data file or fixture: " + spec);
  return read_csv_file(spec);
}

// Writes to --out when given, else stdout.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw UsageError("cannot open output file: " + out_path);
  f << text;
}

void emit_json(const std::string& out_path, json j) {
  j["schema"] = 1;
  emit(out_path, j.dump(2) + "\n");
}

json summary_json(const ParameterSummary& s) {
  return {{"mean", num(s.mean)}, {"sd", num(s.sd)}, {"q025", num(s.q025)}, {"q975", num(s.q975)}};
}

json fit_json(const FitResult& r, std::size_t n) {
  json flags = json::array();
  for (FitFlag f : r.flags) flags.push_back(std::string(to_string(f)));
  json j = {{"method", std::string(to_string(r.method))},
            {"n", n},
            {"estimates", params_json(r.params)},
            {"loglik", num(r.loglik)},
            {"converged", r.converged},
            {"iterations", r.iterations},
            {"flags", flags}};
  if (r.moments) {
    const auto& m = *r.moments;
    j["moments"] = {{"xbar1", num(m.xbar1)}, {"xbar2", num(m.xbar2)}, {"m2_1", num(m.m2_1)},
                    {"m2_2", num(m.m2_2)},   {"s12", num(m.s12)},     {"s12_star", num(m.s12_star)}};
  }
  if (!r.loglik_trace.empty()) {
    json trace = json::array();
    for (double v : r.loglik_trace) trace.push_back(num(v));
    j["loglik_trace"] = trace;
  }
  return j;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not a number in list: '" + item + "'");
    }
  }
  return out;
}

std::vector<Method> parse_methods(const std::string& text) {
  std::vector<Method> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      out.push_back(parse_method(item));
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) throw UsageError("empty method list");
  return out;
}

Method method_or_usage(const std::string& text) {
  try {
    return parse_method(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-inflated bivariate Poisson models with shock dependence"};
  app.require_subcommand(1);
  std::string out_path;
  std::uint64_t seed = 1;
  std::string data;

  // pmf / cdf
  ModelFlags point_flags;
  std::vector<std::int64_t> point{0, 0};
  auto add_point = [&](CLI::App* cmd) {
    point_flags.attach(cmd);
    cmd->add_option("--x", point, "Evaluation point x1 x2")->expected(2)->required();
  };
  CLI::App* pmf_cmd = app.add_subcommand("pmf", "Joint probability P(X1 = x1, X2 = x2)");
  add_point(pmf_cmd);
  CLI::App* cdf_cmd = app.add_subcommand("cdf", "Joint distribution function P(X1 <= x1, X2 <= x2)");
  add_point(cdf_cmd);

  // corr-curve
  ModelFlags curve_flags;
  std::string theta_list = "0.1,0.25,0.4,0.5,0.6,0.75,0.8,0.95";
  CLI::App* curve_cmd = app.add_subcommand("corr-curve", "Correlation of X as a function of phi (CSV)");
  curve_flags.attach(curve_cmd, false);
  curve_cmd->add_option("--thetas", theta_list, "Comma-separated theta values")->capture_default_str();

  // simulate
  ModelFlags sim_flags;
  std::size_t sim_n = 100;
  bool trace = false;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "Draw a sample (CSV)");
  sim_flags.attach(sim_cmd);
  sim_cmd->add_option("--n", sim_n, "Sample size")->capture_default_str();
  sim_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  sim_cmd->add_flag("--trace", trace, "Include the latent variables and uniforms");
  sim_cmd->add_option("--out", out_path, "Output file");

  // fit
  ModelFlags fit_flags;
  std::string method_text = "mle2";
  CLI::App* fit_cmd = app.add_subcommand("fit", "Estimate the parameters from data (JSON)");
  fit_flags.attach(fit_cmd, false);
  fit_cmd->add_option("--method", method_text, "mom, mle, mle2 or em")->capture_default_str();
  fit_cmd->add_option("--data", data, "CSV path or fixture name")->required();
  fit_cmd->add_option("--out", out_path, "Output file");

  // bootstrap
  ModelFlags boot_flags;
  int replications = 200;
  CLI::App* boot_cmd = app.add_subcommand("bootstrap", "Nonparametric bootstrap of an estimator (JSON)");
  boot_flags.attach(boot_cmd, false);
  boot_cmd->add_option("--method", method_text, "mom, mle, mle2 or em")->capture_default_str();
  boot_cmd->add_option("--data", data, "CSV path or fixture name")->required();
  boot_cmd->add_option("--B", replications, "Number of resamples")->capture_default_str();
  boot_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  boot_cmd->add_option("--out", out_path, "Output file");

  // study
  ModelFlags study_flags;
  std::string grid = "custom";
  int study_reps = 100;
  std::int64_t study_n = 500;
  std::string methods_text = "mom,mle,mle2";
  CLI::App* study_cmd = app.add_subcommand("study", "Monte Carlo study; writes CSV files into --out");
  study_flags.attach(study_cmd);
  study_cmd->add_option("--grid", grid, "paper (72 scenarios) or custom (one scenario from the flags)")
      ->check(CLI::IsMember({"paper", "custom"}))
      ->capture_default_str();
  study_cmd->add_option("--replications", study_reps, "Replications per scenario")->capture_default_str();
  study_cmd->add_option("--n", study_n, "Sample size for a custom scenario")->capture_default_str();
  study_cmd->add_option("--methods", methods_text, "Comma-separated methods")->capture_default_str();
  study_cmd->add_option("--seed", seed, "Base seed")->capture_default_str();
  study_cmd->add_option("--out", out_path, "Output directory")->required();

  // summarize-data
  CLI::App* summary_cmd = app.add_subcommand("summarize-data", "Cross-tabulation and moments of a data set (JSON)");
  summary_cmd->add_option("--data,data", data, "CSV path or fixture name")->required();
  summary_cmd->add_option("--out", out_path, "Output file");

  // avar
  ModelFlags avar_flags;
  CLI::App* avar_cmd = app.add_subcommand("avar", "Asymptotic variances of the moment estimators (JSON)");
  avar_flags.attach(avar_cmd);
  avar_cmd->add_option("--out", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (pmf_cmd->parsed() || cdf_cmd->parsed()) {
      const ModelParams m = point_flags.params();
      const double v = pmf_cmd->parsed() ? bzip_pmf(point[0], point[1], m) : bzip_cdf(point[0], point[1], m);
      std::cout << fmt(v) << "\n";
    } else if (curve_cmd->parsed()) {
      const DependenceKind kind = curve_flags.kind();
      const TruncationPolicy trunc = curve_flags.trunc();
      const std::vector<double> thetas = parse_list(theta_list);
      std::ostringstream s;
      s << "theta,phi,corr_T,corr_X\n";
      for (double t : thetas) {
        if (!(t > 0.0 && t <= 1.0)) throw UsageError("theta values must lie in (0, 1]");
        for (int k = 1; k <= 99; ++k) {
          const double phi = k / 100.0;
          const CorrDecomposition c =
              bzip_corr(ModelParams::make(curve_flags.l1, curve_flags.l2, t, phi, kind), trunc);
          s << fmt(t) << ',' << fmt(phi) << ',' << fmt(c.corr_T) << ',' << fmt(c.corr_X) << "\n";
        }
      }
      std::cout << s.str();
    } else if (sim_cmd->parsed()) {
      const ModelParams m = sim_flags.params();
      std::ostringstream s;
      if (trace) {
        s << std::setprecision(17) << "u,v1,v2,w,y1,y2,z1,z2,t1,t2,x1,x2\n";
        for (const auto& r : sample_with_trace(m, sim_n, seed)) {
          s << r.u << ',' << r.v1 << ',' << r.v2 << ',' << r.w << ',' << r.y1 << ',' << r.y2 << ',' << r.z1 << ','
            << r.z2 << ',' << r.t1 << ',' << r.t2 << ',' << r.x1 << ',' << r.x2 << "\n";
        }
      } else {
        write_csv(s, sample(m, sim_n, seed));
      }
      emit(out_path, s.str());
    } else if (fit_cmd->parsed()) {
      const Method method = method_or_usage(method_text);
      const CountSample pairs = load_data(data);
      FitOptions opts;
      opts.trunc = fit_flags.trunc();
      json j = fit_json(fit(pairs, method, fit_flags.kind(), opts), pairs.size());
      j["data"] = data;
      emit_json(out_path, j);
    } else if (boot_cmd->parsed()) {
      const Method method = method_or_usage(method_text);
      const CountSample pairs = load_data(data);
      FitOptions opts;
      opts.trunc = boot_flags.trunc();
      const BootstrapSummary b = bootstrap(pairs, method, boot_flags.kind(), replications, seed, opts);
      json j = {{"method", std::string(to_string(b.method))},
                {"dependence", std::string(to_string(b.kind))},
                {"data", data},
                {"n", pairs.size()},
                {"seed", seed},
                {"requested", b.requested},
                {"used", b.used},
                {"lambda1", summary_json(b.lambda1)},
                {"lambda2", summary_json(b.lambda2)},
                {"theta", summary_json(b.theta)},
                {"phi", summary_json(b.phi)},
                {"anomalies",
                 {{"degenerate_dropped", b.degenerate_dropped},
                  {"failed", b.failed},
                  {"theta_capped_0", b.theta_capped_0},
                  {"theta_capped_1", b.theta_capped_1},
                  {"phi_clamped", b.phi_clamped},
                  {"nonconverged", b.nonconverged}}}};
      emit_json(out_path, j);
    } else if (study_cmd->parsed()) {
      const std::vector<Method> methods = parse_methods(methods_text);
      FitOptions opts;
      opts.trunc = study_flags.trunc();
      std::vector<ScenarioSpec> specs;
      if (grid == "paper") {
        specs = full_grid(study_reps, seed, methods);
      } else {
        ScenarioSpec s;
        s.lambda1 = study_flags.l1;
        s.lambda2 = study_flags.l2;
        s.theta = study_flags.theta;
        s.phi = study_flags.phi;
        s.kind = study_flags.kind();
        s.n = study_n;
        s.replications = study_reps;
        s.base_seed = seed;
        s.methods = methods;
        s.validate();
        specs.push_back(s);
      }
      std::filesystem::create_directories(out_path);
      std::vector<ScenarioReport> reports;
      json files = json::array();
      for (const auto& spec : specs) {
        const ScenarioRun run = run_scenario(spec, opts);
        const std::filesystem::path file = std::filesystem::path(out_path) / (spec.id() + ".csv");
        std::ofstream f(file);
        if (!f) throw UsageError("cannot write " + file.string());
        write_replications_csv(f, run);
        files.push_back(file.string());
        reports.push_back(summarize(run));
      }
      const std::filesystem::path report = std::filesystem::path(out_path) / "report.csv";
      std::ofstream f(report);
      if (!f) throw UsageError("cannot write " + report.string());
      write_report_csv(f, reports);
      emit_json("", {{"scenarios", specs.size()}, {"report", report.string()}, {"files", files}});
    } else if (summary_cmd->parsed()) {
      const CountSample pairs = load_data(data);
      const SampleMoments sm = SampleMoments::from(pairs);
      const Grid table = contingency_table(pairs);
      json rows = json::array();
      for (std::int64_t i = 0; i < table.rows(); ++i) {
        json row = json::array();
        for (std::int64_t j = 0; j < table.cols(); ++j) row.push_back(static_cast<std::int64_t>(table(i, j)));
        rows.push_back(row);
      }
      emit_json(out_path, {{"data", data},
                           {"n", pairs.size()},
                           {"table", rows},
                           {"mean1", num(sm.mean1)},
                           {"mean2", num(sm.mean2)},
                           {"var1", num(sm.var1)},
                           {"var2", num(sm.var2)},
                           {"cov12", num(sm.cov12)}});
    } else if (avar_cmd->parsed()) {
      const ModelParams m = avar_flags.params();
      const TruncationPolicy trunc = avar_flags.trunc();
      const AsymptoticVariances v = asymptotic_variances(m, trunc);
      const bool interior = m.theta() > 0.0 && m.theta() < 1.0;
      emit_json(out_path, {{"params", params_json(m)},
                           {"var_lambda1", num(v.var_lambda1)},
                           {"var_lambda2", num(v.var_lambda2)},
                           {"var_phi", num(v.var_phi)},
                           {"var_theta", num(v.var_theta)},
                           {"var_theta_covariance_only", interior ? num(avar_theta(m, trunc)) : json(nullptr)}});
    }
  } catch (const std::exception& e) {
    // Bad flag values, unreadable or malformed input, uninformative data.
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return 0;
}
