#include "bzip/study.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "bzip/errors.hpp"
#include "bzip/simulate.hpp"
#include "detail/parallel.hpp"

namespace bzip {

namespace {

const char* const kParameters[] = {"lambda1", "lambda2", "theta", "phi"};

double parameter_value(const ModelParams& m, const std::string& name) {
  if (name == "lambda1") return m.lambda1();
  if (name == "lambda2") return m.lambda2();
  if (name == "theta") return m.theta();
  return m.phi;
}

std::string flags_text(const FitResult& fit) {
  std::string out;
  for (FitFlag f : fit.flags) {
    if (!out.empty()) out += ';';
    out += to_string(f);
  }
  return out;
}

}  // namespace

void ScenarioSpec::validate() const {
  params();
  if (replications < 1) throw InvalidParameter("replications must be at least 1");
  if (n < 2) throw InvalidParameter("sample size must be at least 2");
  if (methods.empty()) throw InvalidParameter("at least one method is required");
}

ModelParams ScenarioSpec::params() const { return ModelParams::make(lambda1, lambda2, theta, phi, kind); }

std::string ScenarioSpec::id() const {
  std::ostringstream s;
  s << to_string(kind) << "_l1-" << lambda1 << "_l2-" << lambda2 << "_theta-" << theta << "_phi-" << phi << "_n-"
    << n;
  return s.str();
}

ScenarioRun run_scenario(const ScenarioSpec& spec, const FitOptions& options) {
  spec.validate();
  const ModelParams truth = spec.params();
  ScenarioRun run{spec, std::vector<Replication>(static_cast<std::size_t>(spec.replications))};

  detail::parallel_for(run.replications.size(), [&](std::size_t k) {
    Replication& rep = run.replications[k];
    rep.index = static_cast<int>(k) + 1;
    rep.seed = derive_seed(spec.base_seed, static_cast<std::uint64_t>(rep.index));
    const CountSample data = sample(truth, static_cast<std::size_t>(spec.n), rep.seed);
    // The moment estimator is undefined here; the replication is dropped for
    // every method so all summaries share the same replications.
    rep.excluded = has_degenerate_margin(data);
    if (rep.excluded) return;
    for (Method method : spec.methods) {
      MethodOutcome out;
      out.method = method;
      try {
        out.fit = fit(data, method, spec.kind, options);
        out.ok = true;
      } catch (const std::exception& e) {
        out.error = e.what();
      }
      rep.outcomes.push_back(std::move(out));
    }
  });
  return run;
}

const CellSummary& ScenarioReport::cell(Method method, const std::string& parameter) const {
  for (const auto& c : cells) {
    if (c.method == method && c.parameter == parameter) return c;
  }
  throw InvalidParameter("no summary cell for " + std::string(to_string(method)) + "/" + parameter);
}

const AnomalyCounts& ScenarioReport::anomaly(Method method) const {
  for (const auto& a : anomalies) {
    if (a.method == method) return a;
  }
  throw InvalidParameter("no anomaly counts for " + std::string(to_string(method)));
}

ScenarioReport summarize(const ScenarioRun& run) {
  if (run.replications.empty()) throw InvalidParameter("empty replication table");
  const ModelParams truth = run.spec.params();
  ScenarioReport report;
  report.spec = run.spec;

  for (Method method : run.spec.methods) {
    AnomalyCounts a;
    a.method = method;
    a.replications = static_cast<int>(run.replications.size());
    for (const auto& rep : run.replications) {
      if (rep.excluded) {
        ++a.excluded;
        continue;
      }
      for (const auto& o : rep.outcomes) {
        if (o.method != method) continue;
        if (!o.ok) {
          ++a.failed;
          continue;
        }
        if (o.fit.has(FitFlag::ThetaCappedAt0)) ++a.theta_capped_0;
        if (o.fit.has(FitFlag::ThetaCappedAt1)) ++a.theta_capped_1;
        if (o.fit.has(FitFlag::PhiClampedAt0)) ++a.phi_clamped;
        if (!o.fit.converged) ++a.nonconverged;
      }
    }
    report.anomalies.push_back(a);

    for (const char* name : kParameters) {
      CellSummary c;
      c.method = method;
      c.parameter = name;
      c.truth = parameter_value(truth, name);
      std::vector<double> values;
      for (const auto& rep : run.replications) {
        if (rep.excluded) continue;
        for (const auto& o : rep.outcomes) {
          if (o.method == method && o.ok) values.push_back(parameter_value(o.fit.params, name));
        }
      }
      c.used = static_cast<int>(values.size());
      if (values.empty()) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        c.mean = c.bias = c.sd = c.rmse = c.relative_rmse = nan;
      } else {
        const ParameterSummary s = summarize_values(values);
        double sq = 0.0;
        for (double v : values) sq += (v - c.truth) * (v - c.truth);
        c.mean = s.mean;
        c.bias = s.mean - c.truth;
        c.sd = s.sd;
        c.rmse = std::sqrt(sq / static_cast<double>(values.size()));
      }
      report.cells.push_back(c);
    }
  }

  for (auto& c : report.cells) {
    c.relative_rmse = std::numeric_limits<double>::quiet_NaN();
    for (const auto& ref : report.cells) {
      if (ref.method == Method::MoM && ref.parameter == c.parameter && c.used > 0 && ref.used > 0 && c.rmse > 0.0) {
        c.relative_rmse = ref.rmse / c.rmse;
      }
    }
  }
  return report;
}

std::vector<ScenarioSpec> full_grid(int replications, std::uint64_t base_seed, const std::vector<Method>& methods) {
  std::vector<ScenarioSpec> out;
  std::uint64_t index = 0;
  for (DependenceKind kind : {DependenceKind::Positive, DependenceKind::Negative}) {
    for (const auto& lam : {std::pair{1.0, 2.0}, std::pair{5.0, 10.0}}) {
      for (double theta : {0.25, 0.75}) {
        for (double phi : {0.1, 0.5, 0.9}) {
          for (std::int64_t n : {100, 500, 1000}) {
            ScenarioSpec s;
            s.lambda1 = lam.first;
            s.lambda2 = lam.second;
            s.theta = theta;
            s.phi = phi;
            s.kind = kind;
            s.n = n;
            s.replications = replications;
            s.base_seed = derive_seed(base_seed, ++index << 32);
            s.methods = methods;
            out.push_back(s);
          }
        }
      }
    }
  }
  return out;
}

void write_replications_csv(std::ostream& out, const ScenarioRun& run) {
  out << std::setprecision(10);
  out << "replication,seed,excluded,method,status,lambda1,lambda2,theta,phi,loglik,converged,iterations,flags\n";
  for (const auto& rep : run.replications) {
    if (rep.excluded) {
      out << rep.index << ',' << rep.seed << ",1,,excluded,,,,,,,,degenerate_margin\n";
      continue;
    }
    for (const auto& o : rep.outcomes) {
      out << rep.index << ',' << rep.seed << ",0," << to_string(o.method) << ',';
      if (!o.ok) {
        out << "error,,,,,,,,\n";
        continue;
      }
      const auto& p = o.fit.params;
      out << "ok," << p.lambda1() << ',' << p.lambda2() << ',' << p.theta() << ',' << p.phi << ',' << o.fit.loglik
          << ',' << (o.fit.converged ? 1 : 0) << ',' << o.fit.iterations << ',' << flags_text(o.fit) << '\n';
    }
  }
}

void write_report_csv(std::ostream& out, const std::vector<ScenarioReport>& reports) {
  out << std::setprecision(10);
  out << "scenario,kind,lambda1,lambda2,theta,phi,n,replications,method,parameter,used,truth,mean,bias,sd,rmse,"
         "relative_rmse,excluded,failed,theta_capped_0,theta_capped_1,phi_clamped,nonconverged\n";
  for (const auto& r : reports) {
    const auto& s = r.spec;
    for (const auto& c : r.cells) {
      const AnomalyCounts& a = r.anomaly(c.method);
      out << s.id() << ',' << to_string(s.kind) << ',' << s.lambda1 << ',' << s.lambda2 << ',' << s.theta << ','
          << s.phi << ',' << s.n << ',' << s.replications << ',' << to_string(c.method) << ',' << c.parameter << ','
          << c.used << ',' << c.truth << ',';
      if (c.used == 0) {
        out << ",,,,";
      } else {
        out << c.mean << ',' << c.bias << ',' << c.sd << ',' << c.rmse << ',';
      }
      if (std::isfinite(c.relative_rmse)) out << c.relative_rmse;
      out << ',' << a.excluded << ',' << a.failed << ',' << a.theta_capped_0 << ',' << a.theta_capped_1 << ','
          << a.phi_clamped << ',' << a.nonconverged << '\n';
    }
  }
}

}  // namespace bzip
