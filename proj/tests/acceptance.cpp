// Acceptance checks: one PASS/FAIL line per criterion, details indented below.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bzip/asymptotics.hpp"
#include "bzip/distribution.hpp"
#include "bzip/estimate.hpp"
#include "bzip/fixtures.hpp"
#include "bzip/poisson.hpp"
#include "bzip/simulate.hpp"
#include "bzip/study.hpp"
#include "detail/parallel.hpp"

using namespace bzip;

namespace {

constexpr auto kPos = DependenceKind::Positive;
constexpr auto kNeg = DependenceKind::Negative;

struct Combo {
  double l1, l2, theta;
  DependenceKind kind;
};

std::vector<Combo> eight_combos() {
  std::vector<Combo> out;
  for (auto kind : {kPos, kNeg}) {
    for (auto l : {std::pair{1.0, 2.0}, std::pair{5.0, 10.0}}) {
      for (double t : {0.25, 0.75}) out.push_back({l.first, l.second, t, kind});
    }
  }
  return out;
}

std::string label(const ModelParams& m) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s l=(%g,%g) theta=%g phi=%g", std::string(to_string(m.kind())).c_str(),
                m.lambda1(), m.lambda2(), m.theta(), m.phi);
  return buf;
}

void note(const char* fmt, const std::string& a, double x = 0, double y = 0, double z = 0, double w = 0) {
  std::printf("    ");
  std::printf(fmt, a.c_str(), x, y, z, w);
  std::printf("\n");
}

struct Criterion {
  int id;
  const char* title;
  std::function<bool()> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_abs_diff(const ModelParams& a, const ModelParams& b) {
  return std::max({std::abs(a.lambda1() - b.lambda1()), std::abs(a.lambda2() - b.lambda2()),
                   std::abs(a.theta() - b.theta()), std::abs(a.phi - b.phi)});
}

bool distribution_correctness() {
  const auto t0 = std::chrono::steady_clock::now();
  const TruncationPolicy trunc;
  bool ok = true;
  double worst_norm = 0, worst_margin = 0, worst_cdf = 0, worst_cov = 0;
  for (const auto& c : eight_combos()) {
    for (double phi : {0.1, 0.5, 0.9}) {
      const auto m = ModelParams::make(c.l1, c.l2, c.theta, phi, c.kind);
      const std::int64_t k1 = trunc.cutoff(m.lambda1()), k2 = trunc.cutoff(m.lambda2());
      const Grid pmf = bzip_pmf_grid(m, k1, k2);
      const Grid cdf = bzip_cdf_grid(m, 14, 14);
      double total = 0, e1 = 0, e2 = 0, e12 = 0;
      std::vector<double> col(static_cast<std::size_t>(k2 + 1), 0.0);
      for (std::int64_t i = 0; i <= k1; ++i) {
        double row = 0;
        for (std::int64_t j = 0; j <= k2; ++j) {
          const double p = pmf(i, j);
          row += p;
          col[static_cast<std::size_t>(j)] += p;
          e1 += p * static_cast<double>(i);
          e2 += p * static_cast<double>(j);
          e12 += p * static_cast<double>(i * j);
        }
        total += row;
        worst_margin = std::max(worst_margin, std::abs(row - zip_pmf(i, {m.lambda1(), phi})));
      }
      for (std::int64_t j = 0; j <= k2; ++j) {
        worst_margin = std::max(worst_margin, std::abs(col[static_cast<std::size_t>(j)] - zip_pmf(j, {m.lambda2(), phi})));
      }
      worst_norm = std::max(worst_norm, std::abs(1.0 - total));
      for (std::int64_t i = 0; i < 15; ++i) {
        for (std::int64_t j = 0; j < 15; ++j) {
          double s = 0;
          for (std::int64_t a = 0; a <= std::min(i, k1); ++a) {
            for (std::int64_t b = 0; b <= std::min(j, k2); ++b) s += pmf(a, b);
          }
          worst_cdf = std::max(worst_cdf, std::abs(cdf(i, j) - s));
        }
      }
      worst_cov = std::max(worst_cov, std::abs(bzip_cov(m, trunc) - (e12 - e1 * e2)));
    }
  }
  const double secs = seconds_since(t0);
  ok = worst_norm <= 1e-8 && worst_margin <= 1e-8 && worst_cdf <= 1e-9 && worst_cov <= 1e-6 && secs < 60;
  note("%s|1-sum| %.2e, margin %.2e, cdf %.2e, cov %.2e", "24 parameter sets: ", worst_norm, worst_margin,
         worst_cdf, worst_cov);
  note("%sruntime %.1f s (limit 60)", "", secs);
  return ok;
}

bool closed_form_anchors() {
  double worst_indep = 0, worst_equal = 0, worst_frechet = 0;
  for (auto kind : {kPos, kNeg}) {
    for (auto l : {std::pair{1.0, 2.0}, std::pair{5.0, 10.0}, std::pair{0.5, 3.0}}) {
      for (double phi : {0.1, 0.5, 0.9}) {
        const double expected =
            phi * std::sqrt(l.first * l.second / ((1 + phi * l.first) * (1 + phi * l.second)));
        const double got = bzip_corr(ModelParams::make(l.first, l.second, 0.0, phi, kind)).corr_X;
        worst_indep = std::max(worst_indep, std::abs(got - expected));
      }
    }
  }
  for (double lam : {0.5, 1.0, 2.0, 5.0}) {
    for (double t : {0.1, 0.25, 0.5, 0.75, 0.9}) {
      for (double phi : {0.1, 0.5, 0.9}) {
        const double expected = (t + phi * lam) / (1 + phi * lam);
        const double got = bzip_corr(ModelParams::make(lam, lam, t, phi, kPos)).corr_X;
        worst_equal = std::max(worst_equal, std::abs(got - expected));
      }
    }
  }
  for (auto l : {std::pair{1.0, 2.0}, std::pair{5.0, 10.0}}) {
    for (double phi : {0.0, 0.5}) {
      const Grid cdf = bzip_cdf_grid(ModelParams::make(l.first, l.second, 1.0, phi, kPos), 14, 14);
      for (std::int64_t i = 0; i < 15; ++i) {
        for (std::int64_t j = 0; j < 15; ++j) {
          worst_frechet =
              std::max(worst_frechet, std::abs(cdf(i, j) - frechet_bounds(i, j, l.first, l.second, phi).upper));
        }
      }
    }
  }
  note("%sindependence corr %.2e, equal-rate corr %.2e, upper bound %.2e", "max errors: ", worst_indep,
         worst_equal, worst_frechet);
  return worst_indep <= 1e-6 && worst_equal <= 1e-6 && worst_frechet <= 1e-9;
}

bool pqd_ordering() {
  int pairs = 0, passed = 0;
  for (auto kind : {kPos, kNeg}) {
    for (int a = 1; a <= 9; ++a) {
      for (int b = a + 1; b <= 9; ++b) {
        ++pairs;
        if (pqd_grid_check(ModelParams::make(1, 2, a / 10.0, 0.5, kind), ModelParams::make(1, 2, b / 10.0, 0.5, kind),
                           15)) {
          ++passed;
        }
      }
    }
  }
  note("%s%g of %g ordered pairs pass", "", passed, pairs);
  return passed == pairs;
}

bool sampler_fidelity() {
  const auto t0 = std::chrono::steady_clock::now();
  struct Out {
    double dev = 0, corr_err = 0;
    std::string name;
  };
  std::vector<ModelParams> params;
  for (const auto& c : eight_combos()) {
    for (double phi : {0.1, 0.5}) params.push_back(ModelParams::make(c.l1, c.l2, c.theta, phi, c.kind));
  }
  std::vector<Out> outs(params.size());
  detail::parallel_for(params.size(), [&](std::size_t k) {
    const auto& m = params[k];
    const std::size_t n = 200000;
    const auto data = sample(m, n, 1000 + k);
    Grid counts(10, 10);
    double s1 = 0, s2 = 0, s11 = 0, s22 = 0, s12 = 0;
    for (const auto& x : data) {
      if (x.x1 < 10 && x.x2 < 10) counts(x.x1, x.x2) += 1;
      const double a = static_cast<double>(x.x1), b = static_cast<double>(x.x2);
      s1 += a, s2 += b, s11 += a * a, s22 += b * b, s12 += a * b;
    }
    const double nn = static_cast<double>(n);
    const Grid pmf = bzip_pmf_grid(m, 9, 9);
    for (std::int64_t i = 0; i < 10; ++i) {
      for (std::int64_t j = 0; j < 10; ++j) {
        outs[k].dev = std::max(outs[k].dev, std::abs(counts(i, j) / nn - pmf(i, j)));
      }
    }
    const double v1 = s11 / nn - (s1 / nn) * (s1 / nn), v2 = s22 / nn - (s2 / nn) * (s2 / nn);
    const double corr = (s12 / nn - (s1 / nn) * (s2 / nn)) / std::sqrt(v1 * v2);
    outs[k].corr_err = std::abs(corr - bzip_corr(m).corr_X);
    outs[k].name = label(m);
  });
  double dev = 0, corr = 0;
  for (const auto& o : outs) {
    dev = std::max(dev, o.dev);
    corr = std::max(corr, o.corr_err);
  }
  const double secs = seconds_since(t0);
  note("%s16 runs of n=200000: max pmf deviation %.4f (limit 0.005), max corr error %.4f (limit 0.01)", "", dev,
         corr);
  note("%sruntime %.1f s (limit 120)", "", secs);
  return dev < 0.005 && corr < 0.01 && secs < 120;
}

bool estimator_consistency() {
  std::vector<ModelParams> params;
  for (const auto& c : eight_combos()) {
    for (double phi : {0.1, 0.5, 0.9}) params.push_back(ModelParams::make(c.l1, c.l2, c.theta, phi, c.kind));
  }
  struct Out {
    bool ok[2] = {false, false};
    ModelParams est[2];
    std::string error;
  };
  std::vector<Out> outs(params.size());
  detail::parallel_for(params.size(), [&](std::size_t k) {
    const auto& m = params[k];
    const auto data = sample(m, 100000, 5000 + k);
    const Method methods[2] = {Method::MoM, Method::MLE2};
    for (int i = 0; i < 2; ++i) {
      try {
        const auto f = fit(data, methods[i], m.kind());
        const auto& e = f.params;
        outs[k].est[i] = e;
        outs[k].ok[i] = std::abs(e.lambda1() / m.lambda1() - 1) < 0.05 &&
                        std::abs(e.lambda2() / m.lambda2() - 1) < 0.05 && std::abs(e.theta() - m.theta()) < 0.05 &&
                        std::abs(e.phi - m.phi) < 0.03;
      } catch (const std::exception& ex) {
        outs[k].error = ex.what();
      }
    }
  });
  int passed = 0;
  for (std::size_t k = 0; k < params.size(); ++k) {
    for (int i = 0; i < 2; ++i) {
      if (outs[k].ok[i]) {
        ++passed;
        continue;
      }
      const auto& e = outs[k].est[i];
      note("%s: miss, estimate (%.4f, %.4f, %.4f, %.4f)",
             label(params[k]) + (i == 0 ? " mom" : " mle2") + (outs[k].error.empty() ? "" : " " + outs[k].error),
             e.lambda1(), e.lambda2(), e.theta(), e.phi);
    }
  }
  note("%s%g of %g fits (24 scenarios x MoM, MLE2, n=100000) within tolerance", "", passed,
         2.0 * static_cast<double>(params.size()));
  return passed == static_cast<int>(2 * params.size());
}

bool real_data() {
  bool ok = true;
  const auto mom = mom_fit(storm_flood().pairs, kPos);
  const bool mom_ok = std::abs(mom.params.lambda1() - 0.370370) < 5e-7 &&
                      std::abs(mom.params.lambda2() - 0.230769) < 5e-7 && std::abs(mom.params.phi - 0.614554) < 5e-7;
  note("%sstorm/flood MoM (%.6f, %.6f, phi %.6f)", "", mom.params.lambda1(), mom.params.lambda2(), mom.params.phi);
  ok &= mom_ok;

  const auto pos = mle_fit_twostep(storm_flood().pairs, kPos);
  const double ref[4] = {0.3248, 0.2112, 0.4484, 0.5470};
  const double got[4] = {pos.params.lambda1(), pos.params.lambda2(), pos.params.theta(), pos.params.phi};
  bool pos_ok = true;
  for (int i = 0; i < 4; ++i) pos_ok &= std::abs(got[i] - ref[i]) <= 0.10;
  note("%sstorm/flood MLE2 (%.4f, %.4f, theta %.4f, phi %.4f)", "", got[0], got[1], got[2], got[3]);
  ok &= pos_ok;

  const auto neg = mle_fit_twostep(bushfire_flood().pairs, kNeg);
  const bool neg_ok = std::abs(neg.params.theta() - 0.9082) <= 0.15 && std::abs(neg.params.phi - 0.6654) <= 0.10;
  note("%sbushfire/flood negative MLE2 (%.4f, %.4f, theta %.4f, phi %.4f)", "", neg.params.lambda1(),
         neg.params.lambda2(), neg.params.theta(), neg.params.phi);
  ok &= neg_ok;
  return ok;
}

bool em_properties() {
  // Every EM run in this criterion feeds the ascent check.
  double worst_drop = 0.0;
  std::string worst_where;
  auto track = [&](const FitResult& r, const std::string& where) {
    for (std::size_t i = 1; i < r.loglik_trace.size(); ++i) {
      const double drop = r.loglik_trace[i - 1] - r.loglik_trace[i];
      if (drop > worst_drop) {
        worst_drop = drop;
        worst_where = where;
      }
    }
  };

  const auto combos = eight_combos();
  struct Agreement {
    FitResult em, cond, mle;
  };
  std::vector<Agreement> runs(combos.size());
  FitOptions cond;
  cond.em_mstep = EmMStep::Conditional;
  detail::parallel_for(combos.size(), [&](std::size_t k) {
    const auto& c = combos[k];
    const auto data = sample(ModelParams::make(c.l1, c.l2, c.theta, 0.5, c.kind), 2000, 7000 + k);
    runs[k].em = em_fit(data, c.kind);
    runs[k].cond = em_fit(data, c.kind, cond);
    runs[k].mle = mle_fit_twostep(data, c.kind);
  });
  double worst_agree = 0, worst_cond = 0, worst_cond_drop = 0;
  int agree = 0;
  for (std::size_t k = 0; k < combos.size(); ++k) {
    const auto name = label(ModelParams::make(combos[k].l1, combos[k].l2, combos[k].theta, 0.5, combos[k].kind));
    track(runs[k].em, name);
    const double d = max_abs_diff(runs[k].em.params, runs[k].mle.params);
    const double dc = max_abs_diff(runs[k].cond.params, runs[k].mle.params);
    worst_agree = std::max(worst_agree, d);
    worst_cond = std::max(worst_cond, dc);
    if (d < 1e-2) ++agree;
    for (std::size_t i = 1; i < runs[k].cond.loglik_trace.size(); ++i) {
      worst_cond_drop = std::max(worst_cond_drop, runs[k].cond.loglik_trace[i - 1] - runs[k].cond.loglik_trace[i]);
    }
    note("%s n=2000: |EM - MLE2| %.2e (conditional M-step %.2e)", name, d, dc);
  }

  const auto truth = ModelParams::make(5, 10, 0.25, 0.5, kPos);
  std::vector<FitResult> reps(20);
  detail::parallel_for(reps.size(), [&](std::size_t r) { reps[r] = em_fit(sample(truth, 1000, 9000 + r), kPos); });
  double mean[4] = {0, 0, 0, 0};
  for (std::size_t r = 0; r < reps.size(); ++r) {
    track(reps[r], "20-replication run");
    const auto& p = reps[r].params;
    mean[0] += p.lambda1() / 20, mean[1] += p.lambda2() / 20, mean[2] += p.theta() / 20, mean[3] += p.phi / 20;
  }
  const bool center_ok = std::abs(mean[0] - 5) <= 0.15 && std::abs(mean[1] - 10) <= 0.15 &&
                         std::abs(mean[2] - 0.25) <= 0.15 && std::abs(mean[3] - 0.5) <= 0.15;

  note("%sascent: largest loglik decrease %.3e (slack 1e-10)", "", worst_drop);
  if (!worst_where.empty()) std::printf("      worst run: %s\n", worst_where.c_str());
  note("%sagreement: %g of 8 within 1e-2, worst %.3e", "", agree, worst_agree);
  note("%s20 replications mean (%.3f, %.3f, theta %.3f, phi %.3f)", "", mean[0], mean[1], mean[2], mean[3]);
  note("%s[info] conditional M-step: largest decrease %.3e, worst agreement %.3e", "", worst_cond_drop, worst_cond);
  return worst_drop <= 1e-10 && agree == 8 && center_ok;
}

bool asymptotics() {
  bool ok = true;
  double worst_closed = 0;
  for (auto l : {std::pair{1.0, 2.0}, std::pair{5.0, 10.0}, std::pair{0.7, 3.0}}) {
    for (double phi : {0.0, 0.1, 0.5, 0.9}) {
      const double expected =
          (1 - phi) * (0.5 / (l.first * l.first) + 0.5 / (l.second * l.second) + phi);
      worst_closed = std::max(worst_closed, std::abs(avar_phi(ModelParams::make(l.first, l.second, 0, phi, kPos)) - expected));
    }
  }
  note("%savar_phi at theta=0 vs closed form: max error %.2e (limit 1e-8)", "", worst_closed);
  ok &= worst_closed <= 1e-8;

  // Oracle check of the two printed fourth-moment coefficients.
  double worst_shipped = 0, worst_alt = 0;
  for (double lam : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    for (double phi : {0.1, 0.5, 0.9}) {
      const double oracle = margin_moments_by_summation(lam, phi).var_x2;
      const double alt =
          (1 - phi) * (phi * std::pow(lam, 4) + 2 * (2 + phi) * std::pow(lam, 3) + (8 + phi) * lam * lam + lam);
      worst_shipped = std::max(worst_shipped, std::abs(margin_moments_closed_form(lam, phi).var_x2 - oracle) / oracle);
      worst_alt = std::max(worst_alt, std::abs(alt - oracle) / oracle);
    }
  }
  const bool flagged = worst_alt > 1e-3 && worst_shipped < 1e-9;
  note("%svar(X^2): shipped form rel. error %.2e, (8+phi) form rel. error %.2e", "", worst_shipped, worst_alt);
  std::printf("      discrepancy %s\n", flagged ? "flagged, oracle-consistent form shipped" : "NOT resolved");
  ok &= flagged;

  struct Out {
    double ratio[4];
    double emp[4];
    double th[4];
  };
  const auto combos = eight_combos();
  std::vector<Out> outs(combos.size());
  const int reps = 2000;
  const std::size_t n = 5000;
  for (std::size_t k = 0; k < combos.size(); ++k) {
    const auto& c = combos[k];
    const auto m = ModelParams::make(c.l1, c.l2, c.theta, 0.5, c.kind);
    std::vector<std::array<double, 4>> est(reps);
    detail::parallel_for(est.size(), [&](std::size_t r) {
      const auto f = mom_fit(sample(m, n, derive_seed(20000 + 10000 * k, r + 1)), c.kind);
      est[r] = {f.params.lambda1(), f.params.lambda2(), f.params.phi, f.params.theta()};
    });
    const auto av = asymptotic_variances(m);
    const double th[4] = {av.var_lambda1, av.var_lambda2, av.var_phi, av.var_theta};
    for (int i = 0; i < 4; ++i) {
      double mu = 0, ss = 0;
      for (const auto& e : est) mu += e[i] / reps;
      for (const auto& e : est) ss += (e[i] - mu) * (e[i] - mu);
      outs[k].emp[i] = static_cast<double>(n) * ss / (reps - 1);
      outs[k].th[i] = th[i];
      outs[k].ratio[i] = outs[k].emp[i] / th[i];
    }
  }
  const char* names[4] = {"lambda1", "lambda2", "phi", "theta"};
  int inside = 0, total = 0;
  for (std::size_t k = 0; k < combos.size(); ++k) {
    const auto& c = combos[k];
    const auto name = label(ModelParams::make(c.l1, c.l2, c.theta, 0.5, c.kind));
    std::string line = name + ":";
    for (int i = 0; i < 4; ++i) {
      ++total;
      const bool in = outs[k].ratio[i] >= 0.7 && outs[k].ratio[i] <= 1.3;
      inside += in;
      char buf[96];
      std::snprintf(buf, sizeof buf, " %s %.3f/%.3f=%.2f%s", names[i], outs[k].emp[i], outs[k].th[i],
                    outs[k].ratio[i], in ? "" : "*");
      line += buf;
    }
    std::printf("    %s\n", line.c_str());
  }
  note("%sempirical/delta-method ratios in [0.7, 1.3]: %g of %g (2000 MoM fits, n=5000, * = outside)", "",
         inside, total);
  ok &= inside == total;
  return ok;
}

bool study_harness() {
  bool ok = true;
  const auto t0 = std::chrono::steady_clock::now();
  // SD monotone in phi.
  double sd_l1[3], sd_t[3];
  int i = 0;
  for (double phi : {0.1, 0.5, 0.9}) {
    ScenarioSpec s;
    s.lambda1 = 1, s.lambda2 = 2, s.theta = 0.25, s.phi = phi, s.kind = kPos, s.n = 500, s.replications = 100;
    s.base_seed = 31;
    s.methods = {Method::MLE2};
    const auto r = summarize(run_scenario(s));
    sd_l1[i] = r.cell(Method::MLE2, "lambda1").sd;
    sd_t[i] = r.cell(Method::MLE2, "theta").sd;
    ++i;
  }
  const bool mono = sd_l1[0] < sd_l1[1] && sd_l1[1] < sd_l1[2] && sd_t[0] < sd_t[1] && sd_t[1] < sd_t[2];
  std::printf("    MLE2 SD over phi 0.1/0.5/0.9: lambda1 %.4f/%.4f/%.4f, theta %.4f/%.4f/%.4f -> %s\n", sd_l1[0],
              sd_l1[1], sd_l1[2], sd_t[0], sd_t[1], sd_t[2], mono ? "monotone" : "not monotone");
  ok &= mono;

  // Relative RMSE of MoM against MLE2.
  int good = 0;
  for (auto l : {std::pair{1.0, 2.0}, std::pair{5.0, 10.0}}) {
    for (double t : {0.25, 0.75}) {
      ScenarioSpec s;
      s.lambda1 = l.first, s.lambda2 = l.second, s.theta = t, s.phi = 0.5, s.kind = kPos, s.n = 500;
      s.replications = 100;
      s.base_seed = 47;
      s.methods = {Method::MoM, Method::MLE2};
      const auto r = summarize(run_scenario(s));
      const double rt = r.cell(Method::MLE2, "theta").relative_rmse;
      const double rp = r.cell(Method::MLE2, "phi").relative_rmse;
      const bool g = rt >= 1 && rp >= 1;
      good += g;
      std::printf("    %s: RMSE(MoM)/RMSE(MLE2) theta %.3f, phi %.3f\n", s.id().c_str(), rt, rp);
    }
  }
  std::printf("    relative RMSE >= 1 for theta and phi in %d of 4 scenarios (need 3)\n", good);
  ok &= good >= 3;

  // Anomaly counters in the small-sample, heavy-inflation cell.
  int excluded = 0, caps = 0, clamps = 0, nonconv = 0, failed = 0;
  for (auto kind : {kPos, kNeg}) {
    for (double t : {0.25, 0.75}) {
      ScenarioSpec s;
      s.lambda1 = 1, s.lambda2 = 2, s.theta = t, s.phi = 0.9, s.kind = kind, s.n = 100, s.replications = 100;
      s.base_seed = 2024;
      s.methods = {Method::MoM, Method::MLE1, Method::MLE2};
      const auto r = summarize(run_scenario(s));
      excluded += r.anomaly(Method::MoM).excluded;
      for (const auto& a : r.anomalies) {
        caps += a.theta_capped_0 + a.theta_capped_1;
        clamps += a.phi_clamped;
        nonconv += a.nonconverged;
        failed += a.failed;
      }
    }
  }
  std::printf("    l=(1,2) phi=0.9 n=100, both kinds, theta 0.25/0.75, R=100: degenerate margins %d, theta caps %d, "
              "phi clamps %d, non-converged %d, failed %d\n",
              excluded, caps, clamps, nonconv, failed);
  ok &= excluded > 0 && caps > 0 && clamps > 0;
  const double secs = seconds_since(t0);
  std::printf("    runtime %.1f s (limit 1800)\n", secs);
  ok &= secs < 1800;
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "distribution correctness", distribution_correctness},
      {2, "closed-form anchors", closed_form_anchors},
      {3, "PQD ordering", pqd_ordering},
      {4, "sampler fidelity", sampler_fidelity},
      {5, "estimator consistency", estimator_consistency},
      {6, "real-data replication", real_data},
      {7, "EM properties", em_properties},
      {8, "asymptotics", asymptotics},
      {9, "study harness", study_harness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    bool pass = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      pass = c.run();
    } catch (const std::exception& e) {
      std::printf("    exception: %s\n", e.what());
    }
    std::printf("%s %d %s (%.1f s)\n", pass ? "PASS" : "FAIL", c.id, c.title, seconds_since(t0));
    std::fflush(stdout);
    failures += !pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
