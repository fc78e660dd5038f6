#include "bzip/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bzip/errors.hpp"
#include "bzip/optimize.hpp"
#include "bzip/poisson.hpp"
#include "bzip/simulate.hpp"
#include "detail/parallel.hpp"

namespace bzip {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kBoundaryTol = 1e-8;

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }
double logit(double p) { return std::log(p / (1.0 - p)); }

// Sum over the non-(0,0) pairs of count * log f, plus f(0,0).
struct LatentTerms {
  double f00;
  double sum_log_f;
};

LatentTerms latent_terms(const BpParams& p, const PairCounts& pc) {
  const BpGrid grid(p, pc.max_x1, pc.max_x2);
  LatentTerms out{grid.pmf(0, 0), 0.0};
  for (const auto& e : pc.nonzero) {
    const double f = grid.pmf(e.pair.x1, e.pair.x2);
    if (!(f > 0.0)) {
      out.sum_log_f = kNegInf;
      return out;
    }
    out.sum_log_f += static_cast<double>(e.count) * std::log(f);
  }
  return out;
}

double loglik_from_terms(const LatentTerms& t, double phi, const PairCounts& pc) {
  if (t.sum_log_f == kNegInf) return kNegInf;
  double ll = t.sum_log_f;
  if (pc.m0 > 0) ll += static_cast<double>(pc.m0) * std::log(phi + (1.0 - phi) * t.f00);
  const auto rest = pc.n - pc.m0;
  if (rest > 0) ll += static_cast<double>(rest) * std::log1p(-phi);
  return ll;
}

void check_informative(const PairCounts& pc) {
  if (pc.n == 0) throw NoInformation("empty sample");
  if (pc.nonzero.empty()) throw NoInformation("every pair is (0,0): no information on the count part");
}

void flag_theta_boundary(FitResult& r) {
  if (r.params.bp.theta <= kBoundaryTol) r.add(FitFlag::ThetaCappedAt0);
  if (r.params.bp.theta >= 1.0 - kBoundaryTol) r.add(FitFlag::ThetaCappedAt1);
}

ModelParams fallback_init(const PairCounts& pc, DependenceKind kind, const FitOptions& options) {
  double s1 = 0.0, s2 = 0.0;
  for (const auto& e : pc.nonzero) {
    s1 += static_cast<double>(e.count * e.pair.x1);
    s2 += static_cast<double>(e.count * e.pair.x2);
  }
  const double rest = static_cast<double>(pc.n - pc.m0);
  const double theta = kind == DependenceKind::Positive ? 0.5 : options.negative_theta_init;
  return ModelParams::make(std::max(s1 / rest, 0.05), std::max(s2 / rest, 0.05), theta, 0.5, kind);
}

// Starting values: MoM for the positive kind, MoM margins with a fixed theta
// for the negative kind; theta and phi kept away from the boundary so the
// logit reparametrisation is finite.
ModelParams default_init(const CountSample& sample, const PairCounts& pc, DependenceKind kind,
                         const FitOptions& options) {
  if (options.init) {
    ModelParams m = *options.init;
    m.bp.kind = kind;
    m.validate();
    return m;
  }
  try {
    const FitResult mom = mom_fit(sample, kind, options);
    const double theta = kind == DependenceKind::Positive ? std::clamp(mom.params.theta(), 0.02, 0.98)
                                                          : options.negative_theta_init;
    return ModelParams::make(mom.params.lambda1(), mom.params.lambda2(), theta,
                             std::clamp(mom.params.phi, 0.02, 0.98), kind);
  } catch (const DegenerateMargin&) {
    return fallback_init(pc, kind, options);
  }
}

// Simplex search with restarts from the incumbent until a restart no longer
// improves the objective.
NelderMeadResult minimize(const std::function<double(const std::vector<double>&)>& objective,
                          std::vector<double> start, const FitOptions& options) {
  NelderMeadConfig cfg;
  cfg.max_iterations = options.max_iterations;
  cfg.reltol = 0.0;
  cfg.abstol = options.tolerance;
  NelderMeadResult best = nelder_mead(objective, std::move(start), cfg);
  int total = best.iterations;
  for (int r = 0; r < options.restarts; ++r) {
    NelderMeadResult again = nelder_mead(objective, best.x, cfg);
    total += again.iterations;
    const bool improved = again.value < best.value - options.tolerance;
    if (again.value <= best.value) best = again;
    if (!improved) break;
  }
  best.iterations = total;
  return best;
}

// Grid scan followed by Brent between the neighbours of the best grid point.
// The objective may be infinite on part of the interval (pairs outside the
// support of the counter-monotonic shock), which defeats a plain Brent start.
double bracketed_minimum(const std::function<double(double)>& f, double lo, double hi) {
  constexpr int kCells = 40;
  int best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= kCells; ++k) {
    const double v = f(lo + (hi - lo) * k / kCells);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  const double a = lo + (hi - lo) * std::max(best - 1, 0) / kCells;
  const double b = lo + (hi - lo) * std::min(best + 1, kCells) / kCells;
  const double x = minimize_scalar(f, a, b);
  return f(x) <= best_value ? x : lo + (hi - lo) * best / kCells;
}

// Evaluates the dependence remainder for a fixed (lambda, theta) on pairs up
// to the given maxima.
class DependenceTerm {
 public:
  DependenceTerm(const BpParams& p, std::int64_t max1, std::int64_t max2)
      : log_theta_(std::log(p.theta)), log_rest_(std::log1p(-p.theta)), log_c_(max1 + 1, max2 + 1) {
    if (!(p.theta > 0.0 && p.theta < 1.0)) throw DomainError("dependence term requires theta in (0, 1)");
    const Grid c = shock_matrix(p, max1 + 1, max2 + 1);
    for (std::int64_t i = 0; i <= max1; ++i) {
      for (std::int64_t j = 0; j <= max2; ++j) log_c_(i, j) = c(i, j) > 0.0 ? std::log(c(i, j)) : kNegInf;
    }
    const PoissonTable a(p.theta * p.lambda1, max1);
    const PoissonTable b(p.theta * p.lambda2, max2);
    for (std::int64_t z = 0; z <= max1; ++z) log_g1_.push_back(a.log_pmf(z));
    for (std::int64_t z = 0; z <= max2; ++z) log_g2_.push_back(b.log_pmf(z));
  }

  double operator()(std::int64_t x1, std::int64_t x2) const {
    // log-sum-exp over z of log kappa(z; x) + log c(z), streamed.
    double top = kNegInf;
    double acc = 0.0;
    for (std::int64_t z1 = 0; z1 <= x1; ++z1) {
      const double part1 = log_binom(x1, z1) + static_cast<double>(z1) * log_theta_ +
                           static_cast<double>(x1 - z1) * log_rest_ - log_g1_[static_cast<std::size_t>(z1)];
      for (std::int64_t z2 = 0; z2 <= x2; ++z2) {
        const double lc = log_c_(z1, z2);
        if (lc == kNegInf) continue;
        const double term = part1 + log_binom(x2, z2) + static_cast<double>(z2) * log_theta_ +
                            static_cast<double>(x2 - z2) * log_rest_ - log_g2_[static_cast<std::size_t>(z2)] + lc;
        if (term > top) {
          acc = acc * std::exp(top - term) + 1.0;
          top = term;
        } else {
          acc += std::exp(term - top);
        }
      }
    }
    return top == kNegInf ? kNegInf : top + std::log(acc);
  }

 private:
  static double log_binom(std::int64_t n, std::int64_t k) {
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
  }

  double log_theta_;
  double log_rest_;
  Grid log_c_;
  std::vector<double> log_g1_, log_g2_;
};

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::MoM: return "mom";
    case Method::MLE1: return "mle";
    case Method::MLE2: return "mle2";
    case Method::EM: return "em";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "mom") return Method::MoM;
  if (text == "mle" || text == "mle1") return Method::MLE1;
  if (text == "mle2") return Method::MLE2;
  if (text == "em") return Method::EM;
  throw InvalidParameter("unknown method '" + std::string(text) + "' (expected mom, mle, mle2 or em)");
}

std::string_view to_string(FitFlag flag) {
  switch (flag) {
    case FitFlag::ThetaCappedAt0: return "theta_capped_at_0";
    case FitFlag::ThetaCappedAt1: return "theta_capped_at_1";
    case FitFlag::PhiClampedAt0: return "phi_clamped_at_0";
    case FitFlag::DegenerateMargin: return "degenerate_margin";
    case FitFlag::WrongSignLatentCov: return "wrong_sign_latent_cov";
  }
  return "?";
}

bool FitResult::has(FitFlag f) const { return std::find(flags.begin(), flags.end(), f) != flags.end(); }

void FitResult::add(FitFlag f) {
  if (!has(f)) flags.push_back(f);
}

ThetaRoot mom_theta_root(double s12, double lambda1, double lambda2, double phi, DependenceKind kind,
                         const TruncationPolicy& trunc) {
  auto s = [&](double theta) { return bzip_cov(ModelParams::make(lambda1, lambda2, theta, phi, kind), trunc); };
  const double at0 = s(0.0);
  const double at1 = s(1.0);
  // Orient so that the covariance increases along the search variable.
  const bool increasing = kind == DependenceKind::Positive;
  const double low = increasing ? at0 : at1;
  const double high = increasing ? at1 : at0;
  if (s12 <= low) return increasing ? ThetaRoot{0.0, true, false} : ThetaRoot{1.0, false, true};
  if (s12 >= high) return increasing ? ThetaRoot{1.0, false, true} : ThetaRoot{0.0, true, false};
  const double theta = find_root([&](double t) { return s(t) - s12; }, 0.0, 1.0, 1e-10);
  return {theta, false, false};
}

FitResult mom_fit(const CountSample& sample, DependenceKind kind, const FitOptions& options) {
  if (sample.size() < 2) throw NoInformation("method of moments needs at least two pairs");
  if (has_degenerate_margin(sample)) throw DegenerateMargin("a margin only takes values in {0, 1}");
  const SampleMoments sm = SampleMoments::from(sample);

  MomIntermediates mi;
  mi.xbar1 = sm.mean1;
  mi.xbar2 = sm.mean2;
  mi.m2_1 = sm.second1;
  mi.m2_2 = sm.second2;
  mi.s12 = sm.cov12;

  const double l1 = sm.second1 / sm.mean1 - 1.0;
  const double l2 = sm.second2 / sm.mean2 - 1.0;
  const double phi1 = 1.0 - sm.mean1 / l1;
  const double phi2 = 1.0 - sm.mean2 / l2;

  FitResult r;
  r.method = Method::MoM;
  double phi = 0.5 * (phi1 + phi2);
  if (phi < 0.0) {
    phi = 0.0;
    r.add(FitFlag::PhiClampedAt0);
  }
  mi.s12_star = mi.s12 / (1.0 - phi) - phi * l1 * l2;
  if ((kind == DependenceKind::Positive && !(mi.s12_star > 0.0)) ||
      (kind == DependenceKind::Negative && !(mi.s12_star < 0.0))) {
    r.add(FitFlag::WrongSignLatentCov);
  }

  const ThetaRoot root = mom_theta_root(mi.s12, l1, l2, phi, kind, options.trunc);
  if (root.capped_at_0) r.add(FitFlag::ThetaCappedAt0);
  if (root.capped_at_1) r.add(FitFlag::ThetaCappedAt1);

  r.params = ModelParams::make(l1, l2, root.theta, phi, kind);
  r.moments = mi;
  r.loglik = loglik(r.params, sample);
  return r;
}

double loglik(const ModelParams& m, const PairCounts& counts) {
  m.validate();
  return loglik_from_terms(latent_terms(m.bp, counts), m.phi, counts);
}

double loglik(const ModelParams& m, const CountSample& sample) { return loglik(m, PairCounts::from(sample)); }

double profile_phi(double f00, std::int64_t m0, std::int64_t n) {
  if (!(f00 >= 0.0) || !(f00 < 1.0)) throw InvalidParameter("profile_phi needs f00 in [0, 1)");
  if (n <= 0 || m0 < 0 || m0 > n) throw InvalidParameter("profile_phi needs 0 <= m0 <= n, n > 0");
  if (m0 == n) return 1.0;
  return (static_cast<double>(m0) / static_cast<double>(n) - f00) / (1.0 - f00);
}

FitResult mle_fit_twostep(const CountSample& sample, DependenceKind kind, const FitOptions& options) {
  const PairCounts pc = PairCounts::from(sample);
  check_informative(pc);
  const ModelParams init = default_init(sample, pc, kind, options);
  const double rest = static_cast<double>(pc.n - pc.m0);

  auto objective = [&](const std::vector<double>& x) {
    const BpParams p{std::exp(x[0]), std::exp(x[1]), logistic(x[2]), kind};
    if (!std::isfinite(p.lambda1) || !std::isfinite(p.lambda2) || p.lambda1 <= 0.0 || p.lambda2 <= 0.0) {
      return std::numeric_limits<double>::infinity();
    }
    const LatentTerms t = latent_terms(p, pc);
    if (t.sum_log_f == kNegInf || !(t.f00 < 1.0)) return std::numeric_limits<double>::infinity();
    return -(t.sum_log_f - rest * std::log1p(-t.f00));
  };

  const NelderMeadResult nm = minimize(
      objective, {std::log(init.lambda1()), std::log(init.lambda2()), logit(init.theta())}, options);

  FitResult r;
  r.method = Method::MLE2;
  r.converged = nm.converged;
  r.iterations = nm.iterations;
  const BpParams bp{std::exp(nm.x[0]), std::exp(nm.x[1]), logistic(nm.x[2]), kind};
  double phi = profile_phi(bp_pmf(0, 0, bp), pc.m0, pc.n);
  if (phi < 0.0) {
    phi = 0.0;
    r.add(FitFlag::PhiClampedAt0);
  }
  r.params = ModelParams::make(bp.lambda1, bp.lambda2, bp.theta, phi, kind);
  flag_theta_boundary(r);
  r.loglik = loglik(r.params, pc);
  return r;
}

FitResult mle_fit_onestep(const CountSample& sample, DependenceKind kind, const FitOptions& options) {
  const PairCounts pc = PairCounts::from(sample);
  check_informative(pc);
  const ModelParams init = default_init(sample, pc, kind, options);

  auto objective = [&](const std::vector<double>& x) {
    const BpParams p{std::exp(x[0]), std::exp(x[1]), logistic(x[2]), kind};
    const double phi = logistic(x[3]);
    if (!std::isfinite(p.lambda1) || !std::isfinite(p.lambda2) || p.lambda1 <= 0.0 || p.lambda2 <= 0.0 ||
        !(phi < 1.0)) {
      return std::numeric_limits<double>::infinity();
    }
    return -loglik_from_terms(latent_terms(p, pc), phi, pc);
  };

  const NelderMeadResult nm =
      minimize(objective,
               {std::log(init.lambda1()), std::log(init.lambda2()), logit(init.theta()), logit(init.phi)}, options);

  FitResult r;
  r.method = Method::MLE1;
  r.converged = nm.converged;
  r.iterations = nm.iterations;
  r.params = ModelParams::make(std::exp(nm.x[0]), std::exp(nm.x[1]), logistic(nm.x[2]),
                               std::min(logistic(nm.x[3]), 1.0 - 1e-10), kind);
  flag_theta_boundary(r);
  if (r.params.phi <= kBoundaryTol) r.add(FitFlag::PhiClampedAt0);
  r.loglik = loglik(r.params, pc);
  return r;
}

double em_weight(const ModelParams& m, std::int64_t x1, std::int64_t x2) {
  m.validate();
  if (x1 != 0 || x2 != 0) return 1.0;
  if (m.phi == 0.0) return 1.0;
  const double count_part = (1.0 - m.phi) * bp_pmf(0, 0, m.bp);
  return count_part / (m.phi + count_part);
}

double dependence_loglik(const BpParams& p, std::int64_t x1, std::int64_t x2) {
  p.validate();
  if (x1 < 0 || x2 < 0) throw DomainError("dependence_loglik needs non-negative counts");
  return DependenceTerm(p, x1, x2)(x1, x2);
}

FitResult em_fit(const CountSample& sample, DependenceKind kind, const FitOptions& options) {
  const PairCounts pc = PairCounts::from(sample);
  check_informative(pc);
  const double eps = options.em_theta_eps;

  ModelParams cur = default_init(sample, pc, kind, options);
  cur.bp.theta = std::clamp(cur.bp.theta, eps, 1.0 - eps);
  // A zero inflation rate is a fixed point of the phi update.
  cur.phi = std::clamp(cur.phi, 0.01, 0.99);

  double sx1 = 0.0, sx2 = 0.0;
  for (const auto& e : pc.nonzero) {
    sx1 += static_cast<double>(e.count * e.pair.x1);
    sx2 += static_cast<double>(e.count * e.pair.x2);
  }
  if (sx1 == 0.0 || sx2 == 0.0) throw NoInformation("a margin is identically zero");
  const double n = static_cast<double>(pc.n);
  const double m0 = static_cast<double>(pc.m0);

  FitResult r;
  r.method = Method::EM;
  r.converged = false;
  double ll = loglik(cur, pc);
  r.loglik_trace.push_back(ll);

  for (int it = 1; it <= options.em_max_iterations; ++it) {
    // E-step: only joint zeros carry a weight below one.
    const double w00 = em_weight(cur, 0, 0);
    const double sum_w = (n - m0) + m0 * w00;

    const double phi = std::clamp(1.0 - sum_w / n, 0.0, 1.0 - 1e-10);
    double l1, l2, theta;
    if (options.em_mstep == EmMStep::Ifm) {
      // Margins first, then theta from the weighted dependence remainder.
      l1 = sx1 / sum_w;
      l2 = sx2 / sum_w;
      auto q = [&](double t) {
        const DependenceTerm term(BpParams{l1, l2, t, kind}, pc.max_x1, pc.max_x2);
        double total = w00 > 0.0 ? m0 * w00 * term(0, 0) : 0.0;
        for (const auto& e : pc.nonzero) total += static_cast<double>(e.count) * term(e.pair.x1, e.pair.x2);
        return -total;
      };
      theta = bracketed_minimum(q, eps, 1.0 - eps);
    } else {
      // Negative weighted log f; each conditional step only accepts improvements.
      auto q = [&](double a, double b, double t) {
        if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
          return std::numeric_limits<double>::infinity();
        }
        const LatentTerms lt = latent_terms(BpParams{a, b, t, kind}, pc);
        double total = lt.sum_log_f;
        if (w00 > 0.0) total += m0 * w00 * std::log(lt.f00);
        return std::isnan(total) ? std::numeric_limits<double>::infinity() : -total;
      };
      l1 = cur.lambda1();
      l2 = cur.lambda2();
      theta = cur.theta();
      NelderMeadConfig cfg;
      cfg.reltol = 1e-12;
      cfg.initial_step = 0.05;
      const NelderMeadResult rates = nelder_mead(
          [&](const std::vector<double>& x) { return q(std::exp(x[0]), std::exp(x[1]), theta); },
          {std::log(l1), std::log(l2)}, cfg);
      if (rates.value < q(l1, l2, theta)) {
        l1 = std::exp(rates.x[0]);
        l2 = std::exp(rates.x[1]);
      }
      const double t = bracketed_minimum([&](double v) { return q(l1, l2, v); }, eps, 1.0 - eps);
      if (q(l1, l2, t) < q(l1, l2, theta)) theta = t;
    }

    const ModelParams next = ModelParams::make(l1, l2, theta, phi, kind);
    const double ll_next = loglik(next, pc);
    const double delta = std::max({std::fabs(next.lambda1() - cur.lambda1()), std::fabs(next.lambda2() - cur.lambda2()),
                                   std::fabs(next.theta() - cur.theta()), std::fabs(next.phi - cur.phi)});
    cur = next;
    r.loglik_trace.push_back(ll_next);
    r.iterations = it;
    const bool small_ll = std::isfinite(ll_next) && std::isfinite(ll) && std::fabs(ll_next - ll) < options.em_loglik_tol;
    ll = ll_next;
    if (delta < options.em_param_tol || small_ll) {
      r.converged = true;
      break;
    }
  }

  r.params = cur;
  r.loglik = ll;
  flag_theta_boundary(r);
  if (r.params.phi <= kBoundaryTol) r.add(FitFlag::PhiClampedAt0);
  return r;
}

FitResult fit(const CountSample& sample, Method method, DependenceKind kind, const FitOptions& options) {
  switch (method) {
    case Method::MoM: return mom_fit(sample, kind, options);
    case Method::MLE1: return mle_fit_onestep(sample, kind, options);
    case Method::MLE2: return mle_fit_twostep(sample, kind, options);
    case Method::EM: return em_fit(sample, kind, options);
  }
  throw InvalidParameter("unknown method");
}

ParameterSummary summarize_values(std::vector<double> values) {
  ParameterSummary s;
  if (values.empty()) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan, nan, nan};
  }
  const double count = static_cast<double>(values.size());
  double total = 0.0;
  for (double v : values) total += v;
  s.mean = total / count;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.sd = values.size() > 1 ? std::sqrt(ss / (count - 1.0)) : 0.0;
  std::sort(values.begin(), values.end());
  auto quantile = [&](double prob) {
    const double h = (count - 1.0) * prob;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
  };
  s.q025 = quantile(0.025);
  s.q975 = quantile(0.975);
  return s;
}

BootstrapSummary bootstrap_from_indices(const CountSample& sample, Method method, DependenceKind kind,
                                        const std::vector<std::vector<std::size_t>>& resamples,
                                        const FitOptions& options) {
  enum class Outcome { Ok, Degenerate, Failed };
  struct Slot {
    Outcome outcome = Outcome::Failed;
    FitResult fit;
  };
  std::vector<Slot> slots(resamples.size());
  detail::parallel_for(resamples.size(), [&](std::size_t r) {
    CountSample draw;
    draw.reserve(resamples[r].size());
    for (std::size_t idx : resamples[r]) draw.push_back(sample.at(idx));
    if (has_degenerate_margin(draw)) {
      slots[r].outcome = Outcome::Degenerate;
      return;
    }
    try {
      slots[r].fit = fit(draw, method, kind, options);
      slots[r].outcome = Outcome::Ok;
    } catch (const DegenerateMargin&) {
      slots[r].outcome = Outcome::Degenerate;
    } catch (const std::exception&) {
      slots[r].outcome = Outcome::Failed;
    }
  });

  BootstrapSummary out;
  out.method = method;
  out.kind = kind;
  out.requested = static_cast<int>(resamples.size());
  std::vector<double> l1, l2, th, ph;
  for (const auto& s : slots) {
    if (s.outcome == Outcome::Degenerate) {
      ++out.degenerate_dropped;
      continue;
    }
    if (s.outcome == Outcome::Failed) {
      ++out.failed;
      continue;
    }
    ++out.used;
    if (s.fit.has(FitFlag::ThetaCappedAt0)) ++out.theta_capped_0;
    if (s.fit.has(FitFlag::ThetaCappedAt1)) ++out.theta_capped_1;
    if (s.fit.has(FitFlag::PhiClampedAt0)) ++out.phi_clamped;
    if (!s.fit.converged) ++out.nonconverged;
    l1.push_back(s.fit.params.lambda1());
    l2.push_back(s.fit.params.lambda2());
    th.push_back(s.fit.params.theta());
    ph.push_back(s.fit.params.phi);
  }
  out.lambda1 = summarize_values(std::move(l1));
  out.lambda2 = summarize_values(std::move(l2));
  out.theta = summarize_values(std::move(th));
  out.phi = summarize_values(std::move(ph));
  return out;
}

BootstrapSummary bootstrap(const CountSample& sample, Method method, DependenceKind kind, int replications,
                           std::uint64_t seed, const FitOptions& options) {
  if (replications < 1) throw InvalidParameter("bootstrap needs at least one replication");
  if (sample.empty()) throw NoInformation("empty sample");
  std::vector<std::vector<std::size_t>> resamples(static_cast<std::size_t>(replications));
  for (std::size_t r = 0; r < resamples.size(); ++r) {
    Rng rng(derive_seed(seed, r + 1));
    resamples[r].resize(sample.size());
    for (auto& idx : resamples[r]) idx = static_cast<std::size_t>(rng.below(sample.size()));
  }
  return bootstrap_from_indices(sample, method, kind, resamples, options);
}

}  // namespace bzip
