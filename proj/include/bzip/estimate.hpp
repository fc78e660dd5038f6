#pragma once

// Estimators for the zero-inflated shock model: method of moments, profile
// (two-step) and joint (one-step) maximum likelihood, EM with a two-stage
// (margins first, then theta) M-step, and a nonparametric bootstrap.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bzip/distribution.hpp"
#include "bzip/sample.hpp"

namespace bzip {

enum class Method { MoM, MLE1, MLE2, EM };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

// EM maximisation step. Ifm updates the margins from the weighted means and
// then theta from the dependence remainder; Conditional maximises the
// weighted log f over the rates (theta fixed) and then over theta (rates
// fixed), which guarantees ascent of the observed-data log-likelihood.
enum class EmMStep { Ifm, Conditional };

enum class FitFlag { ThetaCappedAt0, ThetaCappedAt1, PhiClampedAt0, DegenerateMargin, WrongSignLatentCov };

std::string_view to_string(FitFlag flag);

struct MomIntermediates {
  double xbar1 = 0.0;
  double xbar2 = 0.0;
  double m2_1 = 0.0;  // (1/n) sum x1^2
  double m2_2 = 0.0;
  double s12 = 0.0;   // divisor n - 1
  double s12_star = 0.0;
};

struct FitResult {
  ModelParams params;
  Method method = Method::MoM;
  double loglik = 0.0;
  bool converged = true;
  int iterations = 0;
  std::vector<FitFlag> flags;
  std::optional<MomIntermediates> moments;  // MoM only
  std::vector<double> loglik_trace;         // EM only: observed-data loglik per iterate

  bool has(FitFlag f) const;
  void add(FitFlag f);
};

struct FitOptions {
  TruncationPolicy trunc;
  // Simplex settings shared by both likelihood fits.
  int max_iterations = 1000;
  double tolerance = 1e-6;  // absolute, on the negative log-likelihood
  int restarts = 2;
  // EM settings.
  int em_max_iterations = 500;
  double em_param_tol = 1e-6;
  double em_loglik_tol = 1e-8;
  double em_theta_eps = 1e-6;
  EmMStep em_mstep = EmMStep::Ifm;
  // Starting point; defaults per method when absent.
  std::optional<ModelParams> init;
  double negative_theta_init = 0.1;
};

struct ThetaRoot {
  double theta;
  bool capped_at_0;
  bool capped_at_1;
};

/// theta solving bzip_cov(lambda1, lambda2, theta, phi) = s12 on [0, 1],
/// capped at an endpoint when s12 falls outside the attainable range.
ThetaRoot mom_theta_root(double s12, double lambda1, double lambda2, double phi, DependenceKind kind,
                         const TruncationPolicy& trunc = {});

/// Throws DegenerateMargin when a margin only takes values in {0, 1} and
/// NoInformation on samples with fewer than two pairs.
FitResult mom_fit(const CountSample& sample, DependenceKind kind, const FitOptions& options = {});

/// Observed-data log-likelihood; -infinity when an observed pair has zero
/// probability under the parameters.
double loglik(const ModelParams& m, const CountSample& sample);
double loglik(const ModelParams& m, const PairCounts& counts);

/// Closed-form maximiser of the log-likelihood in phi for fixed (lambda, theta).
/// f00 may be zero (negative dependence with a large shock). May be negative;
/// callers clamp.
double profile_phi(double f00, std::int64_t m0, std::int64_t n);

FitResult mle_fit_twostep(const CountSample& sample, DependenceKind kind, const FitOptions& options = {});
FitResult mle_fit_onestep(const CountSample& sample, DependenceKind kind, const FitOptions& options = {});

/// E(W | X = (x1, x2)).
double em_weight(const ModelParams& m, std::int64_t x1, std::int64_t x2);

/// Dependence remainder of log f: log f(x) - log g_{lambda1}(x1) - log g_{lambda2}(x2),
/// evaluated through binomial thinning weights against the shock masses.
/// Requires theta in (0, 1).
double dependence_loglik(const BpParams& p, std::int64_t x1, std::int64_t x2);

FitResult em_fit(const CountSample& sample, DependenceKind kind, const FitOptions& options = {});

/// Dispatches on method.
FitResult fit(const CountSample& sample, Method method, DependenceKind kind, const FitOptions& options = {});

struct ParameterSummary {
  double mean = 0.0;
  double sd = 0.0;
  double q025 = 0.0;
  double q975 = 0.0;
};

struct BootstrapSummary {
  Method method = Method::MoM;
  DependenceKind kind = DependenceKind::Positive;
  int requested = 0;
  int used = 0;
  ParameterSummary lambda1, lambda2, theta, phi;
  // Anomaly tallies over the requested replications.
  int degenerate_dropped = 0;
  int failed = 0;  // other fitting errors, also dropped
  int theta_capped_0 = 0;
  int theta_capped_1 = 0;
  int phi_clamped = 0;
  int nonconverged = 0;
};

/// Resamples n pairs with replacement B times (replication r uses the stream
/// seeded with seed ^ r). Degenerate resamples are dropped; capped and
/// clamped fits are retained.
BootstrapSummary bootstrap(const CountSample& sample, Method method, DependenceKind kind, int replications,
                           std::uint64_t seed, const FitOptions& options = {});

/// Same aggregation over caller-supplied resampling index sets.
BootstrapSummary bootstrap_from_indices(const CountSample& sample, Method method, DependenceKind kind,
                                        const std::vector<std::vector<std::size_t>>& resamples,
                                        const FitOptions& options = {});

/// Mean, SD (divisor n - 1, 0 for a single value) and linearly interpolated
/// 2.5% / 97.5% quantiles.
ParameterSummary summarize_values(std::vector<double> values);

}  // namespace bzip
