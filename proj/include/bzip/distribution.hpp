#pragma once

// The observable zero-inflated pair X = W * T with W ~ Bernoulli(1 - phi)
// independent of the latent shock pair T.

#include <cstdint>

#include "bzip/grid.hpp"
#include "bzip/shock.hpp"

namespace bzip {

struct ModelParams {
  BpParams bp;
  double phi = 0.0;

  static ModelParams make(double lambda1, double lambda2, double theta, double phi, DependenceKind kind);

  double lambda1() const { return bp.lambda1; }
  double lambda2() const { return bp.lambda2; }
  double theta() const { return bp.theta; }
  DependenceKind kind() const { return bp.kind; }

  /// phi must lie in [0, 1); values within 1e-12 of one are rejected.
  void validate() const;
};

// corr(X1, X2) = a(phi) * corr(T1, T2) + b(phi).
struct CorrDecomposition {
  double a_phi;
  double b_phi;
  double corr_T;
  double corr_X;
};

struct FrechetBounds {
  double lower;
  double upper;
};

double bzip_pmf(std::int64_t x1, std::int64_t x2, const ModelParams& m);
double bzip_cdf(std::int64_t x1, std::int64_t x2, const ModelParams& m);
double bzip_pgf(double s1, double s2, const ModelParams& m, const TruncationPolicy& trunc = {});

/// Joint pmf of X on {0..max_x1} x {0..max_x2}.
Grid bzip_pmf_grid(const ModelParams& m, std::int64_t max_x1, std::int64_t max_x2);

/// Joint CDF of X on {0..max_x1} x {0..max_x2} (cumulative sums of the pmf grid).
Grid bzip_cdf_grid(const ModelParams& m, std::int64_t max_x1, std::int64_t max_x2);

double bzip_cov(const ModelParams& m, const TruncationPolicy& trunc = {});
CorrDecomposition bzip_corr(const ModelParams& m, const TruncationPolicy& trunc = {});

/// Frechet-Hoeffding bounds for a pair with ZIP(lambda_j, phi) margins.
FrechetBounds frechet_bounds(std::int64_t x1, std::int64_t x2, double lambda1, double lambda2, double phi);

/// Checks the PQD ordering in theta on {0..grid_size-1}^2: for the positive
/// kind H_low <= H_high + 1e-9 everywhere, reversed for the negative kind.
/// Throws InvalidComparison unless the two models differ only in theta with
/// theta_low <= theta_high.
bool pqd_grid_check(const ModelParams& low, const ModelParams& high, std::int64_t grid_size);

}  // namespace bzip
