#pragma once

// Univariate Poisson and zero-inflated Poisson primitives.
//
// All mass functions are evaluated in log space; distribution functions are
// accumulated in ascending order with compensated summation so that
// pois_cdf(k) - pois_cdf(k - 1) reproduces the mass at k.

#include <cstdint>
#include <vector>

namespace bzip {

/// Throws InvalidParameter unless lambda is finite and strictly positive.
void check_rate(double lambda);

/// log k! (exact table for small k, log-gamma beyond).
double log_factorial(std::int64_t k);

double pois_log_pmf(std::int64_t k, double lambda);
double pois_pmf(std::int64_t k, double lambda);

/// P(X <= k); 0 for k < 0.
double pois_cdf(std::int64_t k, double lambda);

/// P(X > k); 1 for k < 0. Sums the upper tail directly when k is past the
/// mean, otherwise complements the CDF.
double pois_sf(std::int64_t k, double lambda);

/// Smallest k with pois_cdf(k) >= p. Requires p in [0, 1).
std::int64_t pois_quantile(double p, double lambda);

/// Tabulated pmf / cdf / sf of one Poisson law on {0, ..., size()-1}.
///
/// cdf entries are produced by the same accumulation as pois_cdf; sf entries
/// are accumulated from the top of the support, so both tails stay accurate.
/// A rate of exactly zero is accepted here and tabulates the point mass at 0.
class PoissonTable {
 public:
  PoissonTable() = default;
  PoissonTable(double lambda, std::int64_t max_k);

  double lambda() const { return lambda_; }
  std::int64_t max_k() const { return static_cast<std::int64_t>(pmf_.size()) - 1; }

  double pmf(std::int64_t k) const;
  double log_pmf(std::int64_t k) const;
  double cdf(std::int64_t k) const;
  double sf(std::int64_t k) const;

  const std::vector<double>& pmf_values() const { return pmf_; }
  const std::vector<double>& cdf_values() const { return cdf_; }

  /// Generalized inverse restricted to the table: smallest tabulated k with
  /// cdf(k) >= p, or max_k() when p exceeds the last tabulated value.
  std::int64_t quantile_capped(double p) const;

 private:
  double lambda_ = 0.0;
  std::vector<double> pmf_;
  std::vector<double> log_pmf_;
  std::vector<double> cdf_;
  std::vector<double> sf_;
};

/// Zero-inflated Poisson margin: mass phi at zero, 1 - phi on Poisson(lambda).
struct ZipMarginal {
  double lambda;
  double phi;

  void validate() const;
};

struct Moments {
  double mean;
  double variance;
};

double zip_pmf(std::int64_t x, const ZipMarginal& m);
Moments zip_moments(const ZipMarginal& m);

}  // namespace bzip
