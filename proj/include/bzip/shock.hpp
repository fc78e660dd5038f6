#pragma once

// The latent dependent Poisson pair T = (Y1 + Z1, Y2 + Z2).
//
// Y1, Y2 are independent Poisson((1 - theta) * lambda_j); the shock (Z1, Z2)
// has Poisson(theta * lambda_j) margins coupled through one uniform U:
// comonotonic (Z_j = G^{-1}(U)) for the positive kind, counter-monotonic
// (Z2 = G^{-1}(1 - U)) for the negative kind.

#include <cstdint>
#include <string_view>

#include "bzip/grid.hpp"

namespace bzip {

enum class DependenceKind { Positive, Negative };

std::string_view to_string(DependenceKind kind);
DependenceKind parse_dependence(std::string_view text);

/// Tail-mass tolerance for every infinite series and grid truncation.
struct TruncationPolicy {
  double tail_mass = 1e-10;

  void validate() const;
  /// Per-axis cutoff: pois_quantile(1 - tail_mass, lambda) + 10; 0 for lambda == 0.
  std::int64_t cutoff(double lambda) const;
};

struct BpParams {
  double lambda1;
  double lambda2;
  double theta;
  DependenceKind kind;

  void validate() const;
};

/// Mass of the shock pair (Z1, Z2) at (z1, z2).
double shock_pmf(std::int64_t z1, std::int64_t z2, const BpParams& p);

/// Shock masses on {0..rows-1} x {0..cols-1}.
Grid shock_matrix(const BpParams& p, std::int64_t rows, std::int64_t cols);

/// Joint pmf of T on {0..max_t1} x {0..max_t2}, built by convolving the shock
/// masses with the two independent Poisson parts (one axis at a time).
class BpGrid {
 public:
  BpGrid(const BpParams& p, std::int64_t max_t1, std::int64_t max_t2);

  std::int64_t max_t1() const { return pmf_.rows() - 1; }
  std::int64_t max_t2() const { return pmf_.cols() - 1; }

  /// 0 outside the tabulated rectangle's non-negative quadrant; throws
  /// DomainError beyond the tabulated maxima.
  double pmf(std::int64_t t1, std::int64_t t2) const;
  const Grid& table() const { return pmf_; }

 private:
  Grid pmf_;
};

double bp_pmf(std::int64_t t1, std::int64_t t2, const BpParams& p);

/// Joint CDF via the double sum with CDF factors for the independent parts.
double bp_cdf(std::int64_t t1, std::int64_t t2, const BpParams& p);

/// cov(T1, T2) from the Hoeffding-type tail series of the shock pair.
double bp_cov(const BpParams& p, const TruncationPolicy& trunc = {});

/// E(T1^a T2^b), 0 <= a, b <= 4, by truncated summation of the joint pmf.
double bp_mixed_moment(int a, int b, const BpParams& p, const TruncationPolicy& trunc = {});

/// E(s1^T1 s2^T2) for s in [0, 1]^2.
double bp_pgf(double s1, double s2, const BpParams& p, const TruncationPolicy& trunc = {});

}  // namespace bzip
