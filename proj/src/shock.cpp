#include "bzip/shock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bzip/errors.hpp"
#include "bzip/poisson.hpp"
#include "detail/summation.hpp"

namespace bzip {

namespace {

// Shock masses need tabulated CDFs on both axes. Intervals near U = 1 are
// measured in survival terms to avoid cancellation between CDF values close
// to one.
double comonotone_mass(const PoissonTable& a, const PoissonTable& b, std::int64_t z1, std::int64_t z2) {
  const double lower = std::max(a.cdf(z1 - 1), b.cdf(z2 - 1));
  double v;
  if (lower > 0.5) {
    v = std::min(a.sf(z1 - 1), b.sf(z2 - 1)) - std::max(a.sf(z1), b.sf(z2));
  } else {
    v = std::min(a.cdf(z1), b.cdf(z2)) - lower;
  }
  return v > 0.0 ? v : 0.0;
}

double countermonotone_mass(const PoissonTable& a, const PoissonTable& b, std::int64_t z1, std::int64_t z2) {
  // Z1 = z1 iff U in (G1(z1-1), G1(z1)]; Z2 = z2 iff U in [S2(z2), S2(z2-1)).
  const double lower = std::max(a.cdf(z1 - 1), b.sf(z2));
  double v;
  if (lower > 0.5) {
    // Same interval expressed in 1 - U.
    v = std::min(a.sf(z1 - 1), b.cdf(z2)) - std::max(a.sf(z1), b.cdf(z2 - 1));
  } else {
    v = std::min(a.cdf(z1), b.sf(z2 - 1)) - lower;
  }
  return v > 0.0 ? v : 0.0;
}

double shock_mass(const BpParams& p, const PoissonTable& a, const PoissonTable& b, std::int64_t z1,
                  std::int64_t z2) {
  if (z1 < 0 || z2 < 0) return 0.0;
  return p.kind == DependenceKind::Positive ? comonotone_mass(a, b, z1, z2)
                                            : countermonotone_mass(a, b, z1, z2);
}

// Sum over z of fa(t1 - z1) fb(t2 - z2) c(z1, z2) for every (t1, t2) in the
// grid, evaluated one axis at a time.
Grid convolve(const Grid& c, const std::vector<double>& fa, const std::vector<double>& fb) {
  const std::int64_t n1 = c.rows();
  const std::int64_t n2 = c.cols();
  Grid partial(n1, n2);
  for (std::int64_t z1 = 0; z1 < n1; ++z1) {
    for (std::int64_t z2 = 0; z2 < n2; ++z2) {
      const double cz = c(z1, z2);
      if (cz == 0.0) continue;
      for (std::int64_t t2 = z2; t2 < n2; ++t2) partial(z1, t2) += fb[static_cast<std::size_t>(t2 - z2)] * cz;
    }
  }
  Grid out(n1, n2);
  for (std::int64_t z1 = 0; z1 < n1; ++z1) {
    for (std::int64_t t1 = z1; t1 < n1; ++t1) {
      const double w = fa[static_cast<std::size_t>(t1 - z1)];
      if (w == 0.0) continue;
      for (std::int64_t t2 = 0; t2 < n2; ++t2) out(t1, t2) += w * partial(z1, t2);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(DependenceKind kind) {
  return kind == DependenceKind::Positive ? "pos" : "neg";
}

DependenceKind parse_dependence(std::string_view text) {
  if (text == "pos" || text == "positive" || text == "+") return DependenceKind::Positive;
  if (text == "neg" || text == "negative" || text == "-") return DependenceKind::Negative;
  throw InvalidParameter("unknown dependence kind '" + std::string(text) + "' (expected pos or neg)");
}

void TruncationPolicy::validate() const {
  if (!(tail_mass > 0.0) || !(tail_mass < 1e-4)) throw InvalidParameter("tail_mass must lie in (0, 1e-4)");
}

std::int64_t TruncationPolicy::cutoff(double lambda) const {
  validate();
  if (lambda == 0.0) return 0;
  return pois_quantile(1.0 - tail_mass, lambda) + 10;
}

void BpParams::validate() const {
  check_rate(lambda1);
  check_rate(lambda2);
  if (!(theta >= 0.0) || !(theta <= 1.0)) throw InvalidParameter("theta must lie in [0, 1]");
}

double shock_pmf(std::int64_t z1, std::int64_t z2, const BpParams& p) {
  p.validate();
  if (z1 < 0 || z2 < 0) return 0.0;
  if (p.theta == 0.0) return (z1 == 0 && z2 == 0) ? 1.0 : 0.0;
  const PoissonTable a(p.theta * p.lambda1, z1);
  const PoissonTable b(p.theta * p.lambda2, z2);
  return shock_mass(p, a, b, z1, z2);
}

Grid shock_matrix(const BpParams& p, std::int64_t rows, std::int64_t cols) {
  p.validate();
  Grid c(rows, cols);
  if (rows <= 0 || cols <= 0) return c;
  if (p.theta == 0.0) {
    c(0, 0) = 1.0;
    return c;
  }
  const PoissonTable a(p.theta * p.lambda1, rows - 1);
  const PoissonTable b(p.theta * p.lambda2, cols - 1);
  for (std::int64_t z1 = 0; z1 < rows; ++z1) {
    for (std::int64_t z2 = 0; z2 < cols; ++z2) c(z1, z2) = shock_mass(p, a, b, z1, z2);
  }
  return c;
}

BpGrid::BpGrid(const BpParams& p, std::int64_t max_t1, std::int64_t max_t2) {
  p.validate();
  if (max_t1 < 0 || max_t2 < 0) throw InvalidParameter("BpGrid needs non-negative extents");
  const Grid c = shock_matrix(p, max_t1 + 1, max_t2 + 1);
  const PoissonTable y1((1.0 - p.theta) * p.lambda1, max_t1);
  const PoissonTable y2((1.0 - p.theta) * p.lambda2, max_t2);
  pmf_ = convolve(c, y1.pmf_values(), y2.pmf_values());
}

double BpGrid::pmf(std::int64_t t1, std::int64_t t2) const {
  if (t1 < 0 || t2 < 0) return 0.0;
  if (!pmf_.contains(t1, t2)) throw DomainError("BpGrid lookup outside the tabulated range");
  return pmf_(t1, t2);
}

double bp_pmf(std::int64_t t1, std::int64_t t2, const BpParams& p) {
  p.validate();
  if (t1 < 0 || t2 < 0) return 0.0;
  return BpGrid(p, t1, t2).pmf(t1, t2);
}

double bp_cdf(std::int64_t t1, std::int64_t t2, const BpParams& p) {
  p.validate();
  if (t1 < 0 || t2 < 0) return 0.0;
  if (p.theta == 0.0) return pois_cdf(t1, p.lambda1) * pois_cdf(t2, p.lambda2);
  const Grid c = shock_matrix(p, t1 + 1, t2 + 1);
  const PoissonTable y1((1.0 - p.theta) * p.lambda1, t1);
  const PoissonTable y2((1.0 - p.theta) * p.lambda2, t2);
  // Only the (t1, t2) corner of the convolution is needed.
  detail::NeumaierSum sum;
  for (std::int64_t z1 = 0; z1 <= t1; ++z1) {
    const double g1 = y1.cdf(t1 - z1);
    for (std::int64_t z2 = 0; z2 <= t2; ++z2) {
      const double cz = c(z1, z2);
      if (cz != 0.0) sum.add(g1 * y2.cdf(t2 - z2) * cz);
    }
  }
  return std::min(sum.value(), 1.0);
}

double bp_cov(const BpParams& p, const TruncationPolicy& trunc) {
  p.validate();
  if (p.theta == 0.0) return 0.0;
  const double mu1 = p.theta * p.lambda1;
  const double mu2 = p.theta * p.lambda2;
  const std::int64_t k1 = trunc.cutoff(mu1);
  const std::int64_t k2 = trunc.cutoff(mu2);
  const PoissonTable a(mu1, k1);
  const PoissonTable b(mu2, k2);
  // E(Z1 Z2) = sum_{i,j >= 0} P(Z1 > i, Z2 > j).
  detail::NeumaierSum joint;
  for (std::int64_t i = 0; i <= k1; ++i) {
    for (std::int64_t j = 0; j <= k2; ++j) {
      double tail;
      if (p.kind == DependenceKind::Positive) {
        tail = std::min(a.sf(i), b.sf(j));
      } else {
        tail = std::max(0.0, a.sf(i) - b.cdf(j));
      }
      if (tail > 0.0) joint.add(tail);
    }
  }
  return joint.value() - mu1 * mu2;
}

double bp_mixed_moment(int a, int b, const BpParams& p, const TruncationPolicy& trunc) {
  p.validate();
  if (a < 0 || b < 0 || a > 4 || b > 4) throw InvalidParameter("mixed moment orders must lie in [0, 4]");
  const std::int64_t k1 = trunc.cutoff(p.lambda1);
  const std::int64_t k2 = trunc.cutoff(p.lambda2);
  const BpGrid grid(p, k1, k2);
  detail::NeumaierSum sum;
  for (std::int64_t t1 = 0; t1 <= k1; ++t1) {
    const double w1 = std::pow(static_cast<double>(t1), a);
    for (std::int64_t t2 = 0; t2 <= k2; ++t2) {
      sum.add(w1 * std::pow(static_cast<double>(t2), b) * grid.pmf(t1, t2));
    }
  }
  return sum.value();
}

double bp_pgf(double s1, double s2, const BpParams& p, const TruncationPolicy& trunc) {
  p.validate();
  if (!(s1 >= 0.0 && s1 <= 1.0 && s2 >= 0.0 && s2 <= 1.0)) throw DomainError("pgf arguments must lie in [0, 1]");
  double shock_part = 1.0;
  if (p.theta > 0.0) {
    const std::int64_t k1 = trunc.cutoff(p.theta * p.lambda1);
    const std::int64_t k2 = trunc.cutoff(p.theta * p.lambda2);
    const Grid c = shock_matrix(p, k1 + 1, k2 + 1);
    detail::NeumaierSum sum;
    for (std::int64_t z1 = 0; z1 <= k1; ++z1) {
      const double w1 = std::pow(s1, static_cast<double>(z1));
      for (std::int64_t z2 = 0; z2 <= k2; ++z2) {
        const double cz = c(z1, z2);
        if (cz != 0.0) sum.add(w1 * std::pow(s2, static_cast<double>(z2)) * cz);
      }
    }
    shock_part = sum.value();
  }
  const double rest = 1.0 - p.theta;
  return shock_part * std::exp(rest * p.lambda1 * (s1 - 1.0) + rest * p.lambda2 * (s2 - 1.0));
}

}  // namespace bzip
