#include "bzip/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "bzip/errors.hpp"
#include "bzip/poisson.hpp"

namespace bzip {

ModelParams ModelParams::make(double lambda1, double lambda2, double theta, double phi, DependenceKind kind) {
  ModelParams m{BpParams{lambda1, lambda2, theta, kind}, phi};
  m.validate();
  return m;
}

void ModelParams::validate() const {
  bp.validate();
  if (!(phi >= 0.0) || !(phi < 1.0 - 1e-12)) throw InvalidParameter("inflation phi must lie in [0, 1)");
}

double bzip_pmf(std::int64_t x1, std::int64_t x2, const ModelParams& m) {
  m.validate();
  if (x1 < 0 || x2 < 0) return 0.0;
  const double f = bp_pmf(x1, x2, m.bp);
  if (x1 == 0 && x2 == 0) return m.phi + (1.0 - m.phi) * f;
  return (1.0 - m.phi) * f;
}

double bzip_cdf(std::int64_t x1, std::int64_t x2, const ModelParams& m) {
  m.validate();
  if (x1 < 0 || x2 < 0) return 0.0;
  return m.phi + (1.0 - m.phi) * bp_cdf(x1, x2, m.bp);
}

double bzip_pgf(double s1, double s2, const ModelParams& m, const TruncationPolicy& trunc) {
  m.validate();
  return m.phi + (1.0 - m.phi) * bp_pgf(s1, s2, m.bp, trunc);
}

Grid bzip_pmf_grid(const ModelParams& m, std::int64_t max_x1, std::int64_t max_x2) {
  m.validate();
  const BpGrid latent(m.bp, max_x1, max_x2);
  Grid h = latent.table();
  for (std::int64_t i = 0; i < h.rows(); ++i) {
    for (std::int64_t j = 0; j < h.cols(); ++j) h(i, j) *= 1.0 - m.phi;
  }
  h(0, 0) += m.phi;
  return h;
}

Grid bzip_cdf_grid(const ModelParams& m, std::int64_t max_x1, std::int64_t max_x2) {
  Grid h = bzip_pmf_grid(m, max_x1, max_x2);
  for (std::int64_t i = 0; i < h.rows(); ++i) {
    for (std::int64_t j = 1; j < h.cols(); ++j) h(i, j) += h(i, j - 1);
  }
  for (std::int64_t i = 1; i < h.rows(); ++i) {
    for (std::int64_t j = 0; j < h.cols(); ++j) h(i, j) += h(i - 1, j);
  }
  return h;
}

double bzip_cov(const ModelParams& m, const TruncationPolicy& trunc) {
  m.validate();
  return (1.0 - m.phi) * bp_cov(m.bp, trunc) + m.phi * (1.0 - m.phi) * m.lambda1() * m.lambda2();
}

CorrDecomposition bzip_corr(const ModelParams& m, const TruncationPolicy& trunc) {
  m.validate();
  const double l1 = m.lambda1();
  const double l2 = m.lambda2();
  CorrDecomposition d{};
  d.corr_T = bp_cov(m.bp, trunc) / std::sqrt(l1 * l2);
  d.a_phi = 1.0 / std::sqrt((1.0 + m.phi * l1) * (1.0 + m.phi * l2));
  d.b_phi = m.phi * d.a_phi * std::sqrt(l1 * l2);
  d.corr_X = d.a_phi * d.corr_T + d.b_phi;
  return d;
}

FrechetBounds frechet_bounds(std::int64_t x1, std::int64_t x2, double lambda1, double lambda2, double phi) {
  ZipMarginal{lambda1, phi}.validate();
  ZipMarginal{lambda2, phi}.validate();
  if (x1 < 0 || x2 < 0) return {0.0, 0.0};
  const double g1 = pois_cdf(x1, lambda1);
  const double g2 = pois_cdf(x2, lambda2);
  return {std::max(0.0, phi + (1.0 - phi) * (g1 + g2 - 1.0)), phi + (1.0 - phi) * std::min(g1, g2)};
}

bool pqd_grid_check(const ModelParams& low, const ModelParams& high, std::int64_t grid_size) {
  low.validate();
  high.validate();
  if (low.lambda1() != high.lambda1() || low.lambda2() != high.lambda2() || low.phi != high.phi ||
      low.kind() != high.kind()) {
    throw InvalidComparison("PQD comparison requires identical rates, inflation and dependence kind");
  }
  if (low.theta() > high.theta()) throw InvalidComparison("PQD comparison requires theta_low <= theta_high");
  if (grid_size <= 0) return true;
  const Grid h_low = bzip_cdf_grid(low, grid_size - 1, grid_size - 1);
  const Grid h_high = bzip_cdf_grid(high, grid_size - 1, grid_size - 1);
  constexpr double kSlack = 1e-9;
  const bool positive = low.kind() == DependenceKind::Positive;
  for (std::int64_t i = 0; i < grid_size; ++i) {
    for (std::int64_t j = 0; j < grid_size; ++j) {
      const bool ok = positive ? h_low(i, j) <= h_high(i, j) + kSlack : h_high(i, j) <= h_low(i, j) + kSlack;
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace bzip
