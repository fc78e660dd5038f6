#include "bzip/poisson.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "bzip/errors.hpp"
#include "detail/summation.hpp"

namespace bzip {

namespace {

constexpr std::int64_t kFactorialTableSize = 256;

const std::array<double, kFactorialTableSize>& log_factorial_table() {
  static const auto table = [] {
    std::array<double, kFactorialTableSize> t{};
    t[0] = 0.0;
    for (std::size_t k = 1; k < t.size(); ++k) t[k] = t[k - 1] + std::log(static_cast<double>(k));
    return t;
  }();
  return table;
}

// Runs the ascending compensated accumulation shared by pois_cdf and
// pois_quantile. `visit(k, cdf)` returns true to stop.
template <typename Visit>
void accumulate_cdf(double lambda, Visit&& visit) {
  detail::NeumaierSum sum;
  const double log_lambda = std::log(lambda);
  for (std::int64_t k = 0;; ++k) {
    const double term = std::exp(-lambda + static_cast<double>(k) * log_lambda - log_factorial(k));
    sum.add(term);
    if (visit(k, sum.value(), term)) return;
  }
}

}  // namespace

void check_rate(double lambda) {
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw InvalidParameter("Poisson rate must be finite and positive, got " + std::to_string(lambda));
  }
}

double log_factorial(std::int64_t k) {
  if (k < 0) throw DomainError("log_factorial of a negative integer");
  if (k < kFactorialTableSize) return log_factorial_table()[static_cast<std::size_t>(k)];
  return boost::math::lgamma(static_cast<double>(k) + 1.0);
}

double pois_log_pmf(std::int64_t k, double lambda) {
  check_rate(lambda);
  if (k < 0) return -std::numeric_limits<double>::infinity();
  return -lambda + static_cast<double>(k) * std::log(lambda) - log_factorial(k);
}

double pois_pmf(std::int64_t k, double lambda) { return std::exp(pois_log_pmf(k, lambda)); }

double pois_cdf(std::int64_t k, double lambda) {
  check_rate(lambda);
  if (k < 0) return 0.0;
  double result = 0.0;
  accumulate_cdf(lambda, [&](std::int64_t j, double cdf, double) {
    result = cdf;
    return j >= k;
  });
  return std::min(result, 1.0);
}

double pois_sf(std::int64_t k, double lambda) {
  check_rate(lambda);
  if (k < 0) return 1.0;
  if (static_cast<double>(k) < lambda) return std::max(0.0, 1.0 - pois_cdf(k, lambda));
  // Past the mean the terms decrease geometrically; sum the tail directly.
  detail::NeumaierSum tail;
  const double log_lambda = std::log(lambda);
  for (std::int64_t j = k + 1;; ++j) {
    const double term = std::exp(-lambda + static_cast<double>(j) * log_lambda - log_factorial(j));
    tail.add(term);
    if (term <= tail.value() * 1e-18 || term < std::numeric_limits<double>::min()) break;
  }
  return std::min(tail.value(), 1.0);
}

std::int64_t pois_quantile(double p, double lambda) {
  check_rate(lambda);
  if (!(p >= 0.0) || p >= 1.0) throw DomainError("pois_quantile requires p in [0, 1)");
  std::int64_t result = 0;
  accumulate_cdf(lambda, [&](std::int64_t k, double cdf, double term) {
    result = k;
    if (cdf >= p) return true;
    // The accumulated sum can saturate just below p when p is within a few
    // ulps of 1; stop once the remaining terms cannot move it.
    return static_cast<double>(k) > lambda && term < cdf * std::numeric_limits<double>::epsilon() * 0.5;
  });
  return result;
}

PoissonTable::PoissonTable(double lambda, std::int64_t max_k) : lambda_(lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0) throw InvalidParameter("PoissonTable rate must be finite and >= 0");
  if (max_k < 0) throw InvalidParameter("PoissonTable needs max_k >= 0");
  const auto size = static_cast<std::size_t>(max_k) + 1;
  pmf_.assign(size, 0.0);
  log_pmf_.assign(size, -std::numeric_limits<double>::infinity());
  cdf_.assign(size, 1.0);
  sf_.assign(size, 0.0);
  if (lambda == 0.0) {
    pmf_[0] = 1.0;
    log_pmf_[0] = 0.0;
    return;
  }
  const double log_lambda = std::log(lambda);
  detail::NeumaierSum sum;
  for (std::size_t k = 0; k < size; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    log_pmf_[k] = -lambda + static_cast<double>(kk) * log_lambda - log_factorial(kk);
    pmf_[k] = std::exp(log_pmf_[k]);
    sum.add(pmf_[k]);
    cdf_[k] = std::min(sum.value(), 1.0);
  }
  detail::NeumaierSum tail;
  tail.add(pois_sf(max_k, lambda));
  sf_[size - 1] = tail.value();
  for (std::size_t k = size - 1; k-- > 0;) {
    tail.add(pmf_[k + 1]);
    sf_[k] = std::min(tail.value(), 1.0);
  }
}

double PoissonTable::pmf(std::int64_t k) const {
  if (k < 0) return 0.0;
  if (k <= max_k()) return pmf_[static_cast<std::size_t>(k)];
  return lambda_ == 0.0 ? 0.0 : pois_pmf(k, lambda_);
}

double PoissonTable::log_pmf(std::int64_t k) const {
  if (k < 0) return -std::numeric_limits<double>::infinity();
  if (k <= max_k()) return log_pmf_[static_cast<std::size_t>(k)];
  return lambda_ == 0.0 ? -std::numeric_limits<double>::infinity() : pois_log_pmf(k, lambda_);
}

double PoissonTable::cdf(std::int64_t k) const {
  if (k < 0) return 0.0;
  if (k <= max_k()) return cdf_[static_cast<std::size_t>(k)];
  return lambda_ == 0.0 ? 1.0 : pois_cdf(k, lambda_);
}

double PoissonTable::sf(std::int64_t k) const {
  if (k < 0) return 1.0;
  if (k <= max_k()) return sf_[static_cast<std::size_t>(k)];
  return lambda_ == 0.0 ? 0.0 : pois_sf(k, lambda_);
}

std::int64_t PoissonTable::quantile_capped(double p) const {
  const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), p);
  if (it == cdf_.end()) return max_k();
  return static_cast<std::int64_t>(it - cdf_.begin());
}

void ZipMarginal::validate() const {
  check_rate(lambda);
  if (!(phi >= 0.0) || !(phi < 1.0)) throw InvalidParameter("inflation phi must lie in [0, 1)");
}

double zip_pmf(std::int64_t x, const ZipMarginal& m) {
  m.validate();
  if (x < 0) return 0.0;
  if (x == 0) return m.phi + (1.0 - m.phi) * std::exp(-m.lambda);
  return (1.0 - m.phi) * pois_pmf(x, m.lambda);
}

Moments zip_moments(const ZipMarginal& m) {
  m.validate();
  const double mean = (1.0 - m.phi) * m.lambda;
  return {mean, mean * (1.0 + m.phi * m.lambda)};
}

}  // namespace bzip
