#include <gtest/gtest.h>

#include <boost/math/distributions/poisson.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <limits>

#include "bzip/errors.hpp"
#include "bzip/poisson.hpp"
#include "bzip/simulate.hpp"

using namespace bzip;

namespace {

const double kRates[] = {0.1, 1.0, 2.0, 5.0, 10.0};

std::int64_t tail_index(double lambda) { return pois_quantile(1.0 - 1e-12, lambda); }

}  // namespace

TEST(PoisLogPmf, SmallArguments) {
  EXPECT_NEAR(pois_log_pmf(0, 2.0), std::log(0.1353353), 1e-6);
  EXPECT_NEAR(pois_log_pmf(1, 1.0), std::log(0.3678794), 1e-6);
}

TEST(PoisLogPmf, FarTailAgainstHighPrecision) {
  using big = boost::multiprecision::cpp_dec_float_50;
  for (int k : {50, 150}) {
    big f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    const big exact = boost::multiprecision::exp(big(-5)) * boost::multiprecision::pow(big(5), k) / f;
    const double lp = pois_log_pmf(k, 5.0);
    ASSERT_TRUE(std::isfinite(lp));
    const double expected = static_cast<double>(boost::multiprecision::log(exact));
    EXPECT_NEAR(lp, expected, 1e-9 * std::abs(expected)) << k;
  }
  EXPECT_TRUE(std::isfinite(pois_log_pmf(9999, 5.0)));
}

TEST(PoisLogPmf, RejectsBadRates) {
  EXPECT_THROW(pois_log_pmf(0, 0.0), InvalidParameter);
  EXPECT_THROW(pois_log_pmf(0, -1.0), InvalidParameter);
  EXPECT_THROW(pois_log_pmf(0, std::numeric_limits<double>::infinity()), InvalidParameter);
  EXPECT_THROW(pois_log_pmf(0, std::numeric_limits<double>::quiet_NaN()), InvalidParameter);
}

TEST(PoisCdf, Examples) {
  EXPECT_EQ(pois_cdf(-1, 3.0), 0.0);
  EXPECT_NEAR(pois_cdf(0, 1.0), 0.3678794, 1e-7);
  EXPECT_NEAR(pois_cdf(5, 2.0), 0.9834364, 1e-7);
  EXPECT_THROW(pois_cdf(1, -2.0), InvalidParameter);
}

TEST(PoisSf, Examples) {
  EXPECT_EQ(pois_sf(-1, 3.0), 1.0);
  EXPECT_NEAR(pois_sf(0, 1.0), 0.6321206, 1e-7);
  EXPECT_NEAR(pois_sf(5, 2.0), 0.0165636, 1e-7);
}

TEST(PoisQuantile, Examples) {
  EXPECT_EQ(pois_quantile(0.0, 5.0), 0);
  EXPECT_EQ(pois_quantile(std::exp(-1.0), 1.0), 0);
  EXPECT_EQ(pois_quantile(0.99, 2.0), 6);
  EXPECT_THROW(pois_quantile(1.0, 2.0), DomainError);
}

TEST(PoisQuantile, GeneralizedInverse) {
  for (double l : kRates) {
    for (std::int64_t k = 0; k <= tail_index(l); ++k) {
      EXPECT_EQ(pois_quantile(pois_cdf(k, l), l), k) << l << " " << k;
    }
  }
}

TEST(Poisson, AgreesWithBoost) {
  for (double l : kRates) {
    const boost::math::poisson_distribution<double> d(l);
    for (std::int64_t k = 0; k <= 40; ++k) {
      const double kd = static_cast<double>(k);
      EXPECT_NEAR(pois_pmf(k, l), boost::math::pdf(d, kd), 1e-14);
      EXPECT_NEAR(pois_cdf(k, l), boost::math::cdf(d, kd), 1e-13);
      EXPECT_NEAR(pois_sf(k, l), boost::math::cdf(boost::math::complement(d, kd)), 1e-13);
    }
  }
}

TEST(Poisson, TailMassAndDifferences) {
  for (double l : kRates) {
    const std::int64_t top = tail_index(l);
    double total = 0.0;
    for (std::int64_t k = 0; k <= top; ++k) {
      total += pois_pmf(k, l);
      EXPECT_NEAR(pois_cdf(k, l) - pois_cdf(k - 1, l), std::exp(pois_log_pmf(k, l)), 1e-12);
    }
    EXPECT_GE(total, 1.0 - 1e-10) << l;
  }
}

TEST(Poisson, LogFactorial) {
  EXPECT_DOUBLE_EQ(log_factorial(0), 0.0);
  EXPECT_NEAR(log_factorial(5), std::log(120.0), 1e-13);
  EXPECT_NEAR(log_factorial(30), std::lgamma(31.0), 1e-10);
}

TEST(PoissonTable, MatchesScalarFunctions) {
  const PoissonTable t(3.5, 30);
  EXPECT_EQ(t.max_k(), 30);
  for (std::int64_t k = 0; k <= 30; ++k) {
    EXPECT_NEAR(t.pmf(k), pois_pmf(k, 3.5), 1e-15);
    EXPECT_NEAR(t.cdf(k), pois_cdf(k, 3.5), 1e-14);
    EXPECT_NEAR(t.sf(k), pois_sf(k, 3.5), 1e-14);
  }
  EXPECT_EQ(t.quantile_capped(0.5), pois_quantile(0.5, 3.5));
  const std::int64_t top = t.quantile_capped(1.0);
  EXPECT_LE(top, 30);
  EXPECT_EQ(t.cdf(top), 1.0);
}

TEST(ZipPmf, Examples) {
  EXPECT_NEAR(zip_pmf(0, {1.0, 0.0}), 0.3678794, 1e-7);
  EXPECT_NEAR(zip_pmf(0, {1.0, 0.5}), 0.6839397, 1e-7);
  EXPECT_NEAR(zip_pmf(2, {2.0, 0.5}), 0.1353353, 1e-7);
  EXPECT_THROW(zip_pmf(0, {1.0, 1.0}), InvalidParameter);
  EXPECT_THROW(zip_pmf(0, {1.0, -0.1}), InvalidParameter);
}

TEST(ZipPmf, Normalizes) {
  for (double l : kRates) {
    for (double phi : {0.0, 0.3, 0.9}) {
      double total = 0.0;
      for (std::int64_t k = 0; k <= tail_index(l); ++k) total += zip_pmf(k, {l, phi});
      EXPECT_NEAR(total, 1.0, 1e-10);
    }
  }
}

TEST(ZipMoments, Examples) {
  auto m = zip_moments({2.0, 0.0});
  EXPECT_DOUBLE_EQ(m.mean, 2.0);
  EXPECT_DOUBLE_EQ(m.variance, 2.0);
  m = zip_moments({2.0, 0.5});
  EXPECT_DOUBLE_EQ(m.mean, 1.0);
  EXPECT_DOUBLE_EQ(m.variance, 2.0);
  m = zip_moments({1.0, 0.9});
  EXPECT_NEAR(m.mean, 0.1, 1e-15);
  EXPECT_NEAR(m.variance, 0.19, 1e-15);
}

TEST(ZipMoments, MonteCarlo) {
  const ZipMarginal zm{2.0, 0.3};
  const auto mom = zip_moments(zm);
  Rng rng(11);
  const int n = 1000000;
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = rng.uniform() < zm.phi ? 0.0 : 1.0;
    const double x = w * static_cast<double>(pois_quantile(rng.uniform(), zm.lambda));
    s += x;
    s2 += x * x;
  }
  const double mean = s / n;
  const double var = s2 / n - mean * mean;
  EXPECT_LT(std::abs(mean - mom.mean), 3.0 * std::sqrt(mom.variance / n));
  // var of the sample variance ~ (mu4 - sigma^4)/n; a generous bound
  EXPECT_LT(std::abs(var - mom.variance), 3.0 * std::sqrt(20.0 * mom.variance * mom.variance / n));
}
