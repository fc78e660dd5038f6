#pragma once

// Large-sample variances of the moment estimators.

#include <array>

#include "bzip/distribution.hpp"

namespace bzip {

using Matrix4 = std::array<std::array<double, 4>, 4>;
using Matrix5 = std::array<std::array<double, 5>, 5>;

// Moments of (X1, X1^2, X2, X2^2): means in omega, covariance in sigma.
struct MomentCovariance {
  std::array<double, 4> omega{};
  Matrix4 sigma{};
};

// Own-margin second-order moments of a ZIP(lambda, phi) variable.
struct MarginMoments {
  double var_x;
  double cov_x_x2;
  double var_x2;
};

/// Closed forms for var(X), cov(X, X^2), var(X^2).
MarginMoments margin_moments_closed_form(double lambda, double phi);

/// The same quantities by direct summation of the ZIP pmf.
MarginMoments margin_moments_by_summation(double lambda, double phi, const TruncationPolicy& trunc = {});

MomentCovariance sigma_m(const ModelParams& m, const TruncationPolicy& trunc = {});

/// Covariance of (X1, X1^2, X2, X2^2, X1 X2) by summation over the joint pmf.
Matrix5 moment_covariance_by_summation(const ModelParams& m, const TruncationPolicy& trunc = {});

/// Per-observation asymptotic variances (limits of n * var).
struct AsymptoticVariances {
  double var_lambda1 = 0.0;
  double var_lambda2 = 0.0;
  double var_phi = 0.0;
  double var_theta = 0.0;
};

double avar_phi(const ModelParams& m, const TruncationPolicy& trunc = {});
double avar_lambda(const ModelParams& m, int margin, const TruncationPolicy& trunc = {});

/// var[(X1 - E X1)(X2 - E X2)].
double tau2(const ModelParams& m, const TruncationPolicy& trunc = {});

/// d bzip_cov / d theta by central differences with step 1e-4 (shrunk near
/// the ends of the unit interval).
double cov_theta_slope(const ModelParams& m, const TruncationPolicy& trunc = {});

/// tau2 / slope^2: the sample covariance treated as the only source of
/// noise. Throws DomainError unless theta lies in (0, 1).
double avar_theta(const ModelParams& m, const TruncationPolicy& trunc = {});

/// Delta method through every moment theta-check depends on, including the
/// estimated margins and phi. Throws DomainError unless theta lies in (0, 1).
double avar_theta_full(const ModelParams& m, const TruncationPolicy& trunc = {});

/// var_theta is filled from avar_theta_full; NaN on a boundary theta.
AsymptoticVariances asymptotic_variances(const ModelParams& m, const TruncationPolicy& trunc = {});

}  // namespace bzip
