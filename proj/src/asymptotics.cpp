#include "bzip/asymptotics.hpp"

#include <cmath>
#include <limits>

#include "bzip/errors.hpp"
#include "bzip/poisson.hpp"
#include "detail/summation.hpp"

namespace bzip {

namespace {

// Raw Poisson moments E T^k, k = 0..4.
double pois_raw_moment(int k, double l) {
  switch (k) {
    case 0: return 1.0;
    case 1: return l;
    case 2: return l * (1.0 + l);
    case 3: return l * (1.0 + l * (3.0 + l));
    case 4: return l * (1.0 + l * (7.0 + l * (6.0 + l)));
  }
  throw InvalidParameter("raw moment order must be in 0..4");
}

template <std::size_t N>
double quadratic_form(const std::array<double, N>& g, const std::array<std::array<double, N>, N>& s) {
  double total = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) total += g[i] * s[i][j] * g[j];
  }
  return total;
}

void require_interior(const ModelParams& m) {
  if (!(m.theta() > 0.0 && m.theta() < 1.0)) {
    throw DomainError("theta-check has no asymptotic variance at a boundary theta");
  }
}

double cov_at(const ModelParams& m, double l1, double l2, double theta, double phi, const TruncationPolicy& trunc) {
  return bzip_cov(ModelParams::make(l1, l2, theta, phi, m.kind()), trunc);
}

}  // namespace

MarginMoments margin_moments_closed_form(double lambda, double phi) {
  check_rate(lambda);
  const double l = lambda;
  const double w = 1.0 - phi;
  return {w * l * (1.0 + phi * l), w * l * (phi * l * l + (2.0 + phi) * l + 1.0),
          w * l * (phi * l * l * l + 2.0 * (2.0 + phi) * l * l + (6.0 + phi) * l + 1.0)};
}

MarginMoments margin_moments_by_summation(double lambda, double phi, const TruncationPolicy& trunc) {
  check_rate(lambda);
  const ZipMarginal zm{lambda, phi};
  zm.validate();
  const std::int64_t top = trunc.cutoff(lambda);
  detail::NeumaierSum s1, s2, s3, s4;
  for (std::int64_t x = 1; x <= top; ++x) {
    const double p = zip_pmf(x, zm);
    const double v = static_cast<double>(x);
    s1.add(p * v);
    s2.add(p * v * v);
    s3.add(p * v * v * v);
    s4.add(p * v * v * v * v);
  }
  const double e1 = s1.value(), e2 = s2.value(), e3 = s3.value(), e4 = s4.value();
  return {e2 - e1 * e1, e3 - e1 * e2, e4 - e2 * e2};
}

MomentCovariance sigma_m(const ModelParams& m, const TruncationPolicy& trunc) {
  m.validate();
  const double phi = m.phi;
  const double w = 1.0 - phi;
  const double l[2] = {m.lambda1(), m.lambda2()};

  MomentCovariance out;
  for (int j = 0; j < 2; ++j) {
    out.omega[2 * j] = w * pois_raw_moment(1, l[j]);
    out.omega[2 * j + 1] = w * pois_raw_moment(2, l[j]);
    const MarginMoments mm = margin_moments_closed_form(l[j], phi);
    const auto b = static_cast<std::size_t>(2 * j);
    out.sigma[b][b] = mm.var_x;
    out.sigma[b][b + 1] = out.sigma[b + 1][b] = mm.cov_x_x2;
    out.sigma[b + 1][b + 1] = mm.var_x2;
  }
  // cov(X1^a, X2^b) = (1 - phi) cov(T1^a, T2^b) + phi (1 - phi) E T1^a E T2^b.
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      const double ea = pois_raw_moment(a, l[0]);
      const double eb = pois_raw_moment(b, l[1]);
      const double cov_t = m.theta() == 0.0 ? 0.0 : bp_mixed_moment(a, b, m.bp, trunc) - ea * eb;
      const double v = w * cov_t + phi * w * ea * eb;
      const auto i = static_cast<std::size_t>(a - 1);
      const auto j = static_cast<std::size_t>(2 + b - 1);
      out.sigma[i][j] = out.sigma[j][i] = v;
    }
  }
  return out;
}

Matrix5 moment_covariance_by_summation(const ModelParams& m, const TruncationPolicy& trunc) {
  m.validate();
  const std::int64_t k1 = trunc.cutoff(m.lambda1());
  const std::int64_t k2 = trunc.cutoff(m.lambda2());
  const Grid pmf = bzip_pmf_grid(m, k1, k2);
  auto features = [](double x1, double x2) { return std::array<double, 5>{x1, x1 * x1, x2, x2 * x2, x1 * x2}; };

  std::array<detail::NeumaierSum, 5> first;
  std::array<std::array<detail::NeumaierSum, 5>, 5> second;
  for (std::int64_t i = 0; i <= k1; ++i) {
    for (std::int64_t j = 0; j <= k2; ++j) {
      const double p = pmf(i, j);
      if (p == 0.0) continue;
      const auto f = features(static_cast<double>(i), static_cast<double>(j));
      for (std::size_t a = 0; a < 5; ++a) {
        first[a].add(p * f[a]);
        for (std::size_t b = a; b < 5; ++b) second[a][b].add(p * f[a] * f[b]);
      }
    }
  }
  Matrix5 out{};
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = a; b < 5; ++b) {
      out[a][b] = out[b][a] = second[a][b].value() - first[a].value() * first[b].value();
    }
  }
  return out;
}

double avar_phi(const ModelParams& m, const TruncationPolicy& trunc) {
  const MomentCovariance mc = sigma_m(m, trunc);
  const double l1 = m.lambda1(), l2 = m.lambda2();
  const std::array<double, 4> grad{-(1.0 + 2.0 * l1) / (2.0 * l1 * l1), 1.0 / (2.0 * l1 * l1),
                                   -(1.0 + 2.0 * l2) / (2.0 * l2 * l2), 1.0 / (2.0 * l2 * l2)};
  return quadratic_form(grad, mc.sigma);
}

double avar_lambda(const ModelParams& m, int margin, const TruncationPolicy& trunc) {
  if (margin != 1 && margin != 2) throw InvalidParameter("margin must be 1 or 2");
  const MomentCovariance mc = sigma_m(m, trunc);
  const auto b = static_cast<std::size_t>(2 * (margin - 1));
  const double m1 = mc.omega[b];
  const double m2 = mc.omega[b + 1];
  const std::array<double, 2> grad{-m2 / (m1 * m1), 1.0 / m1};
  const std::array<std::array<double, 2>, 2> block{
      {{mc.sigma[b][b], mc.sigma[b][b + 1]}, {mc.sigma[b + 1][b], mc.sigma[b + 1][b + 1]}}};
  return quadratic_form(grad, block);
}

double tau2(const ModelParams& m, const TruncationPolicy& trunc) {
  m.validate();
  const std::int64_t k1 = trunc.cutoff(m.lambda1());
  const std::int64_t k2 = trunc.cutoff(m.lambda2());
  const Grid pmf = bzip_pmf_grid(m, k1, k2);
  const double mu1 = (1.0 - m.phi) * m.lambda1();
  const double mu2 = (1.0 - m.phi) * m.lambda2();
  detail::NeumaierSum first, second;
  for (std::int64_t i = 0; i <= k1; ++i) {
    for (std::int64_t j = 0; j <= k2; ++j) {
      const double d = (static_cast<double>(i) - mu1) * (static_cast<double>(j) - mu2);
      first.add(pmf(i, j) * d);
      second.add(pmf(i, j) * d * d);
    }
  }
  return second.value() - first.value() * first.value();
}

double cov_theta_slope(const ModelParams& m, const TruncationPolicy& trunc) {
  require_interior(m);
  const double t = m.theta();
  const double h = std::min({1e-4, 0.5 * t, 0.5 * (1.0 - t)});
  return (cov_at(m, m.lambda1(), m.lambda2(), t + h, m.phi, trunc) -
          cov_at(m, m.lambda1(), m.lambda2(), t - h, m.phi, trunc)) /
         (2.0 * h);
}

double avar_theta(const ModelParams& m, const TruncationPolicy& trunc) {
  require_interior(m);
  const double slope = cov_theta_slope(m, trunc);
  return tau2(m, trunc) / (slope * slope);
}

double avar_theta_full(const ModelParams& m, const TruncationPolicy& trunc) {
  require_interior(m);
  const double l1 = m.lambda1(), l2 = m.lambda2(), phi = m.phi, t = m.theta();
  const double w = 1.0 - phi;

  // Moments (E X1, E X1^2, E X2, E X2^2, E X1 X2) at the truth.
  const double e1 = w * l1, e2 = w * l1 * (1.0 + l1);
  const double e3 = w * l2, e4 = w * l2 * (1.0 + l2);

  // d lambda_j and d phi_j with respect to (first, second) raw moments.
  auto margin_grad = [](double mean, double second) {
    const double lam = second / mean - 1.0;
    const double d_lam_d1 = -second / (mean * mean);
    const double d_lam_d2 = 1.0 / mean;
    // phi_j = 1 - mean / lam
    const double d_phi_d1 = -1.0 / lam + mean / (lam * lam) * d_lam_d1;
    const double d_phi_d2 = mean / (lam * lam) * d_lam_d2;
    return std::array<double, 4>{d_lam_d1, d_lam_d2, d_phi_d1, d_phi_d2};
  };
  const auto g1 = margin_grad(e1, e2);
  const auto g2 = margin_grad(e3, e4);

  // Partials of the model covariance.
  const double slope = cov_theta_slope(m, trunc);
  auto partial = [&](int which) {
    double up[3] = {l1, l2, phi}, dn[3] = {l1, l2, phi};
    const double h = which == 2 ? 1e-4 : 1e-4 * std::max(1.0, up[which]);
    up[which] = which == 2 ? std::min(up[which] + h, 1.0 - 1e-9) : up[which] + h;
    dn[which] = std::max(0.0, dn[which] - h);
    return (cov_at(m, up[0], up[1], t, up[2], trunc) - cov_at(m, dn[0], dn[1], t, dn[2], trunc)) /
           (up[which] - dn[which]);
  };
  const double s_l1 = partial(0), s_l2 = partial(1), s_phi = partial(2);

  // S12 = E X1X2 - E X1 E X2 as a function of the moment vector.
  std::array<double, 5> grad{};
  grad[0] = -e3 - s_l1 * g1[0] - s_phi * 0.5 * g1[2];
  grad[1] = -s_l1 * g1[1] - s_phi * 0.5 * g1[3];
  grad[2] = -e1 - s_l2 * g2[0] - s_phi * 0.5 * g2[2];
  grad[3] = -s_l2 * g2[1] - s_phi * 0.5 * g2[3];
  grad[4] = 1.0;
  for (double& g : grad) g /= slope;

  return quadratic_form(grad, moment_covariance_by_summation(m, trunc));
}

AsymptoticVariances asymptotic_variances(const ModelParams& m, const TruncationPolicy& trunc) {
  AsymptoticVariances out;
  out.var_lambda1 = avar_lambda(m, 1, trunc);
  out.var_lambda2 = avar_lambda(m, 2, trunc);
  out.var_phi = avar_phi(m, trunc);
  out.var_theta = (m.theta() > 0.0 && m.theta() < 1.0) ? avar_theta_full(m, trunc)
                                                       : std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace bzip
