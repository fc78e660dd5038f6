#include "bzip/simulate.hpp"

#include <limits>

#include "bzip/errors.hpp"

namespace bzip {

namespace {

// Table covering every uniform the generator can produce (at most 1 - 2^-53).
PoissonTable full_table(double rate) {
  if (rate == 0.0) return PoissonTable(0.0, 0);
  const std::int64_t top = pois_quantile(1.0 - 0x1.0p-53, rate) + 1;
  return PoissonTable(rate, top);
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InvalidParameter("Rng::below needs n > 0");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

Sampler::Sampler(const ModelParams& m, std::uint64_t seed) : params_(m), rng_(seed) {
  m.validate();
  const double rest = 1.0 - m.theta();
  y1_ = full_table(rest * m.lambda1());
  y2_ = full_table(rest * m.lambda2());
  z1_ = full_table(m.theta() * m.lambda1());
  z2_ = full_table(m.theta() * m.lambda2());
}

LatentTrace Sampler::draw_traced() {
  LatentTrace r{};
  r.u = rng_.uniform();
  r.v1 = rng_.uniform();
  r.v2 = rng_.uniform();
  r.w = rng_.uniform() < 1.0 - params_.phi ? 1 : 0;
  r.y1 = y1_.quantile_capped(r.v1);
  r.y2 = y2_.quantile_capped(r.v2);
  r.z1 = z1_.quantile_capped(r.u);
  r.z2 = z2_.quantile_capped(params_.kind() == DependenceKind::Positive ? r.u : 1.0 - r.u);
  r.t1 = r.y1 + r.z1;
  r.t2 = r.y2 + r.z2;
  r.x1 = r.w * r.t1;
  r.x2 = r.w * r.t2;
  return r;
}

CountPair Sampler::draw() {
  const LatentTrace r = draw_traced();
  return {r.x1, r.x2};
}

CountSample sample(const ModelParams& m, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidParameter("sample size must be positive");
  Sampler s(m, seed);
  CountSample out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(s.draw());
  return out;
}

std::vector<LatentTrace> sample_with_trace(const ModelParams& m, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidParameter("sample size must be positive");
  Sampler s(m, seed);
  std::vector<LatentTrace> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(s.draw_traced());
  return out;
}

}  // namespace bzip
