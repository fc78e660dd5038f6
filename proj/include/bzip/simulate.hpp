#pragma once

// Exact data generation through the quantile construction:
//
//   1. draw U, V1, V2 iid uniform on [0, 1), then a fourth uniform for W
//   2. W = 1 with probability 1 - phi
//   3. Y_j = G^{-1}_{(1-theta) lambda_j}(V_j)
//   4. Z_1 = G^{-1}_{theta lambda_1}(U); Z_2 = G^{-1}_{theta lambda_2}(U)
//      for the positive kind, G^{-1}_{theta lambda_2}(1 - U) for the negative
//   5. T = Y + Z, X = W * T
//
// Randomness comes from std::mt19937_64 (a fully specified engine); uniforms
// are the top 53 bits of one 64-bit output scaled by 2^-53, so results are
// identical on every platform. Quantiles are generalized inverses over a
// table reaching cdf >= 1 - 2^-53; 1 - U = 1 (U == 0 exactly) maps to the last
// tabulated point.

#include <cstdint>
#include <random>
#include <vector>

#include "bzip/distribution.hpp"
#include "bzip/poisson.hpp"
#include "bzip/sample.hpp"

namespace bzip {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), unbiased (rejection).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

/// Seed of replication `index` in a study or bootstrap derived from `base`.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) { return base ^ index; }

struct LatentTrace {
  double u, v1, v2;
  int w;
  std::int64_t y1, y2, z1, z2, t1, t2, x1, x2;
};

/// Owns the RNG state; not for concurrent use. Independent instances with
/// distinct seeds may run in parallel.
class Sampler {
 public:
  Sampler(const ModelParams& m, std::uint64_t seed);

  CountPair draw();
  LatentTrace draw_traced();

 private:
  ModelParams params_;
  Rng rng_;
  PoissonTable y1_, y2_, z1_, z2_;
};

CountSample sample(const ModelParams& m, std::size_t n, std::uint64_t seed);
std::vector<LatentTrace> sample_with_trace(const ModelParams& m, std::size_t n, std::uint64_t seed);

}  // namespace bzip
