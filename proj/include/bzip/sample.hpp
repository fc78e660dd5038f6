#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bzip/grid.hpp"

namespace bzip {

struct CountPair {
  std::int64_t x1 = 0;
  std::int64_t x2 = 0;

  friend bool operator==(const CountPair&, const CountPair&) = default;
  friend auto operator<=>(const CountPair&, const CountPair&) = default;
};

/// Ordered list of observed (x1, x2) pairs.
using CountSample = std::vector<CountPair>;

/// Distinct pairs with multiplicities; (0,0) is tracked separately as m0.
struct PairCounts {
  struct Entry {
    CountPair pair;
    std::int64_t count;
  };

  std::int64_t n = 0;
  std::int64_t m0 = 0;
  std::vector<Entry> nonzero;  // sorted by pair, excludes (0,0)
  std::int64_t max_x1 = 0;
  std::int64_t max_x2 = 0;

  static PairCounts from(const CountSample& sample);
};

/// First and second sample moments. Second moments use divisor n; the
/// sample covariance uses n - 1.
struct SampleMoments {
  std::int64_t n = 0;
  double mean1 = 0.0;
  double mean2 = 0.0;
  double second1 = 0.0;
  double second2 = 0.0;
  double var1 = 0.0;  // divisor n - 1
  double var2 = 0.0;
  double cov12 = 0.0;

  static SampleMoments from(const CountSample& sample);
};

/// True when some margin only takes values in {0, 1}.
bool has_degenerate_margin(const CountSample& sample);

/// Cross-tabulation: rows index x1, columns x2.
Grid contingency_table(const CountSample& sample);

/// Expands a contingency table of counts (rows x1, columns x2) into pairs,
/// in row-major order.
CountSample expand_table(const std::vector<std::vector<std::int64_t>>& counts);

/// CSV with header `x1,x2`. Throws std::runtime_error naming the offending
/// line on malformed input.
CountSample read_csv(std::istream& in);
CountSample read_csv_file(const std::string& path);
void write_csv(std::ostream& out, const CountSample& sample);

}  // namespace bzip
