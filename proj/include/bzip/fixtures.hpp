#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bzip/sample.hpp"

namespace bzip {

struct DatasetFixture {
  std::string name;
  std::string note;
  std::vector<std::vector<std::int64_t>> table;  // rows: x1 = 0, 1, ...; cols: x2
  CountSample pairs;
};

/// Monthly joint counts of storms (x1) and floods (x2), 576 months.
const DatasetFixture& storm_flood();
/// Monthly joint counts of bushfires (x1) and floods (x2), 576 months.
const DatasetFixture& bushfire_flood();

/// Looks a fixture up by name; nullptr when unknown.
const DatasetFixture* find_fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace bzip
