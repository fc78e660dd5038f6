#include "bzip/fixtures.hpp"

namespace bzip {

namespace {

DatasetFixture make(std::string name, std::string note, std::vector<std::vector<std::int64_t>> table) {
  DatasetFixture f{std::move(name), std::move(note), std::move(table), {}};
  f.pairs = expand_table(f.table);
  return f;
}

}  // namespace

const DatasetFixture& storm_flood() {
  static const DatasetFixture f = make("storm_flood",
                                       "Monthly joint occurrences of storms (x1) and floods (x2), 1967-2014",
                                       {{488, 20, 1}, {37, 17, 0}, {4, 3, 5}, {1, 0, 0}});
  return f;
}

const DatasetFixture& bushfire_flood() {
  static const DatasetFixture f = make("bushfire_flood",
                                       "Monthly joint occurrences of bushfires (x1) and floods (x2), 1967-2014",
                                       {{508, 39, 6}, {19, 1, 0}, {3, 0, 0}});
  return f;
}

const DatasetFixture* find_fixture(std::string_view name) {
  if (name == "storm_flood") return &storm_flood();
  if (name == "bushfire_flood") return &bushfire_flood();
  return nullptr;
}

std::vector<std::string> fixture_names() { return {"storm_flood", "bushfire_flood"}; }

}  // namespace bzip
