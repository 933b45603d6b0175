#include "reference_tables.hpp"

namespace schubert::cli {

namespace {

constexpr TableRow kTable1[] = {
    {"1,2,1,4,3,2,1", "1,2,3,4,3,4,2,1", 0},
    {"3,2,1,4,3,2,1", "1,2,3,4,4,3,2,1", 2},
    {"1,3,2,4,3,2,1", "1,2,3,4,4,2,3,1", 0},
    {"2,3,2,4,3,2,1", "1,2,3,4,4,3,1,2", 0},
    {"2,1,3,4,3,2,1", "1,2,3,4,4,3,2,1", 2},
    {"1,2,3,4,3,2,1", "1,2,3,4,4,3,2,1", 2},
    {"1,3,2,1,4,3,2", "1,2,3,+,-,3,2,1", 0},
    {"2,3,2,1,4,3,2", "1,2,3,+,-,3,2,1", 0},
    {"4,3,2,1,4,3,2", "1,2,3,4,4,3,2,1", 1},
    {"2,1,3,2,4,3,2", "1,2,+,3,3,-,2,1", 0},
    {"1,2,3,2,4,3,2", "1,+,2,3,3,2,-,1", 0},
    {"1,2,1,3,4,3,2", "1,2,+,3,3,-,2,1", 0},
    {"2,1,3,2,1,4,3", "1,2,3,3,4,4,2,1", 0},
    {"1,2,3,2,1,4,3", "1,2,3,2,4,3,4,1", 0},
    {"1,4,3,2,1,4,3", "1,2,3,4,2,3,4,1", 0},
    {"2,4,3,2,1,4,3", "1,2,3,4,1,3,2,4", 0},
    {"3,4,3,2,1,4,3", "1,2,3,4,4,1,2,3", 0},
    {"1,2,1,3,2,4,3", "1,2,+,-,+,-,2,1", 0},
    {"2,1,4,3,2,4,3", "1,2,+,3,3,-,2,1", 0},
    {"1,2,4,3,2,4,3", "1,+,2,3,3,2,-,1", 0},
    {"3,2,4,3,2,4,3", "+,1,2,3,3,2,1,-", 0},
    {"1,3,4,3,2,4,3", "1,+,2,3,3,2,-,1", 0},
    {"2,3,4,3,2,4,3", "+,1,2,3,3,2,1,-", 0},
    {"1,2,1,3,2,1,4", "1,2,3,3,4,4,2,1", 0},
    {"2,1,4,3,2,1,4", "1,2,3,4,3,4,2,1", 0},
    {"1,2,4,3,2,1,4", "1,2,3,4,2,3,4,1", 0},
    {"3,2,4,3,2,1,4", "1,2,3,4,4,1,2,3", 0},
    {"1,3,4,3,2,1,4", "1,2,3,4,4,2,3,1", 0},
    {"2,3,4,3,2,1,4", "1,2,3,4,4,3,1,2", 0},
    {"1,2,1,4,3,2,4", "1,2,+,3,3,-,2,1", 0},
    {"3,2,1,4,3,2,4", "1,2,3,+,-,3,2,1", 0},
    {"1,3,2,4,3,2,4", "1,+,2,3,3,2,-,1", 0},
    {"2,3,2,4,3,2,4", "+,1,2,3,3,2,1,-", 0},
    {"2,1,3,4,3,2,4", "1,2,+,3,3,-,2,1", 0},
    {"1,2,3,4,3,2,4", "1,+,2,3,3,2,-,1", 0},
    {"1,3,2,1,4,3,4", "1,2,3,2,4,3,4,1", 0},
    {"2,3,2,1,4,3,4", "1,2,3,1,4,3,2,4", 0},
    {"4,3,2,1,4,3,4", "1,2,3,4,1,3,2,4", 0},
    {"2,1,3,2,4,3,4", "1,2,+,-,+,-,2,1", 0},
    {"1,2,3,2,4,3,4", "1,+,2,-,+,2,-,1", 0},
    {"1,4,3,2,4,3,4", "1,+,2,3,3,2,-,1", 0},
    {"2,4,3,2,4,3,4", "+,1,2,3,3,2,1,-", 0},
    {"3,4,3,2,4,3,4", "+,1,2,3,3,2,1,-", 0},
    {"1,2,1,3,4,3,4", "1,2,2,3,3,4,4,1", 0},
};

constexpr TableRow kTable2[] = {
    {"1,3,2,1", "1,2,2,1,3,4,4,3", 0},
    {"2,3,2,1", "1,2,2,1,3,4,4,3", 0},
    {"1,4,2,1", "1,2,3,4,2,1,4,3", 0},
    {"2,4,2,1", "1,2,3,4,3,4,1,2", 1},
    {"3,4,2,1", "1,2,3,4,2,1,4,3", 0},
    {"2,1,3,2", "1,2,2,1,3,4,4,3", 0},
    {"1,2,3,2", "1,+,-,1,2,+,-,2", 0},
    {"2,1,4,2", "1,2,+,+,-,-,1,2", 0},
    {"1,2,4,2", "1,+,2,+,-,1,-,2", 0},
    {"3,2,4,2", "+,1,2,+,-,1,2,-", 0},
    {"1,3,4,2", "1,+,2,+,-,1,-,2", 0},
    {"2,3,4,2", "+,1,2,+,-,1,2,-", 0},
    {"1,2,1,3", "1,2,2,1,3,4,4,3", 0},
    {"4,2,1,3", "1,2,3,4,2,1,4,3", 0},
    {"1,4,2,3", "1,+,2,+,-,1,-,2", 0},
    {"2,4,2,3", "+,1,2,+,-,1,2,-", 0},
    {"3,4,2,3", "+,1,2,+,-,1,2,-", 0},
    {"1,2,1,4", "1,2,+,+,-,-,1,2", 0},
    {"3,2,1,4", "1,2,+,+,-,-,1,2", 0},
    {"1,3,2,4", "1,+,2,+,-,1,-,2", 0},
    {"2,3,2,4", "+,1,2,+,-,1,2,-", 0},
    {"2,1,3,4", "1,2,+,+,-,-,1,2", 0},
    {"1,2,3,4", "1,+,2,+,-,1,-,2", 0},
};

constexpr TableRow kTable3[] = {
    {"1,2,1", "1,-,1,2,+,2", 0},
    {"1,3,1", "1,+,2,1,-,2", 0},
    {"2,3,1", "1,2,+,-,1,2", 1},
    {"3,1,2", "1,2,+,-,1,2", 1},
    {"2,1,3", "1,-,1,2,+,2", 0},
    {"1,2,3", "1,-,1,2,+,2", 0},
};

}  // namespace

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables{
      {"table1", GroupType::C, 4, "-4,1,2,3", "1,-4,2,3", kTable1},
      {"table2", GroupType::D, 4, "-4,1,2,-3", "1,2,-4,-3", kTable2},
      {"table3", GroupType::D, 3, "1,3,2", "-3,1,-2", kTable3},
  };
  return tables;
}

}  // namespace schubert::cli
