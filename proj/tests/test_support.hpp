#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rollercoaster/braid.hpp"
#include "rollercoaster/codes.hpp"

namespace test_support {

inline std::filesystem::path data_path(const std::string& file) {
  return std::filesystem::path(ROLLERCOASTER_DATA_DIR) / file;
}

#ifdef ROLLERCOASTER_TEST_DATA_DIR
inline std::filesystem::path test_data_path(const std::string& file) {
  return std::filesystem::path(ROLLERCOASTER_TEST_DATA_DIR) / file;
}
#endif

// Rows of the KnotInfo notation fixture: name, DT code, braid word.
struct KnotInfoRow {
  std::string name;
  rollercoaster::DTCode dt;
  rollercoaster::BraidWord braid;
};

#ifdef ROLLERCOASTER_TEST_DATA_DIR
inline std::vector<KnotInfoRow> knotinfo_rows() {
  std::ifstream in(test_data_path("knotinfo_codes.csv"));
  std::vector<KnotInfoRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("name;", 0) == 0) continue;
    std::istringstream fields(line);
    std::string name, dt, braid;
    std::getline(fields, name, ';');
    std::getline(fields, dt, ';');
    std::getline(fields, braid, ';');
    rows.push_back({name, rollercoaster::parse_dt(dt), rollercoaster::parse_braid(braid)});
  }
  return rows;
}
#endif

}  // namespace test_support
