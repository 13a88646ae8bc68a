#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "charvar/arrangement.hpp"
#include "charvar/pencil.hpp"

namespace fixture {

inline std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data(const std::string& name) { return std::string(CHARVAR_DATA_DIR) + "/" + name; }

// x, x-z, y, y-z, x-y-z, x-y, x-y+z, z; line 8 at infinity.
inline charvar::Arrangement suciu() { return charvar::parse_arrangement(read(data("suciu.json"))); }

inline charvar::Pencil fw_pencil(const charvar::Arrangement& arr) {
  return charvar::parse_pencil(read(data("suciu_fw_pencil.json")), arr);
}

inline charvar::Pencil partition_pencil(const charvar::Arrangement& arr, const std::string& blocks) {
  std::vector<charvar::Fiber> fibers;
  for (std::size_t start = 0; start < blocks.size();) {
    std::size_t end = blocks.find('|', start);
    if (end == std::string::npos) end = blocks.size();
    charvar::Fiber f;
    for (std::size_t i = start; i < end; ++i) {
      const std::size_t l = static_cast<std::size_t>(blocks[i] - '1');
      f.components.push_back({l, arr.line(l).coefficients, 1});
    }
    fibers.push_back(std::move(f));
    start = end + 1;
  }
  return charvar::validate_pencil(arr, std::move(fibers));
}

inline const int kRhoW[8] = {1, -1, -1, 1, 1, -1, 1, -1};
inline const int kRhoWPrime[8] = {-1, 1, 1, -1, 1, -1, 1, -1};

}  // namespace fixture
