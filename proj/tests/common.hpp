#pragma once

#include <string>
#include <vector>

#include "dmorse/io.hpp"
#include "dmorse/relation.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) { return std::string(DMORSE_FIXTURES) + "/" + name; }

inline nlohmann::json fixture(const std::string& name) { return dmorse::io::read_json(fixture_path(name)); }

/// x R y iff x divides y, X = {1,2,3,4}, Y = {5,6,7,8}.
inline dmorse::Relation divides() {
  std::vector<std::string> xs{"1", "2", "3", "4"}, ys{"5", "6", "7", "8"};
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int x = 1; x <= 4; ++x)
    for (int y = 5; y <= 8; ++y) {
      if (y % x == 0) pairs.emplace_back(std::to_string(x), std::to_string(y));
    }
  return dmorse::Relation::from_labels(xs, ys, pairs);
}

}  // namespace testing
