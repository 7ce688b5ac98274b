#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace refutelint {

// 1-based line and column. A default-constructed location means "unknown".
struct SourceLoc {
  uint32_t line = 0;
  uint32_t column = 0;

  bool valid() const { return line != 0; }
  std::string str() const { return std::to_string(line) + ":" + std::to_string(column); }

  friend auto operator<=>(const SourceLoc&, const SourceLoc&) = default;
  friend bool operator==(const SourceLoc&, const SourceLoc&) = default;
};

}  // namespace refutelint
