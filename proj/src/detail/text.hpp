#pragma once

#include <charconv>
#include <string>

namespace qentropy::detail {

// Shortest representation that round-trips, for labels and messages.
inline std::string shortest(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc{} ? std::string(buf, end) : std::string("?");
}

}  // namespace qentropy::detail
