#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specht {

// Raised by the textual parsers (partitions, shapes, permutations, tableaux).
// position() is the 0-based byte offset of the offending token within the
// input string; the message names the token as well.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace specht
