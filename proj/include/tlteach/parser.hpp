#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tlteach/formula.hpp"

namespace tlteach {

/// Raised on malformed formula text. `offset` is the byte position of the fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar:
///   E := T | x<=V | sym:NAME | !E | (E & E) | (E | E) | (E -> E) | (E)
///      | F[<=N] E | G[<=N] E
/// Whitespace is ignored between tokens.
Formula parse(std::string_view text);

}  // namespace tlteach
