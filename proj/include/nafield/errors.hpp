#pragma once

#include <stdexcept>
#include <string>

namespace nafield {

/// Domain error with a stable machine-readable kind string ("NotReducible",
/// "LevelMismatch", ...). The CLI maps these to `error: <kind>: <detail>`.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

/// Parse failure carrying the byte offset into the input text.
class ParseError : public Error {
public:
  ParseError(std::string kind, const std::string& detail, std::size_t offset)
      : Error(std::move(kind), detail + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace nafield
