#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace covrough {

enum class ErrorKind {
  EmptyUniverse,
  DuplicateElement,
  UniverseTooLarge,
  EmptyBlock,
  UnknownElement,
  NotACover,
  DuplicateBlock,
  BlockNotInCovering,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind);

/// Validation failure raised by every module of the library. When the
/// failure concerns one input subset, block_index() names it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> block_index = std::nullopt)
      : std::runtime_error(message), kind_(kind), block_index_(block_index) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> block_index() const noexcept { return block_index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> block_index_;
};

}  // namespace covrough
