#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seifert {

/// Malformed symbol, orbifold, catalogue or permutation text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"),
        message_(what),
        position_(position) {}

  /// The message without the offset suffix.
  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// Well-formed input outside an operation's domain (e.g. a bounded symbol
/// handed to an operation that needs a closed one).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured search or expansion cap was exceeded. No partial results
/// are ever returned alongside this error.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace seifert
