#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace msf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `offset` is the byte offset of the first bad byte.
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InvalidArgument(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A node, item or wall-clock budget ran out. Carries the progress made so far.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes, std::uint64_t items)
      : Error(what), nodes_(nodes), items_(items) {}

  /// Search nodes visited before the budget ran out.
  std::uint64_t nodes() const noexcept { return nodes_; }
  /// Results produced (sets emitted or counted) before the budget ran out.
  std::uint64_t items() const noexcept { return items_; }

 private:
  std::uint64_t nodes_;
  std::uint64_t items_;
};

/// An internal cross-check failed. Always indicates a bug, never bad input.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace msf
