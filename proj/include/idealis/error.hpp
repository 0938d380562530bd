#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace idealis {

enum class ErrorKind {
  InvalidArgument,
  CapExceeded,
  LatticeCapExceeded,
  SearchCapExceeded,
  NotPrime,
  NotMultClosed,
  ZeroInS,
  RingMismatch,
  ImproperIdeal,
  NotW1AP,
  ElementOutOfRange,
  SyntaxError,
  InvariantViolation,
};

const char* toString(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(toString(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Element, lattice, and search caps are resource limits rather than input mistakes.
  bool isCapError() const noexcept {
    return kind_ == ErrorKind::CapExceeded || kind_ == ErrorKind::LatticeCapExceeded ||
           kind_ == ErrorKind::SearchCapExceeded;
  }

 private:
  ErrorKind kind_;
};

/// Parse failure with the byte offset where it happened and the tokens that would have been accepted.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& detail);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string detail_;
};

}  // namespace idealis
